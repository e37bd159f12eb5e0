#include "convterm/enumerator_matrix.hpp"

#include <stdexcept>

namespace convterm {

namespace {

std::vector<std::string> default_labels(int dim, std::vector<std::string> labels) {
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != dim)
            throw std::invalid_argument("state label count does not match matrix dimension");
        return labels;
    }
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i) labels.push_back(std::to_string(i));
    return labels;
}

void check_compatible(const EnumeratorMatrix& a, const EnumeratorMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("enumerator matrix dimension mismatch");
    if (a.state_labels() != b.state_labels())
        throw std::invalid_argument("enumerator matrix state order mismatch");
}

WeightEnumerator dot(const EnumeratorMatrix& a, const EnumeratorMatrix& b, int i, int j,
                     std::optional<int> dmax) {
    WeightEnumerator acc = WeightEnumerator::zero(dmax);
    for (int k = 0; k < a.dim(); ++k) {
        const WeightEnumerator& x = a.at(i, k);
        const WeightEnumerator& y = b.at(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
    }
    return acc.truncate(dmax);
}

} // namespace

EnumeratorMatrix::EnumeratorMatrix(int dim, std::vector<std::string> state_labels)
    : dim_(dim),
      labels_(default_labels(dim, std::move(state_labels))),
      entries_(static_cast<size_t>(dim) * dim) {}

EnumeratorMatrix EnumeratorMatrix::identity(int dim, std::vector<std::string> state_labels) {
    EnumeratorMatrix m(dim, std::move(state_labels));
    for (int i = 0; i < dim; ++i) m.at(i, i) = WeightEnumerator::one();
    return m;
}

EnumeratorMatrix EnumeratorMatrix::transpose() const {
    EnumeratorMatrix m(dim_, labels_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
}

EnumeratorMatrix EnumeratorMatrix::truncate(std::optional<int> dmax) const {
    if (!dmax) return *this;
    EnumeratorMatrix m(dim_, labels_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = at(i, j).truncate(dmax);
    return m;
}

WeightEnumerator EnumeratorMatrix::trace() const {
    WeightEnumerator s;
    for (int i = 0; i < dim_; ++i) s += at(i, i);
    return s;
}

WeightEnumerator EnumeratorMatrix::sum_all() const {
    WeightEnumerator s;
    for (const WeightEnumerator& e : entries_) s += e;
    return s;
}

WeightEnumerator EnumeratorMatrix::sum_row(int r) const {
    WeightEnumerator s;
    for (int j = 0; j < dim_; ++j) s += at(r, j);
    return s;
}

WeightEnumerator EnumeratorMatrix::sum_col(int c) const {
    WeightEnumerator s;
    for (int i = 0; i < dim_; ++i) s += at(i, c);
    return s;
}

std::vector<BigInt> EnumeratorMatrix::row_sums_at_one() const {
    std::vector<BigInt> sums(dim_);
    for (int i = 0; i < dim_; ++i) sums[i] = sum_row(i).eval_at_one();
    return sums;
}

EnumeratorMatrix em_mul(const EnumeratorMatrix& a, const EnumeratorMatrix& b,
                        std::optional<int> dmax) {
    check_compatible(a, b);
    const int dim = a.dim();
    EnumeratorMatrix r(dim, a.state_labels());
#pragma omp parallel for collapse(2) schedule(dynamic) if (dim >= 8)
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.at(i, j) = dot(a, b, i, j, dmax);
    return r;
}

EnumeratorMatrix em_mul_serial(const EnumeratorMatrix& a, const EnumeratorMatrix& b,
                               std::optional<int> dmax) {
    check_compatible(a, b);
    const int dim = a.dim();
    EnumeratorMatrix r(dim, a.state_labels());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.at(i, j) = dot(a, b, i, j, dmax);
    return r;
}

namespace {

template <typename Mul>
EnumeratorMatrix pow_impl(const EnumeratorMatrix& a, unsigned n, std::optional<int> dmax,
                          Mul mul) {
    EnumeratorMatrix result = EnumeratorMatrix::identity(a.dim(), a.state_labels()).truncate(dmax);
    EnumeratorMatrix base = a.truncate(dmax);
    while (n > 0) {
        if (n & 1u) result = mul(result, base, dmax);
        n >>= 1u;
        if (n > 0) base = mul(base, base, dmax);
    }
    return result;
}

} // namespace

EnumeratorMatrix em_pow(const EnumeratorMatrix& a, unsigned n, std::optional<int> dmax) {
    return pow_impl(a, n, dmax,
                    [](const auto& x, const auto& y, auto d) { return em_mul(x, y, d); });
}

EnumeratorMatrix em_pow_serial(const EnumeratorMatrix& a, unsigned n, std::optional<int> dmax) {
    return pow_impl(a, n, dmax,
                    [](const auto& x, const auto& y, auto d) { return em_mul_serial(x, y, d); });
}

} // namespace convterm
