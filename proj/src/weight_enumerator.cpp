#include "convterm/weight_enumerator.hpp"

namespace convterm {

std::optional<int> combine_truncation(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

WeightEnumerator WeightEnumerator::zero(std::optional<int> dmax) {
    WeightEnumerator w;
    w.trunc_ = dmax;
    return w;
}

WeightEnumerator WeightEnumerator::one() {
    return monomial(0);
}

WeightEnumerator WeightEnumerator::monomial(int weight, BigInt count) {
    WeightEnumerator w;
    w.add_term(weight, count);
    return w;
}

WeightEnumerator WeightEnumerator::from_coeffs(const std::map<int, BigInt>& coeffs,
                                               std::optional<int> dmax) {
    WeightEnumerator w;
    w.trunc_ = dmax;
    for (const auto& [d, c] : coeffs) w.add_term(d, c);
    return w;
}

BigInt WeightEnumerator::coeff(int weight) const {
    auto it = coeffs_.find(weight);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

std::optional<int> WeightEnumerator::min_positive_weight() const {
    for (const auto& [d, c] : coeffs_)
        if (d > 0) return d;
    return std::nullopt;
}

std::optional<int> WeightEnumerator::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

BigInt WeightEnumerator::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

void WeightEnumerator::add_term(int weight, const BigInt& count) {
    if (count == 0) return;
    if (trunc_ && weight > *trunc_) return;
    BigInt& slot = coeffs_[weight];
    slot += count;
    if (slot == 0) coeffs_.erase(weight);
}

WeightEnumerator WeightEnumerator::truncate(int dmax) const {
    WeightEnumerator w;
    w.trunc_ = combine_truncation(trunc_, dmax);
    for (const auto& [d, c] : coeffs_) {
        if (d > dmax) break;
        w.coeffs_.emplace(d, c);
    }
    return w;
}

WeightEnumerator WeightEnumerator::truncate(std::optional<int> dmax) const {
    if (!dmax) return *this;
    return truncate(*dmax);
}

WeightEnumerator WeightEnumerator::without_truncation_flag() const {
    WeightEnumerator w;
    w.coeffs_ = coeffs_;
    return w;
}

WeightEnumerator& WeightEnumerator::operator+=(const WeightEnumerator& rhs) {
    trunc_ = combine_truncation(trunc_, rhs.trunc_);
    if (trunc_) {
        // re-filter terms already present above the combined truncation
        auto it = coeffs_.upper_bound(*trunc_);
        coeffs_.erase(it, coeffs_.end());
    }
    for (const auto& [d, c] : rhs.coeffs_) add_term(d, c);
    return *this;
}

WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b) {
    WeightEnumerator r = a;
    r += b;
    return r;
}

WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b) {
    WeightEnumerator r;
    r.trunc_ = combine_truncation(a.trunc_, b.trunc_);
    for (const auto& [da, ca] : a.coeffs_) {
        if (r.trunc_ && da > *r.trunc_) break;
        for (const auto& [db, cb] : b.coeffs_) {
            int d = da + db;
            if (r.trunc_ && d > *r.trunc_) break;
            r.add_term(d, ca * cb);
        }
    }
    return r;
}

WeightEnumerator we_mul(const WeightEnumerator& a, const WeightEnumerator& b) {
    return a * b;
}

} // namespace convterm
