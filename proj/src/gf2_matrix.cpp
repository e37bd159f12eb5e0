#include "convterm/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace convterm {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<size_t>(rows) * ((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& bit_rows) {
    std::vector<std::string> cleaned;
    cleaned.reserve(bit_rows.size());
    for (const std::string& s : bit_rows) {
        std::string t;
        for (char ch : s) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch != '0' && ch != '1') throw std::invalid_argument("bit row contains non-binary character");
            t.push_back(ch);
        }
        cleaned.push_back(std::move(t));
    }
    int cols = cleaned.empty() ? 0 : static_cast<int>(cleaned.front().size());
    for (const std::string& t : cleaned)
        if (static_cast<int>(t.size()) != cols)
            throw std::invalid_argument("bit rows have unequal lengths");
    Gf2Matrix m(static_cast<int>(cleaned.size()), cols);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < cols; ++c)
            if (cleaned[r][c] == '1') m.set(r, c, true);
    return m;
}

bool Gf2Matrix::get(int r, int c) const {
    return (row_data(r)[c >> 6] >> (c & 63)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool v) {
    uint64_t mask = uint64_t(1) << (c & 63);
    if (v)
        row_data(r)[c >> 6] |= mask;
    else
        row_data(r)[c >> 6] &= ~mask;
}

void Gf2Matrix::xor_rows(int dst, int src) {
    uint64_t* d = row_data(dst);
    const uint64_t* s = row_data(src);
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* pa = row_data(a);
    uint64_t* pb = row_data(b);
    for (int w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
}

int Gf2Matrix::row_weight(int r) const {
    int w = 0;
    const uint64_t* p = row_data(r);
    for (int i = 0; i < words_; ++i) w += std::popcount(p[i]);
    return w;
}

bool Gf2Matrix::row_is_zero(int r) const {
    const uint64_t* p = row_data(r);
    for (int i = 0; i < words_; ++i)
        if (p[i]) return false;
    return true;
}

bool Gf2Matrix::row_dot(int r, const Gf2Matrix& other, int s) const {
    if (cols_ != other.cols_) throw std::invalid_argument("column count mismatch in row_dot");
    const uint64_t* a = row_data(r);
    const uint64_t* b = other.row_data(s);
    uint64_t acc = 0;
    for (int w = 0; w < words_; ++w) acc ^= a[w] & b[w];
    return std::popcount(acc) & 1;
}

void Gf2Matrix::append_row(const Gf2Matrix& src, int r) {
    if (cols_ != src.cols_ && rows_ != 0)
        throw std::invalid_argument("column count mismatch in append_row");
    if (rows_ == 0 && cols_ == 0) {
        cols_ = src.cols_;
        words_ = src.words_;
    }
    bits_.insert(bits_.end(), src.row_data(r), src.row_data(r) + words_);
    ++rows_;
}

Gf2Matrix Gf2Matrix::stacked(const Gf2Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("column count mismatch in stacked");
    Gf2Matrix m = *this;
    m.bits_.insert(m.bits_.end(), other.bits_.begin(), other.bits_.end());
    m.rows_ += other.rows_;
    return m;
}

Gf2Matrix Gf2Matrix::row_reduced() const {
    Gf2Matrix m = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m.get(i, c)) { pivot = i; break; }
        if (pivot < 0) continue;
        m.swap_rows(r, pivot);
        for (int i = 0; i < rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        ++r;
    }
    Gf2Matrix out(0, 0);
    for (int i = 0; i < r; ++i) out.append_row(m, i);
    if (r == 0) out = Gf2Matrix(0, cols_);
    return out;
}

int Gf2Matrix::rank() const {
    return row_reduced().rows();
}

Gf2Matrix Gf2Matrix::null_space() const {
    Gf2Matrix rref = row_reduced();
    std::vector<int> pivot_col(rref.rows());
    std::vector<bool> is_pivot(cols_, false);
    for (int i = 0; i < rref.rows(); ++i) {
        int c = 0;
        while (c < cols_ && !rref.get(i, c)) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Gf2Matrix basis(cols_ - rref.rows(), cols_);
    int b = 0;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(b, f, true);
        for (int i = 0; i < rref.rows(); ++i)
            if (rref.get(i, f)) basis.set(b, pivot_col[i], true);
        ++b;
    }
    return basis;
}

bool Gf2Matrix::same_row_space(const Gf2Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("column count mismatch in same_row_space");
    int ra = rank();
    int rb = other.rank();
    if (ra != rb) return false;
    return stacked(other).rank() == ra;
}

bool Gf2Matrix::orthogonal_to(const Gf2Matrix& other) const {
    for (int r = 0; r < rows_; ++r)
        for (int s = 0; s < other.rows(); ++s)
            if (row_dot(r, other, s)) return false;
    return true;
}

std::string Gf2Matrix::row_string(int r, int group) const {
    std::string s;
    for (int c = 0; c < cols_; ++c) {
        if (group > 0 && c > 0 && c % group == 0) s.push_back(' ');
        s.push_back(get(r, c) ? '1' : '0');
    }
    return s;
}

} // namespace convterm
