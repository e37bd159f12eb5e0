#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace convterm {

/// Binary matrix with bit-packed rows (64 entries per word); row operations
/// are word-level XORs.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int n);
    /// Rows given as strings of '0'/'1'; spaces are ignored.  All rows must
    /// have the same number of bits.
    static Gf2Matrix from_rows(const std::vector<std::string>& bit_rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    void xor_rows(int dst, int src);
    void swap_rows(int a, int b);
    int row_weight(int r) const;
    bool row_is_zero(int r) const;

    /// Dot product of row r with row s of another matrix (same column count).
    bool row_dot(int r, const Gf2Matrix& other, int s) const;

    void append_row(const Gf2Matrix& src, int r);
    Gf2Matrix stacked(const Gf2Matrix& other) const;

    /// Reduced row echelon form with zero rows dropped.
    Gf2Matrix row_reduced() const;
    int rank() const;

    /// Basis (as rows) of { v : G v^T = 0 }.  Returns cols() - rank() rows.
    Gf2Matrix null_space() const;

    bool same_row_space(const Gf2Matrix& other) const;
    /// True when every row of *this is orthogonal to every row of other.
    bool orthogonal_to(const Gf2Matrix& other) const;

    /// Row as a bit string, optionally grouped as space-separated blocks.
    std::string row_string(int r, int group = 0) const;

    bool operator==(const Gf2Matrix&) const = default;

    const uint64_t* row_data(int r) const { return bits_.data() + static_cast<size_t>(r) * words_; }
    uint64_t* row_data(int r) { return bits_.data() + static_cast<size_t>(r) * words_; }
    int words_per_row() const { return words_; }

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
};

} // namespace convterm
