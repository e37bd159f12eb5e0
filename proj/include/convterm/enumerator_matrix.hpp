#pragma once

#include "convterm/weight_enumerator.hpp"

#include <vector>

namespace convterm {

/// Square matrix of weight enumerators indexed by encoder states.
/// Row/column index i corresponds to state_labels()[i]; index 0 is the
/// zero state whenever the matrix describes an encoder trellis section.
class EnumeratorMatrix {
public:
    EnumeratorMatrix() = default;
    explicit EnumeratorMatrix(int dim, std::vector<std::string> state_labels = {});

    static EnumeratorMatrix identity(int dim, std::vector<std::string> state_labels = {});

    int dim() const { return dim_; }
    const std::vector<std::string>& state_labels() const { return labels_; }

    WeightEnumerator& at(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
    const WeightEnumerator& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * dim_ + c];
    }

    EnumeratorMatrix transpose() const;
    EnumeratorMatrix truncate(std::optional<int> dmax) const;

    WeightEnumerator trace() const;
    WeightEnumerator sum_all() const;
    WeightEnumerator sum_row(int r) const;
    WeightEnumerator sum_col(int c) const;

    /// Row sums evaluated at x=1 (branch counts out of each state).
    std::vector<BigInt> row_sums_at_one() const;

    bool operator==(const EnumeratorMatrix&) const = default;

private:
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<WeightEnumerator> entries_;
};

/// Matrix product over the (count polynomial, +, *) semiring.  Parallelized
/// over output entries with OpenMP; the result is deterministic and identical
/// to em_mul_serial.  Throws std::invalid_argument on dimension or state-order
/// mismatch.
EnumeratorMatrix em_mul(const EnumeratorMatrix& a, const EnumeratorMatrix& b,
                        std::optional<int> dmax = std::nullopt);

/// Single-threaded reference implementation of em_mul.
EnumeratorMatrix em_mul_serial(const EnumeratorMatrix& a, const EnumeratorMatrix& b,
                               std::optional<int> dmax = std::nullopt);

/// A^n by repeated squaring; n = 0 gives the identity.  When dmax is set,
/// every intermediate product is truncated modulo x^(dmax+1).
EnumeratorMatrix em_pow(const EnumeratorMatrix& a, unsigned n,
                        std::optional<int> dmax = std::nullopt);

/// em_pow built on the serial product (reference path for tests and benchmarks).
EnumeratorMatrix em_pow_serial(const EnumeratorMatrix& a, unsigned n,
                               std::optional<int> dmax = std::nullopt);

} // namespace convterm
