#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/serialize.hpp>

#include <map>
#include <optional>
#include <string>

namespace convterm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Weight generating function: a polynomial in x whose coefficient at x^d
/// counts objects of Hamming weight d.  Coefficients are exact nonnegative
/// big integers; zero coefficients are never stored.
///
/// An enumerator may be truncated modulo x^(dmax+1).  The truncation degree
/// is an explicit flag that propagates through arithmetic (the result of an
/// operation is truncated at the smallest operand truncation), so exact and
/// truncated values can never be confused.
class WeightEnumerator {
public:
    WeightEnumerator() = default;

    static WeightEnumerator zero(std::optional<int> dmax = std::nullopt);
    static WeightEnumerator one();
    static WeightEnumerator monomial(int weight, BigInt count = 1);
    static WeightEnumerator from_coeffs(const std::map<int, BigInt>& coeffs,
                                        std::optional<int> dmax = std::nullopt);

    const std::map<int, BigInt>& coeffs() const { return coeffs_; }
    std::optional<int> truncation() const { return trunc_; }
    bool is_truncated() const { return trunc_.has_value(); }

    BigInt coeff(int weight) const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Smallest weight d > 0 with a nonzero coefficient.
    std::optional<int> min_positive_weight() const;
    /// Largest stored weight; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// Sum of all coefficients.  Equals |C| for the enumerator of a block code C.
    BigInt eval_at_one() const;

    /// Accumulate count*x^weight, honoring the truncation flag.
    void add_term(int weight, const BigInt& count);

    /// Copy truncated modulo x^(dmax+1); tightens an existing truncation.
    WeightEnumerator truncate(int dmax) const;
    WeightEnumerator truncate(std::optional<int> dmax) const;
    /// Copy with the truncation flag cleared (coefficients unchanged).
    WeightEnumerator without_truncation_flag() const;

    WeightEnumerator& operator+=(const WeightEnumerator& rhs);
    friend WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b);
    friend WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b);

    bool operator==(const WeightEnumerator&) const = default;

private:
    std::map<int, BigInt> coeffs_;
    std::optional<int> trunc_;
};

/// min(a, b) with absent values treated as +infinity.
std::optional<int> combine_truncation(std::optional<int> a, std::optional<int> b);

WeightEnumerator we_mul(const WeightEnumerator& a, const WeightEnumerator& b);

} // namespace convterm
