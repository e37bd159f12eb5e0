#pragma once

#include "convterm/weight_enumerator.hpp"

#include <optional>

namespace convterm {

/// Outcome of checking a MacWilliams identity between two enumerators.
struct IdentityReport {
    WeightEnumerator lhs;
    WeightEnumerator rhs;
    WeightEnumerator transformed_lhs;
    bool holds = false;
    std::optional<int> first_discrepant_weight;
};

/// Binary MacWilliams transform
///     W_dual(x) = 2^-k * sum_d A_d (1-x)^d (1+x)^(n-d)
/// computed with exact big-integer binomial expansion.  Requires an
/// untruncated enumerator with W(1) = 2^k and all weights <= n; inexact
/// division by 2^k or a negative output coefficient means the input was not
/// a valid code enumerator and raises std::runtime_error.
WeightEnumerator macwilliams_transform(const WeightEnumerator& W, int n, int logsize);

/// Checks transform(A) == B coefficient-wise and reports the first
/// discrepant weight on failure.
IdentityReport verify_identity(const WeightEnumerator& A, const WeightEnumerator& B, int n,
                               int kA);

BigInt binomial(int n, int k);

} // namespace convterm
