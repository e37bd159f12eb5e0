#pragma once

#include "convterm/enumerator_matrix.hpp"
#include "convterm/termination.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace convterm {

enum class SpectrumMethod {
    FirstReturn,
    NormalizedTailBiting,
    NormalizedSubcode,
    NormalizedTruncated,
    NormalizedProjection,
};

const char* to_string(SpectrumMethod method);

/// Per-weight codeword counts with an explicit divisor, so normalized
/// distributions stay exact rationals (count, divisor) instead of floats.
struct SpectrumReport {
    std::map<int, BigInt> counts;
    BigInt divisor = 1;
    int dmax = 0;
    std::optional<int> dfree;  // smallest weight with a positive count
    SpectrumMethod method = SpectrumMethod::FirstReturn;
    int N = 0;  // 0 for the first-return series
    std::vector<std::string> notes;
};

/// Free distance spectrum, truncated at dmax, via the first-return series
///     (L_00 - 1) + b (sum_m D^m) c
/// where b is row 0 of L without column 0, c is column 0 without row 0 and D
/// is L with row and column 0 deleted.  Requires a minimal-encoder matrix
/// (zero-weight self-loop only at state 0); a zero-weight cycle elsewhere
/// trips the divergence guard and raises std::runtime_error.
SpectrumReport free_spectrum(const EnumeratorMatrix& L, int dmax);

/// Terminated distribution normalized by N: the termination enumerator with
/// the constant term removed, divisor N.
SpectrumReport normalized_spectrum(const EnumeratorMatrix& L, TerminationKind kind, int N,
                                   int dmax);

struct ConvergenceEntry {
    int d = 0;
    BigInt free_count;                    // target per-unit value
    std::optional<int> stabilized_at;     // smallest N from which counts[d] == N * free_count
};

struct ConvergenceReport {
    SpectrumReport free;
    std::vector<SpectrumReport> per_n;
    std::vector<ConvergenceEntry> entries;  // for d in [dfree, min(dmax, 2*dfree - 1)]
};

/// For each weight in the reliable window [dfree, 2*dfree), the smallest N in
/// n_list from which the normalized terminated count equals the free-spectrum
/// count exactly (and keeps doing so for every larger N in the list).
ConvergenceReport convergence_report(const EnumeratorMatrix& L, TerminationKind kind,
                                     const std::vector<int>& n_list, int dmax);

struct PerformanceEstimate {
    BigRational p;
    BigRational per_unit_event_bound;
    std::optional<int> horizon_n;
    std::optional<BigRational> horizon_bound;
    std::string tie_convention = "half-weight ties counted as errors";
};

/// Pairwise error probability of a weight-d event on a BSC with crossover p,
/// with the half-weight tie counted as an error:
///     P2(d) = sum_{k=ceil(d/2)}^{d} C(d,k) p^k (1-p)^(d-k)
BigRational pairwise_error_bsc(int d, const BigRational& p);

/// Union bound sum_d counts[d]/divisor * P2(d), exact; optionally scaled by a
/// decoding horizon of N time units.  Requires 0 <= p <= 1/2.
PerformanceEstimate union_bound(const SpectrumReport& S, const BigRational& p,
                                std::optional<int> horizon = std::nullopt);

/// Exact rational from a decimal string such as "0.01" (also accepts "a/b").
BigRational parse_probability(const std::string& text);

} // namespace convterm
