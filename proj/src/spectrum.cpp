#include "convterm/spectrum.hpp"

#include "convterm/macwilliams.hpp"

#include <algorithm>
#include <stdexcept>

namespace convterm {

const char* to_string(SpectrumMethod method) {
    switch (method) {
        case SpectrumMethod::FirstReturn: return "first-return";
        case SpectrumMethod::NormalizedTailBiting: return "tailbite";
        case SpectrumMethod::NormalizedSubcode: return "subcode";
        case SpectrumMethod::NormalizedTruncated: return "truncated";
        case SpectrumMethod::NormalizedProjection: return "projection";
    }
    return "?";
}

namespace {

std::optional<int> min_weight(const std::vector<WeightEnumerator>& v) {
    std::optional<int> m;
    for (const WeightEnumerator& e : v) {
        if (e.is_zero()) continue;
        int w = e.coeffs().begin()->first;
        if (!m || w < *m) m = w;
    }
    return m;
}

SpectrumMethod method_for(TerminationKind kind) {
    switch (kind) {
        case TerminationKind::Subcode: return SpectrumMethod::NormalizedSubcode;
        case TerminationKind::Projection: return SpectrumMethod::NormalizedProjection;
        case TerminationKind::Truncated: return SpectrumMethod::NormalizedTruncated;
        case TerminationKind::TailBiting: return SpectrumMethod::NormalizedTailBiting;
        case TerminationKind::ReverseTruncated: break;
    }
    throw std::invalid_argument("no normalized spectrum method for this termination kind");
}

} // namespace

SpectrumReport free_spectrum(const EnumeratorMatrix& L, int dmax) {
    if (dmax < 1) throw std::invalid_argument("dmax must be positive");
    const int dim = L.dim();
    if (L.at(0, 0).coeff(0) != 1)
        throw std::invalid_argument("state 0 has no zero-weight self-loop; "
                                    "not a minimal encoder adjacency matrix");

    WeightEnumerator series = WeightEnumerator::zero(dmax);
    // Direct returns 0 -> 0 in one step (degenerate single-state sections).
    for (const auto& [d, c] : L.at(0, 0).coeffs())
        if (d > 0) series.add_term(d, c);

    std::vector<WeightEnumerator> v(dim - 1);
    for (int j = 1; j < dim; ++j) v[j - 1] = L.at(0, j).truncate(dmax);

    const int iteration_guard = dim * (dmax + 2) + 2;
    int m = 0;
    while (true) {
        std::optional<int> mw = min_weight(v);
        if (!mw || *mw > dmax) break;
        if (++m > iteration_guard)
            throw std::runtime_error(
                "first-return series does not converge: the trellis has a zero-weight "
                "cycle outside the zero state (non-minimal or catastrophic encoder)");
        for (int i = 1; i < dim; ++i) series += v[i - 1] * L.at(i, 0);
        std::vector<WeightEnumerator> next(dim - 1);
        for (int j = 1; j < dim; ++j) {
            WeightEnumerator acc = WeightEnumerator::zero(dmax);
            for (int i = 1; i < dim; ++i) {
                if (v[i - 1].is_zero()) continue;
                acc += v[i - 1] * L.at(i, j);
            }
            next[j - 1] = acc.truncate(dmax);
        }
        v = std::move(next);
    }

    SpectrumReport report;
    report.method = SpectrumMethod::FirstReturn;
    report.dmax = dmax;
    report.divisor = 1;
    for (const auto& [d, c] : series.coeffs())
        if (d > 0) report.counts[d] = c;
    if (!report.counts.empty()) report.dfree = report.counts.begin()->first;
    return report;
}

SpectrumReport normalized_spectrum(const EnumeratorMatrix& L, TerminationKind kind, int N,
                                   int dmax) {
    SpectrumReport report;
    report.method = method_for(kind);
    report.dmax = dmax;
    report.divisor = N;
    report.N = N;
    WeightEnumerator e = termination_enumerator(L, kind, N, dmax);
    for (const auto& [d, c] : e.coeffs())
        if (d > 0) report.counts[d] = c;
    if (!report.counts.empty()) report.dfree = report.counts.begin()->first;
    if (kind == TerminationKind::TailBiting) {
        int nu = 0;
        while ((1 << nu) < L.dim()) ++nu;
        if (N <= nu)
            report.notes.push_back("N <= encoder memory: the trace counts state-closed paths "
                                   "and is reported as-is");
    }
    return report;
}

ConvergenceReport convergence_report(const EnumeratorMatrix& L, TerminationKind kind,
                                     const std::vector<int>& n_list, int dmax) {
    ConvergenceReport report;
    report.free = free_spectrum(L, dmax);

    std::vector<int> ns = n_list;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (int N : ns) report.per_n.push_back(normalized_spectrum(L, kind, N, dmax));

    if (!report.free.dfree) return report;
    const int dfree = *report.free.dfree;
    const int dhi = std::min(dmax, 2 * dfree - 1);
    for (int d = dfree; d <= dhi; ++d) {
        ConvergenceEntry entry;
        entry.d = d;
        auto it = report.free.counts.find(d);
        entry.free_count = it == report.free.counts.end() ? BigInt(0) : it->second;
        // smallest N from which counts[d] == N * free_count holds for every
        // larger N in the list
        std::optional<int> candidate;
        for (size_t i = 0; i < ns.size(); ++i) {
            const auto& counts = report.per_n[i].counts;
            auto cit = counts.find(d);
            BigInt have = cit == counts.end() ? BigInt(0) : cit->second;
            if (have == entry.free_count * ns[i]) {
                if (!candidate) candidate = ns[i];
            } else {
                candidate.reset();
            }
        }
        entry.stabilized_at = candidate;
        report.entries.push_back(entry);
    }
    return report;
}

BigRational pairwise_error_bsc(int d, const BigRational& p) {
    const BigRational q = 1 - p;
    BigRational sum = 0;
    // k runs from ceil(d/2): for even d the half-weight tie term is included
    // in full (counted as an error).
    for (int k = (d + 1) / 2; k <= d; ++k)
        sum += BigRational(binomial(d, k)) * boost::multiprecision::pow(p, k) *
               boost::multiprecision::pow(q, d - k);
    return sum;
}

PerformanceEstimate union_bound(const SpectrumReport& S, const BigRational& p,
                                std::optional<int> horizon) {
    if (p < 0 || p > BigRational(1, 2))
        throw std::invalid_argument("crossover probability must lie in [0, 1/2]");
    PerformanceEstimate est;
    est.p = p;
    BigRational sum = 0;
    for (const auto& [d, count] : S.counts)
        sum += BigRational(count) * pairwise_error_bsc(d, p);
    est.per_unit_event_bound = sum / BigRational(S.divisor);
    if (horizon) {
        est.horizon_n = *horizon;
        est.horizon_bound = est.per_unit_event_bound * *horizon;
    }
    return est;
}

BigRational parse_probability(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty probability");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRational(num, den);
    }
    auto dot = text.find('.');
    std::string digits = text;
    int frac_digits = 0;
    if (dot != std::string::npos) {
        frac_digits = static_cast<int>(text.size() - dot - 1);
        digits = text.substr(0, dot) + text.substr(dot + 1);
    }
    if (digits.empty()) throw std::invalid_argument("malformed probability '" + text + "'");
    for (char ch : digits)
        if (!isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("malformed probability '" + text + "'");
    BigInt num(digits);
    BigInt den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    return BigRational(num, den);
}

} // namespace convterm
