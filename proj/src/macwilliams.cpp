#include "convterm/macwilliams.hpp"

#include <stdexcept>
#include <vector>

namespace convterm {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& W, int n, int logsize) {
    if (W.is_truncated())
        throw std::invalid_argument("MacWilliams transform needs an untruncated enumerator");
    if (W.degree().value_or(0) > n)
        throw std::invalid_argument("enumerator weight exceeds the block length");
    if (W.eval_at_one() != BigInt(1) << logsize)
        throw std::invalid_argument("enumerator total does not equal 2^k");

    // Signed accumulation of sum_d A_d (1-x)^d (1+x)^(n-d), then exact
    // division by 2^k.
    std::vector<BigInt> acc(n + 1, 0);
    for (const auto& [d, count] : W.coeffs()) {
        for (int j = 0; j <= n; ++j) {
            BigInt c = 0;
            for (int i = std::max(0, j - (n - d)); i <= std::min(d, j); ++i) {
                BigInt term = binomial(d, i) * binomial(n - d, j - i);
                if (i & 1)
                    c -= term;
                else
                    c += term;
            }
            acc[j] += count * c;
        }
    }
    const BigInt size = BigInt(1) << logsize;
    WeightEnumerator out;
    for (int j = 0; j <= n; ++j) {
        if (acc[j] == 0) continue;
        if (acc[j] < 0)
            throw std::runtime_error("MacWilliams transform produced a negative coefficient; "
                                     "the input is not a code weight enumerator");
        BigInt q, r;
        boost::multiprecision::divide_qr(acc[j], size, q, r);
        if (r != 0)
            throw std::runtime_error("MacWilliams transform division by 2^k is inexact; "
                                     "the input is not a code weight enumerator");
        out.add_term(j, q);
    }
    return out;
}

IdentityReport verify_identity(const WeightEnumerator& A, const WeightEnumerator& B, int n,
                               int kA) {
    IdentityReport report;
    report.lhs = A;
    report.rhs = B;
    report.transformed_lhs = macwilliams_transform(A, n, kA);
    report.holds = report.transformed_lhs.coeffs() == B.coeffs();
    if (!report.holds) {
        for (int d = 0; d <= n; ++d) {
            if (report.transformed_lhs.coeff(d) != B.coeff(d)) {
                report.first_discrepant_weight = d;
                break;
            }
        }
    }
    return report;
}

} // namespace convterm
