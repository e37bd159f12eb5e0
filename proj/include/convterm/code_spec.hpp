#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace convterm {

/// Rate-1/n binary convolutional code given by n generator polynomials over
/// GF(2).  Bit k of a generator mask is the coefficient of D^k; memory() is
/// the largest degree over all generators.
///
/// Text forms accepted by parse_code_spec:
///   octal:   "5,7"            (numeral value read as the generator bit mask,
///                              so 5 = 101b = 1 + D^2, 7 = 111b = 1 + D + D^2)
///   binary:  "binary:101,111" (leftmost character is the D^0 coefficient)
struct CodeSpec {
    int n = 0;
    std::vector<uint32_t> generators;

    int memory() const;
    /// Canonical octal rendering, e.g. "5,7".
    std::string text() const;
};

CodeSpec parse_code_spec(const std::string& text);

/// Orthogonal code of a rate-1/2 code: generators swapped and coefficient-
/// reversed.  The result is verified internally by a brute-force orthogonality
/// check of tail-biting terminations at N = memory + 2.  Throws
/// std::invalid_argument for n != 2.
CodeSpec dual_spec(const CodeSpec& spec);

int gf2_poly_degree(uint32_t g);
uint32_t gf2_poly_gcd(uint32_t a, uint32_t b);
/// Coefficient reversal within width + 1 positions: D^width * g(1/D).
uint32_t gf2_poly_reverse(uint32_t g, int width);

} // namespace convterm
