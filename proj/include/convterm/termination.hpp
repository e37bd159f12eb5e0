#pragma once

#include "convterm/code_spec.hpp"
#include "convterm/enumerator_matrix.hpp"
#include "convterm/gf2_matrix.hpp"

#include <optional>
#include <string>

namespace convterm {

/// The five ways of cutting a length-N block code out of a convolutional
/// code.  Boundary conditions on the encoder state at times 0 and N:
///   Subcode          zero state at both ends (support inside the window)
///   Projection       any states at both ends
///   Truncated        zero state at time 0, any state at time N
///   ReverseTruncated any state at time 0, zero state at time N
///   TailBiting       equal states at times 0 and N
enum class TerminationKind { Subcode, Projection, Truncated, ReverseTruncated, TailBiting };

inline constexpr TerminationKind kAllTerminationKinds[] = {
    TerminationKind::Subcode, TerminationKind::Projection, TerminationKind::Truncated,
    TerminationKind::ReverseTruncated, TerminationKind::TailBiting};

const char* to_string(TerminationKind kind);
std::optional<TerminationKind> parse_termination_kind(const std::string& name);

/// Explicit GF(2) generator matrix of a terminated block code.
struct BlockCodeMatrix {
    Gf2Matrix gens;
    int n_block = 0;  // n * N bits
    TerminationKind kind = TerminationKind::Subcode;
    int N = 0;
    std::string source;    // code spec text or a trellis identity
    bool dualized = false; // true after brute_force::dual_code

    int rank() const { return gens.rank(); }
};

/// Weight generating function of the terminated code, read off the N-th power
/// of the weight adjacency matrix:
///   Subcode          entry (0,0)
///   Projection       sum of all entries
///   Truncated        sum of the first row
///   ReverseTruncated sum of the first column
///   TailBiting       trace
/// For Projection and ReverseTruncated with N < memory, and for TailBiting
/// with any N, the functional counts (state, path) pairs; see
/// functional_multiplicity for the relation to the codeword set.
WeightEnumerator termination_enumerator(const EnumeratorMatrix& L, TerminationKind kind, int N,
                                        std::optional<int> dmax = std::nullopt);

/// Generator matrix built from impulse-response shifts:
///   Subcode          full shifts 0..N-memory-1 (zero code with 0 rows if N <= memory)
///   Truncated        shifts 0..N-1 with tails clipped at N
///   ReverseTruncated shifts -memory..N-memory-1 with heads clipped at 0
///   Projection       row reduction of all shifts meeting the window
///   TailBiting       shifts 0..N-1 wrapped cyclically (requires N >= memory)
BlockCodeMatrix generator_matrix(const CodeSpec& spec, TerminationKind kind, int N);

/// Smallest positive codeword weight, from the termination enumerator.
/// nullopt for a zero-dimensional code.
std::optional<int> min_distance_terminated(const CodeSpec& spec, TerminationKind kind, int N);

/// Impulse response as n-bit symbol blocks, block t holding the D^t
/// coefficients of all generators (first coordinate in the MSB).
std::vector<uint32_t> impulse_blocks(const CodeSpec& spec);

/// How many (state, path) pairs the termination functional counts per
/// codeword: functional(1) / 2^rank.  Always a power of two; 1 whenever the
/// functional is exactly the codeword enumerator.
BigInt functional_multiplicity(const WeightEnumerator& functional, int rank);

} // namespace convterm
