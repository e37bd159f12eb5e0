#pragma once

#include "convterm/termination.hpp"
#include "convterm/trellis.hpp"
#include "convterm/weight_enumerator.hpp"

#include <cstdint>
#include <vector>

namespace convterm {

/// Exhaustively enumerated codeword set of a small block code.  Words are
/// canonical (sorted) bit-packed vectors; the zero word is always present.
struct CodewordSet {
    int n_block = 0;
    std::vector<std::vector<uint64_t>> words;

    bool contains(const std::vector<uint64_t>& word) const;
    size_t size() const { return words.size(); }
};

/// Materialize the row space of a generator matrix (guard: rank <= max_rank).
CodewordSet materialize(const Gf2Matrix& gens, int max_rank = 20);

/// Exact weight enumerator of the row space of G by Gray-code traversal of
/// all 2^rank row combinations (one basis row flipped per step).  Guard:
/// rank <= 24.  Chunked across threads with a deterministic merge.
WeightEnumerator enumerate_weights(const Gf2Matrix& G);
WeightEnumerator enumerate_weights(const BlockCodeMatrix& G);

/// Single-threaded reference implementation of enumerate_weights.
WeightEnumerator enumerate_weights_serial(const Gf2Matrix& G);

/// Generator matrix of the dual block code (null-space basis).
BlockCodeMatrix dual_code(const BlockCodeMatrix& G);

/// True when the two generator matrices span the same codeword set, decided
/// by rank arithmetic without materializing words.  Throws on length mismatch.
bool sets_equal(const BlockCodeMatrix& a, const BlockCodeMatrix& b);

/// Every (start state, branch path) pair of length N admitted by the
/// termination kind, collected as a weight enumerator.  Independent oracle
/// for termination_enumerator; counts paths, not distinct codewords.
WeightEnumerator path_weights_by_walk(const TrellisSection& trellis, TerminationKind kind, int N);

/// Basis of the codeword set produced by the same walk (the set itself is
/// linear, so its row space is the terminated code).
BlockCodeMatrix termination_words_by_walk(const TrellisSection& trellis, TerminationKind kind,
                                          int N);

/// First-return path enumeration: weights of all paths that leave the zero
/// state and come back to it without an intermediate visit, truncated at
/// dmax.  Independent oracle for the first-return series.
WeightEnumerator first_return_weights_by_walk(const TrellisSection& trellis, int dmax);

} // namespace convterm
