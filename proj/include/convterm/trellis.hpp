#pragma once

#include "convterm/code_spec.hpp"
#include "convterm/enumerator_matrix.hpp"

#include <optional>

namespace convterm {

/// One state/symbol transition of a trellis section.  Output symbols are
/// packed with the first output coordinate in the most significant bit, so
/// the natural left-to-right bit string matches the coordinate order.
struct Branch {
    int from = 0;
    int to = 0;
    uint32_t output = 0;
    int weight = 0;

    bool operator==(const Branch&) const = default;
};

/// Trellis section of one time unit.  states[0] is the zero state whenever
/// the section is used for termination or spectrum computations.
struct TrellisSection {
    int n_out = 0;
    std::vector<std::string> states;
    std::vector<Branch> branches;
    std::optional<int> memory;  // set for controller canonical constructions

    int num_states() const { return static_cast<int>(states.size()); }
    bool zero_state_has_zero_loop() const;
    std::string symbol_string(uint32_t output) const;

    bool operator==(const TrellisSection&) const = default;
};

/// State label under the convention that delay cell i holds bit i-1 of the
/// state value, most recent input first ("10" is the state entered from "00"
/// on input 1).
std::string state_bit_label(int value, int nu);

/// Controller canonical trellis section of a rate-1/n spec.  From state
/// (s_1,...,s_nu) on input u, output coordinate j is g_j0*u xor sum_i g_ji*s_i
/// and the next state is (u, s_1, ..., s_{nu-1}).  Rejects catastrophic specs
/// (generator gcd != 1) with a diagnostic.
TrellisSection build_trellis(const CodeSpec& spec);

/// Trellis section from a JSON document {"states": [...], "branches":
/// [[from, symbol, to], ...]}.  Every state must have the same out-degree and
/// every symbol the same width; states are indexed in list order, with the
/// first listed state taken as the zero state.
TrellisSection load_trellis(const std::string& json_text);

/// Weight adjacency matrix: entry (s, s') is the sum of x^weight over
/// branches s -> s'.
EnumeratorMatrix hwam(const TrellisSection& trellis);

} // namespace convterm
