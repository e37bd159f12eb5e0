#include "convterm/trellis.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace convterm {

namespace {

constexpr int kMaxMemory = 14;

void sort_branches(std::vector<Branch>& branches) {
    std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
        return std::tie(a.from, a.to, a.output) < std::tie(b.from, b.to, b.output);
    });
}

} // namespace

bool TrellisSection::zero_state_has_zero_loop() const {
    for (const Branch& b : branches)
        if (b.from == 0 && b.to == 0 && b.weight == 0) return true;
    return false;
}

std::string TrellisSection::symbol_string(uint32_t output) const {
    std::string s(n_out, '0');
    for (int j = 0; j < n_out; ++j)
        if ((output >> (n_out - 1 - j)) & 1u) s[j] = '1';
    return s;
}

std::string state_bit_label(int value, int nu) {
    if (nu == 0) return "0";
    std::string s(nu, '0');
    for (int i = 0; i < nu; ++i)
        if ((value >> i) & 1) s[i] = '1';
    return s;
}

TrellisSection build_trellis(const CodeSpec& spec) {
    uint32_t gcd = 0;
    for (uint32_t g : spec.generators) gcd = gf2_poly_gcd(gcd, g);
    if (gcd != 1) {
        std::ostringstream os;
        os << "catastrophic encoder: generators share the common factor " << std::oct << gcd
           << " (octal); a minimal noncatastrophic encoder requires gcd 1";
        throw std::invalid_argument(os.str());
    }
    const int nu = spec.memory();
    if (nu > kMaxMemory) throw std::invalid_argument("encoder memory too large");

    TrellisSection t;
    t.n_out = spec.n;
    t.memory = nu;
    const int num_states = 1 << nu;
    t.states.reserve(num_states);
    for (int s = 0; s < num_states; ++s) t.states.push_back(state_bit_label(s, nu));

    const uint32_t state_mask = static_cast<uint32_t>(num_states - 1);
    for (int s = 0; s < num_states; ++s) {
        for (uint32_t u = 0; u <= 1; ++u) {
            uint32_t out = 0;
            for (int j = 0; j < spec.n; ++j) {
                uint32_t g = spec.generators[j];
                uint32_t bit =
                    ((g & 1u) & u) ^ (std::popcount((g >> 1) & static_cast<uint32_t>(s)) & 1u);
                out |= bit << (spec.n - 1 - j);
            }
            int next = static_cast<int>(((static_cast<uint32_t>(s) << 1) | u) & state_mask);
            t.branches.push_back({s, next, out, std::popcount(out)});
        }
    }
    sort_branches(t.branches);
    return t;
}

TrellisSection load_trellis(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("trellis description is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("states") || !doc.contains("branches"))
        throw std::invalid_argument("trellis description needs 'states' and 'branches' fields");

    TrellisSection t;
    std::map<std::string, int> index;
    for (const auto& s : doc["states"]) {
        std::string label = s.get<std::string>();
        if (index.count(label)) throw std::invalid_argument("duplicate state label '" + label + "'");
        index[label] = t.num_states();
        t.states.push_back(label);
    }
    if (t.states.empty()) throw std::invalid_argument("trellis has no states");

    for (const auto& br : doc["branches"]) {
        if (!br.is_array() || br.size() != 3)
            throw std::invalid_argument("each branch must be [from, symbol, to]");
        std::string from = br[0].get<std::string>();
        std::string sym = br[1].get<std::string>();
        std::string to = br[2].get<std::string>();
        auto fi = index.find(from);
        auto ti = index.find(to);
        if (fi == index.end() || ti == index.end())
            throw std::invalid_argument("branch endpoint not in the state set: " + from + " -> " + to);
        if (sym.empty() || sym.size() > 24)
            throw std::invalid_argument("branch symbol must be a nonempty bit string");
        if (t.n_out == 0) t.n_out = static_cast<int>(sym.size());
        if (static_cast<int>(sym.size()) != t.n_out)
            throw std::invalid_argument("branch symbols have unequal widths");
        uint32_t out = 0;
        for (int j = 0; j < t.n_out; ++j) {
            if (sym[j] == '1')
                out |= uint32_t(1) << (t.n_out - 1 - j);
            else if (sym[j] != '0')
                throw std::invalid_argument("branch symbol '" + sym + "' is not binary");
        }
        t.branches.push_back({fi->second, ti->second, out, std::popcount(out)});
    }
    if (t.branches.empty()) throw std::invalid_argument("trellis has no branches");

    std::vector<int> out_degree(t.num_states(), 0);
    for (const Branch& b : t.branches) ++out_degree[b.from];
    for (int s = 0; s < t.num_states(); ++s)
        if (out_degree[s] != out_degree[0])
            throw std::invalid_argument("unequal out-degrees: state '" + t.states[s] + "' has " +
                                        std::to_string(out_degree[s]) + " branches, state '" +
                                        t.states[0] + "' has " + std::to_string(out_degree[0]));
    sort_branches(t.branches);
    return t;
}

EnumeratorMatrix hwam(const TrellisSection& trellis) {
    EnumeratorMatrix m(trellis.num_states(), trellis.states);
    for (const Branch& b : trellis.branches)
        m.at(b.from, b.to) += WeightEnumerator::monomial(b.weight);
    return m;
}

} // namespace convterm
