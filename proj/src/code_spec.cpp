#include "convterm/code_spec.hpp"

#include "convterm/gf2_matrix.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace convterm {

int gf2_poly_degree(uint32_t g) {
    if (g == 0) return -1;
    return 31 - std::countl_zero(g);
}

uint32_t gf2_poly_gcd(uint32_t a, uint32_t b) {
    while (b != 0) {
        int db = gf2_poly_degree(b);
        while (gf2_poly_degree(a) >= db && a != 0) a ^= b << (gf2_poly_degree(a) - db);
        std::swap(a, b);
    }
    return a;
}

uint32_t gf2_poly_reverse(uint32_t g, int width) {
    uint32_t r = 0;
    for (int k = 0; k <= width; ++k)
        if ((g >> k) & 1u) r |= uint32_t(1) << (width - k);
    return r;
}

int CodeSpec::memory() const {
    int m = 0;
    for (uint32_t g : generators) m = std::max(m, gf2_poly_degree(g));
    return m;
}

std::string CodeSpec::text() const {
    std::ostringstream os;
    for (size_t i = 0; i < generators.size(); ++i) {
        if (i) os << ',';
        os << std::oct << generators[i];
    }
    return os.str();
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

uint32_t parse_octal_generator(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty generator numeral");
    uint64_t v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '7')
            throw std::invalid_argument("malformed octal numeral '" + tok + "'");
        v = v * 8 + (ch - '0');
        if (v > 0xFFFFFFu) throw std::invalid_argument("generator degree too large: '" + tok + "'");
    }
    return static_cast<uint32_t>(v);
}

uint32_t parse_binary_generator(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty generator bit string");
    if (tok.size() > 24) throw std::invalid_argument("generator degree too large: '" + tok + "'");
    uint32_t g = 0;
    for (size_t i = 0; i < tok.size(); ++i) {
        if (tok[i] == '1')
            g |= uint32_t(1) << i;
        else if (tok[i] != '0')
            throw std::invalid_argument("malformed binary generator '" + tok + "'");
    }
    return g;
}

} // namespace

CodeSpec parse_code_spec(const std::string& text) {
    std::string body = text;
    bool binary = false;
    const std::string prefix = "binary:";
    if (body.rfind(prefix, 0) == 0) {
        binary = true;
        body = body.substr(prefix.size());
    }
    CodeSpec spec;
    for (const std::string& tok : split_commas(body))
        spec.generators.push_back(binary ? parse_binary_generator(tok) : parse_octal_generator(tok));
    spec.n = static_cast<int>(spec.generators.size());
    if (spec.n < 2) throw std::invalid_argument("a code spec needs at least 2 generators");
    bool any_constant_term = false;
    for (uint32_t g : spec.generators) any_constant_term |= (g & 1u);
    if (!any_constant_term)
        throw std::invalid_argument("all generators are even; no generator has a D^0 term");
    return spec;
}

namespace {

// Tail-biting generator rows built straight from the impulse response:
// row i is the response cyclically rotated by i symbol slots.
Gf2Matrix tail_biting_rows(const CodeSpec& spec, int N) {
    const int n = spec.n;
    const int nu = spec.memory();
    Gf2Matrix m(N, n * N);
    for (int i = 0; i < N; ++i)
        for (int t = 0; t <= nu; ++t)
            for (int j = 0; j < n; ++j)
                if ((spec.generators[j] >> t) & 1u) {
                    int col = ((i + t) % N) * n + j;
                    m.set(i, col, m.get(i, col) ^ 1);
                }
    return m;
}

} // namespace

CodeSpec dual_spec(const CodeSpec& spec) {
    if (spec.n != 2)
        throw std::invalid_argument(
            "dual construction is supported for rate-1/2 codes only; "
            "supply an explicit trellis for other rates");
    if (gf2_poly_gcd(spec.generators[0], spec.generators[1]) != 1)
        throw std::invalid_argument("catastrophic encoder: generators share a common factor");
    const int nu = spec.memory();
    CodeSpec dual;
    dual.n = 2;
    dual.generators = {gf2_poly_reverse(spec.generators[1], nu),
                       gf2_poly_reverse(spec.generators[0], nu)};

    const int N = nu + 2;
    Gf2Matrix a = tail_biting_rows(spec, N);
    Gf2Matrix b = tail_biting_rows(dual, N);
    if (!a.orthogonal_to(b) || a.rank() + b.rank() != 2 * N)
        throw std::logic_error("dual spec failed the tail-biting orthogonality self-check");
    return dual;
}

} // namespace convterm
