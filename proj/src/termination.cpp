#include "convterm/termination.hpp"

#include "convterm/trellis.hpp"

#include <stdexcept>

namespace convterm {

const char* to_string(TerminationKind kind) {
    switch (kind) {
        case TerminationKind::Subcode: return "subcode";
        case TerminationKind::Projection: return "projection";
        case TerminationKind::Truncated: return "truncated";
        case TerminationKind::ReverseTruncated: return "reverse-truncated";
        case TerminationKind::TailBiting: return "tailbite";
    }
    return "?";
}

std::optional<TerminationKind> parse_termination_kind(const std::string& name) {
    if (name == "subcode") return TerminationKind::Subcode;
    if (name == "projection") return TerminationKind::Projection;
    if (name == "truncated") return TerminationKind::Truncated;
    if (name == "reverse-truncated") return TerminationKind::ReverseTruncated;
    if (name == "tailbite" || name == "tail-biting" || name == "tailbiting")
        return TerminationKind::TailBiting;
    return std::nullopt;
}

WeightEnumerator termination_enumerator(const EnumeratorMatrix& L, TerminationKind kind, int N,
                                        std::optional<int> dmax) {
    if (N < 1) throw std::invalid_argument("termination length N must be positive");
    EnumeratorMatrix p = em_pow(L, static_cast<unsigned>(N), dmax);
    switch (kind) {
        case TerminationKind::Subcode: return p.at(0, 0);
        case TerminationKind::Projection: return p.sum_all();
        case TerminationKind::Truncated: return p.sum_row(0);
        case TerminationKind::ReverseTruncated: return p.sum_col(0);
        case TerminationKind::TailBiting: return p.trace();
    }
    throw std::logic_error("unreachable termination kind");
}

std::vector<uint32_t> impulse_blocks(const CodeSpec& spec) {
    const int nu = spec.memory();
    std::vector<uint32_t> blocks(nu + 1, 0);
    for (int t = 0; t <= nu; ++t)
        for (int j = 0; j < spec.n; ++j)
            if ((spec.generators[j] >> t) & 1u) blocks[t] |= uint32_t(1) << (spec.n - 1 - j);
    return blocks;
}

namespace {

void place_block(Gf2Matrix& m, int row, int time, uint32_t block, int n) {
    for (int j = 0; j < n; ++j)
        if ((block >> (n - 1 - j)) & 1u) m.set(row, time * n + j, true);
}

void xor_block(Gf2Matrix& m, int row, int time, uint32_t block, int n) {
    for (int j = 0; j < n; ++j)
        if ((block >> (n - 1 - j)) & 1u) {
            int c = time * n + j;
            m.set(row, c, m.get(row, c) ^ 1);
        }
}

} // namespace

BlockCodeMatrix generator_matrix(const CodeSpec& spec, TerminationKind kind, int N) {
    if (N < 1) throw std::invalid_argument("termination length N must be positive");
    const int n = spec.n;
    const int nu = spec.memory();
    const std::vector<uint32_t> blocks = impulse_blocks(spec);

    BlockCodeMatrix out;
    out.n_block = n * N;
    out.kind = kind;
    out.N = N;
    out.source = spec.text();

    switch (kind) {
        case TerminationKind::Subcode: {
            int rows = std::max(0, N - nu);
            Gf2Matrix m(rows, n * N);
            for (int i = 0; i < rows; ++i)
                for (int t = 0; t <= nu; ++t) place_block(m, i, i + t, blocks[t], n);
            out.gens = m;
            break;
        }
        case TerminationKind::Truncated: {
            Gf2Matrix m(N, n * N);
            for (int i = 0; i < N; ++i)
                for (int t = 0; t <= nu && i + t < N; ++t) place_block(m, i, i + t, blocks[t], n);
            out.gens = m;
            break;
        }
        case TerminationKind::ReverseTruncated: {
            Gf2Matrix m(N, n * N);
            for (int i = -nu; i < N - nu; ++i)
                for (int t = 0; t <= nu; ++t)
                    if (i + t >= 0) place_block(m, i + nu, i + t, blocks[t], n);
            out.gens = m;
            break;
        }
        case TerminationKind::Projection: {
            Gf2Matrix m(N + nu, n * N);
            for (int i = -nu; i < N; ++i)
                for (int t = 0; t <= nu; ++t)
                    if (i + t >= 0 && i + t < N) place_block(m, i + nu, i + t, blocks[t], n);
            out.gens = m.row_reduced();
            break;
        }
        case TerminationKind::TailBiting: {
            if (N < nu)
                throw std::invalid_argument(
                    "tail-biting generator rows are refused for N < memory (rows would "
                    "wrap onto themselves); the trace functional remains available");
            Gf2Matrix m(N, n * N);
            for (int i = 0; i < N; ++i)
                for (int t = 0; t <= nu; ++t) xor_block(m, i, (i + t) % N, blocks[t], n);
            out.gens = m;
            break;
        }
    }
    return out;
}

std::optional<int> min_distance_terminated(const CodeSpec& spec, TerminationKind kind, int N) {
    EnumeratorMatrix L = hwam(build_trellis(spec));
    return termination_enumerator(L, kind, N).min_positive_weight();
}

BigInt functional_multiplicity(const WeightEnumerator& functional, int rank) {
    BigInt total = functional.eval_at_one();
    BigInt size = BigInt(1) << rank;
    BigInt q, r;
    boost::multiprecision::divide_qr(total, size, q, r);
    if (r != 0 || q == 0)
        throw std::runtime_error("termination functional does not cover the code set evenly");
    return q;
}

} // namespace convterm
