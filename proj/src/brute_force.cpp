#include "convterm/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace convterm {

namespace {

constexpr int kEnumerationRankGuard = 24;

int count_trailing_zeros(uint64_t x) { return std::countr_zero(x); }

// Weight histogram of one contiguous Gray-code index range [lo, hi).
// Counts fit in uint64 because rank <= 24.
void gray_range(const Gf2Matrix& basis, uint64_t lo, uint64_t hi, std::vector<uint64_t>& hist) {
    const int words = basis.words_per_row();
    std::vector<uint64_t> word(words, 0);
    uint64_t start = lo ^ (lo >> 1);
    for (int r = 0; r < basis.rows(); ++r)
        if ((start >> r) & 1u)
            for (int w = 0; w < words; ++w) word[w] ^= basis.row_data(r)[w];
    auto weight_of = [&]() {
        int s = 0;
        for (int w = 0; w < words; ++w) s += std::popcount(word[w]);
        return s;
    };
    hist[weight_of()] += 1;
    for (uint64_t i = lo + 1; i < hi; ++i) {
        int r = count_trailing_zeros(i);
        for (int w = 0; w < words; ++w) word[w] ^= basis.row_data(r)[w];
        hist[weight_of()] += 1;
    }
}

WeightEnumerator hist_to_enumerator(const std::vector<uint64_t>& hist) {
    WeightEnumerator e;
    for (size_t d = 0; d < hist.size(); ++d)
        if (hist[d]) e.add_term(static_cast<int>(d), BigInt(hist[d]));
    return e;
}

Gf2Matrix checked_basis(const Gf2Matrix& G) {
    Gf2Matrix basis = G.row_reduced();
    if (basis.rows() > kEnumerationRankGuard)
        throw std::invalid_argument("enumeration guard exceeded: rank " +
                                    std::to_string(basis.rows()) + " > " +
                                    std::to_string(kEnumerationRankGuard));
    return basis;
}

} // namespace

bool CodewordSet::contains(const std::vector<uint64_t>& word) const {
    return std::binary_search(words.begin(), words.end(), word);
}

CodewordSet materialize(const Gf2Matrix& gens, int max_rank) {
    Gf2Matrix basis = gens.row_reduced();
    if (basis.rows() > max_rank)
        throw std::invalid_argument("codeword set too large to materialize");
    CodewordSet set;
    set.n_block = gens.cols();
    const int words = basis.words_per_row();
    std::vector<uint64_t> word(words, 0);
    set.words.reserve(size_t(1) << basis.rows());
    set.words.push_back(word);
    for (uint64_t i = 1; i < (uint64_t(1) << basis.rows()); ++i) {
        int r = count_trailing_zeros(i);
        for (int w = 0; w < words; ++w) word[w] ^= basis.row_data(r)[w];
        set.words.push_back(word);
    }
    std::sort(set.words.begin(), set.words.end());
    return set;
}

WeightEnumerator enumerate_weights_serial(const Gf2Matrix& G) {
    Gf2Matrix basis = checked_basis(G);
    std::vector<uint64_t> hist(G.cols() + 1, 0);
    gray_range(basis, 0, uint64_t(1) << basis.rows(), hist);
    return hist_to_enumerator(hist);
}

WeightEnumerator enumerate_weights(const Gf2Matrix& G) {
    Gf2Matrix basis = checked_basis(G);
    const uint64_t total = uint64_t(1) << basis.rows();
    int chunks = 1;
#ifdef _OPENMP
    chunks = std::max(1, omp_get_max_threads());
#endif
    if (total < 4096 || chunks == 1) {
        std::vector<uint64_t> hist(G.cols() + 1, 0);
        gray_range(basis, 0, total, hist);
        return hist_to_enumerator(hist);
    }
    std::vector<std::vector<uint64_t>> local(chunks, std::vector<uint64_t>(G.cols() + 1, 0));
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        uint64_t lo = total / chunks * c + std::min<uint64_t>(c, total % chunks);
        uint64_t hi = lo + total / chunks + (static_cast<uint64_t>(c) < total % chunks ? 1 : 0);
        gray_range(basis, lo, hi, local[c]);
    }
    std::vector<uint64_t> hist(G.cols() + 1, 0);
    for (const auto& h : local)
        for (size_t d = 0; d < hist.size(); ++d) hist[d] += h[d];
    return hist_to_enumerator(hist);
}

WeightEnumerator enumerate_weights(const BlockCodeMatrix& G) {
    return enumerate_weights(G.gens);
}

BlockCodeMatrix dual_code(const BlockCodeMatrix& G) {
    BlockCodeMatrix d = G;
    d.gens = G.gens.cols() == 0 ? Gf2Matrix(0, 0) : G.gens.null_space();
    d.dualized = !G.dualized;
    return d;
}

bool sets_equal(const BlockCodeMatrix& a, const BlockCodeMatrix& b) {
    if (a.n_block != b.n_block)
        throw std::invalid_argument("codeword length mismatch in sets_equal");
    return a.gens.same_row_space(b.gens);
}

namespace {

struct WalkBounds {
    std::vector<std::vector<const Branch*>> out;  // branches grouped by source state
    int branches_per_state = 0;
};

WalkBounds group_branches(const TrellisSection& trellis, int N) {
    WalkBounds wb;
    wb.out.resize(trellis.num_states());
    for (const Branch& b : trellis.branches) wb.out[b.from].push_back(&b);
    wb.branches_per_state = static_cast<int>(wb.out[0].size());
    double paths = static_cast<double>(trellis.num_states());
    for (int i = 0; i < N; ++i) {
        paths *= wb.branches_per_state;
        if (paths > double(1 << 26))
            throw std::invalid_argument("trellis walk guard exceeded for N = " + std::to_string(N));
    }
    return wb;
}

bool start_allowed(TerminationKind kind, int s) {
    switch (kind) {
        case TerminationKind::Subcode:
        case TerminationKind::Truncated: return s == 0;
        default: return true;
    }
}

bool end_allowed(TerminationKind kind, int start, int end) {
    switch (kind) {
        case TerminationKind::Subcode:
        case TerminationKind::ReverseTruncated: return end == 0;
        case TerminationKind::TailBiting: return end == start;
        default: return true;
    }
}

template <typename Visit>
void walk(const WalkBounds& wb, TerminationKind kind, int num_states, int N, Visit visit) {
    struct Frame { int state; int branch; };
    for (int start = 0; start < num_states; ++start) {
        if (!start_allowed(kind, start)) continue;
        std::vector<const Branch*> path;
        std::vector<Frame> stack{{start, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (static_cast<int>(path.size()) == N) {
                if (end_allowed(kind, start, f.state)) visit(path);
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            if (f.branch >= wb.branches_per_state) {
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            const Branch* b = wb.out[f.state][f.branch++];
            path.push_back(b);
            stack.push_back({b->to, 0});
        }
    }
}

} // namespace

WeightEnumerator path_weights_by_walk(const TrellisSection& trellis, TerminationKind kind, int N) {
    WalkBounds wb = group_branches(trellis, N);
    WeightEnumerator e;
    walk(wb, kind, trellis.num_states(), N, [&](const std::vector<const Branch*>& path) {
        int w = 0;
        for (const Branch* b : path) w += b->weight;
        e.add_term(w, 1);
    });
    return e;
}

BlockCodeMatrix termination_words_by_walk(const TrellisSection& trellis, TerminationKind kind,
                                          int N) {
    WalkBounds wb = group_branches(trellis, N);
    const int n = trellis.n_out;
    Gf2Matrix words(0, n * N);
    walk(wb, kind, trellis.num_states(), N, [&](const std::vector<const Branch*>& path) {
        Gf2Matrix row(1, n * N);
        for (int t = 0; t < N; ++t)
            for (int j = 0; j < n; ++j)
                if ((path[t]->output >> (n - 1 - j)) & 1u) row.set(0, t * n + j, true);
        words.append_row(row, 0);
    });
    BlockCodeMatrix out;
    out.gens = words.rows() == 0 ? Gf2Matrix(0, n * N) : words.row_reduced();
    out.n_block = n * N;
    out.kind = kind;
    out.N = N;
    out.source = "trellis-walk";
    return out;
}

WeightEnumerator first_return_weights_by_walk(const TrellisSection& trellis, int dmax) {
    std::vector<std::vector<const Branch*>> out(trellis.num_states());
    for (const Branch& b : trellis.branches) out[b.from].push_back(&b);
    const int depth_guard = trellis.num_states() * (dmax + 1) + 2;

    WeightEnumerator e = WeightEnumerator::zero(dmax);
    // (state, accumulated weight, depth); the first step out of state 0 has
    // already been taken when a frame is pushed.
    struct Node { int state; int weight; int depth; };
    std::vector<Node> stack;
    for (const Branch* b : out[0]) {
        if (b->to == 0) {
            if (b->weight > 0 && b->weight <= dmax) e.add_term(b->weight, 1);  // length-1 event
            continue;
        }
        if (b->weight <= dmax) stack.push_back({b->to, b->weight, 1});
    }
    while (!stack.empty()) {
        Node node = stack.back();
        stack.pop_back();
        if (node.depth > depth_guard)
            throw std::runtime_error("first-return walk exceeded its depth guard");
        for (const Branch* b : out[node.state]) {
            int w = node.weight + b->weight;
            if (w > dmax) continue;
            if (b->to == 0)
                e.add_term(w, 1);
            else
                stack.push_back({b->to, w, node.depth + 1});
        }
    }
    return e;
}

} // namespace convterm
