#include "twopart/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <random>

namespace twopart {

namespace {

int resolve_threads(int t) {
#ifdef _OPENMP
    if (t == 0) return std::max(1, omp_get_max_threads());
    return std::max(1, t);
#else
    (void)t;
    return 1;
#endif
}

struct Deadline {
    std::chrono::steady_clock::time_point end{};
    bool armed = false;

    Deadline() = default;
    explicit Deadline(std::chrono::milliseconds budget) {
        if (budget.count() > 0) {
            armed = true;
            end = std::chrono::steady_clock::now() + budget;
        }
    }
    bool expired() const { return armed && std::chrono::steady_clock::now() >= end; }
};

inline bool mask_subset(SubsetMask a, SubsetMask b) { return (a & b) == a; }
inline bool mask_comparable(SubsetMask a, SubsetMask b) {
    return mask_subset(a, b) || mask_subset(b, a);
}

// Bit rows over all 2^n subset masks; one word per row, so n <= 6.
struct MaskTables {
    int n = 0;
    int count = 0;
    std::uint64_t universe = 0;
    std::uint64_t nonempty = 0;
    std::vector<std::uint64_t> inter;    // masks intersecting m
    std::vector<std::uint64_t> noncomp;  // masks incomparable with m (m itself excluded)
    std::vector<std::uint64_t> subs;     // submasks of m (m included)

    explicit MaskTables(int n_) : n(n_), count(1 << n_) {
        universe = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
        nonempty = universe & ~std::uint64_t{1};
        inter.assign(count, 0);
        noncomp.assign(count, 0);
        subs.assign(count, 0);
        for (int s = 0; s < count; ++s)
            for (int t = 0; t < count; ++t) {
                const auto sm = static_cast<SubsetMask>(s), tm = static_cast<SubsetMask>(t);
                if (s & t) inter[s] |= std::uint64_t{1} << t;
                if (!mask_comparable(sm, tm)) noncomp[s] |= std::uint64_t{1} << t;
                if (mask_subset(tm, sm)) subs[s] |= std::uint64_t{1} << t;
            }
    }

    std::uint64_t future(int next) const {
        if (next >= count) return 0;
        return universe & ~((std::uint64_t{1} << next) - 1);
    }
};

}  // namespace

SetFamily family_from_bitset(std::uint64_t bits, int n) {
    SetFamily f(n);
    while (bits) {
        f.masks.push_back(static_cast<SubsetMask>(std::countr_zero(bits)));
        bits &= bits - 1;
    }
    return f;
}

// ---------------------------------------------------------------------------
// conflict graph
// ---------------------------------------------------------------------------

int ConflictGraph::degree(int u) const {
    int d = 0;
    for (int w = 0; w < words; ++w)
        d += std::popcount(adj[static_cast<std::size_t>(u) * words + w]);
    return d;
}

ConflictGraph conflict_graph(PropertyId p, const GroundSplit& split, const SearchOptions& opts) {
    if (!is_two_part_property(p))
        throw std::invalid_argument("conflict_graph: not a two-part property");
    if (split.n > 12)
        throw resource_limit_error("conflict_graph: limited to ground sets of size <= 12");

    ConflictGraph g;
    g.property = p;
    g.split = split;
    g.n_vertices = 1 << split.n;
    g.words = (g.n_vertices + 63) / 64;
    g.adj.assign(static_cast<std::size_t>(g.n_vertices) * g.words, 0);

    const auto fill_row = [&](int u) {
        std::uint64_t* row = g.adj.data() + static_cast<std::size_t>(u) * g.words;
        for (int v = 0; v < g.n_vertices; ++v) {
            if (v == u) continue;
            if (violates(p, static_cast<SubsetMask>(u), static_cast<SubsetMask>(v), split))
                row[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    };

    const int threads = resolve_threads(opts.threads);
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (int u = 0; u < g.n_vertices; ++u) fill_row(u);
    } else
#endif
    {
        for (int u = 0; u < g.n_vertices; ++u) fill_row(u);
    }
    return g;
}

// ---------------------------------------------------------------------------
// maximum independent set: branch and bound over the compatibility graph.
// A greedy color class of the compatibility graph is a clique of the
// conflict graph, so the color count is a clique-cover bound.
// ---------------------------------------------------------------------------

namespace {

inline bool bits_any(const std::uint64_t* p, int words) {
    for (int w = 0; w < words; ++w)
        if (p[w]) return true;
    return false;
}

inline int bits_first(const std::uint64_t* p, int words) {
    for (int w = 0; w < words; ++w)
        if (p[w]) return (w << 6) + std::countr_zero(p[w]);
    return -1;
}

inline void bit_clear(std::uint64_t* p, int v) { p[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

struct MisShared {
    int words = 0;
    std::vector<std::uint64_t> compat;  // permuted complement adjacency
    std::vector<int> perm;              // position -> original vertex
    std::atomic<int> best{-1};
    std::vector<int> best_set;
    std::mutex best_mu;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> timed_out{false};
    Deadline deadline;

    const std::uint64_t* row(int v) const {
        return compat.data() + static_cast<std::size_t>(v) * words;
    }

    void offer(int size, const std::vector<int>& stack) {
        int cur = best.load(std::memory_order_relaxed);
        bool improved = false;
        while (size > cur) {
            if (best.compare_exchange_weak(cur, size)) {
                improved = true;
                break;
            }
        }
        if (improved) {
            std::lock_guard<std::mutex> lock(best_mu);
            if (size == best.load()) best_set.assign(stack.begin(), stack.end());
        }
    }
};

void mis_color_sort(const MisShared& sh, const std::vector<std::uint64_t>& P,
                    std::vector<int>& ord, std::vector<int>& col) {
    ord.clear();
    col.clear();
    std::vector<std::uint64_t> avail = P, cls(sh.words);
    int color = 0;
    while (bits_any(avail.data(), sh.words)) {
        ++color;
        cls = avail;
        while (true) {
            const int v = bits_first(cls.data(), sh.words);
            if (v < 0) break;
            bit_clear(cls.data(), v);
            bit_clear(avail.data(), v);
            ord.push_back(v);
            col.push_back(color);
            const std::uint64_t* r = sh.row(v);
            for (int w = 0; w < sh.words; ++w) cls[w] &= ~r[w];
        }
    }
}

void mis_expand(MisShared& sh, std::vector<std::uint64_t> P, int rsize, std::vector<int>& stack,
                std::uint64_t& local_nodes) {
    if (((++local_nodes) & 1023) == 0 && sh.deadline.expired()) sh.timed_out.store(true);
    if (sh.timed_out.load(std::memory_order_relaxed)) return;

    std::vector<int> ord, col;
    mis_color_sort(sh, P, ord, col);
    std::vector<std::uint64_t> next(sh.words);
    for (int idx = static_cast<int>(ord.size()) - 1; idx >= 0; --idx) {
        if (rsize + col[idx] <= sh.best.load(std::memory_order_relaxed)) return;
        const int v = ord[idx];
        const std::uint64_t* r = sh.row(v);
        for (int w = 0; w < sh.words; ++w) next[w] = P[w] & r[w];
        stack.push_back(v);
        if (!bits_any(next.data(), sh.words))
            sh.offer(rsize + 1, stack);
        else
            mis_expand(sh, next, rsize + 1, stack, local_nodes);
        stack.pop_back();
        bit_clear(P.data(), v);
    }
}

}  // namespace

SearchResult max_independent_set(const ConflictGraph& g, const SearchOptions& opts) {
    if (g.n_vertices > 4096)
        throw resource_limit_error("max_independent_set: limited to 4096 vertices");
    if (g.n_vertices == 0) throw std::invalid_argument("max_independent_set: empty graph");

    MisShared sh;
    sh.words = g.words;
    sh.deadline = Deadline(opts.time_limit);

    sh.perm.resize(g.n_vertices);
    std::iota(sh.perm.begin(), sh.perm.end(), 0);
    std::vector<int> deg(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) deg[v] = g.degree(v);
    std::stable_sort(sh.perm.begin(), sh.perm.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });

    sh.compat.assign(static_cast<std::size_t>(g.n_vertices) * g.words, 0);
    for (int u = 0; u < g.n_vertices; ++u)
        for (int v = 0; v < g.n_vertices; ++v) {
            if (u == v) continue;
            if (!g.edge(sh.perm[u], sh.perm[v]))
                sh.compat[static_cast<std::size_t>(u) * g.words + (v >> 6)] |=
                    std::uint64_t{1} << (v & 63);
        }

    std::vector<std::uint64_t> root(g.words, 0);
    for (int v = 0; v < g.n_vertices; ++v) root[v >> 6] |= std::uint64_t{1} << (v & 63);
    sh.offer(0, {});

    const int threads = resolve_threads(opts.threads);
#ifdef _OPENMP
    if (threads > 1) {
        std::vector<int> ord, col;
        mis_color_sort(sh, root, ord, col);
        const int tasks = static_cast<int>(ord.size());
        // what the serial loop would have removed before reaching each branch
        std::vector<std::uint64_t> removed(static_cast<std::size_t>(tasks) * g.words, 0);
        for (int idx = tasks - 2; idx >= 0; --idx) {
            std::uint64_t* cur = removed.data() + static_cast<std::size_t>(idx) * g.words;
            const std::uint64_t* prev =
                removed.data() + static_cast<std::size_t>(idx + 1) * g.words;
            for (int w = 0; w < g.words; ++w) cur[w] = prev[w];
            cur[ord[idx + 1] >> 6] |= std::uint64_t{1} << (ord[idx + 1] & 63);
        }
#pragma omp parallel num_threads(threads)
        {
            std::uint64_t local_nodes = 0;
            std::vector<int> stack;
            std::vector<std::uint64_t> P(g.words);
#pragma omp for schedule(dynamic, 1)
            for (int t = 0; t < tasks; ++t) {
                const int idx = tasks - 1 - t;
                if (col[idx] <= sh.best.load(std::memory_order_relaxed)) continue;
                const int v = ord[idx];
                const std::uint64_t* r = sh.row(v);
                const std::uint64_t* rem =
                    removed.data() + static_cast<std::size_t>(idx) * g.words;
                for (int w = 0; w < g.words; ++w) P[w] = root[w] & r[w] & ~rem[w];
                stack.assign(1, v);
                if (!bits_any(P.data(), g.words))
                    sh.offer(1, stack);
                else
                    mis_expand(sh, P, 1, stack, local_nodes);
            }
            sh.nodes.fetch_add(local_nodes);
        }
    } else
#endif
    {
        std::uint64_t local_nodes = 0;
        std::vector<int> stack;
        mis_expand(sh, root, 0, stack, local_nodes);
        sh.nodes.fetch_add(local_nodes);
    }

    if (sh.timed_out.load()) throw timeout_error("max_independent_set: time limit exceeded");

    SearchResult res;
    res.property = g.property;
    res.split = g.split;
    res.optimum = sh.best.load();
    res.nodes_explored = sh.nodes.load();
    std::vector<SubsetMask> masks;
    for (int v : sh.best_set) masks.push_back(static_cast<SubsetMask>(sh.perm[v]));
    res.witness = normalize_family(std::move(masks), g.split.n);
    if (BigCount(res.witness.size()) != res.optimum ||
        !satisfies(g.property, res.witness, g.split))
        throw std::logic_error("max_independent_set: witness failed re-validation");
    return res;
}

// ---------------------------------------------------------------------------
// cross-Sperner pair search: label every subset F / G / out
// ---------------------------------------------------------------------------

namespace {

struct CrossState {
    int next = 1;  // the empty set can never join either side
    std::uint64_t inter_f, inter_g;
    std::uint64_t free_f, free_g;
    std::vector<SubsetMask> fmem, gmem;
};

struct CrossCtx {
    const MaskTables* tab = nullptr;
    bool counting = false;
    int floor = 0;  // counting phase: exact total to match
    std::atomic<int> best{-1};
    std::atomic<std::uint64_t> hits{0};
    FamilyPair best_pair;
    std::mutex mu;
    std::atomic<std::uint64_t> nodes{0};
};

void cross_offer(CrossCtx& ctx, const CrossState& s) {
    const int total = static_cast<int>(s.fmem.size() + s.gmem.size());
    if (ctx.counting) {
        if (total == ctx.floor) ctx.hits.fetch_add(1, std::memory_order_relaxed);
        return;
    }
    int cur = ctx.best.load(std::memory_order_relaxed);
    bool improved = false;
    while (total > cur) {
        if (ctx.best.compare_exchange_weak(cur, total)) {
            improved = true;
            break;
        }
    }
    if (improved) {
        std::lock_guard<std::mutex> lock(ctx.mu);
        if (total == ctx.best.load()) {
            SetFamily f(ctx.tab->n), g(ctx.tab->n);
            f.masks = s.fmem;
            g.masks = s.gmem;
            ctx.best_pair = FamilyPair(std::move(f), std::move(g));
        }
    }
}

void cross_dfs(CrossCtx& ctx, CrossState& s, std::uint64_t& local_nodes) {
    ++local_nodes;
    const MaskTables& tab = *ctx.tab;
    const int cur = static_cast<int>(s.fmem.size() + s.gmem.size());
    const std::uint64_t pot =
        ((s.inter_f & s.free_g) | (s.inter_g & s.free_f)) & tab.future(s.next);
    const int bound = cur + std::popcount(pot);
    if (ctx.counting ? bound < ctx.floor : bound <= ctx.best.load(std::memory_order_relaxed))
        return;
    if (s.next >= tab.count) {
        cross_offer(ctx, s);
        return;
    }
    const int m = s.next;
    const std::uint64_t bit = std::uint64_t{1} << m;
    ++s.next;

    if ((s.inter_f & s.free_g) & bit) {
        CrossState t = s;
        t.fmem.push_back(static_cast<SubsetMask>(m));
        t.inter_f &= tab.inter[m];
        t.free_f &= tab.noncomp[m];
        cross_dfs(ctx, t, local_nodes);
    }
    if ((s.inter_g & s.free_f) & bit) {
        CrossState t = s;
        t.gmem.push_back(static_cast<SubsetMask>(m));
        t.inter_g &= tab.inter[m];
        t.free_g &= tab.noncomp[m];
        cross_dfs(ctx, t, local_nodes);
    }
    cross_dfs(ctx, s, local_nodes);  // leave m out
    --s.next;
}

// All reachable states with the first `upto` subsets decided; no pruning.
void cross_frontier(const MaskTables& tab, CrossState s, int upto, std::vector<CrossState>& out) {
    if (s.next > upto || s.next >= tab.count) {
        out.push_back(std::move(s));
        return;
    }
    const int m = s.next;
    const std::uint64_t bit = std::uint64_t{1} << m;
    ++s.next;
    if ((s.inter_f & s.free_g) & bit) {
        CrossState t = s;
        t.fmem.push_back(static_cast<SubsetMask>(m));
        t.inter_f &= tab.inter[m];
        t.free_f &= tab.noncomp[m];
        cross_frontier(tab, std::move(t), upto, out);
    }
    if ((s.inter_g & s.free_f) & bit) {
        CrossState t = s;
        t.gmem.push_back(static_cast<SubsetMask>(m));
        t.inter_g &= tab.inter[m];
        t.free_g &= tab.noncomp[m];
        cross_frontier(tab, std::move(t), upto, out);
    }
    cross_frontier(tab, std::move(s), upto, out);
}

void cross_run(CrossCtx& ctx, const MaskTables& tab, int threads) {
    CrossState root;
    root.inter_f = root.inter_g = tab.nonempty;
    root.free_f = root.free_g = tab.universe;
#ifdef _OPENMP
    if (threads > 1) {
        std::vector<CrossState> frontier;
        cross_frontier(tab, root, std::min(tab.count - 1, 6), frontier);
#pragma omp parallel num_threads(threads)
        {
            std::uint64_t local_nodes = 0;
#pragma omp for schedule(dynamic, 1)
            for (std::size_t t = 0; t < frontier.size(); ++t) {
                CrossState s = frontier[t];
                cross_dfs(ctx, s, local_nodes);
            }
            ctx.nodes.fetch_add(local_nodes);
        }
        return;
    }
#endif
    (void)threads;
    std::uint64_t local_nodes = 0;
    cross_dfs(ctx, root, local_nodes);
    ctx.nodes.fetch_add(local_nodes);
}

}  // namespace

SearchResult max_cross_sperner_sum(int n, const SearchOptions& opts) {
    if (n < 1) throw std::invalid_argument("max_cross_sperner_sum: n must be >= 1");
    if (n > 4) throw resource_limit_error("max_cross_sperner_sum: limited to n <= 4");
    const MaskTables tab(n);
    const int threads = resolve_threads(opts.threads);

    CrossCtx ctx;
    ctx.tab = &tab;
    cross_run(ctx, tab, threads);

    CrossCtx count_ctx;
    count_ctx.tab = &tab;
    count_ctx.counting = true;
    count_ctx.floor = ctx.best.load();
    cross_run(count_ctx, tab, threads);

    SearchResult res;
    res.property = PropertyId::CrossSpernerPair;
    res.split = GroundSplit(n, 0);
    res.optimum = ctx.best.load();
    res.witness_pair = ctx.best_pair;
    {
        std::vector<SubsetMask> u = ctx.best_pair.first.masks;
        u.insert(u.end(), ctx.best_pair.second.masks.begin(), ctx.best_pair.second.masks.end());
        res.witness = normalize_family(std::move(u), n);
    }
    res.nodes_explored = ctx.nodes.load() + count_ctx.nodes.load();
    res.extremal_count = count_ctx.hits.load();
    if (!is_cross_sperner_pair(*res.witness_pair) ||
        BigCount(res.witness_pair->first.size() + res.witness_pair->second.size()) != res.optimum)
        throw std::logic_error("max_cross_sperner_sum: witness failed re-validation");
    return res;
}

// ---------------------------------------------------------------------------
// Kleitman union search: assign subsets to at most m intersecting classes
// ---------------------------------------------------------------------------

namespace {

struct UnionState {
    int next = 1;
    std::vector<std::uint64_t> class_inter;           // per open class
    std::vector<std::vector<SubsetMask>> class_mem;   // members per class
    int used = 0;
};

struct UnionCtx {
    const MaskTables* tab = nullptr;
    int max_classes = 0;
    std::atomic<int> best{-1};
    std::vector<std::vector<SubsetMask>> best_classes;
    std::mutex mu;
    std::atomic<std::uint64_t> nodes{0};
};

void union_offer(UnionCtx& ctx, const UnionState& s) {
    int cur = ctx.best.load(std::memory_order_relaxed);
    bool improved = false;
    while (s.used > cur) {
        if (ctx.best.compare_exchange_weak(cur, s.used)) {
            improved = true;
            break;
        }
    }
    if (improved) {
        std::lock_guard<std::mutex> lock(ctx.mu);
        if (s.used == ctx.best.load()) ctx.best_classes = s.class_mem;
    }
}

void union_dfs(UnionCtx& ctx, UnionState& s, std::uint64_t& local_nodes) {
    ++local_nodes;
    const MaskTables& tab = *ctx.tab;
    std::uint64_t pot = 0;
    for (std::uint64_t ci : s.class_inter) pot |= ci;
    if (static_cast<int>(s.class_inter.size()) < ctx.max_classes) pot = tab.nonempty;
    pot &= tab.future(s.next);
    if (s.used + std::popcount(pot) <= ctx.best.load(std::memory_order_relaxed)) return;
    if (s.next >= tab.count) {
        union_offer(ctx, s);
        return;
    }
    const int m = s.next;
    const std::uint64_t bit = std::uint64_t{1} << m;
    ++s.next;
    ++s.used;
    for (std::size_t j = 0; j < s.class_inter.size(); ++j) {
        if (!(s.class_inter[j] & bit)) continue;
        const std::uint64_t saved = s.class_inter[j];
        s.class_inter[j] &= tab.inter[m];
        s.class_mem[j].push_back(static_cast<SubsetMask>(m));
        union_dfs(ctx, s, local_nodes);
        s.class_mem[j].pop_back();
        s.class_inter[j] = saved;
    }
    if (static_cast<int>(s.class_inter.size()) < ctx.max_classes && m != 0) {
        // classes are interchangeable; open them in first-member order only
        s.class_inter.push_back(tab.inter[m]);
        s.class_mem.push_back({static_cast<SubsetMask>(m)});
        union_dfs(ctx, s, local_nodes);
        s.class_inter.pop_back();
        s.class_mem.pop_back();
    }
    --s.used;
    union_dfs(ctx, s, local_nodes);
    --s.next;
}

void union_frontier(const UnionCtx& ctx, UnionState s, int upto, std::vector<UnionState>& out) {
    if (s.next > upto || s.next >= ctx.tab->count) {
        out.push_back(std::move(s));
        return;
    }
    const MaskTables& tab = *ctx.tab;
    const int m = s.next;
    const std::uint64_t bit = std::uint64_t{1} << m;
    ++s.next;
    ++s.used;
    for (std::size_t j = 0; j < s.class_inter.size(); ++j) {
        if (!(s.class_inter[j] & bit)) continue;
        UnionState t = s;
        t.class_inter[j] &= tab.inter[m];
        t.class_mem[j].push_back(static_cast<SubsetMask>(m));
        union_frontier(ctx, std::move(t), upto, out);
    }
    if (static_cast<int>(s.class_inter.size()) < ctx.max_classes && m != 0) {
        UnionState t = s;
        t.class_inter.push_back(tab.inter[m]);
        t.class_mem.push_back({static_cast<SubsetMask>(m)});
        union_frontier(ctx, std::move(t), upto, out);
    }
    --s.used;
    union_frontier(ctx, std::move(s), upto, out);
}

}  // namespace

SearchResult max_union_intersecting(int n, int m, const SearchOptions& opts) {
    if (n < 1 || m < 1) throw std::invalid_argument("max_union_intersecting: need n, m >= 1");
    if (n > 4 || m > 3)
        throw resource_limit_error("max_union_intersecting: limited to n <= 4, m <= 3");
    const MaskTables tab(n);
    const int threads = resolve_threads(opts.threads);

    UnionCtx ctx;
    ctx.tab = &tab;
    ctx.max_classes = m;

    UnionState root;
#ifdef _OPENMP
    if (threads > 1) {
        std::vector<UnionState> frontier;
        union_frontier(ctx, root, std::min(tab.count - 1, 5), frontier);
#pragma omp parallel num_threads(threads)
        {
            std::uint64_t local_nodes = 0;
#pragma omp for schedule(dynamic, 1)
            for (std::size_t t = 0; t < frontier.size(); ++t) {
                UnionState s = frontier[t];
                union_dfs(ctx, s, local_nodes);
            }
            ctx.nodes.fetch_add(local_nodes);
        }
    } else
#endif
    {
        std::uint64_t local_nodes = 0;
        union_dfs(ctx, root, local_nodes);
        ctx.nodes.fetch_add(local_nodes);
    }

    SearchResult res;
    res.property = PropertyId::IntersectingStrict;
    res.split = GroundSplit(n, 0);
    res.optimum = ctx.best.load();
    res.nodes_explored = ctx.nodes.load();
    std::vector<SubsetMask> all;
    for (const auto& cls : ctx.best_classes) {
        SetFamily part(n);
        part.masks = cls;
        std::sort(part.masks.begin(), part.masks.end());
        if (!is_intersecting(part, IntersectMode::Strict))
            throw std::logic_error("max_union_intersecting: witness failed re-validation");
        all.insert(all.end(), cls.begin(), cls.end());
        res.witness_parts.push_back(std::move(part));
    }
    res.witness = normalize_family(std::move(all), n);
    if (BigCount(res.witness.size()) != res.optimum)
        throw std::logic_error("max_union_intersecting: witness failed re-validation");
    return res;
}

// ---------------------------------------------------------------------------
// union of two intersecting Sperner families
// ---------------------------------------------------------------------------

namespace {

// DFS enumeration over subsets in ascending mask order; `allowed` is the set
// of masks compatible with every current member.
void enumerate_families_rec(const MaskTables& tab, int start, std::uint64_t fam,
                            std::uint64_t allowed, bool sperner,
                            std::vector<std::uint64_t>& out) {
    out.push_back(fam);
    std::uint64_t cand = allowed & tab.future(start);
    while (cand) {
        const int m = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t next_allowed = allowed & tab.inter[m];
        if (sperner) next_allowed &= tab.noncomp[m];
        enumerate_families_rec(tab, m + 1, fam | (std::uint64_t{1} << m), next_allowed, sperner,
                               out);
    }
}

}  // namespace

std::vector<std::uint64_t> enumerate_intersecting_families(int n) {
    if (n < 0 || n > 5)
        throw resource_limit_error("enumerate_intersecting_families: limited to n <= 5");
    const MaskTables tab(n);
    std::vector<std::uint64_t> out;
    enumerate_families_rec(tab, 1, 0, tab.nonempty, false, out);
    return out;
}

std::vector<std::uint64_t> enumerate_intersecting_sperner_families(int n) {
    if (n < 0 || n > 5)
        throw resource_limit_error("enumerate_intersecting_sperner_families: limited to n <= 5");
    const MaskTables tab(n);
    std::vector<std::uint64_t> out;
    enumerate_families_rec(tab, 1, 0, tab.nonempty, true, out);
    return out;
}

std::vector<std::uint64_t> enumerate_downward_closed_families(int n) {
    if (n < 0 || n > 4)
        throw resource_limit_error("enumerate_downward_closed_families: limited to n <= 4");
    const MaskTables tab(n);
    std::vector<std::uint64_t> out;
    const std::uint64_t total = std::uint64_t{1} << tab.count;
    for (std::uint64_t fam = 0; fam < total; ++fam) {
        bool closed = true;
        std::uint64_t rest = fam;
        while (rest) {
            const int m = std::countr_zero(rest);
            rest &= rest - 1;
            if ((fam & tab.subs[m]) != tab.subs[m]) {
                closed = false;
                break;
            }
        }
        if (closed) out.push_back(fam);
    }
    return out;
}

SearchResult max_union_isp_pair(int n, const SearchOptions& opts) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("max_union_isp_pair: n must be odd");
    if (n > 5) throw resource_limit_error("max_union_isp_pair: limited to n <= 5");
    const MaskTables tab(n);
    const auto families = enumerate_intersecting_sperner_families(n);

    // any family extends to a maximal one without shrinking the union
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t fam : families) {
        std::uint64_t ext = tab.nonempty;
        std::uint64_t rest = fam;
        while (rest) {
            const int m = std::countr_zero(rest);
            rest &= rest - 1;
            ext &= tab.inter[m] & tab.noncomp[m];
        }
        if (ext == 0) maximal.push_back(fam);
    }

    const int count = static_cast<int>(maximal.size());
    int best = -1;
    std::pair<int, int> best_idx{0, 0};
    const int threads = resolve_threads(opts.threads);
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel num_threads(threads)
        {
            int local_best = -1;
            std::pair<int, int> local_idx{0, 0};
#pragma omp for schedule(static)
            for (int i = 0; i < count; ++i)
                for (int j = 0; j < count; ++j) {
                    const int v = std::popcount(maximal[i] | maximal[j]);
                    if (v > local_best) {
                        local_best = v;
                        local_idx = {i, j};
                    }
                }
#pragma omp critical
            {
                if (local_best > best ||
                    (local_best == best && local_idx < best_idx)) {
                    best = local_best;
                    best_idx = local_idx;
                }
            }
        }
    } else
#endif
    {
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j) {
                const int v = std::popcount(maximal[i] | maximal[j]);
                if (v > best) {
                    best = v;
                    best_idx = {i, j};
                }
            }
    }

    SearchResult res;
    res.property = PropertyId::Sperner;
    res.split = GroundSplit(n, 0);
    res.optimum = best;
    res.nodes_explored = static_cast<std::uint64_t>(count) * count + families.size();
    SetFamily f = family_from_bitset(maximal[best_idx.first], n);
    SetFamily g = family_from_bitset(maximal[best_idx.second], n);
    res.witness = normalize_family(
        [&] {
            std::vector<SubsetMask> u = f.masks;
            u.insert(u.end(), g.masks.begin(), g.masks.end());
            return u;
        }(),
        n);
    if (!is_intersecting(f, IntersectMode::Strict) || !is_sperner(f) ||
        !is_intersecting(g, IntersectMode::Strict) || !is_sperner(g) ||
        BigCount(res.witness.size()) != res.optimum)
        throw std::logic_error("max_union_isp_pair: witness failed re-validation");
    res.witness_parts.push_back(std::move(f));
    res.witness_parts.push_back(std::move(g));
    return res;
}

// ---------------------------------------------------------------------------
// theorem scans
// ---------------------------------------------------------------------------

const char* scan_suite_name(ScanSuite s) {
    switch (s) {
        case ScanSuite::MaricaSchonheim: return "marica-schonheim";
        case ScanSuite::AhlswedeDaykin: return "ahlswede-daykin";
        case ScanSuite::DownclosedIntersecting: return "downclosed-intersecting";
        case ScanSuite::GkkLym: return "gkk-lym";
    }
    return "?";
}

namespace {

std::string family_hex(std::uint64_t fam) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(fam));
    return buf;
}

// Partition [0,total) into per-thread chunks, run `body(begin,end,slot)`,
// then merge violation lists in slot order so reports are deterministic.
template <typename Body>
ScanReport chunked_scan(ScanSuite suite, int n, std::uint64_t total, int threads, Body&& body) {
    ScanReport rep;
    rep.suite = suite;
    rep.n = n;
    rep.instances_scanned = total;
    const int slots = threads > 1 ? threads : 1;
    std::vector<std::vector<std::string>> violations(slots);
    std::vector<std::uint64_t> extremal(slots, 0);
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel num_threads(threads)
        {
            const int slot = omp_get_thread_num();
            const std::uint64_t chunk = (total + slots - 1) / slots;
            const std::uint64_t begin = chunk * slot;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin < end) body(begin, end, violations[slot], extremal[slot]);
        }
    } else
#endif
    {
        body(0, total, violations[0], extremal[0]);
    }
    for (int s = 0; s < slots; ++s) {
        rep.violations.insert(rep.violations.end(), violations[s].begin(), violations[s].end());
        rep.extremal_count += extremal[s];
    }
    return rep;
}

ScanReport scan_marica_schonheim(int n, int threads) {
    const MaskTables tab(n);
    const std::uint64_t total = std::uint64_t{1} << tab.count;
    return chunked_scan(
        ScanSuite::MaricaSchonheim, n, total, threads,
        [&](std::uint64_t begin, std::uint64_t end, std::vector<std::string>& viol,
            std::uint64_t& extremal) {
            std::vector<int> members;
            for (std::uint64_t fam = begin; fam < end; ++fam) {
                members.clear();
                std::uint64_t rest = fam;
                while (rest) {
                    members.push_back(std::countr_zero(rest));
                    rest &= rest - 1;
                }
                std::uint64_t delta = 0;
                for (int a : members)
                    for (int b : members)
                        delta |= std::uint64_t{1} << (a & ~b);
                const int dsz = std::popcount(delta);
                if (dsz < static_cast<int>(members.size()))
                    viol.push_back("family=" + family_hex(fam));
                else if (dsz == static_cast<int>(members.size()))
                    ++extremal;
            }
        });
}

ScanReport scan_ahlswede_daykin(int n, const ScanOptions& opts) {
    const MaskTables tab(n);
    const int threads = resolve_threads(opts.threads);

    const auto check_pair = [&](std::uint64_t fa, std::uint64_t fb, std::uint64_t& extremal,
                                std::vector<std::string>& viol) {
        std::uint64_t meet = 0, join = 0;
        std::uint64_t ra = fa;
        while (ra) {
            const int a = std::countr_zero(ra);
            ra &= ra - 1;
            std::uint64_t rb = fb;
            while (rb) {
                const int b = std::countr_zero(rb);
                rb &= rb - 1;
                meet |= std::uint64_t{1} << (a & b);
                join |= std::uint64_t{1} << (a | b);
            }
        }
        const std::uint64_t lhs =
            static_cast<std::uint64_t>(std::popcount(fa)) * std::popcount(fb);
        const std::uint64_t rhs =
            static_cast<std::uint64_t>(std::popcount(meet)) * std::popcount(join);
        if (lhs > rhs)
            viol.push_back("pair=(" + family_hex(fa) + "," + family_hex(fb) + ")");
        else if (lhs == rhs)
            ++extremal;
    };

    if (n <= 3) {
        const std::uint64_t side = std::uint64_t{1} << tab.count;
        return chunked_scan(ScanSuite::AhlswedeDaykin, n, side * side, threads,
                            [&](std::uint64_t begin, std::uint64_t end,
                                std::vector<std::string>& viol, std::uint64_t& extremal) {
                                for (std::uint64_t id = begin; id < end; ++id)
                                    check_pair(id / side, id % side, extremal, viol);
                            });
    }
    // beyond the exhaustive range: seeded sampling
    if (n > 6) throw resource_limit_error("ahlswede-daykin scan: limited to n <= 6");
    if (opts.samples == 0)
        throw resource_limit_error(
            "ahlswede-daykin scan: exhaustive only up to n = 3; pass a sample count");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> draws(opts.samples);
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t fam_mask =
        tab.count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tab.count) - 1;
    for (auto& d : draws) d = {rng() & fam_mask, rng() & fam_mask};
    return chunked_scan(ScanSuite::AhlswedeDaykin, n, opts.samples, threads,
                        [&](std::uint64_t begin, std::uint64_t end,
                            std::vector<std::string>& viol, std::uint64_t& extremal) {
                            for (std::uint64_t id = begin; id < end; ++id)
                                check_pair(draws[id].first, draws[id].second, extremal, viol);
                        });
}

ScanReport scan_downclosed_intersecting(int n, int threads) {
    const MaskTables tab(n);
    const auto down = enumerate_downward_closed_families(n);
    return chunked_scan(
        ScanSuite::DownclosedIntersecting, n, down.size(), threads,
        [&](std::uint64_t begin, std::uint64_t end, std::vector<std::string>& viol,
            std::uint64_t& extremal) {
            for (std::uint64_t id = begin; id < end; ++id) {
                const std::uint64_t d = down[id];
                // largest strict-intersecting subfamily of d, depth-first
                // over (candidates, size) pairs
                int best = 0;
                std::vector<std::pair<std::uint64_t, int>> work;
                work.emplace_back(d & tab.nonempty, 0);
                while (!work.empty()) {
                    auto [cand, size] = work.back();
                    work.pop_back();
                    if (size > best) best = size;
                    if (size + std::popcount(cand) <= best) continue;
                    std::uint64_t rest = cand;
                    while (rest) {
                        const int m = std::countr_zero(rest);
                        rest &= rest - 1;
                        work.emplace_back(rest & tab.inter[m], size + 1);
                    }
                }
                const int dsz = std::popcount(d);
                if (2 * best > dsz)
                    viol.push_back("downclosed=" + family_hex(d));
                else if (2 * best == dsz)
                    ++extremal;
            }
        });
}

ScanReport scan_gkk_lym(int n, int threads) {
    const auto families = enumerate_intersecting_sperner_families(n);
    std::vector<BigRatio> term(static_cast<std::size_t>(n) + 1);
    for (int sz = 1; sz <= n; ++sz)
        term[sz] = BigRatio(1, 2 * sz <= n ? binomial(n, sz - 1) : binomial(n, sz));
    return chunked_scan(
        ScanSuite::GkkLym, n, families.size(), threads,
        [&](std::uint64_t begin, std::uint64_t end, std::vector<std::string>& viol,
            std::uint64_t& extremal) {
            for (std::uint64_t id = begin; id < end; ++id) {
                BigRatio sum = 0;
                std::uint64_t rest = families[id];
                while (rest) {
                    const int m = std::countr_zero(rest);
                    rest &= rest - 1;
                    sum += term[std::popcount(static_cast<unsigned>(m))];
                }
                if (sum > 1)
                    viol.push_back("family=" + family_hex(families[id]));
                else if (sum == 1)
                    ++extremal;
            }
        });
}

}  // namespace

ScanReport run_theorem_scan(ScanSuite suite, int n, const ScanOptions& opts) {
    const int threads = resolve_threads(opts.threads);
    switch (suite) {
        case ScanSuite::MaricaSchonheim:
            if (n < 0 || n > 4)
                throw resource_limit_error("marica-schonheim scan: limited to n <= 4");
            return scan_marica_schonheim(n, threads);
        case ScanSuite::AhlswedeDaykin:
            if (n < 0) throw std::invalid_argument("scan: n must be >= 0");
            return scan_ahlswede_daykin(n, opts);
        case ScanSuite::DownclosedIntersecting:
            if (n < 0 || n > 4)
                throw resource_limit_error("downclosed-intersecting scan: limited to n <= 4");
            return scan_downclosed_intersecting(n, threads);
        case ScanSuite::GkkLym:
            if (n < 0 || n > 4) throw resource_limit_error("gkk-lym scan: limited to n <= 4");
            return scan_gkk_lym(n, threads);
    }
    throw std::invalid_argument("scan: unknown suite");
}

}  // namespace twopart
