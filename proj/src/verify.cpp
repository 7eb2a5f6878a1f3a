#include "cfc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cfc {

bool operator==(const WitnessDetail& a, const WitnessDetail& b) {
    return a.color == b.color && a.multiplicity == b.multiplicity;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.mode == b.mode && a.property == b.property && a.ok == b.ok &&
           a.hyperedges_checked == b.hyperedges_checked && a.witness == b.witness &&
           ((!a.witness_detail && !b.witness_detail) ||
            (a.witness_detail && b.witness_detail && *a.witness_detail == *b.witness_detail));
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(VertexId v) { return Mask{1} << v; }

unsigned max_threads() {
#ifdef _OPENMP
    return static_cast<unsigned>(std::max(1, omp_get_max_threads()));
#else
    return 1;
#endif
}

unsigned thread_id() {
#ifdef _OPENMP
    return static_cast<unsigned>(omp_get_thread_num());
#else
    return 0;
#endif
}

// splitmix64 finalizer; spreads masks across merge shards.
inline std::uint64_t shard_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Lexicographic order on the sorted vertex sequences two masks represent.
// {0,2} < {1}; a proper prefix precedes its extensions.
bool lex_less_mask(Mask a, Mask b) {
    if (a == b)
        return false;
    Mask diff = a ^ b;
    Mask low = diff & (~diff + 1);
    Mask above = ~(low | (low - 1));
    if (a & low)
        return (b & above) != 0;
    return (a & above) == 0;
}

std::vector<VertexId> mask_to_set(Mask m) {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        out.push_back(static_cast<VertexId>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

// Property check over one hyperedge's colors. `buf` is caller-owned scratch.
// Returns true when violated and fills detail with the minimum color and its
// multiplicity in the hyperedge.
bool violates(PropertyKind property, std::vector<Color>& buf, WitnessDetail& detail) {
    std::sort(buf.begin(), buf.end());
    std::size_t min_run = 1;
    while (min_run < buf.size() && buf[min_run] == buf[0])
        ++min_run;
    detail.color = buf[0];
    detail.multiplicity = static_cast<std::uint32_t>(min_run);
    if (property == PropertyKind::UniqueMin)
        return min_run != 1;
    // conflict-free: some color must occur exactly once
    std::size_t i = 0;
    while (i < buf.size()) {
        std::size_t j = i + 1;
        while (j < buf.size() && buf[j] == buf[i])
            ++j;
        if (j - i == 1)
            return false;
        i = j;
    }
    return true;
}

// Single-pass unique-min check over a mask hyperedge; no scratch needed.
inline bool unique_min_violated(Mask m, const Coloring& coloring, WitnessDetail& detail) {
    Color min = 0;
    std::uint32_t count = 0;
    for (Mask rest = m; rest; rest &= rest - 1) {
        Color c = coloring[static_cast<VertexId>(std::countr_zero(rest))];
        if (count == 0 || c < min) {
            min = c;
            count = 1;
        } else if (c == min) {
            ++count;
        }
    }
    detail.color = min;
    detail.multiplicity = count;
    return count != 1;
}

// Dispatcher used by the mask pipelines.
inline bool mask_violates(PropertyKind property, Mask m, const Coloring& coloring,
                          std::vector<Color>& buf, WitnessDetail& detail) {
    if (property == PropertyKind::UniqueMin)
        return unique_min_violated(m, coloring, detail);
    buf.clear();
    for (Mask rest = m; rest; rest &= rest - 1)
        buf.push_back(coloring[static_cast<VertexId>(std::countr_zero(rest))]);
    return violates(property, buf, detail);
}

// Tracks the canonically-first (lexicographically smallest) violating set.
struct MaskWitness {
    bool found = false;
    Mask set = 0;
    WitnessDetail detail;

    void offer(Mask m, const WitnessDetail& d) {
        if (!found || lex_less_mask(m, set)) {
            found = true;
            set = m;
            detail = d;
        }
    }
    void merge(const MaskWitness& other) {
        if (other.found)
            offer(other.set, other.detail);
    }
};

struct VecWitness {
    bool found = false;
    std::vector<VertexId> set;
    WitnessDetail detail;

    void offer(const std::vector<VertexId>& s, const WitnessDetail& d) {
        if (!found || std::lexicographical_compare(s.begin(), s.end(), set.begin(), set.end())) {
            found = true;
            set = s;
            detail = d;
        }
    }
};

// Depth-first enumeration of simple paths starting at `start`. A path is
// yielded (as its on-path vertex mask) only when its far endpoint id exceeds
// `start`, so across all starts every path set traversal appears exactly once
// up to reversal. Returns false when the sink aborts.
template <typename Sink>
bool dfs_paths_from(const Graph& g, VertexId start, Sink&& sink) {
    std::vector<std::pair<VertexId, std::size_t>> stack; // (vertex, next neighbor index)
    Mask on_path = bit(start);
    if (!sink(on_path)) // the singleton
        return false;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        auto nbrs = g.neighbors(v);
        if (idx == nbrs.size()) {
            on_path &= ~bit(v);
            stack.pop_back();
            continue;
        }
        VertexId w = nbrs[idx++];
        if (on_path & bit(w))
            continue;
        on_path |= bit(w);
        if (w > start && !sink(on_path))
            return false;
        stack.emplace_back(w, 0);
    }
    return true;
}

// As above for graphs wider than 64 vertices; yields sorted vertex sets.
template <typename Sink>
bool dfs_paths_from_vec(const Graph& g, VertexId start, Sink&& sink) {
    std::vector<std::pair<VertexId, std::size_t>> stack;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<VertexId> path{start};
    on_path[start] = true;
    auto emit = [&]() {
        std::vector<VertexId> s = path;
        std::sort(s.begin(), s.end());
        return sink(s);
    };
    if (!emit())
        return false;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        auto nbrs = g.neighbors(v);
        if (idx == nbrs.size()) {
            on_path[v] = false;
            path.pop_back();
            stack.pop_back();
            continue;
        }
        VertexId w = nbrs[idx++];
        if (on_path[w])
            continue;
        on_path[w] = true;
        path.push_back(w);
        if (w > start && !emit())
            return false;
        stack.emplace_back(w, 0);
    }
    return true;
}

// ESU-style extension: every connected set whose minimum vertex is the root
// this state descends from, generated exactly once. `ext` holds candidate
// extensions (ids above the root only), `closed` the explored neighborhood.
template <typename Emit>
void extend_connected(const std::vector<Mask>& adj, Mask above, Mask set, Mask ext, Mask closed,
                      Emit&& emit) {
    emit(set);
    while (ext) {
        Mask wbit = ext & (~ext + 1);
        ext &= ext - 1;
        VertexId w = static_cast<VertexId>(std::countr_zero(wbit));
        Mask fresh = adj[w] & above & ~closed;
        extend_connected(adj, above, set | wbit, ext | fresh, closed | adj[w] | wbit, emit);
    }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            adj[v] |= bit(w);
    return adj;
}

inline Mask above_mask(VertexId root) {
    return root + 1 < 64 ? ~((bit(root) << 1) - 1) : Mask{0};
}

// A pending ESU recursion state, cut below the first extension level so work
// splits finer than whole roots (a star's hub otherwise owns everything).
struct EsuTask {
    Mask above;
    Mask set;
    Mask ext;
    Mask closed;
};

void require_coloring(const Graph& g, const Coloring& coloring) {
    if (coloring.size() != g.vertex_count())
        fail(Errc::ValidationError, "coloring length " + std::to_string(coloring.size()) +
                                        " does not match vertex count " + std::to_string(g.vertex_count()));
    for (Color c : coloring)
        if (c < 1)
            fail(Errc::ValidationError, "colors must be positive");
}

// ---- paths mode, n <= 64 -------------------------------------------------

// Phase 1 enumerates path masks, parallel over start vertices, into
// thread-local buffers. Phase 2 dedupes and checks, parallel over hash
// shards. Both the distinct-set count and the lex-min witness are invariant
// under the thread schedule, so reports stay deterministic.
void run_paths_mask(const Graph& g, const Coloring& coloring, const VerifyOptions& opt,
                    VerificationReport& report) {
    const std::uint32_t n = g.vertex_count();
    const bool parallel = opt.execution == Execution::Parallel;
    const unsigned nthreads = parallel ? max_threads() : 1;

    std::vector<std::vector<Mask>> chunks(nthreads);
    std::atomic<std::uint64_t> enumerated{0};
    std::atomic<bool> over_budget{false};

#pragma omp parallel num_threads(nthreads) if (parallel)
    {
        std::vector<Mask> local;
        std::uint64_t pending = 0;
        auto flush = [&]() {
            std::uint64_t before = enumerated.fetch_add(pending, std::memory_order_relaxed);
            if (before + pending > opt.max_paths)
                over_budget.store(true, std::memory_order_relaxed);
            pending = 0;
        };
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
            dfs_paths_from(g, static_cast<VertexId>(s), [&](Mask m) {
                local.push_back(m);
                if (++pending >= 4096) {
                    flush();
                    if (over_budget.load(std::memory_order_relaxed))
                        return false;
                }
                return true;
            });
        }
        flush();
        chunks[thread_id()] = std::move(local);
    }
    if (over_budget.load() || enumerated.load() > opt.max_paths)
        fail(Errc::BudgetExceeded, "more than " + std::to_string(opt.max_paths) + " paths");

    const unsigned shards = parallel ? nthreads : 1;
    std::vector<std::uint64_t> shard_checked(shards, 0);
    std::vector<MaskWitness> shard_witness(shards);
#pragma omp parallel for schedule(static) if (parallel && shards > 1)
    for (std::int64_t shard = 0; shard < static_cast<std::int64_t>(shards); ++shard) {
        std::vector<Mask> mine;
        for (const auto& chunk : chunks)
            for (Mask m : chunk)
                if (shards == 1 || shard_mix(m) % shards == static_cast<std::uint64_t>(shard))
                    mine.push_back(m);
        std::sort(mine.begin(), mine.end());
        mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
        shard_checked[shard] = mine.size();

        std::vector<Color> buf;
        WitnessDetail detail;
        for (Mask m : mine)
            if (mask_violates(opt.property, m, coloring, buf, detail))
                shard_witness[shard].offer(m, detail);
    }
    MaskWitness witness;
    for (unsigned t = 0; t < shards; ++t) {
        report.hyperedges_checked += shard_checked[t];
        witness.merge(shard_witness[t]);
    }
    if (witness.found) {
        report.ok = false;
        report.witness = mask_to_set(witness.set);
        report.witness_detail = witness.detail;
    }
}

// ---- paths mode, general width (serial fallback) ---------------------------

void run_paths_vec(const Graph& g, const Coloring& coloring, const VerifyOptions& opt,
                   VerificationReport& report) {
    std::set<std::vector<VertexId>> seen;
    VecWitness witness;
    std::vector<Color> buf;
    WitnessDetail detail;
    std::uint64_t enumerated = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        bool ok = dfs_paths_from_vec(g, s, [&](const std::vector<VertexId>& set) {
            if (++enumerated > opt.max_paths)
                return false;
            if (!seen.insert(set).second)
                return true;
            ++report.hyperedges_checked;
            buf.clear();
            for (VertexId v : set)
                buf.push_back(coloring[v]);
            if (violates(opt.property, buf, detail))
                witness.offer(set, detail);
            return true;
        });
        if (!ok)
            fail(Errc::BudgetExceeded, "more than " + std::to_string(opt.max_paths) + " paths");
    }
    if (witness.found) {
        report.ok = false;
        report.witness = witness.set;
        report.witness_detail = witness.detail;
    }
}

// ---- connected-subgraphs mode ---------------------------------------------

// Tasks partition the family of connected sets, so per-thread counts and
// witnesses reduce exactly regardless of the schedule.
void run_connected(const Graph& g, const Coloring& coloring, const VerifyOptions& opt,
                   VerificationReport& report) {
    const std::uint32_t n = g.vertex_count();
    const std::vector<Mask> adj = adjacency_masks(g);
    const bool parallel = opt.execution == Execution::Parallel;

    std::uint64_t checked = 0;
    MaskWitness witness;

    // Root states, then repeatedly split off the first extension level until
    // tasks are fine-grained enough to balance (a star's hub would otherwise
    // own almost everything). Sets consumed by the splitting are checked here.
    std::vector<EsuTask> tasks;
    for (VertexId root = 0; root < n; ++root) {
        Mask above = above_mask(root);
        tasks.push_back({above, bit(root), adj[root] & above, (adj[root] & above) | bit(root)});
    }
    {
        std::vector<Color> buf;
        WitnessDetail detail;
        const std::size_t target = parallel ? 64 * max_threads() : 0;
        for (int round = 0; parallel && round < 3 && tasks.size() < target; ++round) {
            std::vector<EsuTask> next;
            next.reserve(tasks.size() * 4);
            for (const EsuTask& t : tasks) {
                ++checked;
                if (mask_violates(opt.property, t.set, coloring, buf, detail))
                    witness.offer(t.set, detail);
                Mask ext = t.ext;
                Mask closed = t.closed;
                while (ext) {
                    Mask wbit = ext & (~ext + 1);
                    ext &= ext - 1;
                    VertexId w = static_cast<VertexId>(std::countr_zero(wbit));
                    Mask fresh = adj[w] & t.above & ~closed;
                    next.push_back({t.above, t.set | wbit, ext | fresh, closed | adj[w] | wbit});
                }
            }
            tasks = std::move(next);
        }
    }
#pragma omp parallel if (parallel)
    {
        std::uint64_t local_checked = 0;
        MaskWitness local_witness;
        std::vector<Color> buf;
        WitnessDetail detail;
        auto handle = [&](Mask m) {
            ++local_checked;
            if (mask_violates(opt.property, m, coloring, buf, detail))
                local_witness.offer(m, detail);
        };
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i) {
            const EsuTask& t = tasks[i];
            extend_connected(adj, t.above, t.set, t.ext, t.closed, handle);
        }
#pragma omp critical(cfc_connected_merge)
        {
            checked += local_checked;
            witness.merge(local_witness);
        }
    }

    report.hyperedges_checked = checked;
    if (witness.found) {
        report.ok = false;
        report.witness = mask_to_set(witness.set);
        report.witness_detail = witness.detail;
    }
}

} // namespace

VerificationReport check_property(const Graph& graph, const Coloring& coloring,
                                  const VerifyOptions& options) {
    require_coloring(graph, coloring);
    VerificationReport report;
    report.mode = options.mode;
    report.property = options.property;

    if (graph.vertex_count() == 0)
        return report;

    if (options.mode == HyperedgeKind::ConnectedSubgraphs) {
        if (graph.vertex_count() > options.max_subgraph_vertices)
            fail(Errc::TooLarge, "connected-subgraphs mode: n=" + std::to_string(graph.vertex_count()) +
                                     " exceeds cap " + std::to_string(options.max_subgraph_vertices));
        if (graph.vertex_count() > 64)
            fail(Errc::TooLarge, "connected-subgraphs mode supports at most 64 vertices");
        run_connected(graph, coloring, options, report);
    } else if (graph.vertex_count() <= 64) {
        run_paths_mask(graph, coloring, options, report);
    } else {
        run_paths_vec(graph, coloring, options, report);
    }
    return report;
}

std::vector<std::vector<VertexId>> enumerate_paths(const Graph& graph, std::uint64_t max_paths) {
    std::set<std::vector<VertexId>> seen;
    std::uint64_t enumerated = 0;
    for (VertexId s = 0; s < graph.vertex_count(); ++s) {
        bool ok = dfs_paths_from_vec(graph, s, [&](const std::vector<VertexId>& set) {
            if (++enumerated > max_paths)
                return false;
            seen.insert(set);
            return true;
        });
        if (!ok)
            fail(Errc::BudgetExceeded, "more than " + std::to_string(max_paths) + " paths");
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<VertexId>> enumerate_connected_subgraphs(const Graph& graph,
                                                                 std::uint32_t max_vertices) {
    if (graph.vertex_count() > max_vertices)
        fail(Errc::TooLarge, "n=" + std::to_string(graph.vertex_count()) + " exceeds cap " +
                                 std::to_string(max_vertices));
    if (graph.vertex_count() > 64)
        fail(Errc::TooLarge, "connected-subgraph enumeration supports at most 64 vertices");
    std::vector<std::vector<VertexId>> out;
    const std::vector<Mask> adj = adjacency_masks(graph);
    for (VertexId root = 0; root < graph.vertex_count(); ++root) {
        Mask above = above_mask(root);
        extend_connected(adj, above, bit(root), adj[root] & above,
                         (adj[root] & above) | bit(root),
                         [&](Mask m) { out.push_back(mask_to_set(m)); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cfc
