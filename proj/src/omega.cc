#include <backedge/graph_invariants.hh>
#include <backedge/invariants.hh>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace backedge {

namespace {

struct Arcs
{
    std::vector<VertexSet> out, in;

    explicit Arcs(const Digraph & d)
    {
        require_solver_size(d.size(), "ordering search");
        for (int v = 0; v < d.size(); ++v) {
            out.push_back(d.out_set(v));
            in.push_back(d.in_set(v));
        }
    }
};

VertexSet reach_within(std::span<const VertexSet> next, int from, VertexSet within)
{
    VertexSet seen = singleton(from);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet grow = 0;
        for_each_vertex(frontier, [&](int u) { grow |= next[u]; });
        grow &= within & ~seen;
        seen |= grow;
        frontier = grow;
    }
    return seen;
}

/// Lower bound on the clique number of T[F]. The first vertex a of any
/// ordering of a strong component C is followed by every vertex of
/// C ∩ N-(a), each joined to a in the backedge graph, so
///   bound(C) = min over a of 1 + bound(C ∩ N-(a)),
/// and the clique number of T[F] is the maximum over its strong components.
class FirstVertexBound
{
public:
    explicit FirstVertexBound(const Arcs & arcs) : arcs_(arcs) {}

    int operator()(VertexSet f)
    {
        if (popcount(f) <= 1)
            return popcount(f);
        if (auto it = memo_.find(f); it != memo_.end())
            return it->second;
        int best = 1;
        VertexSet rest = f;
        while (rest) {
            int v = lowest(rest);
            VertexSet comp = reach_within(arcs_.out, v, rest) & reach_within(arcs_.in, v, rest);
            rest &= ~comp;
            if (popcount(comp) >= 3)
                best = std::max(best, strong(comp));
        }
        if (memo_.size() > memo_cap)
            memo_.clear();
        memo_.emplace(f, best);
        return best;
    }

private:
    static constexpr std::size_t memo_cap = 1U << 22;
    static constexpr int exact_limit = 24;

    int strong(VertexSet comp)
    {
        // Every vertex of a non-trivial strong component has an in-neighbour
        // inside it, so 2 is the floor.
        if (popcount(comp) > exact_limit)
            return 2;
        int best = std::numeric_limits<int>::max();
        for_each_vertex(comp, [&](int a) {
            if (best > 2)
                best = std::min(best, 1 + (*this)(comp & arcs_.in[a]));
        });
        return best;
    }

    const Arcs & arcs_;
    std::unordered_map<VertexSet, int> memo_;
};

/// Shared incumbent for (possibly parallel) ordering searches.
struct Incumbent
{
    std::atomic<int> best;
    int stop_at;
    std::atomic<bool> stop{false};
    std::atomic<bool> timed_out{false};
    std::mutex mutex;
    std::vector<int> order;
    std::atomic<std::uint64_t> nodes{0};

    Incumbent(int initial, int stop_value) : best(initial), stop_at(stop_value) {}

    void offer(int value, const std::vector<int> & candidate)
    {
        std::lock_guard lock(mutex);
        if (value < best.load()) {
            best.store(value);
            order = candidate;
            if (value <= stop_at)
                stop.store(true);
        }
    }
};

/// Places vertices left to right. Only orderings in which every two
/// consecutive vertices form a forward arc are explored: swapping a
/// consecutive backward pair deletes exactly one backedge, so some optimal
/// ordering has this shape for any objective monotone under edge deletion.
class CliqueOrderSearch
{
public:
    CliqueOrderSearch(const Arcs & arcs, int n, Incumbent & incumbent, Deadline & deadline) :
        arcs_(arcs), n_(n), incumbent_(incumbent), deadline_(deadline), bound_(arcs), adj_(n, 0), order_(n, -1),
        prefix_omega_(n + 1, 0)
    {
    }

    void run_from(int first)
    {
        VertexSet remaining = all_vertices(n_);
        if (violates(first, remaining & ~singleton(first)))
            return;
        place(0, first);
        prefix_omega_[1] = 1;
        dfs(1, first, remaining & ~singleton(first));
        unplace(first);
        flush();
    }

private:
    void flush()
    {
        incumbent_.nodes += nodes_;
        nodes_ = 0;
    }

    bool should_stop()
    {
        if (incumbent_.stop.load(std::memory_order_relaxed))
            return true;
        if (deadline_.poll()) {
            incumbent_.timed_out.store(true);
            incumbent_.stop.store(true);
            return true;
        }
        return false;
    }

    void place(int depth, int v)
    {
        VertexSet back = arcs_.out[v] & placed_;
        adj_[v] = back;
        for_each_vertex(back, [&](int u) { adj_[u] |= singleton(v); });
        placed_ |= singleton(v);
        order_[depth] = v;
    }

    void unplace(int v)
    {
        placed_ &= ~singleton(v);
        for_each_vertex(adj_[v], [&](int u) { adj_[u] &= ~singleton(v); });
        adj_[v] = 0;
    }

    // Is there a clique Q through v, within the prefix plus v, such that
    // |Q| + bound(remaining vertices beating all of Q) >= best?
    bool violates(int v, VertexSet remaining_after)
    {
        int best = incumbent_.best.load(std::memory_order_relaxed);
        return clique_with_future(1, arcs_.out[v] & placed_, remaining_after & arcs_.in[v], best);
    }

    bool clique_with_future(int size, VertexSet extend, VertexSet future, int best)
    {
        int future_bound = future ? bound_(future) : 0;
        if (size + future_bound >= best)
            return true;
        if (!extend || size + popcount(extend) + future_bound < best)
            return false;
        while (extend) {
            if (size + popcount(extend) + future_bound < best)
                return false;
            int x = lowest(extend);
            extend &= ~singleton(x);
            if (clique_with_future(size + 1, extend & adj_[x], future & arcs_.in[x], best))
                return true;
        }
        return false;
    }

    void dfs(int depth, int last, VertexSet remaining)
    {
        ++nodes_;
        if (should_stop())
            return;
        if (!remaining) {
            int value = kernel::clique_number(adj_, placed_);
            if (value < incumbent_.best.load())
                incumbent_.offer(value, order_);
            return;
        }
        VertexSet candidates = remaining & arcs_.out[last];
        while (candidates) {
            int v = lowest(candidates);
            candidates &= ~singleton(v);
            VertexSet after = remaining & ~singleton(v);
            if (violates(v, after))
                continue;
            int through = 1 + kernel::clique_number(adj_, arcs_.out[v] & placed_);
            place(depth, v);
            prefix_omega_[depth + 1] = std::max(prefix_omega_[depth], through);
            dfs(depth + 1, v, after);
            unplace(v);
            if (incumbent_.stop.load(std::memory_order_relaxed))
                return;
            if (prefix_omega_[depth] >= incumbent_.best.load(std::memory_order_relaxed))
                return;
        }
    }

    const Arcs & arcs_;
    int n_;
    Incumbent & incumbent_;
    Deadline & deadline_;
    FirstVertexBound bound_;
    std::vector<VertexSet> adj_;
    std::vector<int> order_;
    std::vector<int> prefix_omega_;
    VertexSet placed_ = 0;
    std::uint64_t nodes_ = 0;
};

void run_order_search(const Arcs & arcs, int n, Incumbent & incumbent, Deadline & deadline, int threads)
{
    if (threads <= 1 || n < 4) {
        CliqueOrderSearch search(arcs, n, incumbent, deadline);
        for (int first = 0; first < n && !incumbent.stop.load(); ++first)
            search.run_from(first);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        Deadline local = deadline;
        CliqueOrderSearch search(arcs, n, incumbent, local);
        for (int first = next++; first < n && !incumbent.stop.load(); first = next++)
            search.run_from(first);
    };
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(worker);
}

std::vector<VertexSet> backedge_adjacency(const Arcs & arcs, std::span<const int> order)
{
    std::vector<VertexSet> adj(arcs.out.size(), 0);
    VertexSet placed = 0;
    for (int v : order) {
        VertexSet back = arcs.out[v] & placed;
        adj[v] = back;
        for_each_vertex(back, [&](int u) { adj[u] |= singleton(v); });
        placed |= singleton(v);
    }
    return adj;
}

int order_clique(const Arcs & arcs, std::span<const int> order)
{
    auto adj = backedge_adjacency(arcs, order);
    return kernel::clique_number(adj, all_vertices(static_cast<int>(order.size())));
}

/// Swap consecutive backward pairs until none is left.
void make_consecutive_forward(const Arcs & arcs, std::vector<int> & order)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (contains(arcs.out[order[i + 1]], order[i])) {
                std::swap(order[i], order[i + 1]);
                changed = true;
            }
    }
}

/// Greedy acyclic partition; classes concatenated, each in topological order.
std::vector<int> greedy_dicolour_order(const Arcs & arcs, int n)
{
    std::vector<int> byscore(n);
    std::iota(byscore.begin(), byscore.end(), 0);
    std::stable_sort(byscore.begin(), byscore.end(),
        [&](int a, int b) { return popcount(arcs.out[a]) > popcount(arcs.out[b]); });
    std::vector<VertexSet> classes;
    for (int v : byscore) {
        bool placed = false;
        for (auto & c : classes) {
            VertexSet reach = reach_within(arcs.out, v, c | singleton(v));
            if (!(reach & c & arcs.in[v])) {
                c |= singleton(v);
                placed = true;
                break;
            }
        }
        if (!placed)
            classes.push_back(singleton(v));
    }
    std::vector<int> order;
    for (VertexSet c : classes) {
        VertexSet rest = c;
        while (rest) {
            VertexSet sources = 0;
            for_each_vertex(rest, [&](int v) {
                if (!(arcs.in[v] & rest))
                    sources |= singleton(v);
            });
            for_each_vertex(sources, [&](int v) { order.push_back(v); });
            rest &= ~sources;
        }
    }
    return order;
}

/// Best of a few cheap orderings, refined by single-vertex moves.
std::vector<int> heuristic_order(const Arcs & arcs, int n, Deadline & deadline)
{
    std::vector<int> byscore(n);
    std::iota(byscore.begin(), byscore.end(), 0);
    std::stable_sort(byscore.begin(), byscore.end(),
        [&](int a, int b) { return popcount(arcs.out[a]) > popcount(arcs.out[b]); });
    make_consecutive_forward(arcs, byscore);
    auto colour_order = greedy_dicolour_order(arcs, n);
    make_consecutive_forward(arcs, colour_order);

    std::vector<int> best = byscore;
    int best_value = order_clique(arcs, best);
    if (int v = order_clique(arcs, colour_order); v < best_value) {
        best = colour_order;
        best_value = v;
    }
    if (n > 40)
        return best;

    auto edges = [&](const std::vector<int> & order) {
        int total = 0;
        auto adj = backedge_adjacency(arcs, order);
        for (auto a : adj)
            total += popcount(a);
        return total;
    };
    int best_edges = edges(best);
    for (int pass = 0; pass < 3; ++pass) {
        bool improved = false;
        for (int i = 0; i < n && !deadline.expired(); ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                auto trial = best;
                int v = trial[i];
                trial.erase(trial.begin() + i);
                trial.insert(trial.begin() + j, v);
                int value = order_clique(arcs, trial);
                if (value > best_value)
                    continue;
                int e = edges(trial);
                if (value < best_value || e < best_edges) {
                    best = std::move(trial);
                    best_value = value;
                    best_edges = e;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved)
            break;
    }
    return best;
}

struct ComponentOutcome
{
    int value;
    int lower;
    bool exact;
    std::vector<int> order; // local labels
    std::uint64_t nodes;
};

/// Exact minimisation (or decision when stop_at >= lower) on one strong
/// tournament. `initial` is an exclusive upper target: only orderings with
/// value < initial are sought when no heuristic ordering is supplied.
ComponentOutcome solve_component(const Tournament & comp, int stop_at, Deadline & deadline, int threads, bool decision)
{
    int n = comp.size();
    if (n == 1)
        return {1, 1, true, {0}, 0};
    Arcs arcs(comp);
    FirstVertexBound bound(arcs);
    int lower = bound(all_vertices(n));
    auto dom = domination_number(comp, SolverOptions{});
    lower = std::max(lower, dom.value);

    auto start = heuristic_order(arcs, n, deadline);
    int start_value = order_clique(arcs, start);
    if (start_value <= lower || (decision && start_value <= stop_at))
        return {start_value, lower, true, start, 0};
    if (decision && lower > stop_at)
        return {lower, lower, true, {}, 0};

    Incumbent incumbent(start_value, std::max(stop_at, lower));
    incumbent.order = start;
    run_order_search(arcs, n, incumbent, deadline, threads);
    ComponentOutcome out;
    out.value = incumbent.best.load();
    out.order = incumbent.order;
    out.nodes = incumbent.nodes.load();
    out.exact = !incumbent.timed_out.load();
    out.lower = out.exact ? (decision && out.value > stop_at ? stop_at + 1 : out.value) : lower;
    if (out.exact && !decision)
        out.lower = out.value;
    return out;
}

} // namespace

int backedge_clique_number(const Digraph & d, const Ordering & ord)
{
    Arcs arcs(d);
    return order_clique(arcs, ord.vertices());
}

InvariantResult clique_number(const Tournament & t, const SolverOptions & options)
{
    Stopwatch clock;
    require_solver_size(t.size(), "clique_number");
    Deadline deadline(options.time_limit);
    std::vector<std::vector<int>> parts;
    if (options.use_components)
        parts = strong_components(t);
    else {
        parts.emplace_back(t.size());
        std::iota(parts.back().begin(), parts.back().end(), 0);
    }

    InvariantResult r;
    r.invariant = "omega";
    std::vector<int> order;
    bool exact = true;
    for (auto & part : parts) {
        auto comp = t.induced(std::span<const int>(part));
        auto outcome = solve_component(comp, 0, deadline, options.threads, false);
        r.value = std::max(r.value, outcome.value);
        r.lower = std::max(r.lower, outcome.lower);
        r.nodes += outcome.nodes;
        exact = exact && outcome.exact;
        for (int local : outcome.order)
            order.push_back(part[local]);
    }
    r.upper = r.value;
    if (exact)
        r.lower = r.value;
    r.status = exact ? Status::exact : Status::bounds;
    Ordering ord(order);
    auto g = backedge_graph(t, ord).graph;
    auto adj = kernel::adjacency(g);
    r.certificate = OrderingCertificate{ord, kernel::max_clique_vertices(adj, all_vertices(t.size()))};
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

std::optional<bool> clique_number_at_most(const Tournament & t, int k, const SolverOptions & options, Ordering * witness)
{
    require_solver_size(t.size(), "clique_number_at_most");
    if (k < 1)
        return false;
    Deadline deadline(options.time_limit);
    std::vector<int> order;
    for (auto & part : strong_components(t)) {
        auto comp = t.induced(std::span<const int>(part));
        auto outcome = solve_component(comp, k, deadline, options.threads, true);
        if (outcome.value > k) {
            if (!outcome.exact)
                return std::nullopt;
            return false;
        }
        for (int local : outcome.order)
            order.push_back(part[local]);
    }
    if (witness)
        *witness = Ordering(order);
    return true;
}

int clique_number_oracle(const Tournament & t)
{
    int n = t.size();
    if (n > 8)
        throw std::invalid_argument("clique_number_oracle: n must be at most 8");
    // Plain matrices and a plain recursive clique test, sharing nothing with the solver.
    bool arc[8][8] = {};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            arc[u][v] = u != v && t.has_arc(u, v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n + 1;
    do {
        bool edge[8][8] = {};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (arc[perm[j]][perm[i]])
                    edge[i][j] = edge[j][i] = true;
        // Is there a clique with `best` vertices? If not, compute the exact value.
        std::vector<int> chosen;
        auto grow = [&](auto & self, int from, int need) -> bool {
            if (need == 0)
                return true;
            for (int v = from; v < n; ++v) {
                bool ok = true;
                for (int c : chosen)
                    ok = ok && edge[c][v];
                if (!ok)
                    continue;
                chosen.push_back(v);
                bool found = self(self, v + 1, need - 1);
                chosen.pop_back();
                if (found)
                    return true;
            }
            return false;
        };
        int size = 1;
        while (size + 1 <= n && size + 1 < best && grow(grow, 0, size + 1))
            ++size;
        if (size < best && !(size + 1 <= n && size + 1 == best && grow(grow, 0, best)))
            best = size;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

class ChromaticOrderSearch
{
public:
    ChromaticOrderSearch(const Arcs & arcs, int n, Deadline & deadline, int best, std::vector<int> best_order) :
        arcs_(arcs), n_(n), deadline_(deadline), adj_(n, 0), order_(n, -1)
    {
        this->best = best;
        this->best_order = std::move(best_order);
    }

    void run(int floor)
    {
        floor_ = floor;
        for (int first = 0; first < n_ && !stop_; ++first) {
            place(0, first);
            dfs(1, first, all_vertices(n_) & ~singleton(first));
            unplace(first);
        }
    }

    int best;
    std::vector<int> best_order;
    std::uint64_t nodes = 0;
    bool timed_out = false;

private:
    void place(int depth, int v)
    {
        VertexSet back = arcs_.out[v] & placed_;
        adj_[v] = back;
        for_each_vertex(back, [&](int u) { adj_[u] |= singleton(v); });
        placed_ |= singleton(v);
        order_[depth] = v;
    }

    void unplace(int v)
    {
        placed_ &= ~singleton(v);
        for_each_vertex(adj_[v], [&](int u) { adj_[u] &= ~singleton(v); });
        adj_[v] = 0;
    }

    void dfs(int depth, int last, VertexSet remaining)
    {
        ++nodes;
        if (deadline_.poll()) {
            timed_out = stop_ = true;
            return;
        }
        if (!remaining) {
            int value = kernel::chromatic_number(adj_, placed_);
            if (value < best) {
                best = value;
                best_order = order_;
                stop_ = best <= floor_;
            }
            return;
        }
        VertexSet candidates = remaining & arcs_.out[last];
        for_each_vertex(candidates, [&](int v) {
            if (stop_)
                return;
            place(depth, v);
            if (kernel::colourable(adj_, placed_, best - 1))
                dfs(depth + 1, v, remaining & ~singleton(v));
            unplace(v);
        });
    }

    const Arcs & arcs_;
    int n_;
    Deadline & deadline_;
    std::vector<VertexSet> adj_;
    std::vector<int> order_;
    VertexSet placed_ = 0;
    int floor_ = 1;
    bool stop_ = false;
};

} // namespace

InvariantResult ordering_optimize(const Tournament & t, OrderingObjective objective, const SolverOptions & options)
{
    if (objective == OrderingObjective::clique) {
        auto r = clique_number(t, options);
        r.invariant = "ordering_clique";
        return r;
    }
    Stopwatch clock;
    require_solver_size(t.size(), "ordering_optimize");
    Arcs arcs(t);
    int n = t.size();
    Deadline deadline(options.time_limit);
    std::vector<int> start(n);
    std::iota(start.begin(), start.end(), 0);
    std::stable_sort(start.begin(), start.end(), [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });
    make_consecutive_forward(arcs, start);
    auto start_adj = backedge_adjacency(arcs, start);
    int start_value = kernel::chromatic_number(start_adj, all_vertices(n));
    int floor = is_acyclic_set(t, all_vertices(n)) ? 1 : 2;

    InvariantResult r;
    r.invariant = "ordering_chromatic";
    ChromaticOrderSearch search(arcs, n, deadline, start_value, start);
    if (start_value > floor)
        search.run(floor);
    r.value = search.best;
    r.upper = search.best;
    r.status = search.timed_out ? Status::bounds : Status::exact;
    r.lower = search.timed_out ? floor : search.best;
    r.nodes = search.nodes;
    Ordering ord(search.best_order);
    auto g = backedge_graph(t, ord).graph;
    auto adj = kernel::adjacency(g);
    r.certificate = OrderingCertificate{ord, kernel::max_clique_vertices(adj, all_vertices(n))};
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

} // namespace backedge
