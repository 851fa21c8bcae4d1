#include <backedge/checkers.hh>
#include <backedge/graph_invariants.hh>
#include <backedge/invariants.hh>
#include <backedge/structure.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace backedge {

namespace {

/// Shortest path length between u and w in the graph on `within`, or -1.
int distance(std::span<const VertexSet> adj, int u, int w, VertexSet within)
{
    VertexSet seen = singleton(u), frontier = seen;
    for (int d = 1; frontier; ++d) {
        VertexSet grow = 0;
        for_each_vertex(frontier, [&](int x) { grow |= adj[x]; });
        grow &= within & ~seen;
        if (contains(grow, w))
            return d;
        seen |= grow;
        frontier = grow;
    }
    return -1;
}

VertexSet component_of(std::span<const VertexSet> adj, int u, VertexSet within)
{
    VertexSet seen = singleton(u), frontier = seen;
    while (frontier) {
        VertexSet grow = 0;
        for_each_vertex(frontier, [&](int x) { grow |= adj[x]; });
        grow &= within & ~seen;
        seen |= grow;
        frontier = grow;
    }
    return seen;
}

class PredicateSearch
{
public:
    PredicateSearch(const Tournament & t, const OrderingPredicate & p, Deadline & deadline) :
        p_(p), deadline_(deadline), n_(t.size()), adj_(t.size(), 0), order_(t.size(), -1)
    {
        for (int v = 0; v < n_; ++v)
            out_.push_back(t.out_set(v));
    }

    OrderingSearchResult run()
    {
        OrderingSearchResult r;
        for (int first = 0; first < n_ && !found_ && !timed_out_; ++first) {
            if (!admissible(first))
                continue;
            place(0, first);
            dfs(1, first, all_vertices(n_) & ~singleton(first));
            unplace(first);
        }
        r.nodes = nodes_;
        if (found_) {
            r.outcome = OrderingSearchResult::Outcome::found;
            r.ordering = Ordering(order_found_);
        }
        else
            r.outcome = timed_out_ ? OrderingSearchResult::Outcome::timeout : OrderingSearchResult::Outcome::none;
        return r;
    }

private:
    // May v be appended to the current prefix?
    bool admissible(int v)
    {
        VertexSet back = out_[v] & placed_;
        switch (p_.kind) {
        case OrderingPredicate::Kind::forest: {
            VertexSet seen = 0;
            bool ok = true;
            for_each_vertex(back, [&](int u) {
                if (!ok)
                    return;
                if (contains(seen, u))
                    ok = false;
                else
                    seen |= component_of(adj_, u, placed_);
            });
            return ok;
        }
        case OrderingPredicate::Kind::max_degree_le: {
            if (popcount(back) > p_.bound)
                return false;
            bool ok = true;
            for_each_vertex(back, [&](int u) { ok = ok && popcount(adj_[u]) + 1 <= p_.bound; });
            return ok;
        }
        case OrderingPredicate::Kind::clique_le:
            return 1 + kernel::clique_number(adj_, back) <= p_.bound;
        case OrderingPredicate::Kind::girth_ge: {
            bool ok = true;
            std::vector<int> ends = to_vector(back);
            for (std::size_t i = 0; i < ends.size() && ok; ++i)
                for (std::size_t j = i + 1; j < ends.size() && ok; ++j) {
                    int d = distance(adj_, ends[i], ends[j], placed_);
                    ok = d < 0 || d + 2 >= p_.bound;
                }
            return ok;
        }
        case OrderingPredicate::Kind::clique_colour_le: {
            if (1 + kernel::clique_number(adj_, back) > p_.bound)
                return false;
            auto grown = adj_;
            grown[v] = back;
            for_each_vertex(back, [&](int u) { grown[u] |= singleton(v); });
            return kernel::colourable(grown, placed_ | singleton(v), p_.colours);
        }
        }
        return false;
    }

    void place(int depth, int v)
    {
        VertexSet back = out_[v] & placed_;
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
        ++nodes_;
        if (deadline_.poll()) {
            timed_out_ = true;
            return;
        }
        if (!remaining) {
            found_ = true;
            order_found_ = order_;
            return;
        }
        // Consecutive vertices form forward arcs in some satisfying ordering
        // whenever one exists, since all predicates survive edge deletion.
        VertexSet candidates = remaining & out_[last];
        while (candidates && !found_ && !timed_out_) {
            int v = lowest(candidates);
            candidates &= ~singleton(v);
            if (!admissible(v))
                continue;
            place(depth, v);
            dfs(depth + 1, v, remaining & ~singleton(v));
            unplace(v);
        }
    }

    OrderingPredicate p_;
    Deadline & deadline_;
    int n_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> adj_;
    std::vector<int> order_;
    std::vector<int> order_found_;
    VertexSet placed_ = 0;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    bool timed_out_ = false;
};

int girth(const Graph & g)
{
    auto adj = kernel::adjacency(g);
    int best = -1;
    for (auto [u, v] : g.edges()) {
        auto without = adj;
        without[u] &= ~singleton(v);
        without[v] &= ~singleton(u);
        int d = distance(without, u, v, all_vertices(g.size()));
        if (d > 0 && (best < 0 || d + 1 < best))
            best = d + 1;
    }
    return best;
}

} // namespace

bool satisfies(const Graph & g, const OrderingPredicate & p)
{
    switch (p.kind) {
    case OrderingPredicate::Kind::forest:
        return check::is_forest(g);
    case OrderingPredicate::Kind::max_degree_le:
        return g.max_degree() <= p.bound;
    case OrderingPredicate::Kind::clique_le:
        return check::clique_number(g) <= p.bound;
    case OrderingPredicate::Kind::girth_ge: {
        int gi = girth(g);
        return gi < 0 || gi >= p.bound;
    }
    case OrderingPredicate::Kind::clique_colour_le:
        return check::clique_number(g) <= p.bound && check::chromatic_number(g) <= p.colours;
    }
    return false;
}

OrderingSearchResult ordering_search(const Tournament & t, const OrderingPredicate & p, const SolverOptions & options)
{
    require_solver_size(t.size(), "ordering_search");
    Deadline deadline(options.time_limit);
    PredicateSearch search(t, p, deadline);
    return search.run();
}

OrderingSearchResult common_optimal_ordering(const Tournament & t, const SolverOptions & options)
{
    auto omega = clique_number(t, options);
    auto chi = dichromatic_number(t, options);
    if (!omega.exact() || !chi.exact())
        return {OrderingSearchResult::Outcome::timeout, std::nullopt, omega.nodes + chi.nodes};
    return ordering_search(t, OrderingPredicate::clique_colour_le(omega.value, chi.value), options);
}

TreeOrdering forest_to_tree(const Tournament & t, const Ordering & ord)
{
    if (ord.size() != t.size())
        throw std::invalid_argument("ordering size does not match tournament");
    auto g = backedge_graph(t, ord).graph;
    if (!check::is_forest(g))
        throw std::invalid_argument("backedge graph is not a forest");
    std::vector<int> order(ord.vertices().begin(), ord.vertices().end());
    TreeOrdering result{ord, 0};
    while (check::component_count(g) > 1) {
        auto adj = kernel::adjacency(g);
        VertexSet first = component_of(adj, order[0], all_vertices(t.size()));
        std::size_t j = 1;
        while (contains(first, order[j]))
            ++j;
        // order[j - 1] lies in the first component and order[j] does not,
        // so the arc between them points forward; swapping turns it into a
        // backedge joining the two components.
        std::swap(order[j - 1], order[j]);
        ++result.swaps;
        result.ordering = Ordering(order);
        g = backedge_graph(t, result.ordering).graph;
    }
    return result;
}

Ordering tp_matching_ordering(int n)
{
    if (n < 1)
        throw std::invalid_argument("tp_matching_ordering needs n >= 1");
    std::vector<int> order;
    for (int i = 0; i + 1 < n; i += 2) {
        order.push_back(i + 1);
        order.push_back(i);
    }
    if (n % 2 == 1)
        order.push_back(n - 1);
    return Ordering(order);
}

BstTree bst_tree(const Tournament & t, const std::vector<int> & insertion)
{
    Ordering check(insertion);
    if (check.size() != t.size())
        throw std::invalid_argument("insertion sequence must list every vertex once");
    BstTree tree;
    tree.left.assign(t.size(), -1);
    tree.right.assign(t.size(), -1);
    for (int w : insertion) {
        if (tree.root < 0) {
            tree.root = w;
            continue;
        }
        int x = tree.root;
        while (true) {
            auto & slot = t.has_arc(w, x) ? tree.left[x] : tree.right[x];
            if (slot < 0) {
                slot = w;
                break;
            }
            x = slot;
        }
    }
    return tree;
}

Ordering in_order(const BstTree & tree)
{
    std::vector<int> order, stack;
    int x = tree.root;
    while (x >= 0 || !stack.empty()) {
        while (x >= 0) {
            stack.push_back(x);
            x = tree.left[x];
        }
        x = stack.back();
        stack.pop_back();
        order.push_back(x);
        x = tree.right[x];
    }
    return Ordering(order);
}

Ordering bst_ordering(const Tournament & t, const std::vector<int> & insertion)
{
    return in_order(bst_tree(t, insertion));
}

bool is_bst_ordering(const Tournament & t, const BstTree & tree, const Ordering & ord)
{
    int n = t.size();
    if (ord.size() != n || static_cast<int>(tree.left.size()) != n || static_cast<int>(tree.right.size()) != n)
        return false;
    bool ok = true;
    // Collect subtree members recursively and check each node against them.
    std::function<std::vector<int>(int)> subtree = [&](int x) -> std::vector<int> {
        if (x < 0)
            return {};
        auto l = subtree(tree.left[x]);
        auto r = subtree(tree.right[x]);
        for (int v : l)
            ok = ok && t.has_arc(v, x);
        for (int v : r)
            ok = ok && t.has_arc(x, v);
        l.push_back(x);
        l.insert(l.end(), r.begin(), r.end());
        return l;
    };
    auto traversal = subtree(tree.root);
    return ok && traversal == std::vector<int>(ord.vertices().begin(), ord.vertices().end());
}

BstProbe bst_omega_probe(const Tournament & t, int samples, std::uint64_t seed, const SolverOptions & options)
{
    BstProbe probe;
    auto omega = clique_number(t, options);
    probe.omega = omega.value;
    probe.omega_exact = omega.exact();
    int n = t.size();
    std::vector<int> insertion(n);
    std::iota(insertion.begin(), insertion.end(), 0);
    probe.best_bst_clique = n + 1;
    auto consider = [&] {
        probe.best_bst_clique = std::min(probe.best_bst_clique, backedge_clique_number(t, bst_ordering(t, insertion)));
        ++probe.insertions;
    };
    if (n <= 7) {
        probe.exhaustive = true;
        do
            consider();
        while (std::next_permutation(insertion.begin(), insertion.end()));
    }
    else {
        Rng rng(seed);
        consider();
        for (int i = 0; i < samples; ++i) {
            shuffle(insertion, rng);
            consider();
        }
    }
    return probe;
}

} // namespace backedge
