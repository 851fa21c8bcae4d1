#include <backedge/graph_invariants.hh>

#include <algorithm>
#include <array>

namespace backedge {

namespace kernel {

std::vector<VertexSet> adjacency(const Graph & g)
{
    require_solver_size(g.size(), "graph solver");
    std::vector<VertexSet> adj(g.size());
    for (int v = 0; v < g.size(); ++v)
        adj[v] = g.neighbours(v);
    return adj;
}

namespace {

class CliqueSearch
{
public:
    CliqueSearch(std::span<const VertexSet> adj, Deadline * deadline, int stop_at) :
        adj_(adj), deadline_(deadline), stop_at_(stop_at)
    {
    }

    void run(VertexSet candidates)
    {
        if (candidates)
            expand(candidates);
    }

    int best = 0;
    std::vector<int> best_clique;
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    bool done() const { return aborted || best >= stop_at_; }

    void expand(VertexSet p)
    {
        ++nodes;
        if (deadline_ && deadline_->poll()) {
            aborted = true;
            return;
        }
        std::array<int, 64> order{};
        std::array<int, 64> bound{};
        int count = 0;
        VertexSet uncoloured = p;
        int colour = 0;
        while (uncoloured) {
            ++colour;
            VertexSet q = uncoloured;
            while (q) {
                int v = lowest(q);
                q &= ~adj_[v] & ~singleton(v);
                uncoloured &= ~singleton(v);
                order[count] = v;
                bound[count] = colour;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (static_cast<int>(current_.size()) + bound[i] <= best)
                return;
            int v = order[i];
            current_.push_back(v);
            VertexSet next = p & adj_[v];
            if (!next) {
                if (static_cast<int>(current_.size()) > best) {
                    best = static_cast<int>(current_.size());
                    best_clique = current_;
                }
            }
            else
                expand(next);
            current_.pop_back();
            if (done())
                return;
            p &= ~singleton(v);
        }
    }

    std::span<const VertexSet> adj_;
    Deadline * deadline_;
    int stop_at_;
    std::vector<int> current_;
};

class ColourSearch
{
public:
    ColourSearch(std::span<const VertexSet> adj, VertexSet vertices, int k, Deadline * deadline) :
        adj_(adj), vertices_(vertices), k_(k), deadline_(deadline), colour_(adj.size(), -1), classes_(k, 0)
    {
    }

    bool run() { return assign(vertices_, 0); }

    std::vector<int> colours() const { return colour_; }
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    bool assign(VertexSet uncoloured, int used)
    {
        if (!uncoloured)
            return true;
        ++nodes;
        if (deadline_ && deadline_->poll()) {
            aborted = true;
            return false;
        }
        // DSATUR choice: most distinct neighbour colours, then most uncoloured neighbours.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for_each_vertex(uncoloured, [&](int v) {
            int sat = 0;
            for (int c = 0; c < used; ++c)
                sat += (adj_[v] & classes_[c]) != 0;
            int deg = popcount(adj_[v] & uncoloured);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        });
        if (pick_sat >= k_)
            return false;
        for (int c = 0; c < std::min(used + 1, k_); ++c) {
            if (adj_[pick] & classes_[c])
                continue;
            classes_[c] |= singleton(pick);
            colour_[pick] = c;
            if (assign(uncoloured & ~singleton(pick), std::max(used, c + 1)))
                return true;
            classes_[c] &= ~singleton(pick);
            colour_[pick] = -1;
            if (aborted)
                return false;
        }
        return false;
    }

    std::span<const VertexSet> adj_;
    VertexSet vertices_;
    int k_;
    Deadline * deadline_;
    std::vector<int> colour_;
    std::vector<VertexSet> classes_;
};

/// Greedy colouring in DSATUR order; returns the number of colours.
int greedy_colours(std::span<const VertexSet> adj, VertexSet vertices, std::vector<int> & colour)
{
    colour.assign(adj.size(), -1);
    std::vector<VertexSet> classes;
    VertexSet left = vertices;
    while (left) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for_each_vertex(left, [&](int v) {
            int sat = 0;
            for (auto c : classes)
                sat += (adj[v] & c) != 0;
            int deg = popcount(adj[v] & left);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        });
        std::size_t c = 0;
        while (c < classes.size() && (adj[pick] & classes[c]))
            ++c;
        if (c == classes.size())
            classes.push_back(0);
        classes[c] |= singleton(pick);
        colour[pick] = static_cast<int>(c);
        left &= ~singleton(pick);
    }
    return static_cast<int>(classes.size());
}

} // namespace

int clique_number(std::span<const VertexSet> adj, VertexSet candidates)
{
    CliqueSearch s(adj, nullptr, 65);
    s.run(candidates);
    return s.best;
}

std::vector<int> max_clique_vertices(std::span<const VertexSet> adj, VertexSet candidates)
{
    CliqueSearch s(adj, nullptr, 65);
    s.run(candidates);
    std::sort(s.best_clique.begin(), s.best_clique.end());
    return s.best_clique;
}

bool has_clique(std::span<const VertexSet> adj, VertexSet candidates, int size)
{
    if (size <= 0)
        return true;
    CliqueSearch s(adj, nullptr, size);
    s.run(candidates);
    return s.best >= size;
}

bool colourable(std::span<const VertexSet> adj, VertexSet vertices, int k)
{
    if (!vertices)
        return true;
    if (k <= 0)
        return false;
    ColourSearch s(adj, vertices, k, nullptr);
    return s.run();
}

int chromatic_number(std::span<const VertexSet> adj, VertexSet vertices)
{
    if (!vertices)
        return 0;
    std::vector<int> colour;
    int upper = greedy_colours(adj, vertices, colour);
    int lower = std::max(1, clique_number(adj, vertices));
    for (int k = lower; k < upper; ++k)
        if (colourable(adj, vertices, k))
            return k;
    return upper;
}

} // namespace kernel

InvariantResult max_clique(const Graph & g, const SolverOptions & options)
{
    Stopwatch clock;
    auto adj = kernel::adjacency(g);
    Deadline deadline(options.time_limit);
    kernel::CliqueSearch s(adj, &deadline, 65);
    s.run(all_vertices(g.size()));
    InvariantResult r;
    r.invariant = "clique";
    r.value = s.best;
    r.lower = s.best;
    r.upper = s.aborted ? g.size() : s.best;
    r.status = s.aborted ? Status::bounds : Status::exact;
    std::sort(s.best_clique.begin(), s.best_clique.end());
    r.certificate = CliqueCertificate{s.best_clique};
    r.nodes = s.nodes;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

InvariantResult chromatic_number(const Graph & g, const SolverOptions & options)
{
    Stopwatch clock;
    auto adj = kernel::adjacency(g);
    VertexSet all = all_vertices(g.size());
    Deadline deadline(options.time_limit);
    InvariantResult r;
    r.invariant = "chromatic";
    std::vector<int> colour;
    int upper = kernel::greedy_colours(adj, all, colour);
    kernel::CliqueSearch clique(adj, &deadline, 65);
    clique.run(all);
    int lower = g.size() == 0 ? 0 : std::max(1, clique.best);
    r.nodes = clique.nodes;
    bool aborted = clique.aborted;
    for (int k = lower; k < upper && !aborted; ++k) {
        kernel::ColourSearch s(adj, all, k, &deadline);
        bool ok = s.run();
        r.nodes += s.nodes;
        if (s.aborted) {
            aborted = true;
            lower = k;
            break;
        }
        if (ok) {
            upper = k;
            colour = s.colours();
            break;
        }
        lower = k + 1;
    }
    r.value = upper;
    r.upper = upper;
    r.lower = aborted ? lower : upper;
    r.status = aborted ? Status::bounds : Status::exact;
    r.certificate = ColouringCertificate{colour, upper};
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

Graph underlying_graph(const Digraph & d)
{
    Graph g(d.size());
    for (auto [u, v] : d.arcs())
        g.add_edge(u, v);
    return g;
}

int independence_number(const Digraph & d)
{
    if (d.size() == 0)
        return 0;
    auto complement = underlying_graph(d).complement();
    auto adj = kernel::adjacency(complement);
    return kernel::clique_number(adj, all_vertices(d.size()));
}

} // namespace backedge
