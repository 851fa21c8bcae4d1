#include <backedge/digraph.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace backedge {

std::vector<int> to_vector(VertexSet s)
{
    std::vector<int> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet to_set(std::span<const int> vertices)
{
    VertexSet s = 0;
    for (int v : vertices)
        s |= singleton(v);
    return s;
}

namespace {
void check_vertex(int n, int v)
{
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
}
} // namespace

Digraph Digraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    Digraph d(n);
    for (auto [u, v] : arcs) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (d.has_arc(v, u))
            throw std::invalid_argument("anti-parallel arcs between " + std::to_string(u) + " and " + std::to_string(v));
        d.put_arc(u, v);
    }
    return d;
}

Digraph Digraph::from_predicate(int n, const std::function<bool(int, int)> & arc)
{
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && arc(u, v))
                arcs.emplace_back(u, v);
    return from_arcs(n, arcs);
}

int Digraph::arc_count() const
{
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += out_degree(v);
    return total;
}

std::vector<std::pair<int, int>> Digraph::arcs() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v))
                out.emplace_back(u, v);
    return out;
}

Digraph Digraph::induced(std::span<const int> vertices) const
{
    int k = static_cast<int>(vertices.size());
    for (int v : vertices)
        check_vertex(n_, v);
    Digraph d(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && has_arc(vertices[i], vertices[j]))
                d.put_arc(i, j);
    return d;
}

Digraph Digraph::reversed() const
{
    Digraph d(n_);
    d.out_ = in_;
    d.in_ = out_;
    return d;
}

Tournament Tournament::from_digraph(const Digraph & d)
{
    if (d.size() < 1)
        throw std::invalid_argument("a tournament needs at least one vertex");
    for (int u = 0; u < d.size(); ++u)
        for (int v = u + 1; v < d.size(); ++v)
            if (!d.adjacent(u, v))
                throw std::invalid_argument("pair {" + std::to_string(u) + "," + std::to_string(v) + "} carries no arc");
    return Tournament(d);
}

Tournament Tournament::from_pairs(int n, const std::function<bool(int, int)> & beats)
{
    if (n < 1)
        throw std::invalid_argument("a tournament needs at least one vertex");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (beats(i, j))
                arcs.emplace_back(i, j);
            else
                arcs.emplace_back(j, i);
    return Tournament(Digraph::from_arcs(n, arcs));
}

Tournament Tournament::transitive(int n)
{
    return from_pairs(n, [](int, int) { return true; });
}

Tournament Tournament::induced(std::span<const int> vertices) const
{
    if (vertices.empty())
        throw std::invalid_argument("induced subtournament needs at least one vertex");
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated vertex in induced subtournament");
    return Tournament(Digraph::induced(vertices));
}

Tournament Tournament::induced(VertexSet vertices) const
{
    auto list = to_vector(vertices);
    return induced(std::span<const int>(list));
}

Tournament Tournament::reversed() const { return Tournament(Digraph::reversed()); }

std::vector<int> Tournament::scores() const
{
    std::vector<int> s(n_);
    for (int v = 0; v < n_; ++v)
        s[v] = out_degree(v);
    return s;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v)
        throw std::invalid_argument("loop in undirected graph");
    adj_.set(u, v);
    adj_.set(v, u);
}

void Graph::remove_edge(int u, int v)
{
    adj_.reset(u, v);
    adj_.reset(v, u);
}

int Graph::edge_count() const
{
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const
{
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                g.add_edge(u, v);
    return g;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    int k = static_cast<int>(vertices.size());
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (has_edge(vertices[i], vertices[j]))
                g.add_edge(i, j);
    return g;
}

Ordering::Ordering(std::vector<int> order) : order_(std::move(order)), position_(order_.size(), -1)
{
    int n = size();
    for (int p = 0; p < n; ++p) {
        int v = order_[p];
        if (v < 0 || v >= n || position_[v] != -1)
            throw std::invalid_argument("ordering is not a permutation of 0.." + std::to_string(n - 1));
        position_[v] = p;
    }
}

Ordering Ordering::identity(int n)
{
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return Ordering(std::move(order));
}

Ordering Ordering::reversed() const
{
    return Ordering(std::vector<int>(order_.rbegin(), order_.rend()));
}

bool is_acyclic_set(const Digraph & d, VertexSet s)
{
    // Peel off sources until nothing is left.
    VertexSet rest = s;
    while (rest) {
        VertexSet sources = 0;
        for_each_vertex(rest, [&](int v) {
            if (!(d.in_set(v) & rest))
                sources |= singleton(v);
        });
        if (!sources)
            return false;
        rest &= ~sources;
    }
    return true;
}

} // namespace backedge
