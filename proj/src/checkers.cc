#include <backedge/checkers.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <variant>

namespace backedge::check {

namespace {

bool valid_vertices(int n, const std::vector<int> & vertices)
{
    std::set<int> seen;
    for (int v : vertices)
        if (v < 0 || v >= n || !seen.insert(v).second)
            return false;
    return true;
}

} // namespace

int clique_number(const Graph & g)
{
    int best = 0;
    std::function<void(std::vector<int>, std::vector<int>, std::vector<int>)> expand;
    expand = [&](std::vector<int> p, std::vector<int> x, std::vector<int> r) {
        if (p.empty() && x.empty()) {
            best = std::max(best, static_cast<int>(r.size()));
            return;
        }
        while (!p.empty()) {
            int v = p.back();
            p.pop_back();
            std::vector<int> np, nx;
            for (int u : p)
                if (g.has_edge(u, v))
                    np.push_back(u);
            for (int u : x)
                if (g.has_edge(u, v))
                    nx.push_back(u);
            r.push_back(v);
            expand(np, nx, r);
            r.pop_back();
            x.push_back(v);
        }
    };
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    expand(all, {}, {});
    return best;
}

int chromatic_number(const Graph & g)
{
    int n = g.size();
    std::vector<int> colour(n, -1);
    std::function<bool(int, int)> fill = [&](int v, int k) {
        if (v == n)
            return true;
        for (int c = 0; c < k; ++c) {
            bool free = true;
            for (int u = 0; u < v && free; ++u)
                free = !(g.has_edge(u, v) && colour[u] == c);
            if (!free)
                continue;
            colour[v] = c;
            if (fill(v + 1, k))
                return true;
        }
        colour[v] = -1;
        return false;
    };
    int k = 0;
    while (!fill(0, k))
        ++k;
    return k;
}

bool is_clique(const Graph & g, const std::vector<int> & vertices)
{
    if (!valid_vertices(g.size(), vertices))
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_proper_colouring(const Graph & g, const std::vector<int> & colour, int k)
{
    if (static_cast<int>(colour.size()) != g.size())
        return false;
    for (int c : colour)
        if (c < 0 || c >= k)
            return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            return false;
    return true;
}

bool is_dicolouring(const Digraph & d, const Dicolouring & c)
{
    if (static_cast<int>(c.colour.size()) != d.size())
        return false;
    for (int x : c.colour)
        if (x < 0 || x >= c.k)
            return false;
    // Kahn's algorithm per class.
    for (int cls = 0; cls < c.k; ++cls) {
        std::vector<int> members;
        for (int v = 0; v < d.size(); ++v)
            if (c.colour[v] == cls)
                members.push_back(v);
        std::vector<int> indeg(d.size(), 0);
        for (int u : members)
            for (int v : members)
                if (d.has_arc(u, v))
                    ++indeg[v];
        std::vector<int> queue;
        for (int v : members)
            if (indeg[v] == 0)
                queue.push_back(v);
        std::size_t removed = 0;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            ++removed;
            for (int v : members)
                if (d.has_arc(u, v) && --indeg[v] == 0)
                    queue.push_back(v);
        }
        if (removed != members.size())
            return false;
    }
    return true;
}

bool is_dominating(const Digraph & d, const std::vector<int> & vertices)
{
    if (!valid_vertices(d.size(), vertices))
        return false;
    std::vector<bool> covered(d.size(), false);
    for (int x : vertices) {
        covered[x] = true;
        for (int v = 0; v < d.size(); ++v)
            if (d.has_arc(x, v))
                covered[v] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_transitive_chain(const Digraph & d, const std::vector<int> & vertices)
{
    if (!valid_vertices(d.size(), vertices))
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (d.has_arc(vertices[j], vertices[i]))
                return false;
    return true;
}

int component_count(const Graph & g)
{
    std::vector<int> label(g.size());
    std::iota(label.begin(), label.end(), 0);
    std::function<int(int)> find = [&](int v) { return label[v] == v ? v : label[v] = find(label[v]); };
    int count = g.size();
    for (auto [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a != b) {
            label[a] = b;
            --count;
        }
    }
    return count;
}

bool is_forest(const Graph & g) { return g.edge_count() == g.size() - component_count(g); }

bool is_tree(const Graph & g) { return is_forest(g) && component_count(g) == 1; }

bool is_star_forest(const Graph & g)
{
    if (!is_forest(g))
        return false;
    // Two vertices of degree > 1 in one tree are joined by a path whose inner
    // vertices also have degree > 1, so some edge has both ends heavy.
    for (auto [u, v] : g.edges())
        if (g.degree(u) > 1 && g.degree(v) > 1)
            return false;
    return true;
}

namespace {
template <typename... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
} // namespace

std::string certificate(const Digraph & d, const InvariantResult & r)
{
    return std::visit(
        overloaded{
            [&](const std::monostate &) -> std::string { return "missing certificate"; },
            [&](const CliqueCertificate &) -> std::string { return "clique certificate on a digraph input"; },
            [&](const ColouringCertificate &) -> std::string { return "colouring certificate on a digraph input"; },
            [&](const Dicolouring & c) -> std::string {
                if (!is_dicolouring(d, c))
                    return "colour class with a directed cycle";
                if (c.k != r.value)
                    return "dicolouring uses " + std::to_string(c.k) + " colours, value " + std::to_string(r.value);
                return {};
            },
            [&](const OrderingCertificate & c) -> std::string {
                if (c.ordering.size() != d.size())
                    return "ordering has the wrong size";
                auto g = backedge_graph(d, c.ordering).graph;
                if (!is_clique(g, c.clique))
                    return "reported clique is not a clique of the backedge graph";
                if (r.invariant == "ordering_chromatic") {
                    int chi = chromatic_number(g);
                    if (chi != r.value)
                        return "backedge chromatic number " + std::to_string(chi) + ", value " + std::to_string(r.value);
                    return {};
                }
                int omega = clique_number(g);
                if (omega != r.value || static_cast<int>(c.clique.size()) != omega)
                    return "backedge clique number " + std::to_string(omega) + ", value " + std::to_string(r.value);
                return {};
            },
            [&](const DominatingCertificate & c) -> std::string {
                if (!is_dominating(d, c.vertices))
                    return "set is not dominating";
                if (static_cast<int>(c.vertices.size()) != r.value)
                    return "dominating set size differs from value";
                return {};
            },
            [&](const TransitiveCertificate & c) -> std::string {
                if (!is_transitive_chain(d, c.vertices))
                    return "set is not acyclic in the listed order";
                if (static_cast<int>(c.vertices.size()) != r.value)
                    return "transitive set size differs from value";
                return {};
            },
        },
        r.certificate);
}

std::string certificate(const Graph & g, const InvariantResult & r)
{
    if (auto c = std::get_if<CliqueCertificate>(&r.certificate)) {
        if (!is_clique(g, c->vertices))
            return "reported clique is not a clique";
        if (static_cast<int>(c->vertices.size()) != r.value)
            return "clique size differs from value";
        return {};
    }
    if (auto c = std::get_if<ColouringCertificate>(&r.certificate)) {
        if (!is_proper_colouring(g, c->colour, c->k))
            return "colouring is not proper";
        if (c->k != r.value)
            return "colour count differs from value";
        return {};
    }
    return "unexpected certificate type for a graph input";
}

} // namespace backedge::check
