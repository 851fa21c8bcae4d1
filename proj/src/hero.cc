#include <backedge/canon.hh>
#include <backedge/structure.hh>

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace backedge {

namespace {

struct Sets
{
    std::vector<VertexSet> out, in;

    explicit Sets(const Tournament & t)
    {
        require_solver_size(t.size(), "hero recognition");
        for (int v = 0; v < t.size(); ++v) {
            out.push_back(t.out_set(v));
            in.push_back(t.in_set(v));
        }
    }

    VertexSet reach(int from, VertexSet within, bool forward) const
    {
        const auto & next = forward ? out : in;
        VertexSet seen = singleton(from), frontier = seen;
        while (frontier) {
            VertexSet grow = 0;
            for_each_vertex(frontier, [&](int u) { grow |= next[u]; });
            grow &= within & ~seen;
            seen |= grow;
            frontier = grow;
        }
        return seen;
    }

    /// Topological order of an acyclic set, or empty if `s` has a cycle.
    std::vector<int> topological(VertexSet s) const
    {
        std::vector<int> order;
        VertexSet rest = s;
        while (rest) {
            VertexSet sources = 0;
            for_each_vertex(rest, [&](int v) {
                if (!(in[v] & rest))
                    sources |= singleton(v);
            });
            if (!sources)
                return {};
            for_each_vertex(sources, [&](int v) { order.push_back(v); });
            rest &= ~sources;
        }
        return order;
    }

    /// Strong component containing the sources of T[s].
    VertexSet first_component(VertexSet s) const
    {
        // In a tournament the component of any vertex reaching all of s is
        // the initial one; a vertex of maximum score in T[s] does.
        int best = lowest(s), score = -1;
        for_each_vertex(s, [&](int v) {
            if (popcount(out[v] & s) > score) {
                score = popcount(out[v] & s);
                best = v;
            }
        });
        return reach(best, s, false) & s;
    }
};

/// Calls `f(a, b, c)` for each cyclic tripartition of T[s] with the lowest
/// vertex of s in a; stops early when f returns true.
bool for_each_tripartition(const Sets & sets, VertexSet s, const std::function<bool(VertexSet, VertexSet, VertexSet)> & f)
{
    std::vector<int> verts = to_vector(s);
    if (verts.size() < 3)
        return false;
    VertexSet part[3] = {singleton(verts[0]), 0, 0};
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == verts.size())
            return part[1] && part[2] && f(part[0], part[1], part[2]);
        int u = verts[i];
        for (int p = 0; p < 3; ++p) {
            if ((part[(p + 1) % 3] & ~sets.out[u]) || (part[(p + 2) % 3] & ~sets.in[u]))
                continue;
            part[p] |= singleton(u);
            bool stop = assign(i + 1);
            part[p] &= ~singleton(u);
            if (stop)
                return true;
        }
        return false;
    };
    return assign(1);
}

using NodePtr = std::shared_ptr<const HeroNode>;

class HeroSearch
{
public:
    explicit HeroSearch(const Tournament & t) : sets_(t) {}

    NodePtr solve(VertexSet s)
    {
        if (auto it = memo_.find(s); it != memo_.end())
            return it->second;
        NodePtr result = compute(s);
        memo_.emplace(s, result);
        return result;
    }

private:
    NodePtr compute(VertexSet s)
    {
        auto node = std::make_shared<HeroNode>();
        node->vertices = to_vector(s);
        if (popcount(s) == 1)
            return node;
        VertexSet first = sets_.first_component(s);
        if (first != s) {
            auto left = solve(first);
            if (!left)
                return nullptr;
            auto right = solve(s & ~first);
            if (!right)
                return nullptr;
            node->kind = HeroNode::Kind::arrow;
            node->children = {*left, *right};
            return node;
        }
        bool found = false;
        for_each_tripartition(sets_, s, [&](VertexSet a, VertexSet b, VertexSet c) {
            VertexSet cyc[3] = {a, b, c};
            for (int r = 0; r < 3 && !found; ++r) {
                if (popcount(cyc[r]) != 1)
                    continue;
                VertexSet y = cyc[(r + 1) % 3], z = cyc[(r + 2) % 3];
                for (auto side : {HeroNode::Side::transitive_second, HeroNode::Side::transitive_third}) {
                    VertexSet trans = side == HeroNode::Side::transitive_second ? y : z;
                    VertexSet rest = side == HeroNode::Side::transitive_second ? z : y;
                    auto topo = sets_.topological(trans);
                    if (topo.empty())
                        continue;
                    auto child = solve(rest);
                    if (!child)
                        continue;
                    node->kind = HeroNode::Kind::delta_one_k;
                    node->apex = lowest(cyc[r]);
                    node->side = side;
                    node->transitive = topo;
                    node->children = {*child};
                    found = true;
                    break;
                }
            }
            return found;
        });
        return found ? node : nullptr;
    }

    Sets sets_;
    std::unordered_map<VertexSet, NodePtr> memo_;
};

bool all_arcs(const Tournament & t, const std::vector<int> & from, const std::vector<int> & to)
{
    for (int u : from)
        for (int v : to)
            if (!t.has_arc(u, v))
                return false;
    return true;
}

std::string check_node(const Tournament & t, const HeroNode & node)
{
    if (!std::is_sorted(node.vertices.begin(), node.vertices.end()) || node.vertices.empty())
        return "node vertex list empty or unsorted";
    std::set<int> own(node.vertices.begin(), node.vertices.end());
    std::set<int> covered;
    auto take = [&](const std::vector<int> & part) {
        for (int v : part)
            if (!own.count(v) || !covered.insert(v).second)
                return false;
        return true;
    };
    switch (node.kind) {
    case HeroNode::Kind::leaf:
        return node.vertices.size() == 1 ? "" : "leaf with more than one vertex";
    case HeroNode::Kind::arrow: {
        if (node.children.size() != 2)
            return "arrow node needs two children";
        if (!take(node.children[0].vertices) || !take(node.children[1].vertices) || covered.size() != own.size())
            return "arrow children do not partition the node";
        if (!all_arcs(t, node.children[0].vertices, node.children[1].vertices))
            return "arrow cut is not one-way";
        for (auto & c : node.children)
            if (auto e = check_node(t, c); !e.empty())
                return e;
        return "";
    }
    case HeroNode::Kind::delta_one_k: {
        if (node.children.size() != 1 || node.transitive.empty())
            return "delta node needs one child and a nonempty transitive part";
        std::vector<int> apex{node.apex};
        const auto & child = node.children[0].vertices;
        if (!take(apex) || !take(node.transitive) || !take(child) || covered.size() != own.size())
            return "delta parts do not partition the node";
        for (std::size_t i = 0; i < node.transitive.size(); ++i)
            for (std::size_t j = i + 1; j < node.transitive.size(); ++j)
                if (!t.has_arc(node.transitive[i], node.transitive[j]))
                    return "transitive part not in topological order";
        bool ok = node.side == HeroNode::Side::transitive_second
            ? all_arcs(t, apex, node.transitive) && all_arcs(t, node.transitive, child) && all_arcs(t, child, apex)
            : all_arcs(t, apex, child) && all_arcs(t, child, node.transitive) && all_arcs(t, node.transitive, apex);
        if (!ok)
            return "delta parts do not form a cyclic composition";
        return check_node(t, node.children[0]);
    }
    }
    return "unknown node kind";
}

void relabel(HeroNode & node, int offset)
{
    for (auto & v : node.vertices)
        v += offset;
    for (auto & v : node.transitive)
        v += offset;
    if (node.apex >= 0)
        node.apex += offset;
    for (auto & c : node.children)
        relabel(c, offset);
}

std::vector<int> range(int from, int to)
{
    std::vector<int> r;
    for (int v = from; v < to; ++v)
        r.push_back(v);
    return r;
}

void star_order(const HeroNode & node, std::vector<int> & out)
{
    switch (node.kind) {
    case HeroNode::Kind::leaf:
        out.push_back(node.vertices[0]);
        return;
    case HeroNode::Kind::arrow:
        star_order(node.children[0], out);
        star_order(node.children[1], out);
        return;
    case HeroNode::Kind::delta_one_k:
        if (node.side == HeroNode::Side::transitive_second) {
            out.insert(out.end(), node.transitive.begin(), node.transitive.end());
            star_order(node.children[0], out);
            out.push_back(node.apex);
        }
        else {
            out.push_back(node.apex);
            star_order(node.children[0], out);
            out.insert(out.end(), node.transitive.begin(), node.transitive.end());
        }
        return;
    }
}

} // namespace

HeroResult is_hero(const Tournament & h)
{
    HeroSearch search(h);
    auto root = search.solve(all_vertices(h.size()));
    if (!root)
        return {false, std::nullopt};
    return {true, *root};
}

std::string check_hero_certificate(const Tournament & h, const HeroNode & root)
{
    if (root.vertices != range(0, h.size()))
        return "root does not cover the tournament";
    return check_node(h, root);
}

std::vector<Tripartition> cyclic_tripartitions(const Tournament & t)
{
    Sets sets(t);
    std::vector<Tripartition> result;
    VertexSet all = all_vertices(t.size());
    if (sets.first_component(all) != all)
        return result;
    for_each_tripartition(sets, all, [&](VertexSet a, VertexSet b, VertexSet c) {
        result.push_back({to_vector(a), to_vector(b), to_vector(c)});
        return false;
    });
    return result;
}

std::vector<GeneratedHero> grammar_heroes(int max_n)
{
    std::vector<GeneratedHero> heroes;
    std::vector<std::vector<std::size_t>> by_size(max_n + 1);
    std::set<std::string> seen;
    auto add = [&](Tournament t, HeroNode tree) {
        if (seen.insert(canonical_code(t)).second) {
            by_size[t.size()].push_back(heroes.size());
            heroes.push_back({std::move(t), std::move(tree)});
        }
    };
    if (max_n >= 1) {
        HeroNode leaf;
        leaf.vertices = {0};
        add(Tournament::transitive(1), leaf);
    }
    for (int m = 2; m <= max_n; ++m) {
        for (int a = 1; a < m; ++a)
            for (std::size_t i : by_size[a])
                for (std::size_t j : by_size[m - a]) {
                    auto left = heroes[i], right = heroes[j];
                    auto t = build(expr::arrow(expr::raw(left.tournament), expr::raw(right.tournament)));
                    relabel(right.tree, a);
                    HeroNode node;
                    node.kind = HeroNode::Kind::arrow;
                    node.vertices = range(0, m);
                    node.children = {left.tree, right.tree};
                    add(std::move(t), std::move(node));
                }
        for (int k = 1; k + 1 < m; ++k)
            for (std::size_t i : by_size[m - 1 - k]) {
                auto inner = heroes[i];
                auto h1 = expr::raw(inner.tournament);
                HeroNode second;
                second.kind = HeroNode::Kind::delta_one_k;
                second.vertices = range(0, m);
                second.apex = 0;
                second.side = HeroNode::Side::transitive_second;
                second.transitive = range(1, k + 1);
                second.children = {inner.tree};
                relabel(second.children[0], k + 1);
                add(build(expr::delta(expr::tt(1), expr::tt(k), h1)), second);

                HeroNode third = second;
                third.side = HeroNode::Side::transitive_third;
                third.children = {inner.tree};
                relabel(third.children[0], 1);
                third.transitive = range(m - k, m);
                add(build(expr::delta(expr::tt(1), h1, expr::tt(k))), third);
            }
    }
    return heroes;
}

Ordering star_forest_ordering(const Tournament & h, const HeroNode & cert)
{
    if (auto e = check_hero_certificate(h, cert); !e.empty())
        throw std::invalid_argument("invalid hero certificate: " + e);
    std::vector<int> order;
    star_order(cert, order);
    return Ordering(order);
}

} // namespace backedge
