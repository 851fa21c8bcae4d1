#include <backedge/backedge.hh>

#include <algorithm>
#include <stdexcept>

namespace backedge {

BackedgeGraph backedge_graph(const Digraph & d, const Ordering & ord)
{
    if (ord.size() != d.size())
        throw std::invalid_argument("ordering size does not match digraph size");
    Graph g(d.size());
    for (int u = 0; u < d.size(); ++u)
        for (int v = 0; v < d.size(); ++v)
            if (d.has_arc(v, u) && ord.before(u, v))
                g.add_edge(u, v);
    return {std::move(g), ord};
}

Tournament tournament_from_backedge(const Graph & g, const Ordering & ord)
{
    if (ord.size() != g.size())
        throw std::invalid_argument("ordering size does not match graph size");
    return Tournament::from_pairs(g.size(), [&](int i, int j) {
        // i -> j exactly when the arc is forward and not an edge, or backward and an edge.
        bool forward = ord.before(i, j);
        return forward != g.has_edge(i, j);
    });
}

namespace {

// Tarjan's algorithm, iterative; emits components in reverse topological order.
struct Tarjan
{
    const Digraph & d;
    int counter = 0;
    std::vector<int> index, low, stack;
    std::vector<bool> on_stack;
    std::vector<std::vector<int>> components;

    explicit Tarjan(const Digraph & g) : d(g), index(g.size(), -1), low(g.size(), 0), on_stack(g.size(), false) {}

    void run(int root)
    {
        std::vector<std::pair<int, int>> frames{{root, 0}};
        open(root);
        while (!frames.empty()) {
            auto & [v, next] = frames.back();
            if (next < d.size()) {
                int w = next++;
                if (!d.has_arc(v, w))
                    continue;
                if (index[w] == -1) {
                    open(w);
                    frames.emplace_back(w, 0);
                }
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
            if (low[finished] == index[finished]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != finished);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }

    void open(int v)
    {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
    }
};

} // namespace

std::vector<std::vector<int>> strong_components(const Digraph & d)
{
    Tarjan t(d);
    for (int v = 0; v < d.size(); ++v)
        if (t.index[v] == -1)
            t.run(v);
    std::reverse(t.components.begin(), t.components.end());
    return t.components;
}

bool is_strongly_connected(const Digraph & d) { return strong_components(d).size() <= 1; }

} // namespace backedge
