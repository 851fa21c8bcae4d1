#include <backedge/invariants.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace backedge {

namespace {

std::vector<VertexSet> out_sets(const Digraph & d)
{
    std::vector<VertexSet> out(d.size());
    for (int v = 0; v < d.size(); ++v)
        out[v] = d.out_set(v);
    return out;
}

std::vector<VertexSet> in_sets(const Digraph & d)
{
    std::vector<VertexSet> in(d.size());
    for (int v = 0; v < d.size(); ++v)
        in[v] = d.in_set(v);
    return in;
}

/// Would adding v to the acyclic set `cls` close a directed cycle?
bool closes_cycle(std::span<const VertexSet> out, std::span<const VertexSet> in, int v, VertexSet cls)
{
    VertexSet back = in[v] & cls;
    VertexSet reach = out[v] & cls;
    if (!back || !reach)
        return false;
    VertexSet frontier = reach;
    while (frontier) {
        if (reach & back)
            return true;
        VertexSet grow = 0;
        for_each_vertex(frontier, [&](int u) { grow |= out[u]; });
        grow &= cls & ~reach;
        reach |= grow;
        frontier = grow;
    }
    return (reach & back) != 0;
}

class DicolourSearch
{
public:
    DicolourSearch(std::span<const VertexSet> out, std::span<const VertexSet> in, std::vector<int> order, int k,
        Deadline & deadline) :
        out_(out), in_(in), order_(std::move(order)), k_(k), deadline_(deadline), classes_(k, 0)
    {
        colour.assign(out.size(), -1);
    }

    bool run() { return assign(0, 0); }

    std::vector<int> colour;
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    bool assign(std::size_t i, int used)
    {
        if (i == order_.size())
            return true;
        ++nodes;
        if (deadline_.poll()) {
            aborted = true;
            return false;
        }
        int v = order_[i];
        for (int c = 0; c < std::min(used + 1, k_); ++c) {
            if (closes_cycle(out_, in_, v, classes_[c]))
                continue;
            classes_[c] |= singleton(v);
            colour[v] = c;
            if (assign(i + 1, std::max(used, c + 1)))
                return true;
            classes_[c] &= ~singleton(v);
            colour[v] = -1;
            if (aborted)
                return false;
        }
        return false;
    }

    std::span<const VertexSet> out_, in_;
    std::vector<int> order_;
    int k_;
    Deadline & deadline_;
    std::vector<VertexSet> classes_;
};

std::vector<int> greedy_dicolouring(std::span<const VertexSet> out, std::span<const VertexSet> in,
    const std::vector<int> & order, int & k)
{
    std::vector<int> colour(out.size(), -1);
    std::vector<VertexSet> classes;
    for (int v : order) {
        std::size_t c = 0;
        while (c < classes.size() && closes_cycle(out, in, v, classes[c]))
            ++c;
        if (c == classes.size())
            classes.push_back(0);
        classes[c] |= singleton(v);
        colour[v] = static_cast<int>(c);
    }
    k = static_cast<int>(classes.size());
    return colour;
}

} // namespace

InvariantResult dichromatic_number(const Digraph & d, const SolverOptions & options)
{
    Stopwatch clock;
    require_solver_size(d.size(), "dichromatic_number");
    int n = d.size();
    auto out = out_sets(d);
    auto in = in_sets(d);
    Deadline deadline(options.time_limit);

    // Vertices on many short cycles first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::min(popcount(out[a]), popcount(in[a])) > std::min(popcount(out[b]), popcount(in[b]));
    });

    InvariantResult r;
    r.invariant = "dichromatic";
    int upper = 0;
    auto colour = greedy_dicolouring(out, in, order, upper);
    int lower = n == 0 ? 0 : (is_acyclic_set(d, all_vertices(n)) ? 1 : 2);
    bool aborted = false;
    for (int k = lower; k < upper; ++k) {
        DicolourSearch s(out, in, order, k, deadline);
        bool ok = s.run();
        r.nodes += s.nodes;
        if (s.aborted) {
            aborted = true;
            lower = k;
            break;
        }
        if (ok) {
            upper = k;
            colour = s.colour;
            break;
        }
        lower = k + 1;
    }
    r.value = upper;
    r.upper = upper;
    r.lower = aborted ? lower : upper;
    r.status = aborted ? Status::bounds : Status::exact;
    r.certificate = Dicolouring{colour, upper};
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

Ordering chi_ordering_from_dicolouring(const Digraph & t, const Dicolouring & d)
{
    int n = t.size();
    if (static_cast<int>(d.colour.size()) != n)
        throw std::invalid_argument("dicolouring has the wrong length");
    std::vector<VertexSet> classes(std::max(d.k, 0), 0);
    for (int v = 0; v < n; ++v) {
        if (d.colour[v] < 0 || d.colour[v] >= d.k)
            throw std::invalid_argument("dicolouring colour out of range");
        classes[d.colour[v]] |= singleton(v);
    }
    auto in = in_sets(t);
    std::vector<int> order;
    for (VertexSet c : classes) {
        VertexSet rest = c;
        while (rest) {
            VertexSet sources = 0;
            for_each_vertex(rest, [&](int v) {
                if (!(in[v] & rest))
                    sources |= singleton(v);
            });
            if (!sources)
                throw std::invalid_argument("dicolouring class contains a directed cycle");
            for_each_vertex(sources, [&](int v) { order.push_back(v); });
            rest &= ~sources;
        }
    }
    return Ordering(order);
}

namespace {

class DominationSearch
{
public:
    DominationSearch(std::span<const VertexSet> closed_out, std::span<const VertexSet> closed_in, Deadline & deadline) :
        closed_out_(closed_out), closed_in_(closed_in), deadline_(deadline)
    {
    }

    bool within(VertexSet undominated, int k)
    {
        if (!undominated)
            return true;
        if (k == 0)
            return false;
        ++nodes;
        if (deadline_.poll()) {
            aborted = true;
            return false;
        }
        int cover = 0;
        int pick = -1, pick_choices = 65;
        for (std::size_t w = 0; w < closed_out_.size(); ++w)
            cover = std::max(cover, popcount(closed_out_[w] & undominated));
        if (cover * k < popcount(undominated))
            return false;
        for_each_vertex(undominated, [&](int u) {
            int choices = popcount(closed_in_[u]);
            if (choices < pick_choices) {
                pick = u;
                pick_choices = choices;
            }
        });
        bool found = false;
        for_each_vertex(closed_in_[pick], [&](int w) {
            if (found || aborted)
                return;
            chosen.push_back(w);
            if (within(undominated & ~closed_out_[w], k - 1))
                found = true;
            else
                chosen.pop_back();
        });
        return found;
    }

    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    std::span<const VertexSet> closed_out_, closed_in_;
    Deadline & deadline_;
};

} // namespace

InvariantResult domination_number(const Digraph & t, const SolverOptions & options)
{
    Stopwatch clock;
    require_solver_size(t.size(), "domination_number");
    int n = t.size();
    std::vector<VertexSet> closed_out(n), closed_in(n);
    for (int v = 0; v < n; ++v) {
        closed_out[v] = t.out_set(v) | singleton(v);
        closed_in[v] = t.in_set(v) | singleton(v);
    }
    Deadline deadline(options.time_limit);

    // Greedy: repeatedly take the vertex dominating most undominated vertices.
    std::vector<int> best;
    VertexSet left = all_vertices(n);
    while (left) {
        int pick = 0, gain = -1;
        for (int w = 0; w < n; ++w)
            if (popcount(closed_out[w] & left) > gain) {
                gain = popcount(closed_out[w] & left);
                pick = w;
            }
        best.push_back(pick);
        left &= ~closed_out[pick];
    }

    InvariantResult r;
    r.invariant = "dom";
    int lower = n == 0 ? 0 : 1;
    bool aborted = false;
    for (int k = lower; k < static_cast<int>(best.size()); ++k) {
        DominationSearch s(closed_out, closed_in, deadline);
        bool ok = s.within(all_vertices(n), k);
        r.nodes += s.nodes;
        if (s.aborted) {
            aborted = true;
            lower = k;
            break;
        }
        if (ok) {
            best = s.chosen;
            break;
        }
        lower = k + 1;
    }
    std::sort(best.begin(), best.end());
    r.value = static_cast<int>(best.size());
    r.upper = r.value;
    r.lower = aborted ? lower : r.value;
    r.status = aborted ? Status::bounds : Status::exact;
    r.certificate = DominatingCertificate{best};
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

std::vector<int> greedy_dominating(const Tournament & t, const Ordering & ord)
{
    if (ord.size() != t.size())
        throw std::invalid_argument("ordering size does not match tournament");
    std::vector<int> chosen;
    for (int v : ord.vertices()) {
        bool beats_all = std::all_of(chosen.begin(), chosen.end(), [&](int u) { return t.has_arc(v, u); });
        if (beats_all)
            chosen.push_back(v);
    }
    return chosen;
}

std::vector<int> decreasing_path_colouring(const Tournament & t, const Ordering & ord, const std::vector<int> & x)
{
    if (ord.size() != t.size())
        throw std::invalid_argument("ordering size does not match tournament");
    VertexSet xs = 0;
    for (int v : x) {
        if (v < 0 || v >= t.size())
            throw std::invalid_argument("vertex out of range");
        xs |= singleton(v);
    }
    if (!is_acyclic_set(t, xs))
        throw std::invalid_argument("vertex set does not induce a transitive subtournament");
    // Backedge uv with u before v means v -> u. A decreasing path ending at x
    // moves from later vertices to earlier ones, so scan from the end.
    std::vector<int> phi(t.size(), 0);
    auto verts = ord.vertices();
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
        int u = verts[i];
        if (!contains(xs, u))
            continue;
        int longest = 0;
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j) {
            int v = verts[j];
            if (contains(xs, v) && t.has_arc(v, u))
                longest = std::max(longest, phi[v]);
        }
        phi[u] = longest + 1;
    }
    return phi;
}

namespace {

class TransitiveSearch
{
public:
    TransitiveSearch(std::span<const VertexSet> out, Deadline & deadline) : out_(out), deadline_(deadline) {}

    // Largest transitive subset of C: some vertex is its source.
    int best(VertexSet c)
    {
        if (popcount(c) <= 1)
            return popcount(c);
        if (auto it = memo_.find(c); it != memo_.end())
            return it->second.first;
        ++nodes;
        if (deadline_.poll())
            aborted = true;
        int value = 0, source = -1;
        for_each_vertex(c, [&](int v) {
            if (aborted || popcount(out_[v] & c) + 1 <= value)
                return;
            int through = 1 + best(c & out_[v]);
            if (through > value) {
                value = through;
                source = v;
            }
        });
        if (!aborted)
            memo_.emplace(c, std::make_pair(value, source));
        return value;
    }

    std::vector<int> witness(VertexSet c)
    {
        std::vector<int> chain;
        while (c) {
            if (popcount(c) == 1) {
                chain.push_back(lowest(c));
                break;
            }
            int v = memo_.at(c).second;
            chain.push_back(v);
            c &= out_[v];
        }
        return chain;
    }

    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    std::span<const VertexSet> out_;
    Deadline & deadline_;
    std::unordered_map<VertexSet, std::pair<int, int>> memo_;
};

} // namespace

InvariantResult max_transitive(const Tournament & t, const SolverOptions & options)
{
    Stopwatch clock;
    require_solver_size(t.size(), "max_transitive");
    auto out = out_sets(t);
    Deadline deadline(options.time_limit);
    TransitiveSearch s(out, deadline);
    InvariantResult r;
    r.invariant = "trans";
    int value = s.best(all_vertices(t.size()));
    r.nodes = s.nodes;
    if (s.aborted) {
        // Fall back to a greedy chain: repeatedly take a top scorer.
        std::vector<int> chain;
        VertexSet c = all_vertices(t.size());
        while (c) {
            int pick = lowest(c), score = -1;
            for_each_vertex(c, [&](int v) {
                if (popcount(out[v] & c) > score) {
                    score = popcount(out[v] & c);
                    pick = v;
                }
            });
            chain.push_back(pick);
            c &= out[pick];
        }
        r.value = static_cast<int>(chain.size());
        r.lower = r.value;
        r.upper = t.size();
        r.status = Status::bounds;
        r.certificate = TransitiveCertificate{chain};
    }
    else {
        r.value = value;
        r.lower = r.upper = value;
        r.certificate = TransitiveCertificate{s.witness(all_vertices(t.size()))};
    }
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

} // namespace backedge
