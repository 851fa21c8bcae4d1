#pragma once

#include <backedge/bits.hh>

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace backedge {

/// Loop-free oriented graph: no pair of vertices carries arcs in both
/// directions. Values are immutable once built.
class Digraph
{
public:
    Digraph() = default;

    /// Throws std::invalid_argument on loops, out-of-range endpoints or
    /// anti-parallel pairs. Duplicate arcs are merged.
    static Digraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);

    /// `arc(u, v)` is queried for every ordered pair u != v.
    static Digraph from_predicate(int n, const std::function<bool(int, int)> & arc);

    int size() const { return n_; }
    bool has_arc(int u, int v) const { return out_.test(u, v); }
    bool adjacent(int u, int v) const { return out_.test(u, v) || out_.test(v, u); }
    int arc_count() const;
    int out_degree(int v) const { return out_.row_count(v); }
    int in_degree(int v) const { return in_.row_count(v); }

    /// Fast-path neighbourhoods; require size() <= 64.
    VertexSet out_set(int v) const { return out_.row_set(v); }
    VertexSet in_set(int v) const { return in_.row_set(v); }

    std::vector<std::pair<int, int>> arcs() const;

    /// Subdigraph induced by `vertices`, relabelled 0..k-1 in the given order.
    Digraph induced(std::span<const int> vertices) const;
    Digraph reversed() const;

    bool operator==(const Digraph & other) const { return n_ == other.n_ && out_ == other.out_; }

protected:
    explicit Digraph(int n) : n_(n), out_(n), in_(n) {}
    void put_arc(int u, int v)
    {
        out_.set(u, v);
        in_.set(v, u);
    }

    int n_ = 0;
    BitMatrix out_;
    BitMatrix in_;
};

/// Orientation of a complete graph on n >= 1 vertices.
class Tournament : public Digraph
{
public:
    Tournament() = default;

    /// Throws std::invalid_argument unless every pair carries exactly one arc.
    static Tournament from_digraph(const Digraph & d);

    /// `beats(i, j)` is queried once for each i < j; true means i -> j.
    static Tournament from_pairs(int n, const std::function<bool(int, int)> & beats);

    static Tournament transitive(int n);

    Tournament induced(std::span<const int> vertices) const;
    Tournament induced(VertexSet vertices) const;
    Tournament reversed() const;

    std::vector<int> scores() const;

private:
    explicit Tournament(Digraph d) : Digraph(std::move(d)) {}
};

/// Simple undirected graph.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    int size() const { return n_; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_.test(u, v); }
    int degree(int v) const { return adj_.row_count(v); }
    int edge_count() const;
    int max_degree() const;

    /// Requires size() <= 64.
    VertexSet neighbours(int v) const { return adj_.row_set(v); }

    std::vector<std::pair<int, int>> edges() const;
    Graph complement() const;
    Graph induced(std::span<const int> vertices) const;

    bool operator==(const Graph &) const = default;

private:
    int n_ = 0;
    BitMatrix adj_;
};

/// Total order on the vertex set: position -> vertex and its inverse.
class Ordering
{
public:
    Ordering() = default;
    /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
    explicit Ordering(std::vector<int> order);

    static Ordering identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    int at(int position) const { return order_[position]; }
    int position(int vertex) const { return position_[vertex]; }
    bool before(int u, int v) const { return position_[u] < position_[v]; }
    std::span<const int> vertices() const { return order_; }

    Ordering reversed() const;

    bool operator==(const Ordering & other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;
    std::vector<int> position_;
};

/// True when the digraph induced on `s` has no directed cycle (size <= 64).
bool is_acyclic_set(const Digraph & d, VertexSet s);

} // namespace backedge
