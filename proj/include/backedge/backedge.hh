#pragma once

#include <backedge/digraph.hh>

#include <vector>

namespace backedge {

/// Undirected graph of the arcs that point backwards with respect to an
/// ordering, together with that ordering: {u, v} is an edge iff u comes
/// before v and v -> u.
struct BackedgeGraph
{
    Graph graph;
    Ordering ordering;
};

BackedgeGraph backedge_graph(const Digraph & d, const Ordering & ord);

/// The unique tournament whose backedge graph under `ord` is `g`: edges are
/// oriented right to left, non-edges left to right.
Tournament tournament_from_backedge(const Graph & g, const Ordering & ord);

inline Tournament reverse(const Tournament & t) { return t.reversed(); }
inline Ordering reverse_ordering(const Ordering & ord) { return ord.reversed(); }

/// Strong components listed so that every arc between two distinct
/// components goes from an earlier one to a later one. Vertices inside a
/// component are sorted.
std::vector<std::vector<int>> strong_components(const Digraph & d);

bool is_strongly_connected(const Digraph & d);

} // namespace backedge
