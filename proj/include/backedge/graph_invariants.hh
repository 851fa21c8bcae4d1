#pragma once

#include <backedge/digraph.hh>
#include <backedge/result.hh>

#include <span>
#include <vector>

namespace backedge {

/// Maximum clique by branch and bound with greedy-colouring bounds.
InvariantResult max_clique(const Graph & g, const SolverOptions & options = {});

/// Chromatic number by DSATUR branch and bound with a clique lower bound.
InvariantResult chromatic_number(const Graph & g, const SolverOptions & options = {});

/// Independence number of the underlying undirected graph.
int independence_number(const Digraph & d);

/// Underlying undirected graph of a digraph.
Graph underlying_graph(const Digraph & d);

namespace kernel {

/// Bitset clique routines over an adjacency array (n <= 64).
int clique_number(std::span<const VertexSet> adj, VertexSet candidates);
std::vector<int> max_clique_vertices(std::span<const VertexSet> adj, VertexSet candidates);
bool has_clique(std::span<const VertexSet> adj, VertexSet candidates, int size);

/// Exact k-colourability test.
bool colourable(std::span<const VertexSet> adj, VertexSet vertices, int k);
int chromatic_number(std::span<const VertexSet> adj, VertexSet vertices);

std::vector<VertexSet> adjacency(const Graph & g);

} // namespace kernel

} // namespace backedge
