#pragma once

#include <backedge/backedge.hh>
#include <backedge/result.hh>

#include <string>
#include <vector>

namespace backedge {

// Direct certificate checks. None of them call into the solvers; the clique
// number used here is a plain Bron-Kerbosch without pivoting.

namespace check {

int clique_number(const Graph & g);
int chromatic_number(const Graph & g);
bool is_clique(const Graph & g, const std::vector<int> & vertices);
bool is_proper_colouring(const Graph & g, const std::vector<int> & colour, int k);
bool is_dicolouring(const Digraph & d, const Dicolouring & c);
bool is_dominating(const Digraph & d, const std::vector<int> & vertices);
/// Acyclic and listed in topological order.
bool is_transitive_chain(const Digraph & d, const std::vector<int> & vertices);

int component_count(const Graph & g);
bool is_forest(const Graph & g);
bool is_tree(const Graph & g);
/// Forest in which every component has at most one vertex of degree > 1.
bool is_star_forest(const Graph & g);

/// Checks a result's certificate against its claimed value. `d` is the
/// input the solver received. Returns an empty string when the certificate
/// holds, otherwise a description of the failure.
std::string certificate(const Digraph & d, const InvariantResult & r);
std::string certificate(const Graph & g, const InvariantResult & r);

} // namespace check

} // namespace backedge
