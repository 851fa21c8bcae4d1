#pragma once

#include <backedge/backedge.hh>
#include <backedge/result.hh>

#include <optional>
#include <vector>

namespace backedge {

// Clique number of a tournament: the minimum over orderings of the clique
// number of the backedge graph.

/// Prefix branch and bound over orderings. The certificate is an optimal
/// ordering and a maximum clique of its backedge graph.
InvariantResult clique_number(const Tournament & t, const SolverOptions & options = {});

/// Decides whether some ordering has backedge clique number <= k. Returns
/// nullopt when the time limit expires first. On success `witness`, when
/// given, receives such an ordering.
std::optional<bool> clique_number_at_most(
    const Tournament & t, int k, const SolverOptions & options = {}, Ordering * witness = nullptr);

/// Reference value: minimum over all n! orderings, with its own clique
/// routine. Rejects n > 8.
int clique_number_oracle(const Tournament & t);

/// Clique number of the backedge graph of (d, ord).
int backedge_clique_number(const Digraph & d, const Ordering & ord);

enum class OrderingObjective
{
    clique,
    chromatic
};

/// Minimises omega or chi of the backedge graph over orderings. The
/// chromatic objective runs its own prefix search, so its value is an
/// independent route to the dichromatic number.
InvariantResult ordering_optimize(const Tournament & t, OrderingObjective objective, const SolverOptions & options = {});

/// Dichromatic number by k-dicolourability backtracking for k = 1, 2, ...
InvariantResult dichromatic_number(const Digraph & d, const SolverOptions & options = {});

/// Colour classes one after the other, each in topological order. Throws
/// std::invalid_argument if `d` is not a valid dicolouring of `t`.
Ordering chi_ordering_from_dicolouring(const Digraph & t, const Dicolouring & d);

/// Minimum dominating set (closed out-neighbourhoods).
InvariantResult domination_number(const Digraph & t, const SolverOptions & options = {});

/// Start with the first vertex, then repeatedly add the earliest vertex
/// beating every vertex chosen so far. Returns the chosen vertices in order.
std::vector<int> greedy_dominating(const Tournament & t, const Ordering & ord);

/// phi(x) = number of vertices of a longest decreasing path ending at x in
/// the backedge graph restricted to X (colours start at 1). Throws
/// std::invalid_argument when X does not induce an acyclic subtournament.
/// Returned vector is indexed by vertex; vertices outside X get 0.
std::vector<int> decreasing_path_colouring(const Tournament & t, const Ordering & ord, const std::vector<int> & x);

/// Largest vertex set inducing an acyclic subtournament.
InvariantResult max_transitive(const Tournament & t, const SolverOptions & options = {});

} // namespace backedge
