#pragma once

#include <backedge/digraph.hh>
#include <backedge/result.hh>
#include <backedge/rng.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace backedge {

/// One canonical representative per isomorphism class on n vertices
/// (1 <= n <= 9), sorted by canonical code. Built by extending every class
/// on n - 1 vertices with a new vertex in all 2^(n-1) ways.
std::vector<Tournament> enumerate_tournaments(int n);

/// Each pair i < j, in row-major order, gets one bit from the generator
/// seeded with `seed`: 1 means i -> j.
Tournament random_tournament(int n, std::uint64_t seed);
Tournament random_tournament(int n, Rng & rng);

/// Each pair is adjacent with probability `edge_numerator / 256`, and an
/// adjacent pair gets a fair random direction.
Digraph random_digraph(int n, int edge_numerator, Rng & rng);

struct CriticalityReport
{
    Tournament tournament;
    int k = 0;
    int omega = 0;
    std::vector<int> vertex_deletions; ///< omega of T - v for each v
    bool critical = false;
};

struct CriticalSearch
{
    std::vector<CriticalityReport> reports;
    bool complete = true;
};

/// All k-critical tournaments (omega = k, every vertex deletion drops it to
/// k - 1) among the canonical tournaments with n_min..n_max vertices.
CriticalSearch find_omega_critical(int k, int n_min, int n_max, const SolverOptions & options = {});

/// Recomputes every value in the report with the exact solver.
bool verify_criticality_report(const CriticalityReport & r);

struct SubtournamentSearch
{
    std::optional<std::vector<int>> vertices;
    bool complete = true;
};

/// A smallest X with |X| <= size_cap and omega(T[X]) >= k, by increasing
/// size, accepting early when dom(T[X]) >= k.
SubtournamentSearch min_subtournament_with_omega(
    const Tournament & t, int k, int size_cap, const SolverOptions & options = {});

} // namespace backedge
