#include <backedge/canon.hh>
#include <backedge/invariants.hh>
#include <backedge/search.hh>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace backedge {

std::vector<Tournament> enumerate_tournaments(int n)
{
    if (n < 1 || n > 9)
        throw std::invalid_argument("enumerate_tournaments supports 1 <= n <= 9");
    std::vector<Tournament> level = {Tournament::transitive(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Tournament> found;
        for (const auto & parent : level)
            for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) {
                auto child = Tournament::from_pairs(m, [&](int i, int j) {
                    if (j < m - 1)
                        return parent.has_arc(i, j);
                    return ((mask >> i) & 1U) != 0;
                });
                auto code = canonical_code(child);
                if (!found.count(code))
                    found.emplace(code, canonical_form(child));
            }
        level.clear();
        for (auto & [code, t] : found)
            level.push_back(std::move(t));
    }
    return level;
}

Tournament random_tournament(int n, Rng & rng)
{
    if (n < 1)
        throw std::invalid_argument("random_tournament needs n >= 1");
    return Tournament::from_pairs(n, [&](int, int) { return (rng() >> 63) != 0; });
}

Tournament random_tournament(int n, std::uint64_t seed)
{
    Rng rng(seed);
    return random_tournament(n, rng);
}

Digraph random_digraph(int n, int edge_numerator, Rng & rng)
{
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool edge = static_cast<int>(uniform_below(rng, 256)) < edge_numerator;
            bool forward = (rng() >> 63) != 0;
            if (edge)
                arcs.emplace_back(forward ? i : j, forward ? j : i);
        }
    return Digraph::from_arcs(n, arcs);
}

namespace {

/// omega(T) <= k, or nullopt on timeout.
std::optional<bool> at_most(const Tournament & t, int k, const SolverOptions & options)
{
    return clique_number_at_most(t, k, options);
}

std::vector<int> all_but(int n, int skip)
{
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != skip)
            keep.push_back(v);
    return keep;
}

} // namespace

CriticalSearch find_omega_critical(int k, int n_min, int n_max, const SolverOptions & options)
{
    if (k < 1)
        throw std::invalid_argument("criticality needs k >= 1");
    CriticalSearch out;
    for (int n = std::max(1, n_min); n <= n_max; ++n)
        for (const auto & t : enumerate_tournaments(n)) {
            auto upper = at_most(t, k, options);
            auto lower = at_most(t, k - 1, options);
            if (!upper || !lower) {
                out.complete = false;
                continue;
            }
            if (!*upper || *lower)
                continue;
            CriticalityReport r{t, k, k, {}, true};
            for (int v = 0; v < n && r.critical; ++v) {
                if (n == 1) {
                    r.vertex_deletions.push_back(0);
                    r.critical = k == 1;
                    break;
                }
                auto sub = t.induced(std::span<const int>(all_but(n, v)));
                // Deleting one vertex lowers omega by at most one, so
                // omega(T - v) <= k - 1 pins the value at k - 1.
                auto drop = at_most(sub, k - 1, options);
                if (!drop) {
                    out.complete = false;
                    r.critical = false;
                    break;
                }
                r.vertex_deletions.push_back(*drop ? k - 1 : k);
                r.critical = *drop;
            }
            if (r.critical)
                out.reports.push_back(std::move(r));
        }
    return out;
}

bool verify_criticality_report(const CriticalityReport & r)
{
    const auto & t = r.tournament;
    int n = t.size();
    if (clique_number(t).value != r.omega || static_cast<int>(r.vertex_deletions.size()) != n)
        return false;
    bool critical = r.omega == r.k;
    for (int v = 0; v < n; ++v) {
        int value = n == 1 ? 0 : clique_number(t.induced(std::span<const int>(all_but(n, v)))).value;
        if (value != r.vertex_deletions[v])
            return false;
        critical = critical && value == r.k - 1;
    }
    return critical == r.critical;
}

SubtournamentSearch min_subtournament_with_omega(
    const Tournament & t, int k, int size_cap, const SolverOptions & options)
{
    SubtournamentSearch out;
    int n = t.size();
    Deadline deadline(options.time_limit);
    if (k <= 0) {
        out.vertices = std::vector<int>{};
        return out;
    }
    for (int s = 1; s <= std::min(size_cap, n); ++s) {
        // Lexicographic s-subsets of 0..n-1.
        std::vector<int> pick(s);
        for (int i = 0; i < s; ++i)
            pick[i] = i;
        while (true) {
            if (deadline.expired()) {
                out.complete = false;
                return out;
            }
            auto sub = t.induced(std::span<const int>(pick));
            bool qualifies = false;
            if (k == 1)
                qualifies = true;
            else if (!is_acyclic_set(sub, all_vertices(s))) {
                if (domination_number(sub).value >= k)
                    qualifies = true;
                else {
                    auto le = at_most(sub, k - 1, options);
                    if (!le)
                        out.complete = false;
                    else
                        qualifies = !*le;
                }
            }
            if (qualifies) {
                out.vertices = pick;
                return out;
            }
            int i = s - 1;
            while (i >= 0 && pick[i] == n - s + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < s; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

} // namespace backedge
