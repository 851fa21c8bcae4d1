#pragma once

// Brute-force reference computations for the tests. Everything here works
// on plain adjacency matrices and shares no code with the library solvers.

#include <backedge/digraph.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix arcs(const backedge::Digraph & d)
{
    int n = d.size();
    Matrix m(n, std::vector<bool>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m[u][v] = d.has_arc(u, v);
    return m;
}

inline bool acyclic(const Matrix & a, const std::vector<int> & s)
{
    std::vector<int> left = s;
    while (!left.empty()) {
        auto src = std::find_if(left.begin(), left.end(), [&](int v) {
            return std::none_of(left.begin(), left.end(), [&](int u) { return a[u][v]; });
        });
        if (src == left.end())
            return false;
        left.erase(src);
    }
    return true;
}

inline std::vector<int> members(std::uint32_t mask, int n)
{
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1)
            s.push_back(v);
    return s;
}

/// Largest clique of an undirected matrix by subset enumeration (n <= 20).
inline int clique(const Matrix & g)
{
    int n = static_cast<int>(g.size()), best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        auto s = members(mask, n);
        if (static_cast<int>(s.size()) <= best)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j)
                ok = g[s[i]][s[j]];
        if (ok)
            best = static_cast<int>(s.size());
    }
    return best;
}

inline Matrix backedges(const Matrix & a, const std::vector<int> & order)
{
    int n = static_cast<int>(a.size());
    Matrix g(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[order[j]][order[i]])
                g[order[i]][order[j]] = g[order[j]][order[i]] = true;
    return g;
}

/// Minimum over all orderings of the backedge clique number.
inline int omega(const backedge::Digraph & d)
{
    auto a = arcs(d);
    std::vector<int> p(d.size());
    std::iota(p.begin(), p.end(), 0);
    int best = d.size();
    do
        best = std::min(best, clique(backedges(a, p)));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// Fewest acyclic classes, trying every assignment of k colours.
inline int dichromatic(const backedge::Digraph & d)
{
    auto a = arcs(d);
    int n = d.size();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool ok = true;
            for (int col = 0; col < k && ok; ++col) {
                std::vector<int> cls;
                for (int v = 0; v < n; ++v)
                    if (c[v] == col)
                        cls.push_back(v);
                ok = acyclic(a, cls);
            }
            if (ok)
                return k;
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

inline int domination(const backedge::Digraph & d)
{
    auto a = arcs(d);
    int n = d.size(), best = n;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        auto s = members(mask, n);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = std::any_of(s.begin(), s.end(), [&](int u) { return u == v || a[u][v]; });
        if (ok)
            best = std::min<int>(best, s.size());
    }
    return best;
}

inline int transitive(const backedge::Digraph & d)
{
    auto a = arcs(d);
    int n = d.size(), best = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        auto s = members(mask, n);
        if (static_cast<int>(s.size()) > best && acyclic(a, s))
            best = static_cast<int>(s.size());
    }
    return best;
}

/// Arc string minimised over all n! relabellings.
inline std::string canonical(const backedge::Digraph & d)
{
    auto a = arcs(d);
    int n = d.size();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += a[p[i]][p[j]] ? '1' : '0';
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

} // namespace oracle
