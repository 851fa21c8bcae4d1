#pragma once

#include <backedge/backedge.hh>
#include <backedge/construct.hh>
#include <backedge/result.hh>
#include <backedge/rng.hh>

#include <optional>
#include <string>
#include <vector>

namespace backedge {

// ---- heroes ----

/// Parse tree of a hero. Vertex labels refer to the tournament it certifies.
struct HeroNode
{
    enum class Kind
    {
        leaf,
        arrow, ///< children[0] => children[1]
        /// Cyclic composition of the apex, a transitive part and children[0]:
        /// apex => transitive => child => apex      (Delta(1, k, H1)), or
        /// apex => child => transitive => apex      (Delta(1, H1, k)).
        delta_one_k
    };
    enum class Side
    {
        transitive_second,
        transitive_third
    };

    Kind kind = Kind::leaf;
    std::vector<int> vertices; ///< sorted
    int apex = -1;
    Side side = Side::transitive_second;
    std::vector<int> transitive; ///< topological order
    std::vector<HeroNode> children;
};

struct HeroResult
{
    bool hero = false;
    std::optional<HeroNode> certificate;
};

HeroResult is_hero(const Tournament & h);

/// Same class as heroes; kept as its own name.
inline bool is_gentleman(const Tournament & h) { return is_hero(h).hero; }

/// Empty when the tree matches `h`, otherwise what is wrong with it.
std::string check_hero_certificate(const Tournament & h, const HeroNode & root);

struct Tripartition
{
    std::vector<int> a, b, c; ///< a => b => c => a; vertex 0 lies in a
};

/// Every partition into three nonempty parts with a => b => c => a, each
/// reported once. Empty unless `t` is strongly connected.
std::vector<Tripartition> cyclic_tripartitions(const Tournament & t);

struct GeneratedHero
{
    Tournament tournament;
    HeroNode tree;
};

/// All heroes with at most `max_n` vertices, one per isomorphism class,
/// obtained by closing TT1 under the three composition rules. Each entry
/// carries the tree it was built from.
std::vector<GeneratedHero> grammar_heroes(int max_n);

// ---- orderings with structured backedge graphs ----

/// Backedge graph is a disjoint union of stars. Throws
/// std::invalid_argument if the certificate does not match `h`.
Ordering star_forest_ordering(const Tournament & h, const HeroNode & cert);

struct OrderingPredicate
{
    enum class Kind
    {
        forest,
        max_degree_le,
        clique_le,
        girth_ge,
        /// clique number <= bound and chromatic number <= colours
        clique_colour_le
    };
    Kind kind = Kind::forest;
    int bound = 0;
    int colours = 0;

    static OrderingPredicate forest() { return {Kind::forest, 0}; }
    static OrderingPredicate max_degree_le(int d) { return {Kind::max_degree_le, d}; }
    static OrderingPredicate clique_le(int k) { return {Kind::clique_le, k}; }
    static OrderingPredicate girth_ge(int g) { return {Kind::girth_ge, g}; }
    static OrderingPredicate clique_colour_le(int k, int c) { return {Kind::clique_colour_le, k, c}; }
};

bool satisfies(const Graph & g, const OrderingPredicate & p);

struct OrderingSearchResult
{
    enum class Outcome
    {
        found,
        none,
        timeout
    };
    Outcome outcome = Outcome::none;
    std::optional<Ordering> ordering;
    std::uint64_t nodes = 0;
};

OrderingSearchResult ordering_search(const Tournament & t, const OrderingPredicate & p, const SolverOptions & options = {});

/// An ordering optimal for omega and for the dichromatic number at once
/// (outcome none when no such ordering exists).
OrderingSearchResult common_optimal_ordering(const Tournament & t, const SolverOptions & options = {});

struct TreeOrdering
{
    Ordering ordering;
    int swaps = 0;
};

/// Adjacent swaps until the backedge graph is connected. Throws
/// std::invalid_argument if the backedge graph of `ord` is not a forest.
TreeOrdering forest_to_tree(const Tournament & t, const Ordering & ord);

/// 1, 0, 3, 2, ... and, for odd n, n - 1 last.
Ordering tp_matching_ordering(int n);

struct BstTree
{
    int root = -1;
    std::vector<int> left, right; ///< -1 when absent
};

/// Inserts vertices in sequence: below node x, a vertex beating x goes
/// left, any other goes right.
BstTree bst_tree(const Tournament & t, const std::vector<int> & insertion);
Ordering bst_ordering(const Tournament & t, const std::vector<int> & insertion);
Ordering in_order(const BstTree & tree);

/// Every left descendant of x beats x, x beats every right descendant, and
/// `ord` is the in-order traversal.
bool is_bst_ordering(const Tournament & t, const BstTree & tree, const Ordering & ord);

struct BstProbe
{
    int best_bst_clique = 0;
    int omega = 0;
    bool omega_exact = true;
    std::uint64_t insertions = 0;
    bool exhaustive = false;
};

/// Exhaustive over all insertion sequences when n <= 7, otherwise `samples`
/// random ones drawn from `seed`.
BstProbe bst_omega_probe(const Tournament & t, int samples, std::uint64_t seed, const SolverOptions & options = {});

// ---- substitution colouring ----

/// Dicolouring of build(e) by palette reuse. Leaves must be TT(1), TT(2) or
/// C3 (S(n) and STilde(n) are expanded); Arrow shares one palette, Delta
/// shares one between the pair of parts giving the fewest colours and adds
/// a fresh one for the third, Subst gives the parts replacing one colour
/// class of the base a shared palette. Throws ConstructionError on other
/// leaves.
Dicolouring substitution_dicolouring(const Expr & e);

/// Random expression over the leaves accepted above with at most
/// `max_vertices` vertices.
ExprPtr random_base_expr(Rng & rng, int max_vertices);

} // namespace backedge
