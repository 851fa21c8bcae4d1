#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hh"

#include <backedge/backedge.hh>
#include <backedge/canon.hh>
#include <backedge/checkers.hh>
#include <backedge/construct.hh>
#include <backedge/invariants.hh>
#include <backedge/search.hh>
#include <backedge/structure.hh>

#include <set>

using namespace backedge;

namespace {

Tournament paley7() { return build(expr::rotational(7, {1, 2, 4})); }

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

/// Brute force: assign each vertex to one of three parts.
int count_tripartitions(const Tournament & t)
{
    int n = t.size(), count = 0;
    std::vector<int> part(n, 0);
    while (true) {
        if (part[0] == 0) {
            bool ok = true;
            std::vector<int> sizes(3, 0);
            for (int v = 0; v < n; ++v)
                ++sizes[part[v]];
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v)
                    if ((part[v] - part[u] + 3) % 3 == 1)
                        ok = t.has_arc(u, v);
            if (ok && sizes[1] && sizes[2])
                ++count;
        }
        int i = 0;
        while (i < n && ++part[i] == 3)
            part[i++] = 0;
        if (i == n)
            break;
    }
    return count;
}

} // namespace

TEST_CASE("hero recognition")
{
    for (int k = 1; k <= 7; ++k)
        CHECK(is_hero(Tournament::transitive(k)).hero);
    auto delta = build(expr::delta(expr::tt(1), expr::tt(2), expr::c3()));
    auto h = is_hero(delta);
    REQUIRE(h.hero);
    CHECK(check_hero_certificate(delta, *h.certificate).empty());
    CHECK_FALSE(is_hero(build(expr::s(3))).hero);
    CHECK_FALSE(is_gentleman(build(expr::s(3))));
    CHECK(is_hero(build(expr::arrow(expr::c3(), expr::c3()))).hero);
}

TEST_CASE("hero certificates are checked")
{
    auto delta = build(expr::delta(expr::tt(1), expr::tt(2), expr::c3()));
    auto tree = *is_hero(delta).certificate;
    REQUIRE(tree.kind == HeroNode::Kind::delta_one_k);
    auto wrong_apex = tree;
    wrong_apex.apex = (tree.apex + 1) % 6;
    CHECK_FALSE(check_hero_certificate(delta, wrong_apex).empty());
    auto flipped = tree;
    flipped.side = tree.side == HeroNode::Side::transitive_second ? HeroNode::Side::transitive_third
                                                                  : HeroNode::Side::transitive_second;
    CHECK_FALSE(check_hero_certificate(delta, flipped).empty());
}

TEST_CASE("hero recognition matches the grammar on 7 vertices")
{
    std::set<std::string> grammar, recognised;
    for (auto & g : grammar_heroes(7)) {
        CHECK(check_hero_certificate(g.tournament, g.tree).empty());
        if (g.tournament.size() == 7)
            grammar.insert(canonical_code(g.tournament));
    }
    for (auto & t : enumerate_tournaments(7))
        if (is_hero(t).hero)
            recognised.insert(canonical_code(t));
    CHECK(grammar == recognised);
    CHECK(grammar.size() < 456);
}

TEST_CASE("cyclic tripartitions")
{
    auto c3 = cyclic_tripartitions(build(expr::c3()));
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].a == std::vector<int>{0});
    CHECK(c3[0].b == std::vector<int>{1});
    CHECK(c3[0].c == std::vector<int>{2});
    CHECK(cyclic_tripartitions(Tournament::transitive(3)).empty());

    auto st3 = build(expr::s_tilde(3));
    auto parts = cyclic_tripartitions(st3);
    CHECK(static_cast<int>(parts.size()) == count_tripartitions(st3));
    bool designed = false;
    for (auto & p : parts)
        designed = designed
            || (p.a == std::vector<int>{0, 1, 2} && p.b == std::vector<int>{3, 4, 5} && p.c == std::vector<int>{6, 7, 8});
    CHECK(designed);

    for (auto & t : enumerate_tournaments(6))
        CHECK(static_cast<int>(cyclic_tripartitions(t).size()) == count_tripartitions(t));
}

TEST_CASE("star forest orderings")
{
    auto tt = Tournament::transitive(5);
    auto ord = star_forest_ordering(tt, *is_hero(tt).certificate);
    CHECK(ord == Ordering::identity(5));

    auto c3 = build(expr::c3());
    auto g3 = backedge_graph(c3, star_forest_ordering(c3, *is_hero(c3).certificate)).graph;
    CHECK(g3.edge_count() == 1);

    // Delta(1, 3, C3): a star from the apex to the TT3 plus the triangle's edge.
    auto d = build(expr::delta(expr::tt(1), expr::tt(3), expr::c3()));
    auto gd = backedge_graph(d, star_forest_ordering(d, *is_hero(d).certificate)).graph;
    CHECK(check::is_star_forest(gd));
    CHECK(gd.edge_count() == 4);
    CHECK(gd.degree(0) == 3);

    auto bad = *is_hero(d).certificate;
    bad.children.clear();
    CHECK_THROWS_AS(star_forest_ordering(d, bad), std::invalid_argument);
}

TEST_CASE("ordering predicates")
{
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(satisfies(path, OrderingPredicate::forest()));
    CHECK(satisfies(path, OrderingPredicate::max_degree_le(2)));
    CHECK_FALSE(satisfies(path, OrderingPredicate::max_degree_le(1)));
    CHECK(satisfies(path, OrderingPredicate::clique_le(2)));
    CHECK(satisfies(path, OrderingPredicate::girth_ge(100)));
    path.add_edge(3, 0);
    CHECK_FALSE(satisfies(path, OrderingPredicate::forest()));
    CHECK(satisfies(path, OrderingPredicate::girth_ge(4)));
    CHECK_FALSE(satisfies(path, OrderingPredicate::girth_ge(5)));
}

TEST_CASE("ordering search")
{
    auto c3 = ordering_search(build(expr::c3()), OrderingPredicate::forest());
    CHECK(c3.outcome == OrderingSearchResult::Outcome::found);

    auto tp6 = build(expr::tp(6));
    auto m = ordering_search(tp6, OrderingPredicate::max_degree_le(1));
    REQUIRE(m.outcome == OrderingSearchResult::Outcome::found);
    CHECK(backedge_graph(tp6, *m.ordering).graph.max_degree() <= 1);

    // Paley 7: decided exhaustively, compared with a scan of all orderings.
    auto p = paley7();
    auto forest = ordering_search(p, OrderingPredicate::forest());
    REQUIRE(forest.outcome != OrderingSearchResult::Outcome::timeout);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    bool any = false;
    do
        any = any || check::is_forest(backedge_graph(p, Ordering(perm)).graph);
    while (!any && std::next_permutation(perm.begin(), perm.end()));
    CHECK(any == (forest.outcome == OrderingSearchResult::Outcome::found));

    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = random_tournament(2 + static_cast<int>(uniform_below(rng, 5)), rng);
        for (auto pred : {OrderingPredicate::forest(), OrderingPredicate::max_degree_le(1), OrderingPredicate::clique_le(2),
                 OrderingPredicate::girth_ge(5)}) {
            auto r = ordering_search(t, pred);
            std::vector<int> q(t.size());
            std::iota(q.begin(), q.end(), 0);
            bool exists = false;
            do
                exists = exists || satisfies(backedge_graph(t, Ordering(q)).graph, pred);
            while (!exists && std::next_permutation(q.begin(), q.end()));
            CHECK(exists == (r.outcome == OrderingSearchResult::Outcome::found));
            if (r.ordering)
                CHECK(satisfies(backedge_graph(t, *r.ordering).graph, pred));
        }
    }
}

TEST_CASE("forest to tree")
{
    auto two = build(expr::arrow(expr::c3(), expr::c3()));
    auto before = backedge_graph(two, Ordering::identity(6)).graph;
    REQUIRE(before.edge_count() == 2);
    auto tree = forest_to_tree(two, Ordering::identity(6));
    CHECK(check::is_tree(backedge_graph(two, tree.ordering).graph));

    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    auto t = tournament_from_backedge(path, Ordering::identity(4));
    auto kept = forest_to_tree(t, Ordering::identity(4));
    CHECK(kept.swaps == 0);
    CHECK(kept.ordering == Ordering::identity(4));
    CHECK_THROWS_AS(forest_to_tree(build(expr::s(3)), Ordering::identity(7)), std::invalid_argument);

    for (int n = 1; n <= 5; ++n)
        for (auto & tn : enumerate_tournaments(n)) {
            std::vector<int> q(n);
            std::iota(q.begin(), q.end(), 0);
            do {
                Ordering o(q);
                if (!check::is_forest(backedge_graph(tn, o).graph))
                    continue;
                auto r = forest_to_tree(tn, o);
                auto g = backedge_graph(tn, r.ordering).graph;
                CHECK(check::is_tree(g));
                CHECK(r.swaps == check::component_count(backedge_graph(tn, o).graph) - 1);
            } while (std::next_permutation(q.begin(), q.end()));
        }
}

TEST_CASE("path-reversed matching ordering")
{
    CHECK(to_vec(tp_matching_ordering(2).vertices()) == std::vector<int>{1, 0});
    CHECK(to_vec(tp_matching_ordering(4).vertices()) == std::vector<int>{1, 0, 3, 2});
    CHECK(tp_matching_ordering(7).at(6) == 6);
    for (int n = 2; n <= 12; ++n)
        CHECK(backedge_graph(build(expr::tp(n)), tp_matching_ordering(n)).graph.max_degree() <= 1);
}

TEST_CASE("search tree orderings")
{
    auto tt = Tournament::transitive(6);
    std::vector<int> ins{0, 1, 2, 3, 4, 5};
    CHECK(bst_ordering(tt, ins) == Ordering::identity(6));

    auto c3 = build(expr::c3());
    auto tree = bst_tree(c3, {0, 1, 2});
    CHECK(tree.root == 0);
    CHECK(tree.right[0] == 1);
    CHECK(tree.left[0] == 2);
    auto ord = in_order(tree);
    CHECK(to_vec(ord.vertices()) == std::vector<int>{2, 0, 1});
    CHECK(is_bst_ordering(c3, tree, ord));
    CHECK_FALSE(is_bst_ordering(c3, tree, Ordering::identity(3)));

    auto p5 = bst_omega_probe(Tournament::transitive(5), 0, 1);
    CHECK(p5.best_bst_clique == 1);
    CHECK(p5.omega == 1);
    auto pc = bst_omega_probe(c3, 0, 1);
    CHECK(pc.best_bst_clique == 2);
    CHECK(pc.omega == 2);
    CHECK(pc.exhaustive);
    CHECK(pc.insertions == 6);
}

TEST_CASE("substitution colouring")
{
    auto leaves = substitution_dicolouring(*expr::s_tilde(2));
    CHECK(leaves.k == 2);
    for (int n = 1; n <= 4; ++n) {
        auto e = expr::s_tilde(n);
        auto c = substitution_dicolouring(*e);
        CHECK(check::is_dicolouring(build(e), c));
        CHECK(c.k <= (1 << (n - 1)));
    }
    auto s4 = expr::s(4);
    auto c = substitution_dicolouring(*s4);
    CHECK(check::is_dicolouring(build(s4), c));
    CHECK(c.k >= 4);
    CHECK(c.k <= 729);

    CHECK_THROWS_AS(substitution_dicolouring(*expr::raw(Tournament::transitive(3))), ConstructionError);
    CHECK_THROWS_AS(substitution_dicolouring(*expr::tt(3)), ConstructionError);

    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        auto e = random_base_expr(rng, 30);
        auto t = build(e);
        CHECK(t.size() <= 30);
        CHECK(check::is_dicolouring(t, substitution_dicolouring(*e)));
    }
}

TEST_CASE("orderings optimal for omega and chi at once")
{
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        auto t = random_tournament(1 + static_cast<int>(uniform_below(rng, 6)), rng);
        int omega = oracle::omega(t), chi = oracle::dichromatic(t);
        auto r = common_optimal_ordering(t);
        std::vector<int> q(t.size());
        std::iota(q.begin(), q.end(), 0);
        bool exists = false;
        do {
            oracle::Matrix g = oracle::backedges(oracle::arcs(t), q);
            auto bg = backedge_graph(t, Ordering(q)).graph;
            exists = exists || (oracle::clique(g) == omega && check::chromatic_number(bg) == chi);
        } while (!exists && std::next_permutation(q.begin(), q.end()));
        CHECK(exists == (r.outcome == OrderingSearchResult::Outcome::found));
        if (r.ordering) {
            auto g = backedge_graph(t, *r.ordering).graph;
            CHECK(check::clique_number(g) == omega);
            CHECK(check::chromatic_number(g) == chi);
        }
    }
}
