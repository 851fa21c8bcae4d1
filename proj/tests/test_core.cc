#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hh"

#include <backedge/backedge.hh>
#include <backedge/canon.hh>
#include <backedge/codec.hh>
#include <backedge/construct.hh>
#include <backedge/graph_invariants.hh>
#include <backedge/rng.hh>
#include <backedge/search.hh>

#include <map>
#include <set>

using namespace backedge;

namespace {

std::set<std::pair<int, int>> arc_set(const Digraph & d)
{
    auto a = d.arcs();
    return {a.begin(), a.end()};
}

std::set<std::pair<int, int>> edge_set(const Graph & g)
{
    auto e = g.edges();
    return {e.begin(), e.end()};
}

Graph cycle(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

} // namespace

TEST_CASE("build: small constructions")
{
    CHECK(arc_set(build(expr::tt(3))) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(arc_set(build(expr::delta(expr::tt(1), expr::tt(1), expr::tt(1))))
        == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(build(expr::c3()) == build(expr::delta(expr::tt(1), expr::tt(1), expr::tt(1))));

    auto s3 = build(expr::s(3));
    CHECK(s3.size() == 7);
    CHECK(s3 == build(parse_expr("Delta(1,C3,C3)")));

    auto st3 = build(expr::s_tilde(3));
    REQUIRE(st3.size() == 9);
    auto c3 = canonical_code(build(expr::c3()));
    for (int part = 0; part < 3; ++part) {
        std::vector<int> vs{3 * part, 3 * part + 1, 3 * part + 2};
        CHECK(canonical_code(st3.induced(std::span<const int>(vs))) == c3);
    }
}

TEST_CASE("build: DSL text and errors")
{
    CHECK(build(parse_expr("TT(5)")).arc_count() == 10);
    auto paley = build(parse_expr("Rot(7;1,2,4)"));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (i != j) {
                int diff = ((j - i) % 7 + 7) % 7;
                CHECK(paley.has_arc(i, j) == (diff == 1 || diff == 2 || diff == 4));
            }
    CHECK(build(parse_expr("Arrow(C3, TT(2))")).size() == 5);
    CHECK(build(parse_expr("Subst(C3; v0=TT(2), v1=TT(1), v2=C3)")).size() == 6);
    CHECK_THROWS_AS(build(parse_expr("Subst(C3; v0=TT(2), v2=C3)")), ConstructionError);
    CHECK(to_string(*parse_expr("Delta(1,2,C3)")) == to_string(*parse_expr("Delta(TT(1),TT(2),C3)")));
    CHECK_THROWS_AS(parse_expr("Delta(1,2"), DslError);
    CHECK_THROWS_AS(build(parse_expr("Rot(4;1)")), ConstructionError);
    try {
        parse_expr("Arrow(C3,,C3)");
        FAIL("expected a parse error");
    }
    catch (const DslError & e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("backedge graph")
{
    auto c3 = build(expr::c3());
    CHECK(edge_set(backedge_graph(c3, Ordering::identity(3)).graph) == std::set<std::pair<int, int>>{{0, 2}});
    CHECK(backedge_graph(Tournament::transitive(6), Ordering::identity(6)).graph.edge_count() == 0);

    // TP(4) as v1..v4, ordering v2, v1, v4, v3.
    auto g = backedge_graph(build(expr::tp(4)), Ordering({1, 0, 3, 2})).graph;
    CHECK(edge_set(g) == std::set<std::pair<int, int>>{{1, 2}});
    CHECK(g.max_degree() == 1);
}

TEST_CASE("tournament from backedge graph")
{
    Graph one(3);
    one.add_edge(0, 2);
    CHECK(arc_set(tournament_from_backedge(one, Ordering::identity(3)))
        == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});

    Ordering ord({3, 1, 4, 0, 2});
    auto t = tournament_from_backedge(Graph(5), ord);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(t.has_arc(ord.at(i), ord.at(j)));

    auto c5 = cycle(5);
    auto back = tournament_from_backedge(c5, Ordering::identity(5));
    CHECK(backedge_graph(back, Ordering::identity(5)).graph == c5);

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 9));
        auto t2 = random_tournament(n, rng);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p, rng);
        Ordering o(p);
        CHECK(tournament_from_backedge(backedge_graph(t2, o).graph, o) == t2);
    }
}

TEST_CASE("reverse and duality")
{
    CHECK(arc_set(reverse(Tournament::transitive(3))) == std::set<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}});
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = random_tournament(7, rng);
        std::vector<int> p(7);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p, rng);
        Ordering o(p);
        CHECK(backedge_graph(t, o).graph == backedge_graph(reverse(t), reverse_ordering(o)).graph);
    }
}

TEST_CASE("strong components")
{
    auto tt = strong_components(Tournament::transitive(4));
    CHECK(tt == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
    CHECK(strong_components(build(expr::c3())).size() == 1);
    auto two = strong_components(build(expr::arrow(expr::c3(), expr::c3())));
    CHECK(two == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
    CHECK(is_strongly_connected(build(expr::s(3))));
}

TEST_CASE("canonical codes")
{
    auto c3 = build(expr::c3());
    std::vector<int> p{0, 1, 2};
    std::set<std::string> codes;
    do
        codes.insert(canonical_code(c3.induced(std::span<const int>(p))));
    while (std::next_permutation(p.begin(), p.end()));
    CHECK(codes.size() == 1);
    CHECK(canonical_code(Tournament::transitive(3)) != canonical_code(c3));

    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(uniform_below(rng, 10));
        auto t = random_tournament(n, rng);
        std::vector<int> q(n);
        std::iota(q.begin(), q.end(), 0);
        shuffle(q, rng);
        auto u = t.induced(std::span<const int>(q));
        CHECK(canonical_code(t) == canonical_code(u));
        CHECK(canonical_form(t) == canonical_form(u));
    }
}

TEST_CASE("canonical codes agree with a brute-force minimum on n <= 6")
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(uniform_below(rng, 5));
        auto a = random_tournament(n, rng), b = random_tournament(n, rng);
        CHECK((canonical_code(a) == canonical_code(b)) == (oracle::canonical(a) == oracle::canonical(b)));
    }
}

TEST_CASE("trn and dgr formats")
{
    CHECK(parse_trn("3\n111\n") == Tournament::transitive(3));
    CHECK(arc_set(parse_trn("3\n110\n")) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 1}});
    for (auto & t : enumerate_tournaments(7))
        CHECK(parse_trn(serialize_trn(t)) == t);
    CHECK_THROWS_AS(parse_trn("3\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_trn("3\n11x\n"), ParseError);

    auto d = Digraph::from_arcs(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 0}});
    CHECK(parse_dgr(serialize_dgr(d)) == d);
    CHECK(std::holds_alternative<Digraph>(parse_any(serialize_dgr(d))));
    CHECK(std::holds_alternative<Tournament>(parse_any(serialize_trn(build(expr::s(3))))));
    CHECK_THROWS_AS(parse_dgr("2\n01\n10\n"), ParseError);
}

TEST_CASE("digraph validation")
{
    CHECK_THROWS_AS(Digraph::from_arcs(2, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_arcs(2, std::vector<std::pair<int, int>>{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_digraph(Digraph::from_arcs(3, std::vector<std::pair<int, int>>{{0, 1}})),
        std::invalid_argument);
    CHECK_THROWS_AS(Ordering({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("graph kernels")
{
    CHECK(max_clique(Graph(5)).value == 1);
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            k4.add_edge(i, j);
    CHECK(max_clique(k4).value == 4);
    CHECK(max_clique(cycle(5)).value == 2);
    CHECK(chromatic_number(cycle(5)).value == 3);
    CHECK(chromatic_number(cycle(6)).value == 2);
    Graph bip(5);
    bip.add_edge(0, 3);
    bip.add_edge(1, 3);
    bip.add_edge(2, 4);
    CHECK(chromatic_number(bip).value == 2);

    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 12));
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform_below(rng, 2))
                    g.add_edge(i, j);
        oracle::Matrix m(n, std::vector<bool>(n));
        for (auto [u, v] : g.edges())
            m[u][v] = m[v][u] = true;
        CHECK(max_clique(g).value == oracle::clique(m));
    }
}
