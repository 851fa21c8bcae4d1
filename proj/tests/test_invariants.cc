#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hh"

#include <backedge/backedge.hh>
#include <backedge/checkers.hh>
#include <backedge/construct.hh>
#include <backedge/graph_invariants.hh>
#include <backedge/invariants.hh>
#include <backedge/ramsey.hh>
#include <backedge/rng.hh>
#include <backedge/search.hh>

using namespace backedge;

namespace {

Tournament paley7() { return build(expr::rotational(7, {1, 2, 4})); }

std::vector<int> identity(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

} // namespace

TEST_CASE("clique number: reference values")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(clique_number(Tournament::transitive(n)).value == 1);
    CHECK(clique_number(build(expr::c3())).value == 2);
    CHECK(clique_number(build(expr::s(3))).value == 2);
    CHECK(clique_number(build(expr::s(4))).value == 3);

    // Paley 7: brute force over all 5040 orderings in the test oracle.
    REQUIRE(oracle::omega(paley7()) == 3);
    auto r = clique_number(paley7());
    CHECK(r.value == 3);
    CHECK(r.exact());
    CHECK(check::certificate(paley7(), r).empty());
}

TEST_CASE("clique number matches brute force on random tournaments")
{
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 7));
        auto t = random_tournament(n, rng);
        int expected = oracle::omega(t);
        CHECK(clique_number(t).value == expected);
        CHECK(clique_number_oracle(t) == expected);
        SolverOptions whole;
        whole.use_components = false;
        CHECK(clique_number(t, whole).value == expected);
        CHECK(*clique_number_at_most(t, expected) == true);
        if (expected > 1)
            CHECK(*clique_number_at_most(t, expected - 1) == false);
    }
}

TEST_CASE("clique number: oracle limits, threads and time limits")
{
    CHECK(clique_number_oracle(build(expr::c3())) == 2);
    CHECK(clique_number_oracle(Tournament::transitive(5)) == 1);
    CHECK_THROWS_AS(clique_number_oracle(Tournament::transitive(9)), std::invalid_argument);

    Rng rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = random_tournament(12, rng);
        SolverOptions two;
        two.threads = 2;
        auto a = clique_number(t), b = clique_number(t, two);
        CHECK(a.value == b.value);
        CHECK(check::certificate(t, b).empty());
    }

    SolverOptions quick;
    quick.time_limit = std::chrono::milliseconds(1);
    auto big = random_tournament(48, rng);
    auto r = clique_number(big, quick);
    CHECK(r.lower <= r.value);
    CHECK(r.value <= r.upper);
    CHECK(check::certificate(big, r).empty());
}

TEST_CASE("backedge clique number of one ordering")
{
    CHECK(backedge_clique_number(build(expr::c3()), Ordering::identity(3)) == 2);
    CHECK(backedge_clique_number(Tournament::transitive(5), Ordering::identity(5).reversed()) == 5);
}

TEST_CASE("dichromatic number")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(dichromatic_number(Tournament::transitive(n)).value == 1);
    for (int k = 1; k <= 4; ++k)
        CHECK(dichromatic_number(build(expr::s(k))).value == k);
    REQUIRE(oracle::dichromatic(paley7()) == 3);
    CHECK(dichromatic_number(paley7()).value == 3);

    Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 8));
        auto d = random_digraph(n, 160, rng);
        auto r = dichromatic_number(d);
        CHECK(r.value == oracle::dichromatic(d));
        CHECK(check::certificate(d, r).empty());
    }
}

TEST_CASE("ordering optimisation")
{
    auto c3 = build(expr::c3());
    auto chi = ordering_optimize(c3, OrderingObjective::chromatic);
    CHECK(chi.value == 2);
    CHECK(chi.invariant == "ordering_chromatic");
    CHECK(check::certificate(c3, chi).empty());
    CHECK(ordering_optimize(Tournament::transitive(4), OrderingObjective::clique).value == 1);

    Rng rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = random_tournament(1 + static_cast<int>(uniform_below(rng, 7)), rng);
        CHECK(ordering_optimize(t, OrderingObjective::chromatic).value == dichromatic_number(t).value);
        CHECK(ordering_optimize(t, OrderingObjective::clique).value == clique_number(t).value);
    }
}

TEST_CASE("orderings from dicolourings")
{
    auto tt = Tournament::transitive(3);
    auto ord = chi_ordering_from_dicolouring(tt, Dicolouring{{0, 0, 0}, 1});
    CHECK(ord == Ordering::identity(3));
    CHECK(backedge_graph(tt, ord).graph.edge_count() == 0);

    auto c3 = build(expr::c3());
    auto g = backedge_graph(c3, chi_ordering_from_dicolouring(c3, Dicolouring{{0, 0, 1}, 2})).graph;
    CHECK(chromatic_number(g).value <= 2);
    CHECK_THROWS_AS(chi_ordering_from_dicolouring(c3, Dicolouring{{0, 0, 0}, 1}), std::invalid_argument);

    Rng rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = random_tournament(10, rng);
        auto r = dichromatic_number(t);
        auto o = chi_ordering_from_dicolouring(t, std::get<Dicolouring>(r.certificate));
        CHECK(check::chromatic_number(backedge_graph(t, o).graph) <= r.value);
    }
}

TEST_CASE("domination number")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(domination_number(Tournament::transitive(n)).value == 1);
    // Closed out-neighbourhoods: no single vertex of the triangle reaches the
    // vertex beating it.
    CHECK(domination_number(build(expr::c3())).value == 2);
    REQUIRE(oracle::domination(paley7()) == 3);
    CHECK(domination_number(paley7()).value == 3);

    Rng rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        auto d = random_digraph(1 + static_cast<int>(uniform_below(rng, 9)), 140, rng);
        auto r = domination_number(d);
        CHECK(r.value == oracle::domination(d));
        CHECK(check::certificate(d, r).empty());
    }
}

TEST_CASE("greedy dominating sets")
{
    CHECK(greedy_dominating(Tournament::transitive(5), Ordering::identity(5)) == std::vector<int>{0});
    CHECK(greedy_dominating(build(expr::c3()), Ordering::identity(3)) == std::vector<int>{0, 2});

    Rng rng(707);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 10));
        auto t = random_tournament(n, rng);
        auto p = identity(n);
        shuffle(p, rng);
        Ordering o(p);
        auto x = greedy_dominating(t, o);
        CHECK(check::is_dominating(t, x));
        CHECK(check::is_clique(backedge_graph(t, o).graph, x));
    }
}

TEST_CASE("decreasing path colouring")
{
    // T = 2 -> 1 -> 0, 2 -> 0 under 0, 1, 2: every pair is a backedge.
    auto t = tournament_from_backedge(
        [] {
            Graph g(3);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            return g;
        }(),
        Ordering::identity(3));
    CHECK(decreasing_path_colouring(t, Ordering::identity(3), {0, 1, 2}) == std::vector<int>{3, 2, 1});

    auto tt = Tournament::transitive(4);
    CHECK(decreasing_path_colouring(tt, Ordering::identity(4), {0, 1, 2, 3}) == std::vector<int>{1, 1, 1, 1});
    CHECK_THROWS_AS(decreasing_path_colouring(build(expr::c3()), Ordering::identity(3), {0, 1, 2}),
        std::invalid_argument);

    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 10));
        auto d = random_tournament(n, rng);
        auto p = identity(n);
        shuffle(p, rng);
        Ordering o(p);
        // A maximal transitive set, grown greedily in a random order.
        std::vector<int> x;
        shuffle(p, rng);
        for (int v : p) {
            x.push_back(v);
            VertexSet s = 0;
            for (int u : x)
                s |= singleton(u);
            if (!is_acyclic_set(d, s))
                x.pop_back();
        }
        auto phi = decreasing_path_colouring(d, o, x);
        auto g = backedge_graph(d, o).graph;
        int top = *std::max_element(phi.begin(), phi.end());
        CHECK(top <= max_clique(g).value);
        for (int u : x)
            for (int v : x)
                if (u != v && g.has_edge(u, v))
                    CHECK(phi[u] != phi[v]);
    }
}

TEST_CASE("largest transitive subtournament")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(max_transitive(Tournament::transitive(n)).value == n);
    CHECK(max_transitive(build(expr::c3())).value == 2);
    REQUIRE(oracle::transitive(paley7()) == 3);
    CHECK(max_transitive(paley7()).value == 3);

    Rng rng(909);
    for (int trial = 0; trial < 40; ++trial) {
        auto t = random_tournament(1 + static_cast<int>(uniform_below(rng, 10)), rng);
        auto r = max_transitive(t);
        CHECK(r.value == oracle::transitive(t));
        CHECK(check::certificate(t, r).empty());
    }
}

TEST_CASE("independence number")
{
    CHECK(independence_number(paley7()) == 1);
    CHECK(independence_number(Digraph::from_arcs(5, std::vector<std::pair<int, int>>{})) == 5);
    CHECK(independence_number(Digraph::from_arcs(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}})) == 2);
}

TEST_CASE("invariant chain on small digraph pieces")
{
    Rng rng(1001);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = random_tournament(1 + static_cast<int>(uniform_below(rng, 8)), rng);
        int dom = domination_number(t).value, omega = clique_number(t).value, chi = dichromatic_number(t).value;
        CHECK(dom <= omega);
        CHECK(omega <= chi);
    }
}

TEST_CASE("certificate checker rejects tampering")
{
    auto t = paley7();
    auto omega = clique_number(t);
    auto bad = omega;
    bad.value = 2;
    CHECK_FALSE(check::certificate(t, bad).empty());

    auto chi = dichromatic_number(t);
    auto& colours = std::get<Dicolouring>(chi.certificate).colour;
    std::fill(colours.begin(), colours.end(), 0);
    CHECK_FALSE(check::certificate(t, chi).empty());

    auto dom = domination_number(t);
    std::get<DominatingCertificate>(dom.certificate).vertices.pop_back();
    CHECK_FALSE(check::certificate(t, dom).empty());
}

TEST_CASE("ramsey table")
{
    CHECK(ramsey(2, 5) == 5);
    CHECK(ramsey(5, 2) == 5);
    CHECK(ramsey(1, 7) == 1);
    CHECK(ramsey(3, 4) == 9);
    CHECK(ramsey(4, 4) == 18);
    CHECK_FALSE(ramsey_known(4, 5));
    CHECK_THROWS_AS(ramsey(5, 5), RamseyUnknown);

    // R(3,3) = 6: some graph on 5 vertices has no triangle and no independent
    // triple, and no graph on 6 does.
    auto witness_exists = [](int n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
            oracle::Matrix g(n, std::vector<bool>(n)), h(n, std::vector<bool>(n));
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit) {
                    bool e = mask >> bit & 1;
                    g[i][j] = g[j][i] = e;
                    h[i][j] = h[j][i] = !e;
                }
            if (oracle::clique(g) < 3 && oracle::clique(h) < 3)
                return true;
        }
        return false;
    };
    CHECK(witness_exists(5));
    CHECK_FALSE(witness_exists(6));
    CHECK(ramsey(3, 3) == 6);
}
