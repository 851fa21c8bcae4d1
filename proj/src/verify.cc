#include <backedge/canon.hh>
#include <backedge/checkers.hh>
#include <backedge/construct.hh>
#include <backedge/graph_invariants.hh>
#include <backedge/invariants.hh>
#include <backedge/ramsey.hh>
#include <backedge/search.hh>
#include <backedge/structure.hh>
#include <backedge/verify.hh>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace backedge {

namespace {

using nlohmann::json;
using std::chrono::milliseconds;

// Pinned runtime limits, in milliseconds.
constexpr long s4_omega_limit_ms = 600'000;
constexpr long s4_chi_limit_ms = 300'000;
constexpr long stilde3_limit_ms = 60'000;
constexpr long chain_limit_ms = 1'800'000;
constexpr long per_instance_limit_ms = 20'000;

struct Context
{
    VerifyConfig config;
    Rng rng() const { return Rng(config.seed); }
    SolverOptions options(long limit_ms) const
    {
        SolverOptions o;
        o.time_limit = milliseconds(limit_ms);
        o.threads = config.threads;
        return o;
    }
};

struct Claim
{
    ClaimInfo info;
    std::function<ClaimStatus(const Context &, json &)> run;
};

ClaimStatus verdict(bool ok) { return ok ? ClaimStatus::pass : ClaimStatus::fail; }

std::vector<Ordering> all_orderings(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Ordering> out;
    do
        out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Tournament> canonical_upto(int n_max)
{
    std::vector<Tournament> all;
    for (int n = 1; n <= n_max; ++n)
        for (auto & t : enumerate_tournaments(n))
            all.push_back(std::move(t));
    return all;
}

int graph_clique(const Graph & g) { return g.size() == 0 ? 0 : max_clique(g).value; }
int graph_chromatic(const Graph & g) { return g.size() == 0 ? 0 : chromatic_number(g).value; }

ClaimStatus omega_s_family(const Context & ctx, json & m)
{
    const int expected[] = {1, 2, 2, 3};
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
        auto t = build(expr::s(k));
        Stopwatch clock;
        auto r = clique_number(t, ctx.options(k == 4 ? s4_omega_limit_ms : per_instance_limit_ms));
        double ms = clock.elapsed_ms();
        bool good = r.exact() && r.value == expected[k - 1] && check::certificate(t, r).empty();
        m["S" + std::to_string(k)] = r.value;
        if (k == 4)
            good = good && ms <= s4_omega_limit_ms;
        ok = ok && good;
    }
    return verdict(ok);
}

ClaimStatus chi_s_family(const Context & ctx, json & m)
{
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
        auto t = build(expr::s(k));
        Stopwatch clock;
        auto r = dichromatic_number(t, ctx.options(k == 4 ? s4_chi_limit_ms : per_instance_limit_ms));
        double ms = clock.elapsed_ms();
        m["S" + std::to_string(k)] = r.value;
        ok = ok && r.exact() && r.value == k && check::certificate(t, r).empty();
        if (k == 4)
            ok = ok && ms <= s4_chi_limit_ms;
    }
    return verdict(ok);
}

ClaimStatus stilde_lower(const Context & ctx, json & m)
{
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
        auto t = build(expr::s_tilde(k));
        Stopwatch clock;
        auto r = clique_number(t, ctx.options(stilde3_limit_ms));
        m["STilde" + std::to_string(k)] = r.value;
        ok = ok && r.exact() && r.value >= k && clock.elapsed_ms() <= stilde3_limit_ms && check::certificate(t, r).empty();
    }
    return verdict(ok);
}

ClaimStatus chain(const Context & ctx, json & m)
{
    Stopwatch clock;
    long violations = 0, inexact = 0, bad_certificates = 0, checked = 0;
    for (auto & t : canonical_upto(7)) {
        auto dom = domination_number(t, ctx.options(per_instance_limit_ms));
        auto omega = clique_number(t, ctx.options(per_instance_limit_ms));
        auto chi = dichromatic_number(t, ctx.options(per_instance_limit_ms));
        ++checked;
        if (!dom.exact() || !omega.exact() || !chi.exact())
            ++inexact;
        if (!(dom.value <= omega.value && omega.value <= chi.value))
            ++violations;
        for (auto * r : {&dom, &omega, &chi})
            if (!check::certificate(t, *r).empty())
                ++bad_certificates;
    }
    m["tournaments"] = checked;
    m["violations"] = violations;
    m["inexact"] = inexact;
    m["bad_certificates"] = bad_certificates;
    return verdict(violations == 0 && inexact == 0 && bad_certificates == 0 && clock.elapsed_ms() <= chain_limit_ms);
}

/// chi(G) <= chi_vec * omega(G) and chi_vec <= chi(G).
bool sandwich_holds(int chi_vec, const Graph & g)
{
    int chi = graph_chromatic(g);
    int omega = graph_clique(g);
    return chi <= chi_vec * omega && chi_vec <= chi;
}

ClaimStatus sandwich(const Context & ctx, json & m)
{
    long pairs = 0, violations = 0;
    for (int n = 1; n <= 6; ++n) {
        auto orders = all_orderings(n);
        for (auto & t : enumerate_tournaments(n)) {
            int chi_vec = dichromatic_number(t).value;
            for (auto & ord : orders) {
                ++pairs;
                if (!sandwich_holds(chi_vec, backedge_graph(t, ord).graph))
                    ++violations;
            }
        }
    }
    auto rng = ctx.rng();
    long random_pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(uniform_below(rng, 10));
        auto t = random_tournament(n, rng);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p, rng);
        ++random_pairs;
        if (!sandwich_holds(dichromatic_number(t).value, backedge_graph(t, Ordering(p)).graph))
            ++violations;
    }
    m["exhaustive_pairs"] = pairs;
    m["random_pairs"] = random_pairs;
    m["violations"] = violations;
    return verdict(violations == 0);
}

ClaimStatus approximation(const Context &, json & m)
{
    long optimal_orderings = 0, violations = 0;
    for (int n = 1; n <= 6; ++n) {
        auto orders = all_orderings(n);
        for (auto & t : enumerate_tournaments(n)) {
            int omega = clique_number(t).value;
            int chi_vec = dichromatic_number(t).value;
            for (auto & ord : orders) {
                auto g = backedge_graph(t, ord).graph;
                if (graph_clique(g) != omega)
                    continue;
                ++optimal_orderings;
                int chi = graph_chromatic(g);
                if (!(chi_vec <= chi && chi <= chi_vec * chi_vec))
                    ++violations;
            }
        }
    }
    m["optimal_orderings"] = optimal_orderings;
    m["violations"] = violations;
    return verdict(violations == 0 && optimal_orderings > 0);
}

int max_over_components_oracle(const Tournament & t)
{
    int best = 0;
    for (auto & part : strong_components(t))
        best = std::max(best, clique_number_oracle(t.induced(std::span<const int>(part))));
    return best;
}

ClaimStatus components(const Context & ctx, json & m)
{
    long checked = 0, violations = 0;
    for (auto & t : canonical_upto(6)) {
        ++checked;
        if (clique_number_oracle(t) != max_over_components_oracle(t))
            ++violations;
    }
    SolverOptions whole = ctx.options(per_instance_limit_ms);
    whole.use_components = false;
    whole.threads = 1;
    auto rng = ctx.rng();
    long composites = 0, inexact = 0;
    for (int i = 0; i < 100; ++i) {
        int parts = 2 + static_cast<int>(uniform_below(rng, 2));
        std::vector<Tournament> pieces;
        ExprPtr e;
        for (int p = 0; p < parts; ++p) {
            auto piece = random_tournament(1 + static_cast<int>(uniform_below(rng, 6)), rng);
            pieces.push_back(piece);
            e = e ? expr::arrow(e, expr::raw(piece)) : expr::raw(piece);
        }
        auto t = build(e);
        int expected = 0;
        for (auto & piece : pieces)
            expected = std::max(expected, clique_number_oracle(piece));
        auto r = clique_number(t, whole);
        ++composites;
        if (!r.exact())
            ++inexact;
        if (r.value != expected)
            ++violations;
    }
    m["exhaustive"] = checked;
    m["composites"] = composites;
    m["violations"] = violations;
    m["inexact"] = inexact;
    return verdict(violations == 0 && inexact == 0);
}

ClaimStatus oracle(const Context & ctx, json & m)
{
    long checked = 0, mismatches = 0;
    for (auto & t : canonical_upto(6)) {
        ++checked;
        if (clique_number(t).value != clique_number_oracle(t))
            ++mismatches;
    }
    auto rng = ctx.rng();
    long random = 0;
    for (int i = 0; i < 200; ++i) {
        auto t = random_tournament(8, rng);
        ++random;
        auto r = clique_number(t);
        if (!r.exact() || r.value != clique_number_oracle(t) || !check::certificate(t, r).empty())
            ++mismatches;
    }
    m["exhaustive"] = checked;
    m["random"] = random;
    m["mismatches"] = mismatches;
    return verdict(mismatches == 0);
}

ClaimStatus heroes(const Context &, json & m)
{
    std::set<std::string> grammar, recognised;
    for (auto & g : grammar_heroes(6))
        grammar.insert(canonical_code(g.tournament));
    long bad_certificates = 0;
    for (auto & t : canonical_upto(6)) {
        auto h = is_hero(t);
        if (h.hero) {
            recognised.insert(canonical_code(t));
            if (!check_hero_certificate(t, *h.certificate).empty())
                ++bad_certificates;
        }
    }
    bool s3_rejected = !is_hero(build(expr::s(3))).hero;
    bool delta_accepted = is_hero(build(expr::delta(expr::tt(1), expr::tt(2), expr::c3()))).hero;
    m["grammar"] = grammar.size();
    m["recognised"] = recognised.size();
    m["s3_rejected"] = s3_rejected;
    m["delta_1_2_c3_accepted"] = delta_accepted;
    m["bad_certificates"] = bad_certificates;
    return verdict(grammar == recognised && s3_rejected && delta_accepted && bad_certificates == 0);
}

ClaimStatus star_forests(const Context &, json & m)
{
    long checked = 0, failures = 0;
    for (auto & g : grammar_heroes(8)) {
        ++checked;
        auto ord = star_forest_ordering(g.tournament, g.tree);
        if (!check::is_star_forest(backedge_graph(g.tournament, ord).graph))
            ++failures;
    }
    m["heroes"] = checked;
    m["failures"] = failures;
    return verdict(failures == 0 && checked > 0);
}

ClaimStatus tp_matching(const Context &, json & m)
{
    bool ok = true;
    json degrees = json::array();
    for (int n = 2; n <= 12; ++n) {
        int d = backedge_graph(build(expr::tp(n)), tp_matching_ordering(n)).graph.max_degree();
        degrees.push_back(d);
        ok = ok && d <= 1;
    }
    m["max_degree_n2_to_n12"] = degrees;
    return verdict(ok);
}

ClaimStatus critical(const Context & ctx, json & m)
{
    auto opts = ctx.options(per_instance_limit_ms);
    opts.threads = 1;
    auto one = find_omega_critical(1, 1, 7, opts);
    auto two = find_omega_critical(2, 1, 7, opts);
    auto codes = [](const CriticalSearch & s) {
        std::vector<std::string> out;
        for (auto & r : s.reports)
            out.push_back(code_hex(canonical_code(r.tournament)));
        return out;
    };
    bool reports_verified = true;
    for (auto * s : {&one, &two})
        for (auto & r : s->reports)
            reports_verified = reports_verified && verify_criticality_report(r);
    auto c1 = codes(one), c2 = codes(two);
    m["k1"] = c1;
    m["k2"] = c2;
    m["reports_verified"] = reports_verified;
    bool ok = one.complete && two.complete && reports_verified
        && c1 == std::vector<std::string>{code_hex(canonical_code(Tournament::transitive(1)))}
        && c2 == std::vector<std::string>{code_hex(canonical_code(build(expr::c3())))};
    return verdict(ok);
}

ClaimStatus ramsey_sandwich(const Context & ctx, json & m)
{
    auto rng = ctx.rng();
    long tested = 0, skipped = 0, violations = 0, draws = 0;
    while (tested + skipped < 500) {
        ++draws;
        int n = 1 + static_cast<int>(uniform_below(rng, 9));
        auto d = random_digraph(n, 200, rng);
        int alpha = independence_number(d);
        if (alpha > 2)
            continue;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p, rng);
        auto g = backedge_graph(d, Ordering(p)).graph;
        int omega = graph_clique(g);
        if (!ramsey_known(omega + 1, alpha + 1)) {
            ++skipped;
            continue;
        }
        int chi = graph_chromatic(g);
        int chi_vec = dichromatic_number(d).value;
        ++tested;
        if (!(chi <= ramsey(omega + 1, alpha + 1) * chi_vec && chi_vec <= chi))
            ++violations;
    }
    m["tested"] = tested;
    m["skipped_outside_table"] = skipped;
    m["draws"] = draws;
    m["violations"] = violations;
    return verdict(violations == 0 && tested > 0);
}

ClaimStatus transitive_footprint(const Context &, json & m)
{
    long checked = 0, violations = 0;
    for (auto & t : canonical_upto(7)) {
        ++checked;
        auto trans = max_transitive(t);
        int chi_vec = dichromatic_number(t).value;
        int need = (t.size() + chi_vec - 1) / chi_vec;
        if (trans.value < need || !check::certificate(t, trans).empty())
            ++violations;
    }
    m["tournaments"] = checked;
    m["violations"] = violations;
    return verdict(violations == 0);
}

ClaimStatus substitution(const Context & ctx, json & m)
{
    auto rng = ctx.rng();
    long valid = 0, invalid = 0, bound_checked = 0, bound_failed = 0, bound_unknown = 0;
    int largest = 0;
    for (int i = 0; i < 200; ++i) {
        auto e = random_base_expr(rng, 40);
        auto t = build(e);
        largest = std::max(largest, t.size());
        auto c = substitution_dicolouring(*e);
        if (check::is_dicolouring(t, c))
            ++valid;
        else
            ++invalid;
        auto omega = clique_number(t, ctx.options(2'000));
        // A lower bound on omega already certifies count <= 9^omega.
        int exponent = omega.exact() ? omega.value : omega.lower;
        double bound = std::pow(9.0, exponent);
        if (c.k <= bound)
            ++bound_checked;
        else if (omega.exact())
            ++bound_failed;
        else
            ++bound_unknown;
    }
    m["expressions"] = 200;
    m["largest"] = largest;
    m["valid"] = valid;
    m["invalid"] = invalid;
    m["bound_checked"] = bound_checked;
    m["bound_failed"] = bound_failed;
    m["bound_unresolved"] = bound_unknown;
    return verdict(invalid == 0 && bound_failed == 0);
}

const std::vector<Claim> & claims()
{
    static const std::vector<Claim> list = {
        {{"omega-s-family", "omega of S1, S2, S3, S4 equals 1, 2, 2, 3"}, omega_s_family},
        {{"chi-s-family", "dichromatic number of Sk equals k for k = 1..4"}, chi_s_family},
        {{"stilde-omega-lower", "omega of STilde(n) is at least n for n = 1..3"}, stilde_lower},
        {{"chain-dom-omega-chi", "dom <= omega <= dichromatic number on every tournament up to 7 vertices"}, chain},
        {{"sandwich-backedge-chi",
             "chi(backedge)/omega(backedge) <= dichromatic number <= chi(backedge) for every ordering, n <= 6, and "
             "1000 random pairs, n <= 10"},
            sandwich},
        {{"omega-ordering-approximation",
             "every omega-optimal ordering, n <= 6, has dichromatic <= chi(backedge) <= dichromatic squared"},
            approximation},
        {{"strong-component-max",
             "omega equals the largest omega of a strong component, n <= 6 and 100 random one-way composites"},
            components},
        {{"oracle-agreement", "the ordering search agrees with the all-orderings oracle, n <= 6 and 200 random n = 8"},
            oracle},
        {{"hero-grammar",
             "hero recognition matches the closure of TT1 under the arrow and Delta(1,k,H)/Delta(1,H,k) rules, n <= 6"},
            heroes},
        {{"star-forest-heroes", "every generated hero up to 8 vertices has a star-forest backedge ordering"},
            star_forests},
        {{"tp-matching", "the paired ordering of TP(n) has backedge maximum degree <= 1 for n = 2..12"}, tp_matching},
        {{"critical-small", "the only 1-critical tournament up to 7 vertices is TT1 and the only 2-critical one is C3"},
            critical},
        {{"digraph-ramsey-sandwich",
             "chi(backedge)/R(omega+1, alpha+1) <= dichromatic <= chi(backedge) on 500 random digraphs with alpha <= 2"},
            ramsey_sandwich},
        {{"transitive-footprint", "the largest transitive subtournament has at least n/dichromatic vertices, n <= 7"},
            transitive_footprint},
        {{"substitution-colouring",
             "palette-reuse colourings of 200 random expressions are valid and use at most 9^omega colours"},
            substitution},
    };
    return list;
}

const char * status_name(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::pass:
        return "pass";
    case ClaimStatus::fail:
        return "fail";
    case ClaimStatus::skipped:
        return "skipped";
    }
    return "skipped";
}

} // namespace

bool VerifySuiteResult::passed() const
{
    return std::none_of(claims.begin(), claims.end(), [](const ClaimResult & c) { return c.status == ClaimStatus::fail; });
}

json VerifySuiteResult::to_json(bool with_timings) const
{
    json j;
    j["schema"] = verify_schema_version;
    j["seed"] = seed;
    j["rng"] = rng_id;
    j["claims"] = json::array();
    int pass = 0, fail = 0, skipped = 0;
    for (auto & c : claims) {
        json x{{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"measured", c.measured}};
        if (with_timings)
            x["elapsed_ms"] = c.elapsed_ms;
        j["claims"].push_back(x);
        (c.status == ClaimStatus::pass ? pass : c.status == ClaimStatus::fail ? fail : skipped)++;
    }
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    return j;
}

std::vector<ClaimInfo> verify_claims()
{
    std::vector<ClaimInfo> out;
    for (auto & c : claims())
        out.push_back(c.info);
    return out;
}

VerifySuiteResult verify_paper(const VerifyConfig & config)
{
    if (!config.filter.empty()) {
        auto & list = claims();
        if (std::none_of(list.begin(), list.end(), [&](const Claim & c) { return c.info.id == config.filter; }))
            throw std::invalid_argument("unknown claim id '" + config.filter + "'");
    }
    Context ctx{config};
    VerifySuiteResult result;
    result.seed = config.seed;
    for (auto & claim : claims()) {
        if (!config.filter.empty() && claim.info.id != config.filter)
            continue;
        ClaimResult r{claim.info.id, claim.info.anchor};
        Stopwatch clock;
        try {
            r.status = claim.run(ctx, r.measured);
        }
        catch (const std::exception & e) {
            r.status = ClaimStatus::fail;
            r.measured["error"] = e.what();
        }
        r.elapsed_ms = clock.elapsed_ms();
        result.claims.push_back(std::move(r));
    }
    return result;
}

} // namespace backedge
