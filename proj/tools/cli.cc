#include "cli.hh"

#include <backedge/backedge.hh>
#include <backedge/canon.hh>
#include <backedge/checkers.hh>
#include <backedge/codec.hh>
#include <backedge/construct.hh>
#include <backedge/graph_invariants.hh>
#include <backedge/invariants.hh>
#include <backedge/scan.hh>
#include <backedge/search.hh>
#include <backedge/structure.hh>
#include <backedge/verify.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace backedge::cli {

namespace {

using nlohmann::json;

/// A certificate that fails its independent check.
struct CertificateFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::optional<std::chrono::milliseconds> time_limit(double seconds)
{
    if (seconds <= 0) {
        const char * env = std::getenv("BACKEDGE_TIME_LIMIT");
        if (!env || !*env)
            return std::nullopt;
        char * end = nullptr;
        seconds = std::strtod(env, &end);
        if (end == env || *end || seconds <= 0)
            throw UsageError("BACKEDGE_TIME_LIMIT must be a positive number of seconds");
    }
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

Tournament as_tournament(const std::variant<Tournament, Digraph> & input)
{
    if (auto t = std::get_if<Tournament>(&input))
        return *t;
    try {
        return Tournament::from_digraph(std::get<Digraph>(input));
    }
    catch (const std::invalid_argument &) {
        throw UsageError("this command needs a tournament");
    }
}

Digraph as_digraph(const std::variant<Tournament, Digraph> & input)
{
    return std::visit([](const auto & d) { return static_cast<Digraph>(d); }, input);
}

std::variant<Tournament, Digraph> load(const std::string & path) { return parse_any(read_file(path)); }

std::string join(std::span<const int> xs)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s << (i ? " " : "") << xs[i];
    return s.str();
}

std::string describe(const Certificate & c)
{
    return std::visit(
        [](const auto & x) -> std::string {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, std::monostate>)
                return "none";
            else if constexpr (std::is_same_v<X, CliqueCertificate>)
                return "clique " + join(x.vertices);
            else if constexpr (std::is_same_v<X, ColouringCertificate> || std::is_same_v<X, Dicolouring>)
                return "colour " + join(x.colour);
            else if constexpr (std::is_same_v<X, OrderingCertificate>)
                return "ordering " + join(x.ordering.vertices()) + " ; clique " + join(x.clique);
            else if constexpr (std::is_same_v<X, DominatingCertificate>)
                return "dominating " + join(x.vertices);
            else
                return "transitive " + join(x.vertices);
        },
        c);
}

void recheck(const Digraph & d, const InvariantResult & r)
{
    auto problem = check::certificate(d, r);
    if (!problem.empty())
        throw CertificateFailure(r.invariant + ": " + problem);
}

// ---- build ----

int cmd_build(const std::string & text, const std::string & output, std::ostream & out)
{
    auto t = build(parse_expr(text));
    if (!output.empty())
        write_file(output, serialize_trn(t));
    out << "n=" << t.size() << " arcs=" << t.arc_count() << "\n";
    return ok;
}

// ---- invariant ----

struct InvariantArgs
{
    std::string name;
    std::string file;
    double seconds = 0;
    int threads = 1;
    bool json = false;
    bool timings = false;
};

int cmd_invariant(const InvariantArgs & a, std::ostream & out)
{
    auto input = load(a.file);
    SolverOptions options;
    options.time_limit = time_limit(a.seconds);
    options.threads = a.threads;

    if (a.name == "alpha") {
        auto d = as_digraph(input);
        int alpha = independence_number(d);
        if (a.json)
            out << json{{"schema", result_schema_version}, {"invariant", "alpha"}, {"value", alpha},
                            {"status", "exact"}}
                       .dump(2)
                << "\n";
        else
            out << alpha << "\n";
        return ok;
    }

    InvariantResult r;
    Digraph checked_on;
    if (a.name == "omega") {
        auto t = as_tournament(input);
        r = clique_number(t, options);
        checked_on = t;
    }
    else if (a.name == "trans") {
        auto t = as_tournament(input);
        r = max_transitive(t, options);
        checked_on = t;
    }
    else if (a.name == "dichromatic") {
        checked_on = as_digraph(input);
        r = dichromatic_number(checked_on, options);
    }
    else {
        checked_on = as_digraph(input);
        r = domination_number(checked_on, options);
    }
    recheck(checked_on, r);

    if (a.json)
        out << to_json(r, a.timings).dump(2) << "\n";
    else {
        out << r.value << "\n";
        if (!r.exact())
            out << "bounds " << r.lower << " " << r.upper << "\n";
        out << describe(r.certificate) << "\n";
    }
    return r.exact() ? ok : inexact;
}

// ---- order ----

struct OrderArgs
{
    std::string file;
    std::string goal;
    std::string dot;
    double seconds = 0;
    int threads = 1;
};

void print_ordering(const Tournament & t, const Ordering & ord, std::ostream & out)
{
    auto g = backedge_graph(t, ord).graph;
    out << "ordering " << join(ord.vertices()) << "\n";
    out << "backedges " << g.edge_count() << "\n";
    out << "omega " << (g.size() ? max_clique(g).value : 0) << "\n";
    out << "chi " << (g.size() ? chromatic_number(g).value : 0) << "\n";
    out << "max_degree " << g.max_degree() << "\n";
    out << "components " << check::component_count(g) << "\n";
    out << "forest " << (check::is_forest(g) ? "yes" : "no") << "\n";
}

int cmd_order(const OrderArgs & a, std::ostream & out)
{
    auto t = as_tournament(load(a.file));
    SolverOptions options;
    options.time_limit = time_limit(a.seconds);
    options.threads = a.threads;

    std::optional<Ordering> found;
    bool timed_out = false;
    auto require = [](bool good, const std::string & what) {
        if (!good)
            throw CertificateFailure("ordering fails the " + what + " check");
    };

    if (a.goal == "omega" || a.goal == "chromatic") {
        auto r = a.goal == "omega" ? clique_number(t, options)
                                   : ordering_optimize(t, OrderingObjective::chromatic, options);
        recheck(t, r);
        found = std::get<OrderingCertificate>(r.certificate).ordering;
        timed_out = !r.exact();
    }
    else if (a.goal == "forest" || a.goal == "matching") {
        auto p = a.goal == "forest" ? OrderingPredicate::forest() : OrderingPredicate::max_degree_le(1);
        auto r = ordering_search(t, p, options);
        timed_out = r.outcome == OrderingSearchResult::Outcome::timeout;
        if (r.ordering) {
            auto g = backedge_graph(t, *r.ordering).graph;
            require(a.goal == "forest" ? check::is_forest(g) : g.max_degree() <= 1, a.goal);
            found = r.ordering;
        }
    }
    else if (a.goal == "star-forest") {
        auto h = is_hero(t);
        if (h.hero) {
            auto ord = star_forest_ordering(t, *h.certificate);
            require(check::is_star_forest(backedge_graph(t, ord).graph), "star forest");
            found = ord;
        }
    }
    else {
        std::vector<int> insertion(t.size());
        std::iota(insertion.begin(), insertion.end(), 0);
        auto tree = bst_tree(t, insertion);
        auto ord = in_order(tree);
        require(is_bst_ordering(t, tree, ord), "search tree");
        found = ord;
    }

    if (!found) {
        out << (timed_out ? "TIMEOUT" : "NONE") << "\n";
        return timed_out ? inexact : ok;
    }
    if (timed_out)
        out << "TIMEOUT best so far\n";
    print_ordering(t, *found, out);
    if (!a.dot.empty())
        write_file(a.dot, to_dot(backedge_graph(t, *found).graph, &*found));
    return timed_out ? inexact : ok;
}

// ---- search ----

struct SearchArgs
{
    int n = 0;
    int k = 0;
    int n_min = 1;
    std::string predicate;
    std::string csv;
    std::string resume;
    std::uint64_t seed = 1;
    int samples = 200;
    int threads = 1;
    std::uint64_t budget = 0;
    double seconds = 0;
};

std::unique_ptr<std::ostream> open_csv(const std::string & path, bool append)
{
    auto f = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
    if (!*f)
        throw std::runtime_error("cannot open " + path);
    return f;
}

int cmd_enumerate(const SearchArgs & a, std::ostream & out)
{
    auto all = enumerate_tournaments(a.n);
    std::unique_ptr<std::ostream> csv;
    if (!a.csv.empty()) {
        csv = open_csv(a.csv, false);
        *csv << "canonical_code,n,scores\n";
    }
    for (auto & t : all) {
        auto code = code_hex(canonical_code(t));
        out << code << "\n";
        if (csv) {
            auto s = t.scores();
            *csv << code << "," << a.n << "," << csv_quote(join(s)) << "\n";
        }
    }
    return ok;
}

int cmd_critical(const SearchArgs & a, std::ostream & out)
{
    SolverOptions options;
    options.time_limit = time_limit(a.seconds);
    options.threads = a.threads;
    auto found = find_omega_critical(a.k, a.n_min, a.n, options);
    std::unique_ptr<std::ostream> csv;
    if (!a.csv.empty()) {
        csv = open_csv(a.csv, false);
        *csv << "canonical_code,n,k,omega,vertex_deletions\n";
    }
    for (auto & r : found.reports) {
        if (!verify_criticality_report(r))
            throw CertificateFailure("criticality report does not recompute");
        auto code = code_hex(canonical_code(r.tournament));
        out << code << " n=" << r.tournament.size() << " deletions " << join(r.vertex_deletions) << "\n";
        if (csv)
            *csv << code << "," << r.tournament.size() << "," << r.k << "," << r.omega << ","
                 << csv_quote(join(r.vertex_deletions)) << "\n";
    }
    out << "found " << found.reports.size() << (found.complete ? "" : " (partial)") << "\n";
    return found.complete ? ok : inexact;
}

int cmd_scan(const SearchArgs & a, std::ostream & out)
{
    auto p = Predicate::parse(a.predicate);
    ScanConfig config;
    config.n_min = a.n_min;
    config.n_max = a.n;
    config.threads = a.threads;
    config.solver.time_limit = time_limit(a.seconds);
    if (a.budget > 0)
        config.budget = a.budget;
    config.checkpoint = a.resume;
    bool resuming = !a.resume.empty() && std::filesystem::exists(a.resume);
    std::unique_ptr<std::ostream> csv;
    if (!a.csv.empty())
        csv = open_csv(a.csv, resuming);
    auto report = predicate_scan(p, config, csv.get());
    out << "scanned " << report.scanned << "\n";
    out << "holds " << report.holds << "\n";
    out << "violations " << report.fails << "\n";
    out << "inexact " << report.inexact << "\n";
    if (report.partial)
        out << "partial\n";
    for (auto & code : report.failing_codes)
        out << "failing " << code << "\n";
    return report.partial || report.inexact ? inexact : ok;
}

int cmd_bst_probe(const SearchArgs & a, std::ostream & out)
{
    if (a.csv.empty())
        bst_probe_csv(a.n, a.samples, a.seed, out);
    else
        bst_probe_csv(a.n, a.samples, a.seed, *open_csv(a.csv, false));
    return ok;
}

// ---- verify-paper ----

struct VerifyArgs
{
    std::string filter;
    bool json = false;
    bool timings = false;
    bool list = false;
    std::uint64_t seed = VerifyConfig{}.seed;
    int threads = 1;
};

int cmd_verify(const VerifyArgs & a, std::ostream & out)
{
    if (a.list) {
        for (auto & c : verify_claims())
            out << c.id << "  " << c.anchor << "\n";
        return ok;
    }
    VerifyConfig config;
    config.seed = a.seed;
    config.filter = a.filter;
    config.threads = a.threads;
    VerifySuiteResult result;
    try {
        result = verify_paper(config);
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(e.what());
    }
    if (a.json)
        out << result.to_json(a.timings).dump(2) << "\n";
    else {
        for (auto & c : result.claims) {
            const char * s = c.status == ClaimStatus::pass ? "pass" : c.status == ClaimStatus::fail ? "FAIL" : "skip";
            out << s << "  " << c.id << "  " << c.measured.dump();
            if (a.timings)
                out << "  " << static_cast<long>(c.elapsed_ms) << " ms";
            out << "\n";
        }
    }
    return result.passed() ? ok : verification_failed;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Backedge clique numbers of tournaments"};
    app.name("backedge");
    app.require_subcommand(1);
    int code = ok;

    auto * b = app.add_subcommand("build", "Evaluate a construction expression");
    std::string expr_text, output;
    b->add_option("expr", expr_text, "e.g. S(3), Rot(7;1,2,4), Delta(1,2,C3)")->required();
    b->add_option("-o,--output", output, ".trn file to write");
    b->callback([&] { code = cmd_build(expr_text, output, out); });

    auto * inv = app.add_subcommand("invariant", "Compute one invariant of a .trn or .dgr file");
    InvariantArgs ia;
    inv->add_option("name", ia.name)->required()->check(CLI::IsMember({"omega", "dichromatic", "dom", "trans", "alpha"}));
    inv->add_option("file", ia.file)->required();
    inv->add_option("--time-limit", ia.seconds, "seconds");
    inv->add_option("--threads", ia.threads)->check(CLI::PositiveNumber);
    inv->add_flag("--json", ia.json);
    inv->add_flag("--timings", ia.timings, "include elapsed time in the JSON");
    inv->callback([&] { code = cmd_invariant(ia, out); });

    auto * ord = app.add_subcommand("order", "Find an ordering with a structured backedge graph");
    OrderArgs oa;
    ord->add_option("file", oa.file)->required();
    ord->add_option("--goal", oa.goal)
        ->required()
        ->check(CLI::IsMember({"omega", "chromatic", "forest", "matching", "star-forest", "bst"}));
    ord->add_option("--emit-dot", oa.dot, "write the backedge graph as DOT");
    ord->add_option("--time-limit", oa.seconds, "seconds");
    ord->add_option("--threads", oa.threads)->check(CLI::PositiveNumber);
    ord->callback([&] { code = cmd_order(oa, out); });

    auto * search = app.add_subcommand("search", "Exhaustive searches over small tournaments");
    search->require_subcommand(1);
    SearchArgs sa;
    auto common = [&](CLI::App * c) {
        c->add_option("--csv", sa.csv, "CSV output file");
        c->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);
        c->add_option("--time-limit", sa.seconds, "seconds per solver call");
    };
    auto * en = search->add_subcommand("enumerate", "One canonical code per isomorphism class");
    en->add_option("n", sa.n)->required()->check(CLI::Range(1, 9));
    common(en);
    en->callback([&] { code = cmd_enumerate(sa, out); });
    auto * cr = search->add_subcommand("critical", "Tournaments whose every vertex deletion lowers omega");
    cr->add_option("k", sa.k)->required()->check(CLI::PositiveNumber);
    cr->add_option("nmax", sa.n)->required()->check(CLI::Range(1, 9));
    cr->add_option("--nmin", sa.n_min)->check(CLI::Range(1, 9));
    common(cr);
    cr->callback([&] { code = cmd_critical(sa, out); });
    auto * sc = search->add_subcommand("scan", "Evaluate a predicate on every tournament");
    sc->add_option("predicate", sa.predicate)->required();
    sc->add_option("nmax", sa.n)->required()->check(CLI::Range(1, 9));
    sc->add_option("--nmin", sa.n_min)->check(CLI::Range(1, 9));
    sc->add_option("--resume", sa.resume, "checkpoint file, created or continued");
    sc->add_option("--budget", sa.budget, "stop after this many tournaments");
    common(sc);
    sc->callback([&] { code = cmd_scan(sa, out); });
    auto * bp = search->add_subcommand("bst-probe", "Search-tree orderings against exact omega");
    bp->add_option("n", sa.n)->required()->check(CLI::Range(1, 9));
    bp->add_option("--samples", sa.samples)->check(CLI::NonNegativeNumber);
    bp->add_option("--seed", sa.seed);
    common(bp);
    bp->callback([&] { code = cmd_bst_probe(sa, out); });

    auto * vp = app.add_subcommand("verify-paper", "Run the claim suite");
    VerifyArgs va;
    vp->add_option("--filter", va.filter, "run one claim id");
    vp->add_flag("--json", va.json);
    vp->add_flag("--timings", va.timings, "include elapsed times");
    vp->add_flag("--list", va.list, "print claim ids and anchors");
    vp->add_option("--seed", va.seed);
    vp->add_option("--threads", va.threads)->check(CLI::PositiveNumber);
    vp->callback([&] { code = cmd_verify(va, out); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int status = app.exit(e, out, err);
        return status == 0 ? ok : usage;
    }
    catch (const CertificateFailure & e) {
        err << "internal error: certificate rejected by checker: " << e.what() << "\n";
        return verification_failed;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return code;
}

} // namespace backedge::cli
