#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hh"

#include <backedge/codec.hh>
#include <backedge/construct.hh>
#include <backedge/canon.hh>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

using namespace backedge;

namespace {

struct Run
{
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string & text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

struct TempDir
{
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / "backedge_cli_test")
    {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string operator/(const std::string & name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("build")
{
    TempDir dir;
    auto s3 = run({"build", "S(3)", "-o", dir / "s3.trn"});
    CHECK(s3.code == 0);
    CHECK(s3.out == "n=7 arcs=21\n");
    CHECK(parse_trn(read_file(dir / "s3.trn")) == build(expr::s(3)));

    CHECK(run({"build", "TT(5)"}).out == "n=5 arcs=10\n");
    CHECK(run({"build", "Rot(7;1,2,4)", "-o", dir / "p7.trn"}).code == 0);
    CHECK(parse_trn(read_file(dir / "p7.trn")) == build(expr::rotational(7, {1, 2, 4})));

    auto bad = run({"build", "Delta(1,2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("position") != std::string::npos);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("invariant")
{
    TempDir dir;
    run({"build", "S(3)", "-o", dir / "s3.trn"});
    run({"build", "S(4)", "-o", dir / "s4.trn"});
    run({"build", "Rot(7;1,2,4)", "-o", dir / "p7.trn"});

    auto omega = run({"invariant", "omega", dir / "s3.trn"});
    CHECK(omega.code == 0);
    CHECK(lines(omega.out)[0] == "2");
    CHECK(lines(run({"invariant", "dom", dir / "p7.trn"}).out)[0] == "3");
    CHECK(lines(run({"invariant", "dichromatic", dir / "s4.trn"}).out)[0] == "4");
    CHECK(lines(run({"invariant", "trans", dir / "p7.trn"}).out)[0] == "3");
    CHECK(lines(run({"invariant", "alpha", dir / "p7.trn"}).out)[0] == "1");

    auto j = nlohmann::json::parse(run({"invariant", "omega", dir / "s4.trn", "--json"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["value"] == 3);
    CHECK(j["status"] == "exact");
    CHECK(j["certificate"]["type"] == "ordering");
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(run({"invariant", "omega", dir / "s4.trn", "--json", "--timings"}).out)
              .contains("elapsed_ms"));

    auto again = run({"invariant", "omega", dir / "s4.trn", "--json"});
    CHECK(again.out == run({"invariant", "omega", dir / "s4.trn", "--json"}).out);

    write_file(dir / "d.dgr", "4\n0100\n0010\n1000\n0000\n");
    CHECK(lines(run({"invariant", "alpha", dir / "d.dgr"}).out)[0] == "2");
    CHECK(lines(run({"invariant", "dichromatic", dir / "d.dgr"}).out)[0] == "2");
    CHECK(run({"invariant", "omega", dir / "d.dgr"}).code == 1);
    CHECK(run({"invariant", "omega", dir / "missing.trn"}).code == 1);
    CHECK(run({"invariant", "girth", dir / "s3.trn"}).code == 1);

    write_file(dir / "broken.trn", "3\n1x1\n");
    CHECK(run({"invariant", "omega", dir / "broken.trn"}).code == 1);
}

TEST_CASE("invariant time limits")
{
    TempDir dir;
    run({"build", "STilde(4)", "-o", dir / "big.trn"});
    auto r = run({"invariant", "omega", dir / "big.trn", "--time-limit", "0.001"});
    CHECK((r.code == 0 || r.code == 2));
    CHECK((r.code == 2) == (r.out.find("bounds") != std::string::npos));

    setenv("BACKEDGE_TIME_LIMIT", "soon", 1);
    CHECK(run({"invariant", "omega", dir / "big.trn"}).code == 1);
    unsetenv("BACKEDGE_TIME_LIMIT");
}

TEST_CASE("order")
{
    TempDir dir;
    run({"build", "C3", "-o", dir / "c3.trn"});
    run({"build", "TP(6)", "-o", dir / "tp6.trn"});
    run({"build", "TT(4)", "-o", dir / "tt4.trn"});
    run({"build", "S(3)", "-o", dir / "s3.trn"});
    run({"build", "Delta(1,3,C3)", "-o", dir / "d.trn"});

    auto c3 = lines(run({"order", dir / "c3.trn", "--goal", "omega"}).out);
    CHECK(std::find(c3.begin(), c3.end(), "omega 2") != c3.end());

    auto tp = run({"order", dir / "tp6.trn", "--goal", "matching", "--emit-dot", dir / "tp6.dot"});
    CHECK(tp.code == 0);
    auto tpl = lines(tp.out);
    CHECK((std::find(tpl.begin(), tpl.end(), "max_degree 1") != tpl.end()
        || std::find(tpl.begin(), tpl.end(), "max_degree 0") != tpl.end()));
    CHECK(read_file(dir / "tp6.dot").find("graph") != std::string::npos);

    auto tt = lines(run({"order", dir / "tt4.trn", "--goal", "forest"}).out);
    CHECK(tt[0] == "ordering 0 1 2 3");
    CHECK(tt[1] == "backedges 0");

    CHECK(run({"order", dir / "s3.trn", "--goal", "star-forest"}).out == "NONE\n");
    auto star = lines(run({"order", dir / "d.trn", "--goal", "star-forest"}).out);
    CHECK(star[1] == "backedges 4");
    auto chi = lines(run({"order", dir / "s3.trn", "--goal", "chromatic"}).out);
    CHECK(std::find(chi.begin(), chi.end(), "chi 3") != chi.end());
    auto bst = lines(run({"order", dir / "c3.trn", "--goal", "bst"}).out);
    CHECK(bst[0] == "ordering 2 0 1");
    CHECK(run({"order", dir / "c3.trn", "--goal", "nonsense"}).code == 1);
}

TEST_CASE("search")
{
    TempDir dir;
    auto en = run({"search", "enumerate", "5"});
    CHECK(en.code == 0);
    CHECK(lines(en.out).size() == 12);
    CHECK(run({"search", "enumerate", "10"}).code == 1);

    auto crit = lines(run({"search", "critical", "2", "7"}).out);
    REQUIRE(crit.size() == 2);
    CHECK(crit[0].rfind(code_hex(canonical_code(build(expr::c3()))) + " ", 0) == 0);
    CHECK(crit[1] == "found 1");

    auto scan = lines(run({"search", "scan", "dom<=omega && omega<=chi", "6"}).out);
    CHECK(scan[0] == "scanned 76");
    CHECK(scan[2] == "violations 0");
    CHECK(run({"search", "scan", "dom <=", "4"}).code == 1);

    CHECK(run({"search", "scan", "omega <= chi", "6", "--csv", dir / "full.csv"}).code == 0);
    auto partial = run({"search", "scan", "omega <= chi", "6", "--csv", dir / "part.csv", "--resume",
        dir / "ckpt.json", "--budget", "30"});
    CHECK(partial.code == 2);
    CHECK(partial.out.find("partial") != std::string::npos);
    auto rest = run({"search", "scan", "omega <= chi", "6", "--csv", dir / "part.csv", "--resume", dir / "ckpt.json"});
    CHECK(rest.code == 0);
    CHECK(read_file(dir / "part.csv") == read_file(dir / "full.csv"));

    auto probe = run({"search", "bst-probe", "4", "--samples", "5", "--seed", "3"});
    CHECK(lines(probe.out).size() == 5);
    CHECK(probe.out == run({"search", "bst-probe", "4", "--samples", "5", "--seed", "3"}).out);
}

TEST_CASE("verify-paper")
{
    auto one = run({"verify-paper", "--filter", "tp-matching"});
    CHECK(one.code == 0);
    CHECK(lines(one.out).size() == 1);
    CHECK(one.out.rfind("pass  tp-matching", 0) == 0);
    CHECK(run({"verify-paper", "--filter", "no-such-claim"}).code == 1);

    auto listed = lines(run({"verify-paper", "--list"}).out);
    CHECK(listed.size() == 15);

    auto j = nlohmann::json::parse(run({"verify-paper", "--filter", "critical-small", "--json"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["rng"] == "mt19937_64/v1");
    REQUIRE(j["claims"].size() == 1);
    CHECK(j["claims"][0]["status"] == "pass");
    CHECK(j["claims"][0]["anchor"].is_string());
    CHECK_FALSE(j["claims"][0].contains("elapsed_ms"));
    CHECK(j["summary"]["pass"] == 1);
}
