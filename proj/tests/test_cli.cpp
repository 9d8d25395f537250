#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(ESZLAB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

fs::path scratch()
{
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("eszlab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content)
{
    fs::path p = scratch() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::set<std::string> keys(const Json& j)
{
    std::set<std::string> out;
    for (const auto& [k, v] : j.items()) out.insert(k);
    return out;
}

const std::string kSets = R"([["-1","0","1"],["-1","0","1"],["-1","0","1"]])";

} // namespace

TEST_CASE("count on the worked instance")
{
    auto sets = write_file("abc.json", kSets);
    auto r = run("count --poly \"x+y+z\" --sets " + sets);
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["M"] == 7);
    CHECK(j["Q"] == 17);
    CHECK(j["R"] == 17);
    CHECK(keys(j) == std::set<std::string>{"M", "Q", "R", "S_hits", "degree", "sizes", "sz_bound", "cs_bound",
                                           "thm11_reference", "thm12_reference", "r_excess", "fiber_histogram",
                                           "engine", "elapsed_ms"});

    auto obj = write_file("abc_obj.json", R"({"A":["-1","0","1"],"B":["-1","0","1"],"C":["-1","0","1"]})");
    auto r2 = run("count --poly \"x+y+z\" --engine triple_loop --sets " + obj);
    REQUIRE(r2.status == 0);
    CHECK(Json::parse(r2.out)["M"] == 7);
}

TEST_CASE("output is byte-identical across runs and --output writes a file")
{
    auto sets = write_file("abc.json", kSets);
    auto a = run("count --poly \"x^2 - y*z + 1\" --sets " + sets);
    auto b = run("count --poly \"x^2 - y*z + 1\" --sets " + sets);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto d1 = run("degeneracy --poly \"z - x^2 - x*y\" --seed 9");
    auto d2 = run("degeneracy --poly \"z - x^2 - x*y\" --seed 9");
    CHECK(d1.out == d2.out);

    auto path = (scratch() / "out.json").string();
    auto w = run("count --poly \"x^2 - y*z + 1\" --sets " + sets + " --output " + path);
    CHECK(w.status == 0);
    CHECK(w.out.empty());
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == a.out);
}

TEST_CASE("exit codes")
{
    CHECK(run("count").status == 1);
    CHECK(run("").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("count --poly \"x+\" --sets " + write_file("abc.json", kSets)).status == 1);
    CHECK(run("count --poly \"x+y+z\" --sets /nonexistent/sets.json").status == 1);
    CHECK(run("count --poly \"x+y+z\" --sets " + write_file("bad.json", "[1,2")).status == 1);
    CHECK(run("count --poly \"x+y+z\" --sets " + write_file("abc.json", kSets) + " --engine warp").status == 1);
    CHECK(run("count --poly \"x+y+z\" --sets " + write_file("abc.json", kSets) + " --bogus").status == 1);
    CHECK(run("degeneracy --poly \"x+y\"").status == 1);
    CHECK(run("--help").status == 0);
}

TEST_CASE("degeneracy verdicts and schema")
{
    auto r = run("degeneracy --poly \"z - x^2 - x*y\"");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "NONDEGENERATE");
    CHECK(keys(j) == std::set<std::string>{"verdict", "g_identically_zero", "remainder_degree", "n_samples",
                                           "max_abs_G", "caveats"});
    auto s = run("degeneracy --poly \"x+y+z\" --strict");
    CHECK(s.status == 0);
    CHECK(Json::parse(s.out)["verdict"] == "DEGENERATE");
    CHECK(Json::parse(s.out)["remainder_degree"] == -1);
}

TEST_CASE("curve commands")
{
    auto g = run("gamma --poly \"x+y+z\" --y0 0 --y1 1");
    REQUIRE(g.status == 0);
    Json j = Json::parse(g.out);
    CHECK(j["defining"] == "z - z' - 1");
    CHECK(keys(j) == std::set<std::string>{"vars", "defining", "degree", "flags"});

    auto d = run("dual --poly \"z - x*y\" --z0 1 --z1 2");
    REQUIRE(d.status == 0);
    CHECK(Json::parse(d.out)["defining"] == "y - 1/2*y'");

    auto p = run("popular --poly \"z - x*y\" --sets " + write_file("abc.json", kSets));
    REQUIRE(p.status == 0);
    Json pj = Json::parse(p.out);
    CHECK(pj["curves"] == 2);
    CHECK(pj["exceptional_pairs"].size() == 4);
    CHECK(pj["exceptional_set_y"]["values"] == Json::array({"0"}));
}

TEST_CASE("incidence command")
{
    auto input = write_file("inc.json", R"({"ambient": [["0","1"], ["0","1"]],
        "curves": [{"poly": "x - y"}, {"poly": "x + y - 1", "multiplicity": 1}]})");
    auto r = run("incidence --input " + input + " --lambda 0 --mu 1");
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["I"] == 4);
    CHECK(j["trivial_bound"] == 8);
    CHECK(keys(j) ==
          std::set<std::string>{"I", "trivial_bound", "thm41_reference", "classes_points", "classes_curves"});
    CHECK(run("incidence").status == 1);
}

TEST_CASE("extremal and sweep commands")
{
    auto form = write_file("form.json", R"({"kind": "SUM", "p": "x", "q": "y", "r": "z"})");
    auto e = run("extremal --input " + form + " --n 4,8,16");
    REQUIRE(e.status == 0);
    CHECK(e.out == "n,M,lower_bound\n4,10,4\n8,36,16\n16,136,64\n");
    CHECK(run("extremal --input " + form + " --n 4,x").status == 1);

    auto s1 = run("sweep --poly \"x+y+z\" --family random-integer --n 4,6 --seed 3");
    auto s2 = run("sweep --poly \"x+y+z\" --family random-integer --n 4,6 --seed 3");
    REQUIRE(s1.status == 0);
    CHECK(s1.out == s2.out);
    CHECK(s1.out.rfind("n,M,Q,R,sz_bound,cs_bound,thm12_reference,engine,elapsed_ms\n", 0) == 0);
}

TEST_CASE("application commands")
{
    auto c = run("collinear --cubic=-2,-1,0,1,2");
    REQUIRE(c.status == 0);
    Json j = Json::parse(c.out);
    CHECK(j["triples_ordered"] == 12);
    CHECK(keys(j) == std::set<std::string>{"triples_ordered", "quadruples_ordered", "directions"});
    CHECK(Json::parse(run("collinear --parabola 0,1,2,3,4 --engine brute_force").out)["triples_ordered"] == 0);

    auto pts = write_file("pts.json", R"([["0","0"],["1","0"],["5","0"],["-2","0"]])");
    auto q = Json::parse(run("collinear --input " + pts).out);
    CHECK(q["quadruples_ordered"] == 24);
    CHECK(Json::parse(run("directions --parabola 0,1,2,3,4").out)["directions"] == 7);

    auto dp = Json::parse(run("distance-poly --p1 0,0 --p2 1,0 --p3 2,0").out);
    CHECK(dp["poly"] == "a - 2*b + c - 2");
    CHECK(dp["collinear"] == true);

    auto cl = run("cantilever --p1 1 --p3 2 --q 1/2 --steps 6");
    REQUIRE(cl.status == 0);
    Json cj = Json::parse(cl.out);
    CHECK(cj["points"].size() == 9);
    CHECK(cj["triples"].size() == 6);
    CHECK(run("cantilever --p1 1 --p3 2 --q=-3").status == 1);
}
