#include <cstdio>
#include <fstream>
#include <iostream>
#include <omp.h>

#include "CLI11.hpp"

#include "eszlab/applications.hpp"
#include "eszlab/constructions.hpp"
#include "eszlab/counting.hpp"
#include "eszlab/curves.hpp"
#include "eszlab/degeneracy.hpp"
#include "eszlab/errors.hpp"
#include "eszlab/incidence.hpp"
#include "eszlab/json_io.hpp"
#include "eszlab/poly_parse.hpp"

using namespace eszlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitInconclusive = 3;

struct Flags {
    std::string poly;
    std::string vars = "x,y,z";
    std::string sets;
    std::string input;
    std::string output = "-";
    std::uint64_t seed = 0xE5CAB0;
    std::size_t samples = 32;
    double tol = 1e-12;
    int primes = 3;
    std::string engine = "pair_loop";
    std::string census = "slopes";
    int threads = 0;
    bool strict = false;
    bool timing = false;
    std::string y0, y1, z0, z1;
    std::string n_list;
    std::string family = "extremal";
    long long range = 0;
    std::string cubic, parabola;
    std::string p1, p2, p3, q;
    int steps = 6;
    long long lambda = -1, mu = 1, delta = -1;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Missing required flag; reported with the subcommand's usage text.
class UsageError : public InputError {
public:
    using InputError::InputError;
};

void require(const std::string& value, const char* flag, const std::string& command)
{
    if (value.empty()) throw UsageError("'" + command + "' needs " + flag);
}

void emit(const Flags& f, const std::string& text)
{
    if (f.output == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(f.output, std::ios::binary);
    if (!out) throw InputError("cannot write '" + f.output + "'");
    out << text;
}

void emit_json(const Flags& f, const Json& j)
{
    emit(f, j.dump(2) + "\n");
}

MPoly poly3(const Flags& f)
{
    auto vars = split(f.vars, ',');
    if (vars.size() != 3) throw InputError("--vars needs three comma-separated names");
    return parse_poly(f.poly, vars);
}

CountOptions count_options(const Flags& f)
{
    CountOptions o;
    o.engine = engine_from_string(f.engine);
    o.primes = f.primes;
    o.seed = f.seed;
    o.threads = f.threads;
    o.timing = f.timing;
    return o;
}

std::array<GridSet, 3> read_sets(const std::string& path)
{
    Json j = read_json_file(path);
    if (j.is_array() && j.size() == 3) return {grid_from_json(j[0]), grid_from_json(j[1]), grid_from_json(j[2])};
    if (j.is_object() && j.contains("A") && j.contains("B") && j.contains("C"))
        return {grid_from_json(j["A"]), grid_from_json(j["B"]), grid_from_json(j["C"])};
    throw InputError("a sets file holds [A, B, C] or {\"A\": ..., \"B\": ..., \"C\": ...}");
}

std::vector<std::size_t> parse_n_list(const std::string& text)
{
    std::vector<std::size_t> out;
    for (const auto& item : split(text, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size() || v < 1) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw InputError("--n expects positive integers separated by commas, got '" + item + "'");
        }
    }
    return out;
}

std::vector<GaussRat> parse_values(const std::string& text)
{
    std::vector<GaussRat> out;
    for (const auto& item : split(text, ',')) out.push_back(GaussRat::parse(item));
    return out;
}

PlanePoint parse_point(const std::string& text, const char* flag)
{
    auto parts = split(text, ',');
    if (parts.size() != 2) throw InputError(std::string(flag) + " expects 'x,y'");
    return {GaussRat::parse(parts[0]), GaussRat::parse(parts[1])};
}

CurvePointSet read_point_set(const Flags& f, const std::string& command)
{
    if (!f.cubic.empty()) return CurvePointSet::on_cubic(parse_values(f.cubic));
    if (!f.parabola.empty()) return CurvePointSet::on_parabola(parse_values(f.parabola));
    require(f.input, "--input", command);
    return CurvePointSet(points_from_json(read_json_file(f.input)));
}

int run_count(const Flags& f)
{
    require(f.poly, "--poly", "count");
    require(f.sets, "--sets", "count");
    auto s = read_sets(f.sets);
    emit_json(f, to_json(count_zeros(poly3(f), s[0], s[1], s[2], count_options(f))));
    return kExitOk;
}

int run_quadruples(const Flags& f)
{
    require(f.poly, "--poly", "quadruples");
    require(f.sets, "--sets", "quadruples");
    auto s = read_sets(f.sets);
    MPoly F = poly3(f);
    auto opts = count_options(f);
    auto report = count_zeros(F, s[0], s[1], s[2], opts);
    auto cs = cs_chain_check(report, s[0].size());
    Json j = to_json(report);
    j["cs_holds"] = cs.holds;
    j["cs_slack"] = static_cast<double>(cs.slack);
    Json violations = Json::array();
    for (const auto& v : witness_fiber_check(F, s[0], s[1], s[2], F.degree(), opts)) {
        violations.push_back({{"b", v.b.to_string()},
                              {"b_prime", v.b2.to_string()},
                              {"c", v.c.to_string()},
                              {"c_prime", v.c2.to_string()},
                              {"witnesses", v.witnesses},
                              {"all_of_A", v.all_of_A},
                              {"first_identically_zero", v.first_identically_zero},
                              {"second_identically_zero", v.second_identically_zero}});
    }
    j["fiber_violations"] = violations;
    emit_json(f, j);
    return kExitOk;
}

int run_degeneracy(const Flags& f)
{
    require(f.poly, "--poly", "degeneracy");
    auto v = degeneracy_test(poly3(f), {f.samples, f.seed, f.tol});
    emit_json(f, to_json(v));
    return f.strict && v.verdict == Verdict::inconclusive ? kExitInconclusive : kExitOk;
}

int run_gamma(const Flags& f, bool dual)
{
    const std::string command = dual ? "dual" : "gamma";
    const std::string& a = dual ? f.z0 : f.y0;
    const std::string& b = dual ? f.z1 : f.y1;
    require(f.poly, "--poly", command);
    require(a, dual ? "--z0" : "--y0", command);
    require(b, dual ? "--z1" : "--y1", command);
    MPoly F = poly3(f);
    GaussRat u = GaussRat::parse(a), v = GaussRat::parse(b);
    emit_json(f, to_json(dual ? dual_curve(F, u, v) : gamma_curve(F, u, v)));
    return kExitOk;
}

int run_popular(const Flags& f)
{
    require(f.poly, "--poly", "popular");
    require(f.sets, "--sets", "popular");
    MPoly F = poly3(f);
    auto s = read_sets(f.sets);
    auto family = gamma_family(F, s[1]);
    Json j;
    j["curves"] = family.curves.size();
    Json exceptional = Json::array();
    for (const auto& e : family.exceptional)
        exceptional.push_back({{"y", e.first.to_string()}, {"y_prime", e.second.to_string()}, {"reason", to_string(e.reason)}});
    j["exceptional_pairs"] = exceptional;
    j["exceptional_set_y"] = to_json(exceptional_set(F, Axis::y));
    j["popular"] = to_json(popular_components(family.curves, F.degree()));
    emit_json(f, j);
    return kExitOk;
}

int run_incidence(const Flags& f)
{
    require(f.input, "--input", "incidence");
    Json j = read_json_file(f.input);
    if (!j.is_object() || !j.contains("ambient") || !j.contains("curves"))
        throw InputError("incidence input needs 'ambient' and 'curves'");
    if (!j["ambient"].is_array() || j["ambient"].size() != 2) throw InputError("'ambient' must hold two sets");
    std::array<GridSet, 2> ambient{grid_from_json(j["ambient"][0]), grid_from_json(j["ambient"][1])};
    std::array<std::string, 2> vars{"x", "y"};
    if (j.contains("vars")) {
        auto v = j["vars"].get<std::vector<std::string>>();
        if (v.size() != 2) throw InputError("'vars' must name two variables");
        vars = {v[0], v[1]};
    }
    PointSet2 pts = PointSet2::full(ambient[0], ambient[1]);
    if (j.contains("points")) {
        std::vector<Point2> members;
        for (const auto& p : points_from_json(j["points"])) members.emplace_back(p.x, p.y);
        pts = PointSet2(ambient, std::move(members));
    }
    if (!j["curves"].is_array()) throw InputError("'curves' must be an array");
    std::vector<CurveEntry> entries;
    for (const auto& c : j["curves"]) {
        if (!c.is_object() || !c.contains("poly") || !c["poly"].is_string())
            throw InputError("each curve needs a polynomial string 'poly'");
        long long mult = c.value("multiplicity", 1LL);
        if (mult < 1) throw InputError("curve multiplicities must be positive");
        entries.push_back({PlaneCurve(vars, parse_poly(c["poly"].get<std::string>(), {vars[0], vars[1]})),
                           static_cast<std::size_t>(mult)});
    }
    CurveMultiset curves(std::move(entries));
    int delta = f.delta >= 0 ? static_cast<int>(f.delta) : curves.max_degree();
    if (f.mu < 0) throw InputError("--mu must be non-negative");
    std::uint64_t lambda = f.lambda >= 0 ? static_cast<std::uint64_t>(f.lambda) : curves.total();
    emit_json(f, to_json(incidence_bound_report(pts, curves, delta, lambda, static_cast<std::uint64_t>(f.mu))));
    return kExitOk;
}

int run_extremal(const Flags& f)
{
    require(f.input, "--input", "extremal");
    require(f.n_list, "--n", "extremal");
    auto form = form_from_json(read_json_file(f.input));
    emit(f, growth_csv(verify_quadratic_growth(form, parse_n_list(f.n_list), count_options(f))));
    return kExitOk;
}

int run_sweep(const Flags& f)
{
    require(f.poly, "--poly", "sweep");
    require(f.n_list, "--n", "sweep");
    SweepConfig config;
    config.family = sweep_family_from_string(f.family);
    config.n_list = parse_n_list(f.n_list);
    config.seed = f.seed;
    config.random_range = f.range;
    config.count = count_options(f);
    auto result = scaling_sweep(poly3(f), config);
    emit(f, sweep_csv(result));
    if (result.fitted_exponent) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", *result.fitted_exponent);
        std::cerr << "fitted exponent: " << buf << "\n";
    } else {
        std::cerr << "fitted exponent: unavailable (fewer than three rows with M > 0)\n";
    }
    return kExitOk;
}

CensusEngine census_engine(const std::string& name)
{
    if (name == "brute_force") return CensusEngine::brute_force;
    if (name == "slopes") return CensusEngine::slopes;
    throw InputError("unknown census engine '" + name + "' (expected brute_force or slopes)");
}

int run_collinear(const Flags& f)
{
    auto s = read_point_set(f, "collinear");
    auto engine = census_engine(f.census);
    Census c;
    c.triples_ordered = collinear_triples(s, s, s, engine);
    c.quadruples_ordered = collinear_quadruples(s, engine);
    c.directions = s.size() >= 2 ? directions_count(s) : 0;
    emit_json(f, to_json(c));
    return kExitOk;
}

int run_directions(const Flags& f)
{
    auto s = read_point_set(f, "directions");
    emit_json(f, Json{{"points", s.size()}, {"directions", directions_count(s)}});
    return kExitOk;
}

int run_distance_poly(const Flags& f)
{
    require(f.p1, "--p1", "distance-poly");
    require(f.p2, "--p2", "distance-poly");
    require(f.p3, "--p3", "distance-poly");
    auto a = parse_point(f.p1, "--p1"), b = parse_point(f.p2, "--p2"), c = parse_point(f.p3, "--p3");
    MPoly F = distance_triple_poly(a, b, c);
    emit_json(f, Json{{"vars", F.vars()},
                      {"poly", F.to_string()},
                      {"degree", F.degree()},
                      {"collinear", collinearity_det(a, b, c).is_zero()}});
    return kExitOk;
}

int run_cantilever(const Flags& f)
{
    require(f.p1, "--p1", "cantilever");
    require(f.p3, "--p3", "cantilever");
    require(f.q, "--q", "cantilever");
    auto c = cantilever_build(GaussRat::parse(f.p1), GaussRat::parse(f.p3), GaussRat::parse(f.q), f.steps);
    emit_json(f, to_json(c));
    return kExitOk;
}

void add_output(CLI::App* sub, Flags& f)
{
    sub->add_option("--output,-o", f.output, "Output file, '-' for standard output")->capture_default_str();
    sub->add_option("--threads", f.threads, "Cap on worker threads (0 keeps the default)");
}

void add_count_flags(CLI::App* sub, Flags& f)
{
    sub->add_option("--poly", f.poly, "Polynomial in three variables");
    sub->add_option("--vars", f.vars, "Variable names in role order")->capture_default_str();
    sub->add_option("--sets", f.sets, "JSON file with the sets A, B, C");
    sub->add_option("--engine", f.engine, "triple_loop or pair_loop")->capture_default_str();
    sub->add_option("--primes", f.primes, "Random primes for modular pruning (0 disables)")->capture_default_str();
    sub->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    sub->add_flag("--timing", f.timing, "Report wall time");
    add_output(sub, f);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact experiments around the Elekes-Szabo problem"};
    app.require_subcommand(1);
    Flags f;

    auto* count = app.add_subcommand("count", "Count zeros of F on A x B x C");
    add_count_flags(count, f);

    auto* quad = app.add_subcommand("quadruples", "Quadruple and quintuple statistics with fiber checks");
    add_count_flags(quad, f);

    auto* deg = app.add_subcommand("degeneracy", "Decide whether F has the special additive form");
    deg->add_option("--poly", f.poly, "Polynomial in three variables");
    deg->add_option("--vars", f.vars, "Variable names in role order")->capture_default_str();
    deg->add_option("--samples", f.samples, "Random draws on V")->capture_default_str();
    deg->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    deg->add_option("--tol", f.tol, "Numeric tolerance")->capture_default_str();
    deg->add_flag("--strict", f.strict, "Exit with status 3 on an inconclusive verdict");
    add_output(deg, f);

    auto* gamma = app.add_subcommand("gamma", "Curve of (z, z') pairs sharing an x with fixed y, y'");
    gamma->add_option("--poly", f.poly, "Polynomial in three variables");
    gamma->add_option("--vars", f.vars, "Variable names in role order")->capture_default_str();
    gamma->add_option("--y0", f.y0, "First y value");
    gamma->add_option("--y1", f.y1, "Second y value");
    add_output(gamma, f);

    auto* dual = app.add_subcommand("dual", "Curve of (y, y') pairs sharing an x with fixed z, z'");
    dual->add_option("--poly", f.poly, "Polynomial in three variables");
    dual->add_option("--vars", f.vars, "Variable names in role order")->capture_default_str();
    dual->add_option("--z0", f.z0, "First z value");
    dual->add_option("--z1", f.z1, "Second z value");
    add_output(dual, f);

    auto* popular = app.add_subcommand("popular", "Gamma family over B and its popular components");
    popular->add_option("--poly", f.poly, "Polynomial in three variables");
    popular->add_option("--vars", f.vars, "Variable names in role order")->capture_default_str();
    popular->add_option("--sets", f.sets, "JSON file with the sets A, B, C (B is used)");
    add_output(popular, f);

    auto* incidence = app.add_subcommand("incidence", "Incidences between grid points and a curve multiset");
    incidence->add_option("--input", f.input, "JSON file {ambient, points?, curves, vars?}");
    incidence->add_option("--delta", f.delta, "Degree bound (default: largest curve degree)");
    incidence->add_option("--lambda", f.lambda, "Conflict degree bound (default: number of curves)");
    incidence->add_option("--mu", f.mu, "Shared point bound")->capture_default_str();
    add_output(incidence, f);

    auto* extremal = app.add_subcommand("extremal", "Quadratic growth table for a special form");
    extremal->add_option("--input", f.input, "JSON form file {kind, p|g, q|h, r|k}");
    extremal->add_option("--n", f.n_list, "Comma-separated set sizes");
    extremal->add_option("--engine", f.engine, "triple_loop or pair_loop")->capture_default_str();
    extremal->add_option("--primes", f.primes, "Random primes for modular pruning")->capture_default_str();
    extremal->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    add_output(extremal, f);

    auto* sweep = app.add_subcommand("sweep", "Zero counts over growing set families, as CSV");
    add_count_flags(sweep, f);
    sweep->add_option("--family", f.family, "extremal, random-integer or arithmetic-progression")->capture_default_str();
    sweep->add_option("--n", f.n_list, "Comma-separated set sizes");
    sweep->add_option("--range", f.range, "Half-width of random-integer ranges (0 means 2n)");

    auto* collinear = app.add_subcommand("collinear", "Ordered collinear triples and quadruples");
    collinear->add_option("--input", f.input, "JSON file with [x, y] points");
    collinear->add_option("--cubic", f.cubic, "Parameters t of points (t, t^3)");
    collinear->add_option("--parabola", f.parabola, "Parameters t of points (t, t^2)");
    collinear->add_option("--engine", f.census, "brute_force or slopes")->capture_default_str();
    add_output(collinear, f);

    auto* directions = app.add_subcommand("directions", "Distinct directions spanned by a point set");
    directions->add_option("--input", f.input, "JSON file with [x, y] points");
    directions->add_option("--cubic", f.cubic, "Parameters t of points (t, t^3)");
    directions->add_option("--parabola", f.parabola, "Parameters t of points (t, t^2)");
    add_output(directions, f);

    auto* distance = app.add_subcommand("distance-poly", "Relation between squared distances to three points");
    distance->add_option("--p1", f.p1, "First point 'x,y'");
    distance->add_option("--p2", f.p2, "Second point 'x,y'");
    distance->add_option("--p3", f.p3, "Third point 'x,y'");
    add_output(distance, f);

    auto* cantilever = app.add_subcommand("cantilever", "Chord construction on y = x^3");
    cantilever->add_option("--p1", f.p1, "Parameter of p1");
    cantilever->add_option("--p3", f.p3, "Parameter of p3");
    cantilever->add_option("--q", f.q, "Parameter of q");
    cantilever->add_option("--steps", f.steps, "Number of chord steps")->capture_default_str();
    add_output(cantilever, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (f.threads < 0) {
        std::cerr << "error: --threads must be non-negative\n";
        return kExitInput;
    }
    if (f.threads > 0) omp_set_num_threads(f.threads);

    CLI::App* active = app.get_subcommands().front();
    try {
        const std::string name = active->get_name();
        if (name == "count") return run_count(f);
        if (name == "quadruples") return run_quadruples(f);
        if (name == "degeneracy") return run_degeneracy(f);
        if (name == "gamma") return run_gamma(f, false);
        if (name == "dual") return run_gamma(f, true);
        if (name == "popular") return run_popular(f);
        if (name == "incidence") return run_incidence(f);
        if (name == "extremal") return run_extremal(f);
        if (name == "sweep") return run_sweep(f);
        if (name == "collinear") return run_collinear(f);
        if (name == "directions") return run_directions(f);
        if (name == "distance-poly") return run_distance_poly(f);
        if (name == "cantilever") return run_cantilever(f);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << active->help();
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitInput;
}
