#include "eszlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "eszlab/poly_parse.hpp"

namespace eszlab {

namespace {

GaussRat literal(const Json& j)
{
    if (!j.is_string()) throw InputError("expected a number literal as a JSON string, got " + j.dump());
    return GaussRat::parse(j.get<std::string>());
}

Json optional_number(const std::optional<std::uint64_t>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json point_json(const GaussRat& u, const GaussRat& v)
{
    return Json::array({u.to_string(), v.to_string()});
}

const char* form_part_name(FormKind kind, std::size_t i)
{
    static const char* sum[] = {"p", "q", "r"};
    static const char* other[] = {"g", "h", "k"};
    return kind == FormKind::sum ? sum[i] : other[i];
}

} // namespace

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

GridSet grid_from_json(const Json& j)
{
    if (!j.is_array()) throw InputError("a set must be a JSON array of number strings");
    std::vector<GaussRat> values;
    for (const auto& v : j) values.push_back(literal(v));
    return GridSet(std::move(values));
}

Json grid_to_json(const GridSet& g)
{
    Json out = Json::array();
    for (const auto& v : g) out.push_back(v.to_string());
    return out;
}

std::vector<PlanePoint> points_from_json(const Json& j)
{
    if (!j.is_array()) throw InputError("a point set must be a JSON array of [x, y] pairs");
    std::vector<PlanePoint> pts;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw InputError("each point must be a pair [x, y], got " + p.dump());
        pts.push_back({literal(p[0]), literal(p[1])});
    }
    return pts;
}

Json to_json(const CountReport& r)
{
    Json j;
    j["M"] = r.M();
    j["Q"] = optional_number(r.Q());
    j["R"] = optional_number(r.R());
    j["S_hits"] = optional_number(r.S_hits());
    j["degree"] = r.degree();
    j["sizes"] = r.sizes();
    j["sz_bound"] = r.sz_bound();
    j["cs_bound"] = r.cs_bound() ? Json(*r.cs_bound()) : Json(nullptr);
    j["thm11_reference"] = r.thm11_reference();
    j["thm12_reference"] = r.thm12_reference();
    j["r_excess"] = r.r_excess() ? Json(*r.r_excess()) : Json(nullptr);
    if (r.stats()) {
        Json hist = Json::object();
        for (const auto& [k, count] : r.stats()->fiber_histogram) hist[std::to_string(k)] = count;
        j["fiber_histogram"] = hist;
    } else {
        j["fiber_histogram"] = nullptr;
    }
    j["engine"] = to_string(r.engine());
    j["elapsed_ms"] = r.elapsed_ms();
    return j;
}

Json to_json(const PlaneCurve& c)
{
    Json j;
    j["vars"] = c.vars();
    j["defining"] = c.defining().to_string();
    j["degree"] = c.degree();
    j["flags"] = {{"is_empty", c.flags().is_empty},
                  {"is_full_plane", c.flags().is_full_plane},
                  {"contains_axis_parallel_line", c.flags().contains_axis_parallel_line}};
    return j;
}

Json to_json(const PopularReport& r)
{
    Json comps = Json::array();
    for (const auto& c : r.components)
        comps.push_back({{"defining", c.defining.to_string()}, {"multiplicity", c.multiplicity}, {"popular", c.popular}});
    return {{"threshold", r.threshold}, {"components", comps}};
}

Json to_json(const BezoutResult& r)
{
    Json j;
    j["common_component"] = r.common_component;
    if (r.points) {
        Json pts = Json::array();
        for (const auto& [u, v] : *r.points) pts.push_back(point_json(u, v));
        j["intersection_count"] = r.points->size();
        j["points"] = pts;
    } else {
        j["intersection_count"] = "infinite";
        j["points"] = nullptr;
    }
    return j;
}

Json to_json(const ExceptionalSet& s)
{
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(v.to_string());
    Json j;
    j["values"] = values;
    j["residual"] = s.residual ? Json(s.residual->to_string()) : Json(nullptr);
    j["residual_reason"] = s.residual ? Json(s.residual_reason) : Json(nullptr);
    return j;
}

Json to_json(const IncidenceReport& r)
{
    Json j;
    j["I"] = r.I;
    j["trivial_bound"] = r.trivial_bound;
    j["thm41_reference"] = r.thm41_reference;
    j["classes_points"] = r.classes_points ? Json(*r.classes_points) : Json(nullptr);
    j["classes_curves"] = r.classes_curves ? Json(*r.classes_curves) : Json(nullptr);
    return j;
}

Json to_json(const DegeneracyVerdict& v)
{
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["g_identically_zero"] = v.g_identically_zero;
    j["remainder_degree"] = v.remainder ? Json(v.remainder->degree()) : Json(nullptr);
    j["n_samples"] = v.n_samples;
    j["max_abs_G"] = v.max_abs_G;
    j["caveats"] = v.caveats;
    return j;
}

Json to_json(const SpecialForm& f)
{
    Json j;
    j["kind"] = to_string(f.kind());
    for (std::size_t i = 0; i < 3; ++i) j[form_part_name(f.kind(), i)] = f.parts()[i].to_string();
    return j;
}

SpecialForm form_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("a form must be a JSON object with a string 'kind'");
    FormKind kind = form_kind_from_string(j["kind"].get<std::string>());
    std::array<MPoly, 3> parts;
    for (std::size_t i = 0; i < 3; ++i) {
        const char* name = form_part_name(kind, i);
        if (!j.contains(name) || !j[name].is_string())
            throw InputError(std::string("form is missing the polynomial string '") + name + "'");
        parts[i] = parse_poly(j[name].get<std::string>());
    }
    return SpecialForm(kind, parts);
}

Json to_json(const Census& c)
{
    return {{"triples_ordered", c.triples_ordered},
            {"quadruples_ordered", c.quadruples_ordered},
            {"directions", c.directions}};
}

Json to_json(const Cantilever& c)
{
    Json pts = Json::array();
    for (const auto& p : c.points)
        pts.push_back({{"role", p.role},
                       {"label", p.label.to_string()},
                       {"parameter", p.parameter.to_string()},
                       {"point", point_json(p.point.x, p.point.y)},
                       {"step", p.step}});
    Json triples = Json::array();
    for (const auto& t : c.triples) triples.push_back(t);
    return {{"points", pts}, {"triples", triples}};
}

} // namespace eszlab
