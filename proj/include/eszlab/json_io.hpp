#pragma once

#include <string>

#include "json.hpp"

#include "eszlab/applications.hpp"
#include "eszlab/constructions.hpp"
#include "eszlab/counting.hpp"
#include "eszlab/curves.hpp"
#include "eszlab/degeneracy.hpp"
#include "eszlab/incidence.hpp"

namespace eszlab {

using Json = nlohmann::ordered_json;

// Parses a whole file; InputError on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);

// Array of GaussRat literal strings.
GridSet grid_from_json(const Json& j);
Json grid_to_json(const GridSet& g);

// Array of [x, y] literal pairs.
std::vector<PlanePoint> points_from_json(const Json& j);

Json to_json(const CountReport& r);
Json to_json(const PlaneCurve& c);
Json to_json(const PopularReport& r);
Json to_json(const BezoutResult& r);
Json to_json(const ExceptionalSet& s);
Json to_json(const IncidenceReport& r);
Json to_json(const DegeneracyVerdict& v);
Json to_json(const SpecialForm& f);
Json to_json(const Census& c);
Json to_json(const Cantilever& c);

// {kind, p|g, q|h, r|k} with polynomial strings.
SpecialForm form_from_json(const Json& j);

} // namespace eszlab
