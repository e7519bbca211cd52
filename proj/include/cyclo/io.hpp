#pragma once

// JSON forms of the library's data. Big integers travel as decimal strings.
//
//   polynomial  {"vars":["t"],"terms":[{"exp":[-1],"coef":"1"}, ...]}
//   knot        polynomial fields plus "label"
//   diagram     {"label":..., "vertices":[ids],
//                "edges":[{"id","tail","head","winding"}],
//                "legs":[{"id","vertex","sign","edge"}],
//                "twists":{"<edge id>": +-1}}
//   lift system {"p":..., "vertices":[ids],
//                "edges":[{"id","tail","head","winding"}]}
//
// Malformed documents raise ParseError; domain checks (A(1) = +-1 and so
// on) raise ValidationError.

#include <filesystem>

#include "json.hpp"

#include "cyclo/covers.hpp"
#include "cyclo/diagrams.hpp"
#include "cyclo/engine.hpp"
#include "cyclo/lifts.hpp"
#include "cyclo/polyring.hpp"

namespace cyclo::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
Json parse_json(std::string_view text);

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const KnotDescriptor& k);
KnotDescriptor knot_from_json(const Json& j,
                              SymmetryCheck symmetry = SymmetryCheck::enforce);

Json to_json(const DecoratedDiagram& d);
DecoratedDiagram diagram_from_json(const Json& j);

Json to_json(const LiftSystem& sys);
LiftSystem lift_system_from_json(const Json& j);

Json to_json(const LeadingTerm& t);

}  // namespace cyclo::io
