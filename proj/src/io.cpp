#include "cyclo/io.hpp"

#include <fstream>
#include <sstream>

#include "cyclo/errors.hpp"

namespace cyclo::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(what) + " is missing field \"" + key + "\"");
  }
  return *it;
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (!j.is_string()) throw ParseError("coefficient must be a decimal string");
  Integer value;
  if (value.set_str(j.get<std::string>(), 10) != 0) {
    throw ParseError("coefficient '" + j.get<std::string>() +
                     "' is not a decimal integer");
  }
  return value;
}

const Json& array_field(const Json& j, const char* key, const char* what) {
  const Json& a = field(j, key, what);
  if (!a.is_array()) {
    throw ParseError(std::string(what) + " field \"" + key + "\" must be an array");
  }
  return a;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exp", e}, {"coef", c.get_str()}});
  }
  return Json{{"vars", p.variables()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const Json& j) {
  auto vars = as<std::vector<std::string>>(array_field(j, "vars", "polynomial"),
                                           "polynomial vars");
  LaurentPoly p;
  try {
    p = LaurentPoly(std::move(vars));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  for (const Json& term : array_field(j, "terms", "polynomial")) {
    auto exp = as<Exponents>(field(term, "exp", "term"), "term exponents");
    if (exp.size() != p.num_variables()) {
      throw ParseError("term exponent vector has " + std::to_string(exp.size()) +
                       " entries for " + std::to_string(p.num_variables()) +
                       " variables");
    }
    p.add_term(exp, integer_from_json(field(term, "coef", "term")));
  }
  return p;
}

Json to_json(const KnotDescriptor& k) {
  Json poly = to_json(k.alexander());
  return Json{{"label", k.label()}, {"vars", poly["vars"]}, {"terms", poly["terms"]}};
}

KnotDescriptor knot_from_json(const Json& j, SymmetryCheck symmetry) {
  auto label = as<std::string>(field(j, "label", "knot"), "knot label");
  return KnotDescriptor::make(std::move(label), poly_from_json(j), symmetry);
}

Json to_json(const DecoratedDiagram& d) {
  Json edges = Json::array();
  for (const Edge& e : d.edges) {
    edges.push_back(
        Json{{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"winding", e.winding}});
  }
  Json legs = Json::array();
  for (const Leg& l : d.legs) {
    legs.push_back(
        Json{{"id", l.id}, {"vertex", l.vertex}, {"sign", l.sign}, {"edge", l.edge}});
  }
  Json twists = Json::object();
  for (const auto& [edge, t] : d.twists) twists[std::to_string(edge)] = t;
  return Json{{"label", d.label},
              {"vertices", d.vertices},
              {"edges", edges},
              {"legs", legs},
              {"twists", twists}};
}

DecoratedDiagram diagram_from_json(const Json& j) {
  DecoratedDiagram d;
  d.label = as<std::string>(field(j, "label", "diagram"), "diagram label");
  d.vertices = as<std::vector<int>>(array_field(j, "vertices", "diagram"),
                                    "diagram vertices");
  for (const Json& e : array_field(j, "edges", "diagram")) {
    d.edges.push_back(Edge{as<int>(field(e, "id", "edge"), "edge id"),
                           as<int>(field(e, "tail", "edge"), "edge tail"),
                           as<int>(field(e, "head", "edge"), "edge head"),
                           as<std::int64_t>(field(e, "winding", "edge"),
                                            "edge winding")});
  }
  if (j.contains("legs")) {
    for (const Json& l : array_field(j, "legs", "diagram")) {
      d.legs.push_back(Leg{as<int>(field(l, "id", "leg"), "leg id"),
                           as<int>(field(l, "vertex", "leg"), "leg vertex"),
                           as<int>(field(l, "sign", "leg"), "leg sign"),
                           as<int>(field(l, "edge", "leg"), "leg edge")});
    }
  }
  if (j.contains("twists")) {
    const Json& twists = j.at("twists");
    if (!twists.is_object()) throw ParseError("diagram twists must be an object");
    for (const auto& [key, value] : twists.items()) {
      int edge = 0;
      try {
        std::size_t used = 0;
        edge = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("twist key '" + key + "' is not an edge id");
      }
      d.twists[edge] = as<int>(value, "twist value");
    }
  }
  return d;
}

Json to_json(const LiftSystem& sys) {
  Json edges = Json::array();
  for (const LiftEdge& e : sys.edges) {
    edges.push_back(
        Json{{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"winding", e.offset}});
  }
  return Json{{"p", sys.modulus}, {"vertices", sys.vertices}, {"edges", edges}};
}

LiftSystem lift_system_from_json(const Json& j) {
  LiftSystem sys;
  sys.modulus = as<std::int64_t>(field(j, "p", "lift system"), "lift modulus");
  sys.vertices = as<std::vector<int>>(array_field(j, "vertices", "lift system"),
                                      "lift vertices");
  for (const Json& e : array_field(j, "edges", "lift system")) {
    const char* offset_key = e.contains("winding") ? "winding" : "offset";
    sys.edges.push_back(LiftEdge{as<int>(field(e, "id", "edge"), "edge id"),
                                 as<int>(field(e, "tail", "edge"), "edge tail"),
                                 as<int>(field(e, "head", "edge"), "edge head"),
                                 as<std::int64_t>(field(e, offset_key, "edge"),
                                                  "edge winding")});
  }
  return sys;
}

Json to_json(const LeadingTerm& t) {
  Json j{{"magnitude", t.magnitude.get_str()},
         {"sign", to_string(t.sign)},
         {"grade", t.grade},
         {"p", t.p},
         {"label", t.label}};
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

}  // namespace cyclo::io
