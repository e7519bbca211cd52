#include "cyclo/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cyclo/covers.hpp"
#include "cyclo/engine.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/io.hpp"
#include "cyclo/lifts.hpp"

namespace cyclo::cli {

namespace {

enum class Format { json, csv };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<std::int64_t> p;
  std::string p_range;
  int n_max = 0;
  int l_start = 1;
  int count = 1;
  std::string format;
  bool unsigned_legs = false;
  int leg_cap = 24;
  bool skip_symmetry = false;
  std::string out_path;

  Format output_format(Format fallback) const {
    if (format.empty()) return fallback;
    return format == "csv" ? Format::csv : Format::json;
  }

  MultiplierOptions multiplier_options() const {
    return {unsigned_legs ? LegSigns::unsigned_sum : LegSigns::alternating, leg_cap};
  }

  std::int64_t single_p() const {
    if (!p) throw ValidationError("--p is required");
    if (*p < 1) throw ValidationError("--p must be >= 1");
    return *p;
  }

  // --p N or --p-range A..B, as a nonempty ascending list.
  std::vector<std::int64_t> p_values() const {
    if (p_range.empty()) return {single_p()};
    const auto dots = p_range.find("..");
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    try {
      if (dots == std::string::npos) throw std::invalid_argument(p_range);
      std::size_t used = 0;
      const std::string a = p_range.substr(0, dots);
      const std::string b = p_range.substr(dots + 2);
      lo = std::stoll(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      hi = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    } catch (const std::exception&) {
      throw ParseError("--p-range must look like A..B, got '" + p_range + "'");
    }
    if (lo < 1 || hi < lo) {
      throw ValidationError("--p-range needs 1 <= A <= B, got " + p_range);
    }
    std::vector<std::int64_t> values;
    for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
};

constexpr std::string_view kBuiltinPrefix = "builtin:";

KnotDescriptor load_knot(const RunConfig& cfg, const std::string& source) {
  if (source.starts_with(kBuiltinPrefix)) {
    const auto name = std::string_view(source).substr(kBuiltinPrefix.size());
    if (auto k = catalog::lookup(name)) return *k;
    throw ParseError("unknown builtin knot '" + std::string(name) + "'");
  }
  return io::knot_from_json(io::read_json_file(source),
                            cfg.skip_symmetry ? SymmetryCheck::skip
                                              : SymmetryCheck::enforce);
}

DecoratedDiagram load_diagram(const std::string& path) {
  DecoratedDiagram d = io::diagram_from_json(io::read_json_file(path));
  if (auto v = validate_complete(d)) throw ValidationError(format_violation(*v));
  return d;
}

void cmd_h1(const RunConfig& cfg, std::ostream& out) {
  const KnotDescriptor knot = load_knot(cfg, cfg.inputs.at(0));
  const auto ps = cfg.p_values();
  if (cfg.output_format(Format::csv) == Format::csv) {
    out << "p,h1\n";
    for (auto p : ps) out << p << ',' << h1_order(knot, p).get_str() << '\n';
  } else {
    io::Json rows = io::Json::array();
    for (auto p : ps) rows.push_back({{"p", p}, {"h1", h1_order(knot, p).get_str()}});
    out << io::Json{{"label", knot.label()}, {"rows", rows}}.dump(2) << '\n';
  }
}

void cmd_wheel_table(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t p = cfg.single_p();
  if (cfg.n_max < 1) throw ValidationError("--n-max must be >= 1");
  const auto table = f_table(p, cfg.n_max);
  if (cfg.output_format(Format::csv) == Format::csv) {
    out << "n,f\n";
    for (const auto& row : table) out << row.n << ',' << row.f.get_str() << '\n';
  } else {
    io::Json rows = io::Json::array();
    for (const auto& row : table) rows.push_back({{"n", row.n}, {"f", row.f.get_str()}});
    out << io::Json{{"p", p}, {"rows", rows}}.dump(2) << '\n';
  }
}

void cmd_cwl(const RunConfig& cfg, std::ostream& out) {
  const KnotDescriptor knot = load_knot(cfg, cfg.inputs.at(0));
  const DecoratedDiagram d = load_diagram(cfg.inputs.at(1));
  const LeadingTerm term = cwl_delta(knot, d, cfg.single_p(), cfg.multiplier_options());
  if (cfg.output_format(Format::json) == Format::csv) {
    out << "magnitude,sign,grade,p,label\n"
        << term.magnitude.get_str() << ',' << to_string(term.sign) << ','
        << term.grade << ',' << term.p << ',' << term.label << '\n';
  } else {
    out << io::to_json(term).dump(2) << '\n';
  }
}

void cmd_multiplier(const RunConfig& cfg, std::ostream& out) {
  const DecoratedDiagram d = load_diagram(cfg.inputs.at(0));
  const auto ps = cfg.p_values();
  const auto opts = cfg.multiplier_options();
  if (cfg.output_format(Format::csv) == Format::csv) {
    out << "p,multiplier\n";
    for (auto p : ps) out << p << ',' << multiplier(d, p, opts).get_str() << '\n';
  } else {
    io::Json rows = io::Json::array();
    for (auto p : ps) {
      rows.push_back({{"p", p}, {"multiplier", multiplier(d, p, opts).get_str()}});
    }
    out << io::Json{{"label", d.label}, {"rows", rows}}.dump(2) << '\n';
  }
}

void cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const DecoratedDiagram d = load_diagram(cfg.inputs.at(0));
  out << io::Json{{"label", d.label},
                  {"valid", true},
                  {"surplus", surplus(d)},
                  {"degree", degree(d).get_str()}}
             .dump(2)
      << '\n';
}

void cmd_lift(const RunConfig& cfg, std::ostream& out) {
  LiftSystem sys = io::lift_system_from_json(io::read_json_file(cfg.inputs.at(0)));
  if (cfg.p) sys.modulus = cfg.single_p();
  const auto solutions = solve(sys);
  if (!solutions) {
    out << "INADMISSIBLE\n";
    return;
  }
  std::vector<int> order(solutions->front().size());
  std::transform(solutions->front().begin(), solutions->front().end(),
                 order.begin(), [](const auto& kv) { return kv.first; });
  if (cfg.output_format(Format::json) == Format::csv) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      out << (i ? "," : "") << 'v' << order[i];
    }
    out << '\n';
    for (const auto& a : *solutions) {
      bool first = true;
      for (const auto& [v, value] : a) {
        out << (first ? "" : ",") << value;
        first = false;
      }
      out << '\n';
    }
  } else {
    io::Json rows = io::Json::array();
    for (const auto& a : *solutions) {
      io::Json row = io::Json::array();
      for (const auto& [v, value] : a) row.push_back(value);
      rows.push_back(row);
    }
    out << io::Json{{"p", sys.modulus}, {"vertices", order}, {"solutions", rows}}.dump()
        << '\n';
  }
}

void cmd_window(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t p = cfg.single_p();
  if (cfg.l_start < 1) throw ValidationError("--l-start must be >= 1");
  if (cfg.count < 1) throw ValidationError("--count must be >= 1");
  struct Row {
    int l;
    Integer value;
    std::string witness;
  };
  std::vector<Row> rows;
  for (int l = cfg.l_start; l < cfg.l_start + cfg.count; ++l) {
    const WindowWitness w = window_nonzero(l, p);
    rows.push_back({l, lmo_leading_multiplier(l, p),
                    w.vacuous ? "vacuous" : std::to_string(w.l)});
  }
  if (cfg.output_format(Format::csv) == Format::csv) {
    out << "l,multiplier,witness\n";
    for (const auto& r : rows) {
      out << r.l << ',' << r.value.get_str() << ',' << r.witness << '\n';
    }
  } else {
    io::Json j = io::Json::array();
    for (const auto& r : rows) {
      j.push_back({{"l", r.l}, {"multiplier", r.value.get_str()}, {"witness", r.witness}});
    }
    out << io::Json{{"p", p}, {"rows", j}}.dump(2) << '\n';
  }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + cfg.out_path);
  file << text;
  if (!file) throw ParseError("failed writing " + cfg.out_path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Finite-type invariant data for branched cyclic covers of knots",
               "cyclo"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Cover order p >= 1");
  };
  auto add_legs = [&](CLI::App* sub) {
    sub->add_flag("--unsigned", cfg.unsigned_legs,
                  "Sum leg states without the alternating sign");
    sub->add_option("--leg-cap", cfg.leg_cap, "Maximum number of legs")
        ->capture_default_str();
  };
  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("knot", cfg.inputs, "Knot JSON file or builtin:<name>")->required();
    sub->add_flag("--no-symmetry-check", cfg.skip_symmetry,
                  "Accept non-palindromic Alexander polynomials");
  };

  auto* h1 = app.add_subcommand("h1", "Order of H_1 of the p-fold branched cover");
  add_knot(h1);
  add_p(h1);
  h1->add_option("--p-range", cfg.p_range, "Range of p as A..B");
  add_output(h1);

  auto* wheel = app.add_subcommand("wheel-table", "f(p, n) for the wheel knots");
  add_p(wheel);
  wheel->add_option("--n-max", cfg.n_max, "Largest n")->required();
  add_output(wheel);

  auto* cwl = app.add_subcommand("cwl", "Casson-Walker-Lescop leading term");
  cwl->add_option("inputs", cfg.inputs, "Knot (file or builtin:<name>) and diagram file")
      ->expected(2)
      ->required();
  cwl->add_flag("--no-symmetry-check", cfg.skip_symmetry,
                "Accept non-palindromic Alexander polynomials");
  add_p(cwl);
  add_legs(cwl);
  add_output(cwl);

  auto* mult = app.add_subcommand("multiplier", "Signed leg-state multiplier");
  mult->add_option("diagram", cfg.inputs, "Diagram JSON file")->required();
  add_p(mult);
  mult->add_option("--p-range", cfg.p_range, "Range of p as A..B");
  add_legs(mult);
  add_output(mult);

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram for completeness");
  validate_cmd->add_option("diagram", cfg.inputs, "Diagram JSON file")->required();
  add_output(validate_cmd);

  auto* lift = app.add_subcommand("lift", "Solve the mod-p lift equations");
  lift->add_option("system", cfg.inputs, "Lift system JSON file")->required();
  lift->add_option("--p", cfg.p, "Override the modulus in the file");
  add_output(lift);

  auto* window = app.add_subcommand("window", "Leading multipliers over a range of l");
  add_p(window);
  window->add_option("--l-start", cfg.l_start, "First l")->capture_default_str();
  window->add_option("--count", cfg.count, "Number of rows")->capture_default_str();
  add_output(window);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    std::ostringstream buffer;
    if (cfg.subcommand == "h1") cmd_h1(cfg, buffer);
    else if (cfg.subcommand == "wheel-table") cmd_wheel_table(cfg, buffer);
    else if (cfg.subcommand == "cwl") cmd_cwl(cfg, buffer);
    else if (cfg.subcommand == "multiplier") cmd_multiplier(cfg, buffer);
    else if (cfg.subcommand == "validate") cmd_validate(cfg, buffer);
    else if (cfg.subcommand == "lift") cmd_lift(cfg, buffer);
    else if (cfg.subcommand == "window") cmd_window(cfg, buffer);
    emit(cfg, buffer.str(), out);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const LegCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cyclo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cyclo::cli
