#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "triples/critical_values.hpp"
#include "triples/errors.hpp"
#include "triples/flip_loci.hpp"
#include "triples/higgs_bridge.hpp"
#include "triples/homological.hpp"
#include "triples/parameter_bounds.hpp"
#include "triples/report.hpp"
#include "triples/selfcheck.hpp"

namespace {

using triples::Rational;

constexpr int kExitDomain = 2;
constexpr int kExitConsistency = 3;

struct TypeArgs {
  std::int64_t n1 = 0, n2 = 0, d1 = 0, d2 = 0;
  int genus = 2;
  std::string window_lo, window_hi;
  std::string format = "text";
  bool strict_nonempty = false;
  bool beyond_stabilization = false;
  std::string alpha;
};

void add_type_options(CLI::App* cmd, TypeArgs& a) {
  cmd->add_option("--n1", a.n1, "rank of E1")->required();
  cmd->add_option("--n2", a.n2, "rank of E2")->required();
  cmd->add_option("--d1", a.d1, "degree of E1")->required();
  cmd->add_option("--d2", a.d2, "degree of E2")->required();
  cmd->add_option("--genus", a.genus, "genus of the curve (>= 2)")->capture_default_str();
  cmd->add_option("--window-lo", a.window_lo, "lower end of the alpha window, e.g. 3/2");
  cmd->add_option("--window-hi", a.window_hi, "upper end of the alpha window");
  cmd->add_option("--format", a.format, "text, json, csv_walls or plotdata")
      ->capture_default_str();
  cmd->add_flag("--strict-nonempty", a.strict_nonempty,
                "drop flip factors whose stable moduli are empty at the wall");
  cmd->add_flag("--beyond-stabilization", a.beyond_stabilization,
                "n1 = n2: keep walls above alpha_L up to --window-hi");
}

triples::ReportOptions report_options(const TypeArgs& a, const triples::TripleType& t) {
  triples::ReportOptions o;
  o.strict_nonempty = a.strict_nonempty;
  o.beyond_stabilization = a.beyond_stabilization;
  if (!a.window_lo.empty() || !a.window_hi.empty()) {
    const auto fallback = triples::default_window(t);
    Rational lo = a.window_lo.empty() ? triples::alpha_m(t) : Rational::parse(a.window_lo);
    Rational hi;
    if (!a.window_hi.empty()) {
      hi = Rational::parse(a.window_hi);
    } else if (fallback) {
      hi = fallback->hi;
    } else {
      throw triples::DomainError("no default upper end for the window; pass --window-hi");
    }
    o.window = triples::Window{lo, hi};
  }
  return o;
}

nlohmann::ordered_json report_json(const triples::TypeReport& r) {
  return nlohmann::ordered_json::parse(triples::emit(r, triples::Format::Json));
}

void print_json_section(const triples::TypeReport& r, const char* key) {
  auto j = report_json(r);
  nlohmann::ordered_json out;
  out["type"] = j["type"];
  out["genus"] = j["genus"];
  out[key] = j[key];
  std::cout << out.dump(2) << '\n';
}

bool structured(const TypeArgs& a) {
  if (a.format == "text") return false;
  triples::format_from_string(a.format);
  return true;
}

int run_bounds(const TypeArgs& a) {
  const triples::TripleType t(a.n1, a.n2, a.d1, a.d2);
  const triples::Genus g(a.genus);
  if (structured(a)) {
    print_json_section(triples::build_report(t, g, report_options(a, t)), "bounds");
    return 0;
  }
  std::cout << "type " << t << "  genus " << g.value() << '\n';
  for (const auto& b : triples::all_bounds(t)) {
    std::cout << "  " << triples::to_string(b.kind);
    if (b.j) std::cout << '(' << *b.j << ')';
    std::cout << " = " << b.value << '\n';
  }
  return 0;
}

int run_walls(const TypeArgs& a) {
  const triples::TripleType t(a.n1, a.n2, a.d1, a.d2);
  const triples::Genus g(a.genus);
  const auto report = triples::build_report(t, g, report_options(a, t));
  if (a.format == "csv_walls") {
    triples::emit(report, triples::Format::CsvWalls, std::cout);
    return 0;
  }
  if (structured(a)) {
    print_json_section(report, "walls");
    return 0;
  }
  if (!report.window) {
    std::cout << "no parameter window for " << t << '\n';
    return 0;
  }
  std::cout << "walls of " << t << " in [" << report.window->lo << ", " << report.window->hi
            << "]\n";
  for (const auto& w : report.walls) {
    std::cout << "  " << w.alpha_c << "  (" << w.witnesses.size() << " witnesses:";
    for (const auto& x : w.witnesses) {
      std::cout << " [" << x.n1p << ',' << x.n2p << ',' << x.s_prime << ']';
    }
    std::cout << ")\n";
  }
  return 0;
}

int run_chambers(const TypeArgs& a) {
  const triples::TripleType t(a.n1, a.n2, a.d1, a.d2);
  const triples::Genus g(a.genus);
  const auto report = triples::build_report(t, g, report_options(a, t));
  if (a.format == "plotdata") {
    triples::emit(report, triples::Format::PlotData, std::cout);
    return 0;
  }
  if (structured(a)) {
    print_json_section(report, "chambers");
    return 0;
  }
  if (report.chambers.empty()) std::cout << "no chambers: the moduli spaces are empty\n";
  for (const auto& c : report.chambers) {
    std::cout << "  (" << c.chamber.lower << ", " << c.chamber.upper << ")  dim " << c.dimension
              << "  " << c.note << '\n';
  }
  return 0;
}

void print_decomposition(const triples::FlipDecomposition& d) {
  std::cout << "    " << triples::to_string(d.side) << "  sub " << d.sub << "  quot " << d.quot
            << "  fiber " << d.fiber_dim << "  stratum " << d.stratum_dim << "  codim "
            << d.codim_bound << "  ambient " << d.ambient_dim << '\n';
}

int run_flips(const TypeArgs& a) {
  const triples::TripleType t(a.n1, a.n2, a.d1, a.d2);
  const triples::Genus g(a.genus);
  triples::ReportOptions o = report_options(a, t);
  if (!a.alpha.empty()) {
    const Rational alpha = Rational::parse(a.alpha);
    // Surfaces the not-a-wall and endpoint errors before the report swallows them.
    triples::enumerate_flip_decompositions(t, alpha, g, {a.strict_nonempty});
    o.window = triples::Window{alpha, alpha};
  }
  const auto report = triples::build_report(t, g, o);
  if (structured(a)) {
    print_json_section(report, "wall_analyses");
    return 0;
  }
  for (const auto& w : report.wall_analyses) {
    std::cout << "wall " << w.wall.alpha_c << "  min codim "
              << (w.min_codim ? std::to_string(*w.min_codim) : std::string("inf")) << '\n';
    for (const auto& d : w.plus_side) print_decomposition(d);
    for (const auto& d : w.minus_side) print_decomposition(d);
    for (const auto& f : w.filtered) {
      std::cout << "    filtered " << f.decomposition.sub << " + " << f.decomposition.quot << ": "
                << f.reason << '\n';
    }
  }
  const auto codim = triples::verify_codim_theorem(t, g, {a.strict_nonempty});
  if (!codim.pass) {
    for (const auto& c : codim.counterexamples) {
      std::cerr << "codimension bound violated at " << c.wall << " by " << c.decomposition.sub
                << " + " << c.decomposition.quot << " (" << c.failed_bound << ")\n";
    }
    return kExitConsistency;
  }
  return 0;
}

int run_report(const TypeArgs& a) {
  const triples::TripleType t(a.n1, a.n2, a.d1, a.d2);
  const triples::Genus g(a.genus);
  const auto report = triples::build_report(t, g, report_options(a, t));
  const std::string format = a.format == "text" ? "json" : a.format;
  triples::emit(report, triples::format_from_string(format), std::cout);
  return 0;
}

struct HiggsArgs {
  std::int64_t p = 1, q = 1, a = 0, b = 0;
  int genus = 2;
  std::string vanishing = "gamma";
  bool report = false;
};

int run_higgs(const HiggsArgs& h) {
  const triples::HiggsInvariants inv{h.p, h.q, h.a, h.b, triples::Genus(h.genus)};
  const auto mw = triples::milnor_wood_ok(inv);
  const auto image = triples::higgs_to_triple(inv, triples::vanishing_from_string(h.vanishing));
  if (h.report) {
    if (!mw.ok) throw triples::DomainError("invariants violate the Milnor-Wood inequality");
    triples::emit(triples::build_report(image.type, inv.g), triples::Format::Json, std::cout);
    return 0;
  }
  std::cout << "milnor-wood " << (mw.ok ? "ok" : "violated") << "  margin " << mw.margin << '\n'
            << "triple " << image.type << "  alpha " << image.alpha << '\n'
            << "integer genericity at alpha: "
            << (triples::integer_genericity(image.type, image.alpha.to_int64()) ? "yes" : "no")
            << '\n';
  if (!image.note.empty()) std::cout << "note: " << image.note << '\n';
  return 0;
}

int run_checks(const triples::SelfcheckOptions& o) {
  bool ok = true;
  for (const auto& r : triples::run_selfcheck(o)) {
    std::cout << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << "  (" << r.cases
              << " cases, " << r.failures << " failures)";
    if (!r.example.empty()) std::cout << "  first: " << r.example;
    std::cout << '\n';
    ok = ok && r.failures == 0;
  }
  return ok ? 0 : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wall and chamber computations for moduli of holomorphic triples"};
  app.require_subcommand(1);

  TypeArgs bounds_args, walls_args, chambers_args, flips_args, report_args;
  auto* bounds = app.add_subcommand("bounds", "alpha_m, alpha_M and the large-alpha thresholds");
  add_type_options(bounds, bounds_args);
  auto* walls = app.add_subcommand("walls", "critical values in a window");
  add_type_options(walls, walls_args);
  auto* chambers = app.add_subcommand("chambers", "chamber decomposition with dimensions");
  add_type_options(chambers, chambers_args);
  auto* flips = app.add_subcommand("flips", "flip loci at interior walls");
  add_type_options(flips, flips_args);
  flips->add_option("--alpha", flips_args.alpha, "analyse a single wall");
  auto* report = app.add_subcommand("report", "full report (json, csv_walls or plotdata)");
  add_type_options(report, report_args);

  HiggsArgs higgs_args;
  auto* higgs = app.add_subcommand("higgs", "U(p,q)-Higgs invariants to a triple at alpha = 2g-2");
  higgs->add_option("--p", higgs_args.p, "rank of V")->required();
  higgs->add_option("--q", higgs_args.q, "rank of W")->required();
  higgs->add_option("--a", higgs_args.a, "degree of V")->required();
  higgs->add_option("--b", higgs_args.b, "degree of W")->required();
  higgs->add_option("--genus", higgs_args.genus)->capture_default_str();
  higgs->add_option("--vanishing", higgs_args.vanishing, "gamma or beta")->capture_default_str();
  higgs->add_flag("--report", higgs_args.report, "emit the json report of the resulting triple");

  triples::SelfcheckOptions check_opts;
  auto* selfcheck = app.add_subcommand("selfcheck", "property checks over a bounded sweep");
  selfcheck->add_option("--max-rank", check_opts.max_total_rank, "bound on n1 + n2")
      ->capture_default_str();
  selfcheck->add_option("--max-degree", check_opts.max_abs_degree, "bound on |d1|, |d2|")
      ->capture_default_str();
  selfcheck->add_option("--genus", check_opts.genera, "genera to sweep (repeatable)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    if (*bounds) return run_bounds(bounds_args);
    if (*walls) return run_walls(walls_args);
    if (*chambers) return run_chambers(chambers_args);
    if (*flips) return run_flips(flips_args);
    if (*report) return run_report(report_args);
    if (*higgs) return run_higgs(higgs_args);
    if (*selfcheck) return run_checks(check_opts);
  } catch (const triples::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const triples::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const triples::HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
