#include "triples/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "triples/errors.hpp"

namespace triples {
namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- assembly

Claim alpha_m_claim(const Rational& am) {
  Claim c{"alpha_m_polystable_product", ClaimStatus::NotApplicable,
          "alpha = alpha_m >= 0; N = M(n1,d1) x M(n2,d2), non-empty and irreducible", am,
          ExtRational(am)};
  if (am.sign() >= 0) c.status = ClaimStatus::Asserted;
  return c;
}

Claim stable_claim(const TripleType& t, Genus g, const Rational& am, const ExtRational& aM) {
  const Rational k(g.two_g_minus_two());
  Claim c{"stable_nonempty_irreducible_smooth", ClaimStatus::Silent,
          t.n1() == t.n2() ? "alpha >= 2g-2 > alpha_m"
                           : "alpha_m < 2g-2 <= alpha < alpha_M",
          std::nullopt, std::nullopt};
  if (am.sign() < 0 || aM <= ExtRational(am)) {
    c.status = ClaimStatus::NotApplicable;
    return c;
  }
  if (am < k && ExtRational(k) < aM) {
    c.status = ClaimStatus::Asserted;
    c.range_lo = k;
    c.range_hi = aM;
  }
  return c;
}

Claim polystable_claim(const TripleType& t, Genus g, const Claim& stable) {
  Claim c{"polystable_irreducible", ClaimStatus::Silent, "", std::nullopt, std::nullopt};
  const bool coprime = !alpha_independent_possible(t);
  const Rational k(g.two_g_minus_two());
  if (t.n1() != t.n2()) {
    c.hypotheses = "GCD(n2, n1+n2, d1+d2) = 1, alpha generic, alpha_m < 2g-2 <= alpha < alpha_M";
    if (stable.status == ClaimStatus::Asserted && coprime) {
      c.status = ClaimStatus::Asserted;
      c.range_lo = stable.range_lo;
      c.range_hi = stable.range_hi;
    }
  } else {
    c.hypotheses =
        "alpha >= 2g-2 > alpha_m and either GCD(n, 2n, d1+d2) = 1 with alpha generic, or "
        "alpha > d1 - d2";
    if (stable.status == ClaimStatus::Asserted) {
      c.status = ClaimStatus::Asserted;
      c.range_lo = coprime ? k : max(k, Rational(t.d1() - t.d2()));
      c.range_hi = ExtRational::infinity();
    }
  }
  if (stable.status == ClaimStatus::NotApplicable) c.status = ClaimStatus::NotApplicable;
  return c;
}

Claim alpha_M_claim(const TripleType& t, const Rational& am) {
  Claim c{"alpha_M_polystable_product", ClaimStatus::NotApplicable,
          "n1 != n2 and alpha_m < alpha_M", std::nullopt, std::nullopt};
  if (t.n1() == t.n2() || am.sign() < 0) return c;
  if (am.sign() == 0) {
    c.status = ClaimStatus::Silent;
    return c;
  }
  c.status = ClaimStatus::Asserted;
  c.range_lo = alpha_M(t).value();
  c.range_hi = alpha_M(t);
  return c;
}

std::vector<InconsistencyFlag> inconsistencies(const TripleType& t, Genus g,
                                               const std::optional<ModelDescriptor>& large) {
  std::vector<InconsistencyFlag> out;
  if (large && large->model_case == ModelCase::EqualRanks && !large->consistent) {
    out.push_back({"equal_rank_fibration_accounting",
                   "P^N-fibration over M^s(n,d2) x Sym^(d1-d2)(X) with N = n(d1-d2)-1 has "
                   "dimension exceeding the moduli dimension by d1-d2-1",
                   large->total_dim, large->accounted_dim});
  }
  if (t.n1() != t.n2() && t.mu1() > t.mu2()) {
    const std::int64_t fiber = large_alpha_fiber_dim(t, g);
    const std::int64_t variant = extension_space_fiber_variant(t, g);
    if (fiber != variant) {
      out.push_back({"large_alpha_fiber_coefficient",
                     "extension-space count uses max(n1,n2)|n1-n2|(g-1) where the fibration "
                     "bookkeeping needs min(n1,n2)|n1-n2|(g-1)",
                     fiber, variant});
    }
  }
  return out;
}

// ------------------------------------------------------------- serialization

Json rational_json(const Rational& r) { return Json{{"num", r.num_str()}, {"den", r.den_str()}}; }

Json ext_json(const ExtRational& r) {
  return r.is_infinite() ? Json("inf") : rational_json(r.value());
}

Rational rational_from(const Json& j) {
  return Rational::from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

ExtRational ext_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw DomainError("bad extended rational");
    return ExtRational::infinity();
  }
  return rational_from(j);
}

Json type_json(const TripleType& t) {
  return Json{{"n1", t.n1()}, {"n2", t.n2()}, {"d1", t.d1()}, {"d2", t.d2()}};
}

TripleType type_from(const Json& j) {
  return TripleType(j.at("n1").get<std::int64_t>(), j.at("n2").get<std::int64_t>(),
                    j.at("d1").get<std::int64_t>(), j.at("d2").get<std::int64_t>());
}

Json wall_json(const CriticalValue& w) {
  Json witnesses = Json::array();
  for (const auto& x : w.witnesses) {
    witnesses.push_back(Json{{"n1p", x.n1p}, {"n2p", x.n2p}, {"s_prime", x.s_prime}});
  }
  return Json{{"alpha", rational_json(w.alpha_c)}, {"witnesses", std::move(witnesses)}};
}

CriticalValue wall_from(const Json& j) {
  CriticalValue w{rational_from(j.at("alpha")), {}};
  for (const auto& x : j.at("witnesses")) {
    w.witnesses.push_back({x.at("n1p").get<std::int64_t>(), x.at("n2p").get<std::int64_t>(),
                           x.at("s_prime").get<std::int64_t>()});
  }
  return w;
}

Json decomposition_json(const FlipDecomposition& d) {
  return Json{{"sub", type_json(d.sub)},
              {"quot", type_json(d.quot)},
              {"side", to_string(d.side)},
              {"fiber_dim", d.fiber_dim},
              {"stratum_dim", d.stratum_dim},
              {"codim_bound", d.codim_bound},
              {"ambient_dim", d.ambient_dim}};
}

FlipDecomposition decomposition_from(const Json& j) {
  return {type_from(j.at("sub")),
          type_from(j.at("quot")),
          flip_side_from_string(j.at("side").get<std::string>()),
          j.at("fiber_dim").get<std::int64_t>(),
          j.at("stratum_dim").get<std::int64_t>(),
          j.at("codim_bound").get<std::int64_t>(),
          j.at("ambient_dim").get<std::int64_t>()};
}

Json analysis_json(const WallAnalysis& a) {
  Json plus = Json::array();
  Json minus = Json::array();
  Json filtered = Json::array();
  for (const auto& d : a.plus_side) plus.push_back(decomposition_json(d));
  for (const auto& d : a.minus_side) minus.push_back(decomposition_json(d));
  for (const auto& f : a.filtered) {
    filtered.push_back(Json{{"decomposition", decomposition_json(f.decomposition)},
                            {"reason", f.reason}});
  }
  return Json{{"wall", wall_json(a.wall)},
              {"plus_side", std::move(plus)},
              {"minus_side", std::move(minus)},
              {"min_codim", a.min_codim ? Json(*a.min_codim) : Json("inf")},
              {"filtered", std::move(filtered)}};
}

WallAnalysis analysis_from(const Json& j) {
  WallAnalysis a{wall_from(j.at("wall")), {}, {}, std::nullopt, {}};
  for (const auto& d : j.at("plus_side")) a.plus_side.push_back(decomposition_from(d));
  for (const auto& d : j.at("minus_side")) a.minus_side.push_back(decomposition_from(d));
  if (!j.at("min_codim").is_string()) a.min_codim = j.at("min_codim").get<std::int64_t>();
  for (const auto& f : j.at("filtered")) {
    a.filtered.push_back({decomposition_from(f.at("decomposition")),
                          f.at("reason").get<std::string>()});
  }
  return a;
}

Json model_json(const std::optional<ModelDescriptor>& m) {
  if (!m) return nullptr;
  Json base = Json::array();
  for (const auto& f : m->base_factors) {
    base.push_back(Json{{"kind", to_string(f.kind)},
                        {"rank", f.rank},
                        {"degree", f.degree},
                        {"dim", f.dim}});
  }
  return Json{{"case", to_string(m->model_case)},
              {"base", std::move(base)},
              {"fiber_dim", m->fiber_dim},
              {"total_dim", m->total_dim},
              {"accounted_dim", m->accounted_dim},
              {"consistent", m->consistent},
              {"note", m->note}};
}

std::optional<ModelDescriptor> model_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  ModelDescriptor m{model_case_from_string(j.at("case").get<std::string>()),
                    {},
                    j.at("fiber_dim").get<std::int64_t>(),
                    j.at("total_dim").get<std::int64_t>(),
                    j.at("accounted_dim").get<std::int64_t>(),
                    j.at("consistent").get<bool>(),
                    j.at("note").get<std::string>()};
  for (const auto& f : j.at("base")) {
    m.base_factors.push_back({factor_kind_from_string(f.at("kind").get<std::string>()),
                              f.at("rank").get<std::int64_t>(), f.at("degree").get<std::int64_t>(),
                              f.at("dim").get<std::int64_t>()});
  }
  return m;
}

Json to_json(const TypeReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back(Json{{"kind", to_string(b.kind)},
                          {"value", ext_json(b.value)},
                          {"j", b.j ? Json(*b.j) : Json(nullptr)}});
  }
  Json walls = Json::array();
  for (const auto& w : r.walls) walls.push_back(wall_json(w));
  Json chambers = Json::array();
  for (const auto& c : r.chambers) {
    chambers.push_back(Json{{"lower", rational_json(c.chamber.lower)},
                            {"upper", ext_json(c.chamber.upper)},
                            {"dimension", c.dimension},
                            {"smooth", c.smooth},
                            {"note", c.note}});
  }
  Json analyses = Json::array();
  for (const auto& a : r.wall_analyses) analyses.push_back(analysis_json(a));
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back(Json{{"name", c.name},
                          {"status", to_string(c.status)},
                          {"hypotheses", c.hypotheses},
                          {"range_lo", c.range_lo ? rational_json(*c.range_lo) : Json(nullptr)},
                          {"range_hi", c.range_hi ? ext_json(*c.range_hi) : Json(nullptr)}});
  }
  Json flags = Json::array();
  for (const auto& f : r.inconsistencies) {
    flags.push_back(Json{{"id", f.id},
                         {"detail", f.detail},
                         {"expected", f.expected},
                         {"observed", f.observed}});
  }
  return Json{{"schema", "triples-report/1"},
              {"type", type_json(r.type)},
              {"genus", r.genus.value()},
              {"bounds", std::move(bounds)},
              {"window", r.window ? Json{{"lo", rational_json(r.window->lo)},
                                         {"hi", rational_json(r.window->hi)}}
                                  : Json(nullptr)},
              {"walls", std::move(walls)},
              {"chambers", std::move(chambers)},
              {"wall_analyses", std::move(analyses)},
              {"models",
               Json{{"alpha_m", model_json(r.alpha_m_model)},
                    {"alpha_M", model_json(r.alpha_M_model)},
                    {"large_alpha", model_json(r.large_alpha)}}},
              {"claims", std::move(claims)},
              {"inconsistencies", std::move(flags)},
              {"notes", r.notes}};
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << r.to_double();
  return os.str();
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Asserted:
      return "asserted";
    case ClaimStatus::NotApplicable:
      return "not applicable";
    case ClaimStatus::Silent:
      return "silent";
  }
  return "?";
}

ClaimStatus claim_status_from_string(const std::string& name) {
  if (name == "asserted") return ClaimStatus::Asserted;
  if (name == "not applicable") return ClaimStatus::NotApplicable;
  if (name == "silent") return ClaimStatus::Silent;
  throw DomainError("unknown claim status '" + name + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::CsvWalls:
      return "csv_walls";
    case Format::PlotData:
      return "plotdata";
  }
  return "?";
}

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv_walls" || name == "csv") return Format::CsvWalls;
  if (name == "plotdata") return Format::PlotData;
  throw DomainError("unknown format '" + name + "'");
}

TypeReport build_report(const TripleType& t, Genus g, const ReportOptions& options) {
  require_ambient(t, "build_report");
  const Rational am = alpha_m(t);
  const ExtRational aM = alpha_M(t);

  TypeReport r{t, g, all_bounds(t), std::nullopt, {}, {}, {}, std::nullopt, std::nullopt,
               std::nullopt, {}, {}, {}};

  if (options.window) {
    if (options.window->hi < options.window->lo) throw DomainError("inverted window");
    if (options.window->lo < am) throw DomainError("window starts below alpha_m = " + am.str());
    r.window = options.window;
  } else if (am.sign() >= 0) {
    r.window = default_window(t);
  }
  if (options.beyond_stabilization && (t.n1() != t.n2() || !options.window)) {
    throw DomainError("--beyond-stabilization needs n1 = n2 and an explicit window");
  }

  if (am.sign() < 0) r.notes.emplace_back("mu1 < mu2: no alpha-semistable triples for any alpha");
  if (r.window) r.walls = enumerate_critical_values(t, r.window->lo, r.window->hi);

  ChamberOptions copts;
  if (options.beyond_stabilization) {
    copts.beyond_stabilization = true;
    copts.cap = options.window->hi;
  }
  const std::int64_t dim = moduli_dimension(t, g);
  const ExtRational k(Rational(g.two_g_minus_two()));
  for (const auto& c : chambers(t, copts)) {
    const bool smooth = c.upper > k;
    r.chambers.push_back(
        {c, dim, smooth,
         smooth ? "stable points with alpha >= 2g-2 are smooth of this dimension"
                : "below 2g-2: dimension holds at smooth points only"});
  }

  for (const auto& w : r.walls) {
    if (w.alpha_c <= am || ExtRational(w.alpha_c) >= aM) continue;
    r.wall_analyses.push_back(
        enumerate_flip_decompositions(t, w.alpha_c, g, FlipOptions{options.strict_nonempty}));
  }

  if (am.sign() >= 0) {
    r.alpha_m_model = alpha_m_model(t, g);
    r.alpha_M_model = alpha_M_model(t, g);
    r.large_alpha = large_alpha_model(t, g);
  }
  if (t.n1() == t.n2() && t.d1() == t.d2()) {
    r.notes.emplace_back("d1 = d2: N_alpha isomorphic to M(n, d) for every alpha > 0");
  }

  r.claims.push_back(alpha_m_claim(am));
  Claim stable = stable_claim(t, g, am, aM);
  r.claims.push_back(polystable_claim(t, g, stable));
  r.claims.insert(r.claims.begin() + 1, std::move(stable));
  r.claims.push_back(alpha_M_claim(t, am));
  r.inconsistencies = inconsistencies(t, g, r.large_alpha);

  // The g-1 lower bound fails for splits with a pure-bundle factor whose partner
  // has a generically (but not globally) invertible map.
  const CodimReport codim = verify_codim_theorem(t, g, FlipOptions{options.strict_nonempty});
  if (!codim.pass) {
    std::int64_t observed = g.value() - 1;
    for (const auto& c : codim.counterexamples) {
      const auto& d = c.decomposition;
      observed = std::min({observed, d.codim_bound, -chi(d.quot, d.sub, g)});
    }
    const auto& first = codim.counterexamples.front();
    r.inconsistencies.push_back(
        {"codim_below_g_minus_1",
         std::to_string(codim.counterexamples.size()) + " bound failures; first at alpha_c = " +
             first.wall.str() + " for " + first.decomposition.sub.str() + " + " +
             first.decomposition.quot.str() + " (" + first.failed_bound + ")",
         g.value() - 1, observed});
  }
  return r;
}

void emit(const TypeReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(report).dump(2) << '\n';
      break;
    case Format::CsvWalls:
      for (const auto& w : report.walls) {
        out << w.alpha_c.num_str() << ',' << w.alpha_c.den_str() << ',' << w.witnesses.size()
            << ',';
        const WallAnalysis* found = nullptr;
        for (const auto& a : report.wall_analyses) {
          if (a.wall.alpha_c == w.alpha_c) found = &a;
        }
        if (!found) {
          out << "na";
        } else if (found->min_codim) {
          out << *found->min_codim;
        } else {
          out << "inf";
        }
        out << '\n';
      }
      break;
    case Format::PlotData:
      out << "# alpha dimension (lossy decimal approximation)\n";
      for (const auto& c : report.chambers) {
        out << decimal(c.chamber.lower) << ' ' << c.dimension << '\n';
      }
      if (!report.chambers.empty()) {
        const auto& last = report.chambers.back();
        out << (last.chamber.upper.is_infinite() ? std::string("inf")
                                                 : decimal(last.chamber.upper.value()))
            << ' ' << last.dimension << '\n';
      }
      break;
  }
  if (!out) throw std::ios_base::failure("failed to write report");
}

std::string emit(const TypeReport& report, Format format) {
  std::ostringstream os;
  emit(report, format, os);
  return os.str();
}

TypeReport parse_report_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed report json: ") + e.what());
  }
  try {
    TypeReport r{type_from(j.at("type")),
                 Genus(j.at("genus").get<int>()),
                 {},
                 std::nullopt,
                 {},
                 {},
                 {},
                 model_from(j.at("models").at("alpha_m")),
                 model_from(j.at("models").at("alpha_M")),
                 model_from(j.at("models").at("large_alpha")),
                 {},
                 {},
                 j.at("notes").get<std::vector<std::string>>()};
    for (const auto& b : j.at("bounds")) {
      r.bounds.push_back({bound_kind_from_string(b.at("kind").get<std::string>()),
                          ext_from(b.at("value")),
                          b.at("j").is_null() ? std::nullopt
                                              : std::optional(b.at("j").get<std::int64_t>())});
    }
    if (!j.at("window").is_null()) {
      r.window = Window{rational_from(j.at("window").at("lo")),
                        rational_from(j.at("window").at("hi"))};
    }
    for (const auto& w : j.at("walls")) r.walls.push_back(wall_from(w));
    for (const auto& c : j.at("chambers")) {
      r.chambers.push_back({Chamber{rational_from(c.at("lower")), ext_from(c.at("upper"))},
                            c.at("dimension").get<std::int64_t>(), c.at("smooth").get<bool>(),
                            c.at("note").get<std::string>()});
    }
    for (const auto& a : j.at("wall_analyses")) r.wall_analyses.push_back(analysis_from(a));
    for (const auto& c : j.at("claims")) {
      r.claims.push_back(
          {c.at("name").get<std::string>(),
           claim_status_from_string(c.at("status").get<std::string>()),
           c.at("hypotheses").get<std::string>(),
           c.at("range_lo").is_null() ? std::nullopt
                                      : std::optional<Rational>(rational_from(c.at("range_lo"))),
           c.at("range_hi").is_null() ? std::nullopt
                                      : std::optional<ExtRational>(ext_from(c.at("range_hi")))});
    }
    for (const auto& f : j.at("inconsistencies")) {
      r.inconsistencies.push_back({f.at("id").get<std::string>(), f.at("detail").get<std::string>(),
                                   f.at("expected").get<std::int64_t>(),
                                   f.at("observed").get<std::int64_t>()});
    }
    return r;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("report json does not match the schema: ") + e.what());
  }
}

}  // namespace triples
