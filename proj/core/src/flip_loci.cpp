#include "triples/flip_loci.hpp"

#include <algorithm>
#include <utility>

#include "triples/errors.hpp"
#include "triples/homological.hpp"
#include "triples/parameter_bounds.hpp"

namespace triples {
namespace {

bool both_ranks_positive(const TripleType& f) { return f.n1() > 0 && f.n2() > 0; }

// Lower end of the admissible range of alpha_m(F) at alpha_c, for a factor with
// both ranks positive. Unequal ranks add alpha_c <= alpha_M(F) = c * alpha_m(F).
Rational alpha_m_floor(std::int64_t a1, std::int64_t a2, const Rational& alpha_c) {
  if (a1 == a2) return Rational(0);
  const Rational c = Rational(1) + Rational(a1 + a2, a1 > a2 ? a1 - a2 : a2 - a1);
  return max(Rational(0), alpha_c / c);
}

// Running intersection of integer candidates for d1'.
struct Range {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  void at_least(const Rational& v) {
    if (!lo || *lo < v) lo = v;
  }
  void at_most(const Rational& v) {
    if (!hi || v < *hi) hi = v;
  }
  void exactly(const Rational& v) {
    at_least(v);
    at_most(v);
  }
  // floor <= slope * x + constant <= ceiling
  void affine(const Rational& slope, const Rational& constant, const Rational& floor,
              const Rational& ceiling) {
    const Rational a = (floor - constant) / slope;
    const Rational b = (ceiling - constant) / slope;
    if (slope.sign() > 0) {
      at_least(a);
      at_most(b);
    } else {
      at_least(b);
      at_most(a);
    }
  }
};

Range degree_range(const TripleType& t, std::int64_t n1p, std::int64_t n2p, std::int64_t s,
                   const Rational& alpha_c) {
  const std::int64_t m1 = t.n1() - n1p;
  const std::int64_t m2 = t.n2() - n2p;
  Range r;
  if (n1p == 0) r.exactly(Rational(0));
  if (n2p == 0) r.exactly(Rational(s));
  if (m1 == 0) r.exactly(Rational(t.d1()));
  if (m2 == 0) r.exactly(Rational(s - t.d2()));

  if (n1p > 0 && n2p > 0) {
    // alpha_m(sub) = x/n1' - (s - x)/n2'
    r.affine(Rational(1, n1p) + Rational(1, n2p), Rational(-s, n2p),
             alpha_m_floor(n1p, n2p, alpha_c), alpha_c);
  }
  if (m1 > 0 && m2 > 0) {
    // alpha_m(quot) = (d1 - x)/n1'' - (d2 - s + x)/n2''
    r.affine(-(Rational(1, m1) + Rational(1, m2)),
             Rational(t.d1(), m1) - Rational(t.d2() - s, m2), alpha_m_floor(m1, m2, alpha_c),
             alpha_c);
  }
  if (!r.lo || !r.hi) {
    throw ConsistencyError("unbounded degree range for rank split (" + std::to_string(n1p) +
                           ", " + std::to_string(n2p) + ") of " + t.str());
  }
  return r;
}

std::optional<std::string> strict_emptiness(const TripleType& f, const Rational& alpha_c) {
  if (!both_ranks_positive(f)) return std::nullopt;
  const Rational lo = alpha_m(f);
  if (lo >= alpha_c) return "factor " + f.str() + " has alpha_m = alpha_c: no stable triples";
  if (f.n1() != f.n2() && alpha_M(f) <= ExtRational(alpha_c)) {
    return "factor " + f.str() + " has alpha_M = alpha_c: no stable triples";
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(FlipSide side) { return side == FlipSide::Plus ? "Plus" : "Minus"; }

FlipSide flip_side_from_string(const std::string& name) {
  if (name == "Plus") return FlipSide::Plus;
  if (name == "Minus") return FlipSide::Minus;
  throw DomainError("unknown flip side '" + name + "'");
}

bool factor_admissible(const TripleType& factor, const Rational& alpha) {
  if (!both_ranks_positive(factor)) return true;
  const Rational am = alpha_m(factor);
  if (am.sign() < 0 || alpha < am) return false;
  if (factor.n1() == factor.n2()) return true;
  return ExtRational(alpha) <= alpha_M(factor);
}

WallAnalysis enumerate_flip_decompositions(const TripleType& t, const Rational& alpha_c, Genus g,
                                           const FlipOptions& options) {
  require_ambient(t, "enumerate_flip_decompositions");
  const Rational lo = alpha_m(t);
  const ExtRational hi = alpha_M(t);
  if (alpha_c == lo || ExtRational(alpha_c) == hi) {
    throw DomainError("alpha_c = " + alpha_c.str() +
                      " is an endpoint of the parameter range; the flip locus there is the "
                      "whole stable moduli space on the inner side");
  }
  if (alpha_c < lo || ExtRational(alpha_c) > hi) {
    throw DomainError("alpha_c = " + alpha_c.str() + " lies outside (alpha_m, alpha_M)");
  }
  if (!is_critical(t, alpha_c).critical) {
    throw DomainError("alpha_c = " + alpha_c.str() + " is not a wall of " + t.str());
  }

  WallAnalysis out{enumerate_critical_values(t, alpha_c, alpha_c).front(), {}, {}, std::nullopt,
                   {}};
  const std::int64_t ambient_dim = moduli_dimension(t, g);
  const Rational mu_c = alpha_slope(t, alpha_c);
  const Rational two_g_minus_two(g.two_g_minus_two());

  for (std::int64_t n1p = 0; n1p <= t.n1(); ++n1p) {
    for (std::int64_t n2p = 0; n2p <= t.n2(); ++n2p) {
      if ((n1p == 0 && n2p == 0) || (n1p == t.n1() && n2p == t.n2())) continue;
      // Equal-rank-ratio splits have no side; (n1', n2') with n1' n2 = n1 n2' also
      // never cross a wall.
      const Rational r_sub(n2p, n1p + n2p);
      const Rational r_quot(t.n2() - n2p, t.total_rank() - n1p - n2p);
      if (r_sub == r_quot) continue;
      const FlipSide side = r_sub < r_quot ? FlipSide::Plus : FlipSide::Minus;

      const Rational s_exact = mu_c * Rational(n1p + n2p) - alpha_c * Rational(n2p);
      if (!s_exact.is_integer()) continue;
      const std::int64_t s = s_exact.to_int64();

      const Range range = degree_range(t, n1p, n2p, s, alpha_c);
      for (std::int64_t x = range.lo->ceil(); x <= range.hi->floor(); ++x) {
        const TripleType sub(n1p, n2p, x, s - x);
        const TripleType quot = t - sub;
        if (alpha_slope(sub, alpha_c) != mu_c || alpha_slope(quot, alpha_c) != mu_c) {
          throw ConsistencyError("slope equality failed for " + sub.str() + " in " + t.str());
        }
        if (!factor_admissible(sub, alpha_c) || !factor_admissible(quot, alpha_c)) {
          throw ConsistencyError("degree range admitted a non-admissible factor of " + t.str());
        }

        const std::int64_t chi_qs = chi(quot, sub, g);
        const std::int64_t chi_sq = chi(sub, quot, g);
        FlipDecomposition d{sub,
                            quot,
                            side,
                            -chi_qs - 1,
                            1 - chi(sub, sub, g) - chi(quot, quot, g) - chi_qs,
                            -chi_sq,
                            ambient_dim};
        if (d.ambient_dim - d.stratum_dim != d.codim_bound) {
          throw ConsistencyError("codimension identity fails for " + sub.str() + " + " +
                                 quot.str());
        }

        std::optional<std::string> reason;
        if (d.fiber_dim < 0 && alpha_c > two_g_minus_two) {
          reason = "negative fiber dimension " + std::to_string(d.fiber_dim);
        } else if (options.strict_nonempty) {
          reason = strict_emptiness(sub, alpha_c);
          if (!reason) reason = strict_emptiness(quot, alpha_c);
        }
        if (reason) {
          out.filtered.push_back({std::move(d), std::move(*reason)});
          continue;
        }
        if (!out.min_codim || d.codim_bound < *out.min_codim) out.min_codim = d.codim_bound;
        (side == FlipSide::Plus ? out.plus_side : out.minus_side).push_back(std::move(d));
      }
    }
  }
  return out;
}

CodimReport verify_codim_theorem(const TripleType& t, Genus g, const FlipOptions& options) {
  require_ambient(t, "verify_codim_theorem");
  CodimReport report;
  const auto window = default_window(t);
  if (!window || alpha_m(t).sign() < 0) return report;

  const Rational threshold(g.two_g_minus_two());
  const std::int64_t bound = g.value() - 1;
  const ExtRational hi = alpha_M(t);
  for (const auto& wall : enumerate_critical_values(t, window->lo, window->hi)) {
    const Rational& a = wall.alpha_c;
    if (a <= window->lo || ExtRational(a) >= hi || a < threshold) continue;
    const WallAnalysis analysis = enumerate_flip_decompositions(t, a, g, options);
    ++report.walls_checked;

    auto check = [&](const FlipDecomposition& d) {
      ++report.decompositions_checked;
      if (d.codim_bound < bound) {
        report.counterexamples.push_back({a, d, "-chi(sub, quot) >= g-1"});
      }
      if (-chi(d.quot, d.sub, g) < bound) {
        report.counterexamples.push_back({a, d, "-chi(quot, sub) >= g-1"});
      }
    };
    for (const auto& d : analysis.plus_side) check(d);
    if (a > threshold) {
      for (const auto& d : analysis.minus_side) check(d);
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

}  // namespace triples
