#include "triples/critical_values.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "triples/errors.hpp"
#include "triples/parameter_bounds.hpp"

namespace triples {
namespace {

std::int64_t wall_denominator(const TripleType& t, std::int64_t n1p, std::int64_t n2p) {
  return n1p * t.n2() - t.n1() * n2p;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> wall_rank_pairs(const TripleType& t) {
  require_ambient(t, "wall_rank_pairs");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t n2p = 0; n2p <= t.n2(); ++n2p) {
    for (std::int64_t n1p = 0; n1p <= t.n1(); ++n1p) {
      if (n1p == 0 && n2p == 0) continue;
      if (wall_denominator(t, n1p, n2p) == 0) continue;
      pairs.emplace_back(n1p, n2p);
    }
  }
  return pairs;
}

Rational wall_value(const TripleType& t, const Witness& w) {
  const std::int64_t denom = wall_denominator(t, w.n1p, w.n2p);
  if (denom == 0) throw DomainError("rank pair gives an alpha-independent equation");
  const std::int64_t numer = t.total_rank() * w.s_prime - (w.n1p + w.n2p) * t.total_degree();
  return Rational(numer, denom);
}

Rational wall_spacing(const TripleType& t, std::int64_t n1p, std::int64_t n2p) {
  const std::int64_t denom = wall_denominator(t, n1p, n2p);
  if (denom == 0) throw DomainError("rank pair gives an alpha-independent equation");
  return Rational(t.total_rank(), denom < 0 ? -denom : denom);
}

std::optional<Window> default_window(const TripleType& t) {
  const Rational lo = alpha_m(t);
  if (t.n1() == t.n2()) return Window{lo, max(lo, alpha_L(t))};
  const Rational hi = alpha_M(t).value();
  if (hi < lo) return std::nullopt;
  return Window{lo, hi};
}

std::vector<CriticalValue> enumerate_critical_values(const TripleType& t, const Rational& lo,
                                                     const Rational& hi) {
  require_ambient(t, "enumerate_critical_values");
  if (hi < lo) throw DomainError("inverted window [" + lo.str() + ", " + hi.str() + "]");
  if (lo < alpha_m(t)) {
    throw DomainError("window starts below alpha_m = " + alpha_m(t).str());
  }

  const Rational total_rank(t.total_rank());
  std::map<Rational, std::vector<Witness>> walls;
  for (const auto& [n1p, n2p] : wall_rank_pairs(t)) {
    const std::int64_t denom = wall_denominator(t, n1p, n2p);
    const Rational offset((n1p + n2p) * t.total_degree());
    // alpha = (N s' - K) / D  =>  s' = (alpha D + K) / N, monotone in alpha.
    Rational s_at_lo = (lo * Rational(denom) + offset) / total_rank;
    Rational s_at_hi = (hi * Rational(denom) + offset) / total_rank;
    if (denom < 0) std::swap(s_at_lo, s_at_hi);
    for (std::int64_t s = s_at_lo.ceil(); s <= s_at_hi.floor(); ++s) {
      Witness w{n1p, n2p, s};
      walls[wall_value(t, w)].push_back(w);
    }
  }

  std::vector<CriticalValue> out;
  out.reserve(walls.size());
  for (auto& [alpha, witnesses] : walls) {
    std::sort(witnesses.begin(), witnesses.end());
    out.push_back({alpha, std::move(witnesses)});
  }
  return out;
}

CriticalCheck is_critical(const TripleType& t, const Rational& alpha) {
  require_ambient(t, "is_critical");
  if (alpha < alpha_m(t)) {
    throw DomainError("critical values live in [alpha_m, inf); alpha = " + alpha.str());
  }
  for (const auto& [n1p, n2p] : wall_rank_pairs(t)) {
    const std::int64_t denom = wall_denominator(t, n1p, n2p);
    const Rational s =
        (alpha * Rational(denom) + Rational((n1p + n2p) * t.total_degree())) /
        Rational(t.total_rank());
    if (s.is_integer()) return {true, Witness{n1p, n2p, s.to_int64()}};
  }
  return {};
}

bool integer_genericity(const TripleType& t, std::int64_t m) {
  require_ambient(t, "integer_genericity");
  return std::gcd(t.total_rank(), t.total_degree() - m * t.n1()) == 1;
}

bool alpha_independent_possible(const TripleType& t) {
  require_ambient(t, "alpha_independent_possible");
  return std::gcd(std::gcd(t.n2(), t.total_rank()), t.total_degree()) != 1;
}

std::vector<Chamber> chambers(const TripleType& t, const ChamberOptions& options) {
  require_ambient(t, "chambers");
  const Rational lo = alpha_m(t);
  std::vector<Chamber> out;
  if (lo.sign() < 0) return out;

  if (t.n1() != t.n2()) {
    const Rational hi = alpha_M(t).value();
    if (hi <= lo) return out;
    Rational left = lo;
    for (const auto& wall : enumerate_critical_values(t, lo, hi)) {
      if (wall.alpha_c <= lo || wall.alpha_c >= hi) continue;
      out.push_back({left, wall.alpha_c});
      left = wall.alpha_c;
    }
    out.push_back({left, hi});
    return out;
  }

  Rational cap = max(lo, alpha_L(t));
  if (options.beyond_stabilization) {
    if (!options.cap) throw DomainError("beyond-stabilization chambers need an explicit cap");
    if (*options.cap < lo) throw DomainError("cap below alpha_m");
    cap = *options.cap;
  }
  Rational left = lo;
  for (const auto& wall : enumerate_critical_values(t, lo, cap)) {
    if (wall.alpha_c <= lo) continue;
    out.push_back({left, wall.alpha_c});
    left = wall.alpha_c;
  }
  out.push_back({left, ExtRational::infinity()});
  return out;
}

}  // namespace triples
