#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "triples/rational.hpp"
#include "triples/triple_model.hpp"

namespace triples {

/// Subtriple invariants witnessing a wall. Only the degree sum s' = d1' + d2'
/// enters the wall equation, so the split is left to the flip analysis.
struct Witness {
  std::int64_t n1p;
  std::int64_t n2p;
  std::int64_t s_prime;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// A critical value alpha_c with every witness in lexicographic order.
struct CriticalValue {
  Rational alpha_c;
  std::vector<Witness> witnesses;

  friend bool operator==(const CriticalValue&, const CriticalValue&) = default;
};

/// Open interval (lower, upper) free of effective walls.
struct Chamber {
  Rational lower;
  ExtRational upper;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// Closed parameter window [lo, hi].
struct Window {
  Rational lo;
  Rational hi;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Rank pairs (n1', n2') allowed in the wall equation: 0 <= ni' <= ni,
/// (n1', n2') != (0, 0) and n1' n2 != n1 n2'. Ordered by n2' then n1'.
std::vector<std::pair<std::int64_t, std::int64_t>> wall_rank_pairs(const TripleType& t);

/// alpha = [(n1+n2) s' - (n1'+n2')(d1+d2)] / (n1' n2 - n1 n2').
Rational wall_value(const TripleType& t, const Witness& w);

/// Distance between consecutive walls of one (n1', n2') family: (n1+n2)/|n1' n2 - n1 n2'|.
Rational wall_spacing(const TripleType& t, std::int64_t n1p, std::int64_t n2p);

/// The window the artifact analyses by default: [alpha_m, alpha_M] for n1 != n2,
/// [alpha_m, max(alpha_m, alpha_L)] for n1 = n2. Empty when alpha_M < alpha_m.
std::optional<Window> default_window(const TripleType& t);

/// All critical values in [lo, hi], sorted, deduplicated, with complete witness
/// lists. For each rank pair the wall is affine in s', so the window pins s' to a
/// finite integer range that is iterated directly.
/// Throws DomainError if hi < lo or lo < alpha_m.
std::vector<CriticalValue> enumerate_critical_values(const TripleType& t, const Rational& lo,
                                                     const Rational& hi);

struct CriticalCheck {
  bool critical = false;
  std::optional<Witness> witness;
};

/// Whether alpha is a critical value; reports the first witness in
/// `wall_rank_pairs` order. Throws DomainError for alpha < alpha_m.
CriticalCheck is_critical(const TripleType& t, const Rational& alpha);

/// GCD(n1+n2, d1+d2 - m n1) == 1. When true, m is not a wall and there is no
/// alpha-independent semistability.
bool integer_genericity(const TripleType& t, std::int64_t m);

/// False when GCD(n2, n1+n2, d1+d2) == 1 (alpha-independent strict
/// semistability impossible); true means only that it is not excluded.
bool alpha_independent_possible(const TripleType& t);

struct ChamberOptions {
  /// For n1 = n2 only: keep walls above alpha_L, up to `cap`.
  bool beyond_stabilization = false;
  std::optional<Rational> cap;
};

/// Chamber decomposition by interior walls.
///
/// n1 != n2: chambers partition (alpha_m, alpha_M). n1 = n2: walls in
/// (alpha_m, alpha_L] cut the range and the last chamber is unbounded above,
/// because the moduli stop changing past alpha_L. Empty when alpha_m < 0 or the
/// parameter range has no interior (alpha_M <= alpha_m): no semistable triples exist.
std::vector<Chamber> chambers(const TripleType& t, const ChamberOptions& options = {});

}  // namespace triples
