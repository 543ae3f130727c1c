#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "triples/rational.hpp"

namespace triples {

/// Genus of the base curve. Always >= 2.
class Genus {
 public:
  explicit Genus(int g);
  int value() const { return g_; }
  /// The Higgs/Hermitian threshold 2g-2.
  std::int64_t two_g_minus_two() const { return 2 * static_cast<std::int64_t>(g_) - 2; }

  friend bool operator==(Genus, Genus) = default;

 private:
  int g_;
};

/// Discrete invariants (n1, n2, d1, d2) of a triple E2 -> E1.
///
/// Ranks are non-negative, not both zero, and a zero rank forces the matching
/// degree to zero. Ambient types (the ones whose moduli we study) additionally
/// have both ranks positive; see `is_ambient()`. Factors of a flip
/// decomposition, such as (1,0,2,0), are allowed one zero rank.
class TripleType {
 public:
  TripleType(std::int64_t n1, std::int64_t n2, std::int64_t d1, std::int64_t d2);

  std::int64_t n1() const { return n1_; }
  std::int64_t n2() const { return n2_; }
  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }

  std::int64_t total_rank() const { return n1_ + n2_; }
  std::int64_t total_degree() const { return d1_ + d2_; }
  bool is_ambient() const { return n1_ >= 1 && n2_ >= 1; }

  /// mu1 = d1/n1; throws DomainError when n1 = 0.
  Rational mu1() const;
  /// mu2 = d2/n2; throws DomainError when n2 = 0.
  Rational mu2() const;
  /// mu(E1 + E2) = (d1+d2)/(n1+n2).
  Rational total_slope() const;

  std::string str() const;

  friend auto operator<=>(const TripleType&, const TripleType&) = default;

 private:
  std::int64_t n1_, n2_, d1_, d2_;
};

/// Componentwise sum; the result must again satisfy the invariants.
TripleType operator+(const TripleType& a, const TripleType& b);
/// Componentwise difference a - b; throws if the result is not a valid type.
TripleType operator-(const TripleType& a, const TripleType& b);

std::ostream& operator<<(std::ostream& os, const TripleType& t);

/// Throws DomainError unless both ranks are positive.
void require_ambient(const TripleType& t, const char* op);

/// Candidate invariants of a subtriple, tied to the ambient type.
class SubtripleType {
 public:
  SubtripleType(std::int64_t n1p, std::int64_t n2p, std::int64_t d1p, std::int64_t d2p,
                TripleType ambient);

  std::int64_t n1p() const { return n1p_; }
  std::int64_t n2p() const { return n2p_; }
  std::int64_t d1p() const { return d1p_; }
  std::int64_t d2p() const { return d2p_; }
  const TripleType& ambient() const { return ambient_; }

  /// The subtriple's own invariants as a (possibly degenerate) TripleType.
  TripleType as_type() const { return TripleType(n1p_, n2p_, d1p_, d2p_); }

  friend auto operator<=>(const SubtripleType&, const SubtripleType&) = default;

 private:
  std::int64_t n1p_, n2p_, d1p_, d2p_;
  TripleType ambient_;
};

/// slope * alpha + constant.
struct AffineForm {
  Rational slope;
  Rational constant;

  Rational operator()(const Rational& alpha) const { return slope * alpha + constant; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// d / n. Throws DomainError when n < 1.
Rational slope(std::int64_t n, std::int64_t d);

/// mu_alpha(T) = (d1 + d2 + alpha*n2) / (n1 + n2).
Rational alpha_slope(const TripleType& t, const Rational& alpha);

/// mu_alpha(T') - mu_alpha(T). Negative for every proper subtriple iff T is alpha-stable.
Rational delta_alpha(const SubtripleType& sub, const Rational& alpha);

/// Delta_alpha(T') as an affine function of alpha.
AffineForm delta_alpha_form(const SubtripleType& sub);

/// (n1, n2, d1, d2) -> (n2, n1, -d2, -d1). An involution.
TripleType dualize(const TripleType& t);

}  // namespace triples
