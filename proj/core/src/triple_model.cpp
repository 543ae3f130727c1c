#include "triples/triple_model.hpp"

#include <ostream>

#include "triples/errors.hpp"

namespace triples {

Genus::Genus(int g) : g_(g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + std::to_string(g));
}

TripleType::TripleType(std::int64_t n1, std::int64_t n2, std::int64_t d1, std::int64_t d2)
    : n1_(n1), n2_(n2), d1_(d1), d2_(d2) {
  if (n1 < 0 || n2 < 0) throw DomainError("negative rank in type " + str());
  if (n1 == 0 && n2 == 0) throw DomainError("type with both ranks zero");
  if (n1 == 0 && d1 != 0) throw DomainError("rank-zero E1 must have degree zero: " + str());
  if (n2 == 0 && d2 != 0) throw DomainError("rank-zero E2 must have degree zero: " + str());
}

Rational TripleType::mu1() const { return slope(n1_, d1_); }
Rational TripleType::mu2() const { return slope(n2_, d2_); }
Rational TripleType::total_slope() const { return Rational(total_degree(), total_rank()); }

std::string TripleType::str() const {
  return "(" + std::to_string(n1_) + "," + std::to_string(n2_) + "," + std::to_string(d1_) +
         "," + std::to_string(d2_) + ")";
}

TripleType operator+(const TripleType& a, const TripleType& b) {
  return TripleType(a.n1() + b.n1(), a.n2() + b.n2(), a.d1() + b.d1(), a.d2() + b.d2());
}

TripleType operator-(const TripleType& a, const TripleType& b) {
  return TripleType(a.n1() - b.n1(), a.n2() - b.n2(), a.d1() - b.d1(), a.d2() - b.d2());
}

std::ostream& operator<<(std::ostream& os, const TripleType& t) { return os << t.str(); }

void require_ambient(const TripleType& t, const char* op) {
  if (!t.is_ambient()) {
    throw DomainError(std::string(op) + ": both ranks must be positive, got " + t.str());
  }
}

SubtripleType::SubtripleType(std::int64_t n1p, std::int64_t n2p, std::int64_t d1p,
                             std::int64_t d2p, TripleType ambient)
    : n1p_(n1p), n2p_(n2p), d1p_(d1p), d2p_(d2p), ambient_(ambient) {
  require_ambient(ambient_, "SubtripleType");
  if (n1p < 0 || n1p > ambient_.n1() || n2p < 0 || n2p > ambient_.n2()) {
    throw DomainError("subtriple ranks out of range for ambient " + ambient_.str());
  }
  if (n1p == 0 && n2p == 0) throw DomainError("subtriple ranks (0,0)");
  if (n1p == 0 && d1p != 0) throw DomainError("subtriple with n1' = 0 must have d1' = 0");
  if (n2p == 0 && d2p != 0) throw DomainError("subtriple with n2' = 0 must have d2' = 0");
}

Rational slope(std::int64_t n, std::int64_t d) {
  if (n < 1) throw DomainError("slope of a rank " + std::to_string(n) + " bundle");
  return Rational(d, n);
}

Rational alpha_slope(const TripleType& t, const Rational& alpha) {
  return (Rational(t.total_degree()) + alpha * Rational(t.n2())) / Rational(t.total_rank());
}

Rational delta_alpha(const SubtripleType& sub, const Rational& alpha) {
  return alpha_slope(sub.as_type(), alpha) - alpha_slope(sub.ambient(), alpha);
}

AffineForm delta_alpha_form(const SubtripleType& sub) {
  const TripleType& t = sub.ambient();
  const std::int64_t np = sub.n1p() + sub.n2p();
  return AffineForm{
      Rational(sub.n2p(), np) - Rational(t.n2(), t.total_rank()),
      Rational(sub.d1p() + sub.d2p(), np) - t.total_slope(),
  };
}

TripleType dualize(const TripleType& t) { return TripleType(t.n2(), t.n1(), -t.d2(), -t.d1()); }

}  // namespace triples
