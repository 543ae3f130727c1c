#include "triples/parameter_bounds.hpp"

#include <array>
#include <utility>

#include "triples/errors.hpp"

namespace triples {
namespace {

constexpr std::array<std::pair<BoundKind, const char*>, 7> kKindNames{{
    {BoundKind::AlphaMMin, "alpha_m"},
    {BoundKind::AlphaMMax, "alpha_M"},
    {BoundKind::Alpha0, "alpha_0"},
    {BoundKind::AlphaJ, "alpha_j"},
    {BoundKind::AlphaT, "alpha_t"},
    {BoundKind::AlphaE, "alpha_e"},
    {BoundKind::AlphaL, "alpha_L"},
}};

void require_n1_ge_n2(const TripleType& t, const char* op) {
  require_ambient(t, op);
  if (t.n1() < t.n2()) {
    throw DomainError(std::string(op) + " needs n1 >= n2 (dualize first), got " + t.str());
  }
}

void require_n1_gt_n2(const TripleType& t, const char* op) {
  require_ambient(t, op);
  if (t.n1() <= t.n2()) throw DomainError(std::string(op) + " needs n1 > n2, got " + t.str());
}

}  // namespace

std::string to_string(BoundKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

BoundKind bound_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw DomainError("unknown bound kind '" + name + "'");
}

Rational alpha_m(const TripleType& t) {
  require_ambient(t, "alpha_m");
  return t.mu1() - t.mu2();
}

ExtRational alpha_M(const TripleType& t) {
  require_ambient(t, "alpha_M");
  if (t.n1() == t.n2()) return ExtRational::infinity();
  const std::int64_t gap = t.n1() > t.n2() ? t.n1() - t.n2() : t.n2() - t.n1();
  return (Rational(1) + Rational(t.total_rank(), gap)) * alpha_m(t);
}

Rational alpha_j(const TripleType& t, std::int64_t j) {
  require_n1_ge_n2(t, "alpha_j");
  if (j < 0 || j >= t.n2()) {
    throw DomainError("alpha_j index " + std::to_string(j) + " outside [0, n2)");
  }
  const std::int64_t n1 = t.n1();
  const std::int64_t n2 = t.n2();
  const std::int64_t denom = n2 * (n1 - n2) + (j + 1) * (n1 + n2);
  return Rational(2 * n1 * n2, denom) * alpha_m(t);
}

Rational alpha_0(const TripleType& t) {
  require_n1_ge_n2(t, "alpha_0");
  return alpha_j(t, 0);
}

Rational alpha_t(const TripleType& t) {
  require_n1_gt_n2(t, "alpha_t");
  const std::int64_t n1 = t.n1();
  const std::int64_t n2 = t.n2();
  return alpha_M(t).value() - Rational(n1 + n2, n2 * (n1 - n2));
}

Rational alpha_e(const TripleType& t) {
  require_n1_gt_n2(t, "alpha_e");
  return max(alpha_m(t), max(alpha_0(t), alpha_t(t)));
}

Rational alpha_L(const TripleType& t) {
  require_ambient(t, "alpha_L");
  if (t.n1() != t.n2()) throw DomainError("alpha_L needs n1 = n2, got " + t.str());
  const std::int64_t n = t.n1();
  return Rational(n * (n - 1)) * alpha_m(t);
}

std::vector<AlphaBound> all_bounds(const TripleType& t) {
  std::vector<AlphaBound> out;
  out.push_back({BoundKind::AlphaMMin, alpha_m(t), std::nullopt});
  out.push_back({BoundKind::AlphaMMax, alpha_M(t), std::nullopt});
  if (t.n1() >= t.n2()) {
    out.push_back({BoundKind::Alpha0, alpha_0(t), std::nullopt});
    for (std::int64_t j = 0; j < t.n2(); ++j) {
      out.push_back({BoundKind::AlphaJ, alpha_j(t, j), j});
    }
  }
  if (t.n1() > t.n2()) {
    out.push_back({BoundKind::AlphaT, alpha_t(t), std::nullopt});
    out.push_back({BoundKind::AlphaE, alpha_e(t), std::nullopt});
  }
  if (t.n1() == t.n2()) out.push_back({BoundKind::AlphaL, alpha_L(t), std::nullopt});
  return out;
}

}  // namespace triples
