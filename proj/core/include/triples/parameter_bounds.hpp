#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triples/rational.hpp"
#include "triples/triple_model.hpp"

namespace triples {

enum class BoundKind { AlphaMMin, AlphaMMax, Alpha0, AlphaJ, AlphaT, AlphaE, AlphaL };

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& name);

/// A named threshold of the stability parameter.
struct AlphaBound {
  BoundKind kind;
  ExtRational value;
  /// Index j, only for AlphaJ.
  std::optional<std::int64_t> j;

  friend bool operator==(const AlphaBound&, const AlphaBound&) = default;
};

/// alpha_m = mu1 - mu2, the lower end of the parameter range.
Rational alpha_m(const TripleType& t);

/// alpha_M = (1 + (n1+n2)/|n1-n2|)(mu1 - mu2), or +inf when n1 = n2.
ExtRational alpha_M(const TripleType& t);

/// alpha_j = 2 n1 n2 (mu1 - mu2) / (n2(n1-n2) + (j+1)(n1+n2)).
/// Requires n1 >= n2 and 0 <= j < n2; dualize first otherwise.
Rational alpha_j(const TripleType& t, std::int64_t j);

/// alpha_0, the injectivity threshold. Equals d1 - d2 when n1 = n2.
Rational alpha_0(const TripleType& t);

/// alpha_t = alpha_M - (n1+n2)/(n2(n1-n2)). Requires n1 > n2. May lie below alpha_m.
Rational alpha_t(const TripleType& t);

/// max{alpha_m, alpha_0, alpha_t}. Requires n1 > n2.
Rational alpha_e(const TripleType& t);

/// Stabilization threshold n(n-1)(mu1 - mu2) for n1 = n2 = n.
Rational alpha_L(const TripleType& t);

/// Every threshold defined for this type, in a fixed order:
/// alpha_m, alpha_M, then alpha_0, alpha_j (j ascending), alpha_t, alpha_e, alpha_L
/// where their preconditions hold. For n1 < n2 the n1 >= n2 thresholds are omitted.
std::vector<AlphaBound> all_bounds(const TripleType& t);

}  // namespace triples
