#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triples/critical_values.hpp"
#include "triples/rational.hpp"
#include "triples/triple_model.hpp"

namespace triples {

enum class FlipSide { Plus, Minus };

std::string to_string(FlipSide side);
FlipSide flip_side_from_string(const std::string& name);

/// A two-step splitting T' -> T -> T'' of the ambient type at a wall, with the
/// dimension data of the corresponding flip stratum.
struct FlipDecomposition {
  TripleType sub;
  TripleType quot;
  FlipSide side;
  /// -chi(quot, sub) - 1: projective fiber of extensions.
  std::int64_t fiber_dim;
  /// 1 - chi(sub, sub) - chi(quot, quot) - chi(quot, sub).
  std::int64_t stratum_dim;
  /// -chi(sub, quot).
  std::int64_t codim_bound;
  /// moduli_dimension(ambient).
  std::int64_t ambient_dim;

  friend bool operator==(const FlipDecomposition&, const FlipDecomposition&) = default;
};

struct FilteredDecomposition {
  FlipDecomposition decomposition;
  std::string reason;

  friend bool operator==(const FilteredDecomposition&, const FilteredDecomposition&) = default;
};

struct WallAnalysis {
  CriticalValue wall;
  std::vector<FlipDecomposition> plus_side;
  std::vector<FlipDecomposition> minus_side;
  /// Minimum codim_bound over both sides; nullopt stands for +inf (both empty).
  std::optional<std::int64_t> min_codim;
  /// Splittings that passed the numerical conditions but were dropped, with why.
  std::vector<FilteredDecomposition> filtered;

  friend bool operator==(const WallAnalysis&, const WallAnalysis&) = default;
};

struct FlipOptions {
  /// Also drop factors whose stable moduli on the relevant side of the wall are
  /// empty because the wall sits on the boundary of the factor's own range.
  bool strict_nonempty = false;
};

/// Necessary condition for a factor type to carry alpha-semistable triples:
/// 0 <= alpha_m(F) <= alpha, and alpha <= alpha_M(F) when the ranks differ.
/// Factors with a zero rank are plain bundles and always pass.
bool factor_admissible(const TripleType& factor, const Rational& alpha);

/// Every splitting (sub, quot) of t at the wall alpha_c: componentwise sum t,
/// equal alpha_c-slopes, strict inequality between n2/(n1+n2) of the two factors
/// (Plus when the sub's is smaller), both factors admissible. Both side lists
/// are sorted by (n1', n2', d1').
///
/// Throws DomainError when alpha_c is not a wall of t or is not strictly inside
/// (alpha_m, alpha_M): at the endpoints the flip locus is the whole stable moduli
/// space on the inner side.
WallAnalysis enumerate_flip_decompositions(const TripleType& t, const Rational& alpha_c, Genus g,
                                           const FlipOptions& options = {});

struct CodimViolation {
  Rational wall;
  FlipDecomposition decomposition;
  std::string failed_bound;
};

struct CodimReport {
  bool pass = true;
  std::size_t walls_checked = 0;
  std::size_t decompositions_checked = 0;
  std::vector<CodimViolation> counterexamples;
};

/// Checks -chi(sub, quot) >= g-1 and -chi(quot, sub) >= g-1 for every
/// decomposition at every interior wall alpha_c > 2g-2, and for the Plus side at
/// alpha_c = 2g-2. Walls come from `default_window`.
CodimReport verify_codim_theorem(const TripleType& t, Genus g, const FlipOptions& options = {});

}  // namespace triples
