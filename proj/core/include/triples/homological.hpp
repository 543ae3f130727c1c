#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triples/triple_model.hpp"

namespace triples {

/// chi(T'', T'): Euler characteristic of the complex governing extensions
/// 0 -> T' -> T -> T'' -> 0.
///
/// ARGUMENT ORDER MATTERS. The first argument is the QUOTIENT T'' and the second
/// the SUB T'; the formula is not symmetric. Either type may have one zero rank.
///
///   (1-g)(n1'' n1' + n2'' n2' - n2'' n1')
///     + n1'' d1' - n1' d1'' + n2'' d2' - n2' d2'' - n2'' d1' + n1' d2''
std::int64_t chi(const TripleType& quotient, const TripleType& sub, Genus g);

/// dim Ext^1(T'', T') = h0 - chi(T'', T') when H^2 vanishes.
///
/// The caller vouches for the vanishing hypotheses and supplies h0 (0 for
/// non-isomorphic stable triples of equal slope, 1 for T' = T'' stable).
/// Throws HypothesisError if the result would be negative.
std::int64_t ext1_dim_under_vanishing(const TripleType& quotient, const TripleType& sub, Genus g,
                                      std::int64_t h0);

/// (g-1)(n1^2 + n2^2 - n1 n2) - n1 d2 + n2 d1 + 1, the dimension of the stable
/// moduli at a smooth point. Equals 1 - chi(t, t).
std::int64_t moduli_dimension(const TripleType& t, Genus g);

/// n^2 (g-1) + 1, the dimension of the moduli of stable bundles of rank n.
std::int64_t stable_bundle_moduli_dim(std::int64_t n, std::int64_t d, Genus g);

/// Fiber dimension N of the projective-bundle model for large alpha:
///   n1 = n2 = n:  n(d1 - d2) - 1                        (needs d1 > d2)
///   n1 > n2:      n2 d1 - n1 d2 + n2(n1-n2)(g-1) - 1    (needs mu1 > mu2)
///   n1 < n2:      n2 d1 - n1 d2 + n1(n2-n1)(g-1) - 1    (needs mu1 > mu2)
std::int64_t large_alpha_fiber_dim(const TripleType& t, Genus g);

/// The extension-space dimension stated alongside the large-alpha analysis for
/// n1 > n2 uses n1(n1-n2)(g-1) rather than n2(n1-n2)(g-1). This returns that
/// variant minus one, so it can be compared against `large_alpha_fiber_dim`.
std::int64_t extension_space_fiber_variant(const TripleType& t, Genus g);

enum class ModelCase { EqualRanks, N1Greater, N1Less, EndpointAlphaM, EndpointAlphaMax };

std::string to_string(ModelCase c);
ModelCase model_case_from_string(const std::string& name);

enum class FactorKind { StableBundles, PolystableBundles, SymmetricPower };

std::string to_string(FactorKind k);
FactorKind factor_kind_from_string(const std::string& name);

/// One factor of the base of a model: M^s(rank, degree), M(rank, degree) or Sym^degree(X).
struct BaseFactor {
  FactorKind kind;
  std::int64_t rank;  // 0 for SymmetricPower
  std::int64_t degree;
  std::int64_t dim;

  friend bool operator==(const BaseFactor&, const BaseFactor&) = default;
};

/// Birational model of a moduli space: a P^fiber_dim-fibration over the product
/// of base factors (fiber_dim = 0 means isomorphic to the base).
struct ModelDescriptor {
  ModelCase model_case;
  std::vector<BaseFactor> base_factors;
  std::int64_t fiber_dim;
  /// Dimension of the moduli space itself.
  std::int64_t total_dim;
  /// Sum of base dims plus fiber_dim.
  std::int64_t accounted_dim;
  /// total_dim == accounted_dim.
  bool consistent;
  std::string note;

  friend bool operator==(const ModelDescriptor&, const ModelDescriptor&) = default;
};

/// Large-alpha birational model. Requires mu1 >= mu2.
///
/// mu1 = mu2 degenerates: for n1 = n2 the moduli are M(n, d) for every alpha > 0;
/// for n1 != n2 the range collapses to alpha_m = alpha_M = 0 and the alpha_m
/// model is returned.
ModelDescriptor large_alpha_model(const TripleType& t, Genus g);

/// Moduli at alpha = alpha_m: M(n1, d1) x M(n2, d2). Requires mu1 >= mu2.
ModelDescriptor alpha_m_model(const TripleType& t, Genus g);

/// Moduli at alpha = alpha_M for n1 != n2 and mu1 > mu2:
/// M(n2, d2) x M(n1-n2, d1-d2) (n1 > n2), M(n1, d1) x M(n2-n1, d2-d1) (n1 < n2).
/// Returns nullopt otherwise.
std::optional<ModelDescriptor> alpha_M_model(const TripleType& t, Genus g);

}  // namespace triples
