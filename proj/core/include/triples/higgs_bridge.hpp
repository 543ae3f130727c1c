#pragma once

#include <cstdint>
#include <string>

#include "triples/rational.hpp"
#include "triples/triple_model.hpp"

namespace triples {

/// Topological invariants of a U(p,q)-Higgs bundle V + W with deg V = a, deg W = b.
struct HiggsInvariants {
  std::int64_t p;
  std::int64_t q;
  std::int64_t a;
  std::int64_t b;
  Genus g;
};

struct MilnorWood {
  bool ok;
  /// min(p,q)(g-1) - |(aq - bp)/(p+q)|; negative when the bound fails.
  Rational margin;
};

/// |(aq - bp)/(p+q)| <= min(p,q)(g-1). Throws DomainError unless p, q >= 1.
MilnorWood milnor_wood_ok(const HiggsInvariants& h);

/// Which Higgs field component vanishes.
enum class Vanishing { GammaZero, BetaZero };

std::string to_string(Vanishing v);
Vanishing vanishing_from_string(const std::string& name);

struct HiggsTriple {
  TripleType type;
  Rational alpha;
  /// Non-empty for constructions obtained by symmetry rather than stated directly.
  std::string note;
};

/// GammaZero: E1 = V (x) K, E2 = W, giving (p, q, a + p(2g-2), b) at alpha = 2g-2.
/// BetaZero: the same with the roles of (V, p, a) and (W, q, b) exchanged,
/// giving (q, p, b + q(2g-2), a), flagged as a mirror construction.
HiggsTriple higgs_to_triple(const HiggsInvariants& h, Vanishing vanishing);

}  // namespace triples
