#include "triples/higgs_bridge.hpp"

#include <algorithm>

#include "triples/errors.hpp"

namespace triples {
namespace {

void require_ranks(const HiggsInvariants& h) {
  if (h.p < 1 || h.q < 1) throw DomainError("U(p,q) invariants need p, q >= 1");
}

}  // namespace

MilnorWood milnor_wood_ok(const HiggsInvariants& h) {
  require_ranks(h);
  const Rational lhs = abs(Rational(h.a * h.q - h.b * h.p, h.p + h.q));
  const Rational rhs(std::min(h.p, h.q) * (h.g.value() - 1));
  return {lhs <= rhs, rhs - lhs};
}

std::string to_string(Vanishing v) { return v == Vanishing::GammaZero ? "gamma=0" : "beta=0"; }

Vanishing vanishing_from_string(const std::string& name) {
  if (name == "gamma=0" || name == "gamma" || name == "GammaZero") return Vanishing::GammaZero;
  if (name == "beta=0" || name == "beta" || name == "BetaZero") return Vanishing::BetaZero;
  throw DomainError("unknown vanishing component '" + name + "'");
}

HiggsTriple higgs_to_triple(const HiggsInvariants& h, Vanishing vanishing) {
  require_ranks(h);
  const std::int64_t k = h.g.two_g_minus_two();
  if (vanishing == Vanishing::GammaZero) {
    return {TripleType(h.p, h.q, h.a + h.p * k, h.b), Rational(k), ""};
  }
  return {TripleType(h.q, h.p, h.b + h.q * k, h.a), Rational(k),
          "mirror construction: roles of V and W exchanged"};
}

}  // namespace triples
