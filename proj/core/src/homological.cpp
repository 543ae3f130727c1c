#include "triples/homological.hpp"

#include <array>
#include <utility>

#include "triples/errors.hpp"

namespace triples {
namespace {

constexpr std::array<std::pair<ModelCase, const char*>, 5> kCaseNames{{
    {ModelCase::EqualRanks, "EqualRanks"},
    {ModelCase::N1Greater, "N1Greater"},
    {ModelCase::N1Less, "N1Less"},
    {ModelCase::EndpointAlphaM, "EndpointAlphaM"},
    {ModelCase::EndpointAlphaMax, "EndpointAlphaMax"},
}};

constexpr std::array<std::pair<FactorKind, const char*>, 3> kFactorNames{{
    {FactorKind::StableBundles, "M^s"},
    {FactorKind::PolystableBundles, "M"},
    {FactorKind::SymmetricPower, "Sym"},
}};

BaseFactor bundles(FactorKind kind, std::int64_t n, std::int64_t d, Genus g) {
  return {kind, n, d, stable_bundle_moduli_dim(n, d, g)};
}

ModelDescriptor assemble(ModelCase c, std::vector<BaseFactor> base, std::int64_t fiber,
                         std::int64_t total, std::string note) {
  std::int64_t accounted = fiber;
  for (const auto& f : base) accounted += f.dim;
  return {c, std::move(base), fiber, total, accounted, total == accounted, std::move(note)};
}

}  // namespace

std::int64_t chi(const TripleType& q, const TripleType& s, Genus g) {
  const std::int64_t one_minus_g = 1 - static_cast<std::int64_t>(g.value());
  const std::int64_t rank_part = q.n1() * s.n1() + q.n2() * s.n2() - q.n2() * s.n1();
  const std::int64_t degree_part = q.n1() * s.d1() - s.n1() * q.d1() + q.n2() * s.d2() -
                                   s.n2() * q.d2() - q.n2() * s.d1() + s.n1() * q.d2();
  return one_minus_g * rank_part + degree_part;
}

std::int64_t ext1_dim_under_vanishing(const TripleType& quotient, const TripleType& sub, Genus g,
                                      std::int64_t h0) {
  if (h0 < 0) throw DomainError("h0 must be non-negative");
  const std::int64_t dim = h0 - chi(quotient, sub, g);
  if (dim < 0) {
    throw HypothesisError("negative Ext^1 dimension " + std::to_string(dim) + " for chi(" +
                          quotient.str() + ", " + sub.str() +
                          "): vanishing hypotheses cannot hold");
  }
  return dim;
}

std::int64_t moduli_dimension(const TripleType& t, Genus g) {
  const std::int64_t n1 = t.n1();
  const std::int64_t n2 = t.n2();
  return (g.value() - 1) * (n1 * n1 + n2 * n2 - n1 * n2) - n1 * t.d2() + n2 * t.d1() + 1;
}

std::int64_t stable_bundle_moduli_dim(std::int64_t n, std::int64_t /*d*/, Genus g) {
  if (n < 1) throw DomainError("bundle rank must be positive");
  return n * n * (g.value() - 1) + 1;
}

std::int64_t large_alpha_fiber_dim(const TripleType& t, Genus g) {
  require_ambient(t, "large_alpha_fiber_dim");
  const std::int64_t n1 = t.n1();
  const std::int64_t n2 = t.n2();
  const std::int64_t gm1 = g.value() - 1;
  if (n1 == n2) {
    if (t.d1() <= t.d2()) throw DomainError("large-alpha regime needs d1 > d2 for n1 = n2");
    return n1 * (t.d1() - t.d2()) - 1;
  }
  if (t.mu1() <= t.mu2()) throw DomainError("large-alpha regime needs mu1 > mu2");
  const std::int64_t base = n2 * t.d1() - n1 * t.d2() - 1;
  return n1 > n2 ? base + n2 * (n1 - n2) * gm1 : base + n1 * (n2 - n1) * gm1;
}

std::int64_t extension_space_fiber_variant(const TripleType& t, Genus g) {
  require_ambient(t, "extension_space_fiber_variant");
  if (t.n1() == t.n2()) throw DomainError("extension-space variant only for n1 != n2");
  if (t.n1() < t.n2()) return extension_space_fiber_variant(dualize(t), g);
  if (t.mu1() <= t.mu2()) throw DomainError("large-alpha regime needs mu1 > mu2");
  const std::int64_t n1 = t.n1();
  const std::int64_t n2 = t.n2();
  return n2 * t.d1() - n1 * t.d2() + n1 * (n1 - n2) * (g.value() - 1) - 1;
}

std::string to_string(ModelCase c) {
  for (const auto& [k, name] : kCaseNames) {
    if (k == c) return name;
  }
  return "?";
}

ModelCase model_case_from_string(const std::string& name) {
  for (const auto& [k, n] : kCaseNames) {
    if (name == n) return k;
  }
  throw DomainError("unknown model case '" + name + "'");
}

std::string to_string(FactorKind k) {
  for (const auto& [kind, name] : kFactorNames) {
    if (kind == k) return name;
  }
  return "?";
}

FactorKind factor_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kFactorNames) {
    if (name == n) return k;
  }
  throw DomainError("unknown factor kind '" + name + "'");
}

ModelDescriptor alpha_m_model(const TripleType& t, Genus g) {
  require_ambient(t, "alpha_m_model");
  if (t.mu1() < t.mu2()) throw DomainError("alpha_m model needs mu1 >= mu2");
  std::vector<BaseFactor> base{bundles(FactorKind::PolystableBundles, t.n1(), t.d1(), g),
                               bundles(FactorKind::PolystableBundles, t.n2(), t.d2(), g)};
  const std::int64_t total = base[0].dim + base[1].dim;
  return assemble(ModelCase::EndpointAlphaM, std::move(base), 0, total,
                  "phi = 0 and E1, E2 polystable");
}

std::optional<ModelDescriptor> alpha_M_model(const TripleType& t, Genus g) {
  require_ambient(t, "alpha_M_model");
  if (t.n1() == t.n2() || t.mu1() <= t.mu2()) return std::nullopt;
  const bool n1_greater = t.n1() > t.n2();
  const std::int64_t gap_rank = n1_greater ? t.n1() - t.n2() : t.n2() - t.n1();
  const std::int64_t gap_degree = n1_greater ? t.d1() - t.d2() : t.d2() - t.d1();
  const std::int64_t kept_rank = n1_greater ? t.n2() : t.n1();
  const std::int64_t kept_degree = n1_greater ? t.d2() : t.d1();
  std::vector<BaseFactor> base{bundles(FactorKind::PolystableBundles, kept_rank, kept_degree, g),
                               bundles(FactorKind::PolystableBundles, gap_rank, gap_degree, g)};
  std::int64_t total = 0;
  for (const auto& f : base) total += f.dim;
  return assemble(ModelCase::EndpointAlphaMax, std::move(base), 0, total,
                  "polystable moduli at alpha_M split off the kernel-free part");
}

ModelDescriptor large_alpha_model(const TripleType& t, Genus g) {
  require_ambient(t, "large_alpha_model");
  if (t.mu1() < t.mu2()) throw DomainError("large-alpha model needs mu1 >= mu2");
  const std::int64_t total = moduli_dimension(t, g);

  if (t.mu1() == t.mu2()) {
    if (t.n1() == t.n2()) {
      return assemble(ModelCase::EndpointAlphaMax,
                      {bundles(FactorKind::PolystableBundles, t.n1(), t.d1(), g)}, 0, total,
                      "d1 = d2 collapse: N_alpha isomorphic to M(n, d) for all alpha > 0");
    }
    return alpha_m_model(t, g);
  }

  if (t.n1() == t.n2()) {
    const std::int64_t d = t.d1() - t.d2();
    auto model =
        assemble(ModelCase::EqualRanks,
                 {bundles(FactorKind::StableBundles, t.n1(), t.d2(), g),
                  BaseFactor{FactorKind::SymmetricPower, 0, d, d}},
                 large_alpha_fiber_dim(t, g), total, "");
    model.note = model.consistent
                     ? "P^N-fibration over M^s(n, d2) x Sym^d(X)"
                     : "INCONSISTENT: fibration accounting exceeds the moduli dimension by " +
                           std::to_string(model.accounted_dim - model.total_dim) +
                           " = d1 - d2 - 1";
    return model;
  }

  const bool n1_greater = t.n1() > t.n2();
  std::vector<BaseFactor> base =
      n1_greater ? std::vector<BaseFactor>{bundles(FactorKind::StableBundles, t.n1() - t.n2(),
                                                   t.d1() - t.d2(), g),
                                           bundles(FactorKind::StableBundles, t.n2(), t.d2(), g)}
                 : std::vector<BaseFactor>{bundles(FactorKind::StableBundles, t.n2() - t.n1(),
                                                   t.d2() - t.d1(), g),
                                           bundles(FactorKind::StableBundles, t.n1(), t.d1(), g)};
  auto model = assemble(n1_greater ? ModelCase::N1Greater : ModelCase::N1Less, std::move(base),
                        large_alpha_fiber_dim(t, g), total, "");
  if (!model.consistent) {
    throw ConsistencyError("large-alpha bookkeeping failed for " + t.str());
  }
  model.note = n1_greater ? "P^N-fibration over M^s(n1-n2, d1-d2) x M^s(n2, d2)"
                          : "P^N-fibration over M^s(n2-n1, d2-d1) x M^s(n1, d1)";
  return model;
}

}  // namespace triples
