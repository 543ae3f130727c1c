// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <concepts>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "triples/critical_values.hpp"
#include "triples/flip_loci.hpp"
#include "triples/homological.hpp"
#include "triples/parameter_bounds.hpp"
#include "triples/report.hpp"

using namespace triples;

namespace {

constexpr std::int64_t kMaxRank = 6;
constexpr std::int64_t kMaxDeg = 6;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  std::string extra;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  template <std::invocable F>
  void check(bool ok, F&& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }
};

std::string show(const TripleType& t) { return t.str(); }

std::set<Rational> wall_set(const TripleType& t) {
  std::set<Rational> out;
  if (const auto w = default_window(t)) {
    for (const auto& c : enumerate_critical_values(t, w->lo, w->hi)) out.insert(c.alpha_c);
  }
  return out;
}

template <class F>
void interior_walls(const TripleType& t, F&& f) {
  Rational lo, hi;
  if (!oracle::window(t, lo, hi) || lo.sign() < 0) return;
  const ExtRational top = oracle::aM(t);
  for (const auto& w : enumerate_critical_values(t, lo, hi)) {
    if (w.alpha_c <= lo || ExtRational(w.alpha_c) >= top) continue;
    f(w.alpha_c);
  }
}

// 1
Outcome wall_oracle() {
  Outcome o;
  oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
    Rational lo, hi;
    if (!oracle::window(t, lo, hi)) return;
    const auto expected = oracle::walls(t, lo, hi);
    std::map<Rational, std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>>> got;
    for (const auto& c : enumerate_critical_values(t, lo, hi)) {
      auto& ws = got[c.alpha_c];
      for (const auto& w : c.witnesses) ws.insert({w.n1p, w.n2p, w.s_prime});
    }
    o.check(got == expected, [&] { return show(t); });
  });
  return o;
}

// 2
Outcome gcd_soundness() {
  Outcome o;
  oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
    Rational lo, hi;
    if (!oracle::window(t, lo, hi)) return;
    const auto walls = oracle::walls(t, lo, hi);
    const std::int64_t n = t.n1() + t.n2();
    for (std::int64_t m = lo.ceil(); m <= hi.floor(); ++m) {
      const bool coprime = std::gcd(n, t.d1() + t.d2() - m * t.n1()) == 1;
      o.check(coprime == integer_genericity(t, m), [&] { return show(t) + " m=" + std::to_string(m); });
      if (coprime) {
        o.check(!walls.contains(Rational(m)), [&] { return show(t) + " wall at m=" + std::to_string(m); });
      }
    }
  });
  return o;
}

// 3
Outcome dimension_identity() {
  Outcome o;
  for (int g = 2; g <= 5; ++g) {
    oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
      const std::int64_t n1 = t.n1(), n2 = t.n2();
      const std::int64_t closed =
          (g - 1) * (n1 * n1 + n2 * n2 - n1 * n2) - n1 * t.d2() + n2 * t.d1() + 1;
      const Genus gg(g);
      o.check(1 - chi(t, t, gg) == closed && moduli_dimension(t, gg) == closed &&
                  1 - oracle::chi(t, t, g) == closed,
              [&] { return show(t) + " g=" + std::to_string(g); });
    });
  }
  return o;
}

// 4
Outcome chi_additivity() {
  Outcome o;
  for (int g : {2, 3}) {
    const Genus gg(g);
    oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
      const std::int64_t whole = chi(t, t, gg);
      oracle::splits(t, kMaxDeg, [&](const TripleType& a, const TripleType& b) {
        o.check(whole == chi(a, a, gg) + chi(b, b, gg) + chi(b, a, gg) + chi(a, b, gg),
                [&] { return show(a) + " + " + show(b) + " g=" + std::to_string(g); });
      });
    });
  }
  return o;
}

// 5
Outcome large_alpha_bookkeeping() {
  Outcome o;
  for (int g = 2; g <= 5; ++g) {
    const Genus gg(g);
    oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
      const std::int64_t n1 = t.n1(), n2 = t.n2();
      if (n1 <= n2 || t.d1() * n2 <= t.d2() * n1) return;
      Rational lo, hi;
      if (!oracle::window(t, lo, hi)) return;
      const std::int64_t fiber = n2 * t.d1() - n1 * t.d2() + n2 * (n1 - n2) * (g - 1) - 1;
      const std::int64_t sum =
          oracle::bundle_moduli_dim(n1 - n2, g) + oracle::bundle_moduli_dim(n2, g) + fiber;
      o.check(moduli_dimension(t, gg) == sum && large_alpha_fiber_dim(t, gg) == fiber,
              [&] { return show(t) + " g=" + std::to_string(g); });
    });
  }
  const TripleType anchor(2, 1, 1, 0);
  o.check(moduli_dimension(anchor, Genus(2)) == 5 && large_alpha_fiber_dim(anchor, Genus(2)) == 1,
          "anchor (2,1,1,0)");
  return o;
}

// 6
Outcome codim_theorem() {
  Outcome o;
  std::size_t scoped = 0;
  std::size_t unscoped = 0;
  std::size_t pure = 0;
  for (int g : {2, 3}) {
    const Genus gg(g);
    const Rational threshold(2 * g - 2);
    oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
      interior_walls(t, [&](const Rational& a) {
        if (a < threshold) return;
        const auto analysis = enumerate_flip_decompositions(t, a, gg);
        for (const auto* side : {&analysis.plus_side, &analysis.minus_side}) {
          for (const auto& d : *side) {
            const bool ok = -oracle::chi(d.sub, d.quot, g) >= g - 1 &&
                            -oracle::chi(d.quot, d.sub, g) >= g - 1;
            o.check(ok, [&] {
              std::ostringstream os;
              os << show(t) << " g=" << g << " wall " << a << " " << to_string(d.side) << " "
                 << d.sub << " + " << d.quot << ": -chi(sub,quot)="
                 << -oracle::chi(d.sub, d.quot, g)
                 << " -chi(quot,sub)=" << -oracle::chi(d.quot, d.sub, g);
              return os.str();
            });
            if (ok) continue;
            const bool in_scope = a > threshold || d.side == FlipSide::Plus;
            ++(in_scope ? scoped : unscoped);
            if (d.sub.n1() == 0 || d.sub.n2() == 0 || d.quot.n1() == 0 || d.quot.n2() == 0) ++pure;
          }
        }
      });
    });
  }
  const auto anchor = enumerate_flip_decompositions(TripleType(2, 1, 3, 0), Rational(3), Genus(2));
  o.check(!anchor.plus_side.empty() && anchor.plus_side[0].codim_bound == 2, "anchor wall 3");
  std::ostringstream os;
  os << "; " << scoped << " at alpha_c > 2g-2 or Plus at 2g-2, " << unscoped
     << " Minus-side at alpha_c = 2g-2; " << pure << " involve a factor with a zero rank";
  o.extra = os.str();
  return o;
}

// 7
Outcome duality() {
  Outcome o;
  oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
    const TripleType d = dualize(t);
    o.check(d == TripleType(t.n2(), t.n1(), -t.d2(), -t.d1()), [&] { return show(t) + " dual"; });
    o.check(wall_set(t) == wall_set(d), [&] { return show(t) + " walls"; });
    o.check(chambers(t) == chambers(d), [&] { return show(t) + " chambers"; });
    for (int g = 2; g <= 5; ++g) {
      o.check(moduli_dimension(t, Genus(g)) == moduli_dimension(d, Genus(g)),
              [&] { return show(t) + " dimension"; });
    }
    for (int g : {2, 3}) {
      interior_walls(t, [&](const Rational& a) {
        const auto here = enumerate_flip_decompositions(t, a, Genus(g));
        const auto there = enumerate_flip_decompositions(d, a, Genus(g));
        using Pairs = std::set<std::pair<TripleType, TripleType>>;
        Pairs plus_mapped, minus_mapped, plus_there, minus_there;
        for (const auto& x : here.plus_side) plus_mapped.insert({dualize(x.sub), dualize(x.quot)});
        for (const auto& x : here.minus_side) minus_mapped.insert({dualize(x.sub), dualize(x.quot)});
        for (const auto& x : there.plus_side) plus_there.insert({x.sub, x.quot});
        for (const auto& x : there.minus_side) minus_there.insert({x.sub, x.quot});
        o.check(plus_mapped == minus_there && minus_mapped == plus_there, [&] {
          std::ostringstream os;
          os << show(t) << " flips at " << a << " g=" << g;
          return os.str();
        });
      });
    }
  });
  return o;
}

// 8
Outcome thresholds() {
  Outcome o;
  oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
    const std::int64_t n1 = t.n1(), n2 = t.n2();
    const Rational am = oracle::am(t);
    if (n1 >= n2 && am.sign() > 0) {
      for (std::int64_t j = 0; j < n2; ++j) {
        const Rational expected = Rational(2 * n1 * n2) * am / Rational(n2 * (n1 - n2) + (j + 1) * (n1 + n2));
        o.check(alpha_j(t, j) == expected, [&] { return show(t) + " alpha_j value"; });
        if (j + 1 < n2) {
          o.check(alpha_j(t, j + 1) < alpha_j(t, j), [&] { return show(t) + " alpha_j order"; });
        }
      }
    }
    if (n1 == n2) {
      o.check(alpha_0(t) == Rational(t.d1() - t.d2()), [&] { return show(t) + " alpha_0 = d1-d2"; });
    }
    if (n1 >= n2 && am.sign() >= 0) {
      const Rational a0 = alpha_0(t);
      const bool equal = am.sign() == 0 || n2 == 1;
      o.check(a0 >= am && (a0 == am) == equal, [&] { return show(t) + " alpha_0 vs alpha_m"; });
    }
    if (n1 == 2 && n2 == 2) {
      o.check(alpha_L(t) == Rational(t.d1() - t.d2()), [&] { return show(t) + " alpha_L"; });
    }
  });
  return o;
}

// 9
Outcome worked_anchor() {
  Outcome o;
  const TripleType t(2, 1, 3, 0);
  const auto r = build_report(t, Genus(2));

  std::set<Rational> got;
  for (const auto& w : r.walls) got.insert(w.alpha_c);
  std::set<Rational> brute;
  for (const auto& [a, _] : oracle::walls(t, oracle::am(t), oracle::aM(t).value())) brute.insert(a);
  const std::set<Rational> fixture{Rational(3, 2), Rational(3), Rational(9, 2), Rational(6)};
  o.check(brute == fixture, "oracle walls differ from fixture");
  o.check(got == fixture, "report walls differ from fixture");

  o.check(r.chambers.size() == 3, "chamber count");
  for (const auto& c : r.chambers) {
    o.check(c.dimension == 7 && 1 - oracle::chi(t, t, 2) == 7, "chamber dimension");
  }

  const bool model = r.alpha_M_model && r.alpha_M_model->base_factors.size() == 2 &&
                     r.alpha_M_model->base_factors[0].rank == 1 &&
                     r.alpha_M_model->base_factors[0].degree == 0 &&
                     r.alpha_M_model->base_factors[1].rank == 1 &&
                     r.alpha_M_model->base_factors[1].degree == 3;
  o.check(model, "alpha_M model");

  const TripleType sub(1, 0, 2, 0);
  const TripleType quot(1, 1, 1, 0);
  const auto splits = oracle::flips(t, Rational(3));
  o.check(splits.contains(oracle::Split{sub, quot, true}), "oracle split at wall 3");
  const std::int64_t stratum =
      1 - oracle::chi(sub, sub, 2) - oracle::chi(quot, quot, 2) - oracle::chi(quot, sub, 2);
  bool found = false;
  for (const auto& a : r.wall_analyses) {
    if (a.wall.alpha_c != Rational(3)) continue;
    for (const auto& d : a.plus_side) {
      if (d.sub == sub && d.quot == quot) found = d.stratum_dim == 5 && stratum == 5;
    }
  }
  o.check(found, "flip stratum at wall 3");
  return o;
}

const InconsistencyFlag* find_flag(const TypeReport& r, const std::string& id) {
  for (const auto& f : r.inconsistencies) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

// 10
Outcome inconsistency_flags() {
  Outcome o;
  for (int g : {2, 3}) {
    oracle::sweep(kMaxRank, kMaxDeg, [&](const TripleType& t) {
      const std::int64_t n1 = t.n1(), n2 = t.n2();
      if (n1 == n2 && t.d1() > t.d2()) {
        const std::int64_t k = t.d1() - t.d2();
        const std::int64_t total = 1 - oracle::chi(t, t, g);
        const std::int64_t accounted = oracle::bundle_moduli_dim(n1, g) + k + (n1 * k - 1);
        const auto r = build_report(t, Genus(g));
        const auto* f = find_flag(r, "equal_rank_fibration_accounting");
        if (k >= 2) {
          o.check(f && f->expected == total && f->observed == accounted && total != accounted,
                  [&] { return show(t) + " equal-rank gap g=" + std::to_string(g); });
        } else {
          o.check(f == nullptr, [&] { return show(t) + " spurious equal-rank flag"; });
        }
      }
      if (n1 != n2 && t.d1() * n2 > t.d2() * n1) {
        const TripleType u = n1 > n2 ? t : TripleType(n2, n1, -t.d2(), -t.d1());
        const std::int64_t base = u.n2() * u.d1() - u.n1() * u.d2() - 1;
        const std::int64_t gap = u.n1() - u.n2();
        const std::int64_t bookkept = base + u.n2() * gap * (g - 1);
        const std::int64_t variant = base + u.n1() * gap * (g - 1);
        const auto r = build_report(t, Genus(g));
        const auto* f = find_flag(r, "large_alpha_fiber_coefficient");
        o.check(f && f->expected == bookkept && f->observed == variant,
                [&] { return show(t) + " fiber coefficient g=" + std::to_string(g); });
        const auto text = emit(r, Format::Json);
        o.check(text.find("large_alpha_fiber_coefficient") != std::string::npos,
                [&] { return show(t) + " flag missing from json"; });
      }
    });
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "wall enumeration equals brute force", wall_oracle},
      {2, "gcd criterion rules out integer walls", gcd_soundness},
      {3, "dimension identity 1 - chi(t,t)", dimension_identity},
      {4, "chi additivity over splits", chi_additivity},
      {5, "large-alpha bookkeeping for n1 > n2", large_alpha_bookkeeping},
      {6, "flip codimension bound g-1 at walls >= 2g-2", codim_theorem},
      {7, "duality of walls, chambers, dimensions and flip sides", duality},
      {8, "threshold algebra", thresholds},
      {9, "worked type (2,1,3,0), g = 2", worked_anchor},
      {10, "known inconsistencies flagged", inconsistency_flags},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures == 0 && o.cases > 0;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << o.cases << " cases, " << o.failures << " failures, " << secs << "s)";
    if (!pass && o.cases == 0) std::cout << "; no cases exercised";
    if (!o.first.empty()) std::cout << "; first: " << o.first;
    std::cout << o.extra << '\n';
  }
  return all ? 0 : 1;
}
