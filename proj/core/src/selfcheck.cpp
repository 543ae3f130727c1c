#include "triples/selfcheck.hpp"

#include <functional>

#include "triples/critical_values.hpp"
#include "triples/errors.hpp"
#include "triples/flip_loci.hpp"
#include "triples/homological.hpp"
#include "triples/parameter_bounds.hpp"
#include "triples/triple_model.hpp"

namespace triples {
namespace {

void for_each_type(const SelfcheckOptions& o, const std::function<void(const TripleType&)>& f) {
  for (std::int64_t n1 = 1; n1 < o.max_total_rank; ++n1) {
    for (std::int64_t n2 = 1; n1 + n2 <= o.max_total_rank; ++n2) {
      for (std::int64_t d1 = -o.max_abs_degree; d1 <= o.max_abs_degree; ++d1) {
        for (std::int64_t d2 = -o.max_abs_degree; d2 <= o.max_abs_degree; ++d2) {
          f(TripleType(n1, n2, d1, d2));
        }
      }
    }
  }
}

// Componentwise splits t = a + b where both parts are non-zero triple types.
void for_each_split(const TripleType& t,
                    const std::function<void(const TripleType&, const TripleType&)>& f) {
  for (std::int64_t a1 = 0; a1 <= t.n1(); ++a1) {
    for (std::int64_t a2 = 0; a2 <= t.n2(); ++a2) {
      if ((a1 == 0 && a2 == 0) || (a1 == t.n1() && a2 == t.n2())) continue;
      const std::int64_t b1 = t.n1() - a1;
      const std::int64_t b2 = t.n2() - a2;
      for (std::int64_t e1 = -4; e1 <= 4; ++e1) {
        for (std::int64_t e2 = -4; e2 <= 4; ++e2) {
          if ((a1 == 0 && e1 != 0) || (a2 == 0 && e2 != 0)) continue;
          if ((b1 == 0 && t.d1() != e1) || (b2 == 0 && t.d2() != e2)) continue;
          const TripleType a(a1, a2, e1, e2);
          f(a, t - a);
        }
      }
    }
  }
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.example = what;
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

}  // namespace

std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& options) {
  Recorder dim("dimension identity 1 - chi(t,t)");
  Recorder additivity("chi additivity over splits");
  Recorder duality("duality of walls, chambers and dimension");
  Recorder codim("codimension bound at walls >= 2g-2");
  Recorder bookkeeping("large-alpha bookkeeping (n1 > n2)");
  Recorder thresholds("alpha_j strictly decreasing");

  for (int gv : options.genera) {
    const Genus g(gv);
    for_each_type(options, [&](const TripleType& t) {
      const std::string tag = t.str() + " g=" + std::to_string(gv);
      dim.check(1 - chi(t, t, g) == moduli_dimension(t, g), tag);

      for_each_split(t, [&](const TripleType& a, const TripleType& b) {
        additivity.check(
            chi(t, t, g) == chi(a, a, g) + chi(b, b, g) + chi(b, a, g) + chi(a, b, g),
            tag + " split " + a.str());
      });

      const TripleType dual = dualize(t);
      duality.check(moduli_dimension(t, g) == moduli_dimension(dual, g) &&
                        chambers(t) == chambers(dual),
                    tag);
      if (const auto w = default_window(t); w && alpha_m(t).sign() >= 0) {
        duality.check(enumerate_critical_values(t, w->lo, w->hi).size() ==
                          enumerate_critical_values(dual, w->lo, w->hi).size(),
                      tag + " wall count");
      }

      const CodimReport report = verify_codim_theorem(t, g);
      codim.check(report.pass, tag);

      if (t.n1() > t.n2() && t.mu1() > t.mu2()) {
        const std::int64_t accounted = stable_bundle_moduli_dim(t.n1() - t.n2(), 0, g) +
                                       stable_bundle_moduli_dim(t.n2(), 0, g) +
                                       large_alpha_fiber_dim(t, g);
        bookkeeping.check(accounted == moduli_dimension(t, g), tag);
      }

      if (gv == options.genera.front() && t.n1() >= t.n2() && t.mu1() > t.mu2()) {
        for (std::int64_t j = 0; j + 1 < t.n2(); ++j) {
          thresholds.check(alpha_j(t, j + 1) < alpha_j(t, j), tag + " j=" + std::to_string(j));
        }
      }
    });
  }
  return {dim.take(), additivity.take(), duality.take(), codim.take(), bookkeeping.take(),
          thresholds.take()};
}

}  // namespace triples
