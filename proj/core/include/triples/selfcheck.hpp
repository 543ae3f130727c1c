#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace triples {

struct SelfcheckOptions {
  std::int64_t max_total_rank = 4;
  std::int64_t max_abs_degree = 3;
  std::vector<int> genera{2, 3};
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failure, if any.
  std::string example;
};

/// Runs the algebraic identities (dimension, chi additivity, duality, codimension
/// bound, large-alpha bookkeeping, threshold ordering) over every type with
/// n1 + n2 <= max_total_rank and |d_i| <= max_abs_degree.
std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace triples
