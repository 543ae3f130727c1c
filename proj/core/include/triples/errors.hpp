#pragma once

#include <stdexcept>
#include <string>

namespace triples {

/// Input outside an operation's domain (bad type, inverted window, threshold
/// requested for the wrong rank ordering, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller-asserted hypotheses produced an impossible value (e.g. a negative
/// Ext^1 dimension).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same number disagreed. Indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace triples
