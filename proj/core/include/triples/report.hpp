#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "triples/critical_values.hpp"
#include "triples/flip_loci.hpp"
#include "triples/homological.hpp"
#include "triples/parameter_bounds.hpp"
#include "triples/rational.hpp"
#include "triples/triple_model.hpp"

namespace triples {

struct ChamberReport {
  Chamber chamber;
  /// Expected dimension of the stable moduli at a smooth point; constant across chambers.
  std::int64_t dimension;
  /// True when the chamber meets [2g-2, inf), where stable points are smooth.
  bool smooth;
  std::string note;

  friend bool operator==(const ChamberReport&, const ChamberReport&) = default;
};

enum class ClaimStatus { Asserted, NotApplicable, Silent };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& name);

/// A non-emptiness / irreducibility / smoothness claim together with the
/// hypotheses it was checked against and the alpha range it covers.
struct Claim {
  std::string name;
  ClaimStatus status;
  std::string hypotheses;
  std::optional<Rational> range_lo;
  std::optional<ExtRational> range_hi;

  friend bool operator==(const Claim&, const Claim&) = default;
};

/// A known mismatch between two closed forms, surfaced rather than reconciled.
struct InconsistencyFlag {
  std::string id;
  std::string detail;
  std::int64_t expected;
  std::int64_t observed;

  friend bool operator==(const InconsistencyFlag&, const InconsistencyFlag&) = default;
};

struct ReportOptions {
  /// Restricts the wall listing; must start at or above alpha_m.
  std::optional<Window> window;
  bool strict_nonempty = false;
  bool beyond_stabilization = false;
};

struct TypeReport {
  TripleType type;
  Genus genus;
  std::vector<AlphaBound> bounds;
  std::optional<Window> window;
  std::vector<CriticalValue> walls;
  std::vector<ChamberReport> chambers;
  std::vector<WallAnalysis> wall_analyses;
  std::optional<ModelDescriptor> alpha_m_model;
  std::optional<ModelDescriptor> alpha_M_model;
  std::optional<ModelDescriptor> large_alpha;
  std::vector<Claim> claims;
  std::vector<InconsistencyFlag> inconsistencies;
  std::vector<std::string> notes;

  friend bool operator==(const TypeReport&, const TypeReport&) = default;
};

/// Assembles every quantity for one type. Claims are only asserted when their
/// hypotheses are met; otherwise they are marked not applicable or silent.
/// Throws DomainError only for a window below alpha_m or inverted.
TypeReport build_report(const TripleType& t, Genus g, const ReportOptions& options = {});

enum class Format { Json, CsvWalls, PlotData };

std::string to_string(Format f);
Format format_from_string(const std::string& name);

/// Deterministic serialization. Json is the complete report; CsvWalls has one
/// row per wall (alpha_num, alpha_den, witness_count, min_codim) where min_codim
/// is "na" at the range endpoints and "inf" for a wall with no decompositions;
/// PlotData is (alpha, dimension) step data in decimals and is lossy.
void emit(const TypeReport& report, Format format, std::ostream& out);
std::string emit(const TypeReport& report, Format format);

/// Inverse of emit(report, Format::Json).
TypeReport parse_report_json(const std::string& text);

}  // namespace triples
