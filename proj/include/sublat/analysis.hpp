#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sublat/constructors.hpp"
#include "sublat/criteria.hpp"
#include "sublat/series.hpp"

namespace sublat {

/// Parses `C(n) | D(n) | S(n) | A(n) | K4 | NM(n,m,t) | SL(2,p) | PSL(2,p) |
/// DP(spec,spec)`. Syntax errors throw ParseError with the offending position;
/// parameter constraints throw ConstraintViolation.
GroupSpec parse_spec(std::string_view text);

enum class ReportFormat { Text, Json };
enum class Section { Lattice, Counts, Verdicts, Series };

std::string to_string(Section s);
Section section_from_string(std::string_view s);
/// Comma-separated list such as "lattice,counts".
std::vector<Section> parse_sections(std::string_view list);

struct AnalysisRequest {
  GroupSpec spec;
  ReportFormat format = ReportFormat::Json;
  std::vector<Section> sections{Section::Lattice, Section::Counts, Section::Verdicts};
  Bounds bounds;
  unsigned threads = 1;

  /// Sections non-empty, bounds and thread count positive.
  void validate() const;
};

struct ClassSummary {
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  std::uint64_t normalizer_order = 0;
  bool supersolvable = false;
  bool nilpotent = false;
  /// Generators of the representative as 0-based image lists.
  std::vector<std::vector<Point>> generators;

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

struct LatticeSection {
  std::uint64_t class_count = 0;
  std::uint64_t total_subgroups = 0;
  std::vector<ClassSummary> classes;

  friend bool operator==(const LatticeSection&, const LatticeSection&) = default;
};

struct SeriesSection {
  SeriesReport derived;
  SeriesReport upper_central;

  friend bool operator==(const SeriesSection&, const SeriesSection&) = default;
};

struct Report {
  std::string spec;
  std::uint64_t order = 0;
  std::uint32_t point_base = 0;
  std::optional<LatticeSection> lattice;
  std::optional<CountsReport> counts;  // verdicts are carried separately
  std::optional<std::vector<Verdict>> verdicts;
  std::optional<SeriesSection> series;

  friend bool operator==(const Report&, const Report&) = default;
};

Report analyze(const AnalysisRequest& request);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);

/// Mirrors a GAP session: lattice summary, class table, then filtered counts.
/// Points are shown 1-based.
std::string render_text(const Report& report);

std::string serialize(const Report& report, ReportFormat format);

}  // namespace sublat
