#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prmqc/distance.hpp"
#include "prmqc/hull.hpp"
#include "prmqc/quantum.hpp"

namespace prmqc {

nlohmann::json certificate_json(const std::optional<WeightCertificate>& cert);

/// Non-unit entries of the scaling vector as {"coordinate", "scalar"} pairs.
nlohmann::json scaling_witness_json(const HullTarget& target);

/// GV verdicts for reported parameters; empty when the bound's
/// preconditions do not hold.
std::optional<bool> gv_asymmetric_verdict(std::uint64_t n, std::uint64_t kappa, std::uint64_t c, std::uint64_t delta_z,
                                          std::uint64_t delta_x, int q);
std::optional<bool> gv_symmetric_verdict(std::uint64_t n, std::uint64_t kappa, std::uint64_t c, std::uint64_t delta,
                                         int q);

/// "[[n,kappa,dz/dx;c]]_q"; unknown distances print as "?".
std::string css_label(const CssParams& p);
std::string hermitian_label(const HermParams& p);

nlohmann::json to_json(const CssConstruction& c);
nlohmann::json to_json(const HermConstruction& c);

/// Fixed CSV columns shared by construction records and table rows.
std::string csv_header();
std::string csv_row(const nlohmann::json& record);

/// One-line human readable summary of a record.
std::string text_line(const nlohmann::json& record);

/// Geometry as printed alongside a parameter set; 0 marks an unstated value.
struct PrintedGeometry {
  int q = 0;
  int s = 0;
  int m = 0;
};

/// Known parameter sets reproduced by the table command.
struct TableRow {
  enum class Kind { CssPrm, CssSubfield, HermitianPrm, HermitianSubfield };
  std::string label;
  Kind kind;
  std::vector<int> args;  ///< construction arguments without the budget
  int q = 0;              ///< field of the quantum code
  std::uint64_t n = 0;
  std::uint64_t kappa = 0;
  std::uint64_t c = 0;
  std::uint64_t delta_z = 0;  ///< single distance for Hermitian rows
  std::uint64_t delta_x = 0;
  std::optional<PrintedGeometry> printed;
};

std::vector<TableRow> table_rows();

enum class RowStatus { Pass, BudgetLimited, Fail };
std::string_view to_string(RowStatus s) noexcept;

struct RowOutcome {
  TableRow row;
  RowStatus status = RowStatus::Fail;
  std::vector<std::string> problems;
  nlohmann::json record;
};

/// Builds the row's codes and compares against the stored parameters.
/// n, kappa and c must match exactly; a distance must match when certified
/// exactly and must not exceed the stored value when only bounded below.
RowOutcome run_table_row(const TableRow& row, std::uint64_t budget);

}  // namespace prmqc
