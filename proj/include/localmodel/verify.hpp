#pragma once

#include "localmodel/groebner.hpp"
#include "localmodel/model.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace localmodel {

/// One chart to verify: its equations and the dimension of the affine
/// factor split off by the reductions.
struct ChartSpec {
  std::string label;
  std::vector<TypeProfile::Row> profile;
  PolyIdealSpec ideal;
  int affine_dim = 0;
  ChartPresentation presentation;
};

/// Chart ideal with a{i}_{row} names when every template has at most one
/// free column, x{i}_{row}_{col} otherwise.
PolyIdealSpec chart_ideal(const ChartPresentation& p);

ChartSpec chart_for_alcove(const std::string& label, const Alcove& a);

/// Selector: "tau", "extreme:<index>", "extremes", "default" (τ and all
/// extremes), "all", or the path of a profile file. Throws DomainError for
/// an unknown selector or an index out of range.
std::vector<ChartSpec> select_charts(int n, int r, const std::string& selector);

/// τ-chart of the parahoric model for the chain indices I. Two indices give
/// the AB = BA = π presentation.
ChartSpec parahoric_chart(int n, int r, const std::vector<int>& chain);

/// Profile rows t_1, ..., t_n, one row per line as 0/1 digits separated by
/// spaces or commas, or a JSON array of rows. Blank lines and lines starting
/// with '#' are skipped.
TypeProfile read_profile_file(const std::string& path);

enum class ChartStatus { Pass, Fail, Timeout, Error };
std::string to_string(ChartStatus s);

struct VerifyOptions {
  algebra::Field field = algebra::Field::rationals();
  std::chrono::milliseconds timeout{600'000};
  bool require_radical = false;
  bool deterministic = false;
  std::vector<algebra::MonomialOrder> radical_orders{algebra::MonomialOrder::degrevlex(),
                                                     algebra::MonomialOrder::lex()};
};

struct ChartReport {
  std::string label;
  std::vector<TypeProfile::Row> profile;
  PolyIdealSpec ideal;
  algebra::Field field;
  int affine_dim = 0;
  int expected_dim = 0;
  std::optional<bool> flat;
  std::optional<int> dim_special;
  std::optional<int> dim_generic;
  std::optional<algebra::RadicalCertificate> radical;
  long long wall_ms = 0;
  ChartStatus status = ChartStatus::Error;
  std::string message;
};

/// Flatness, both fibre dimensions (plus the affine factor) against
/// expected_dim, and the reducedness certificate of the special fibre.
ChartReport verify_chart(const ChartSpec& chart, int expected_dim, const VerifyOptions& opts);

/// Charts are distributed over a worker pool; the result keeps input order.
std::vector<ChartReport> verify_charts(const std::vector<ChartSpec>& charts, int expected_dim,
                                       const VerifyOptions& opts);

struct VerifySummary {
  int n = 0;
  int r = 0;
  std::vector<int> parahoric;
  std::vector<ChartReport> charts;

  /// Worst status over all charts: timeout beats fail beats error beats pass.
  ChartStatus status() const;
};

std::string report_to_json(const VerifySummary& summary);

/// Milliseconds budget from LOCALMODEL_TIMEOUT_SECS, or the fallback.
std::chrono::milliseconds timeout_from_env(std::chrono::milliseconds fallback);

} // namespace localmodel
