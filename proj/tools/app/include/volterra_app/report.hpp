#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "volterra_app/io.hpp"

namespace volterra::app {

struct ReportRow {
  std::string quantity;
  std::optional<double> symbolic;
  std::optional<double> numeric;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Comparison table; a row passes when error <= tolerance.
class ReportTable {
 public:
  explicit ReportTable(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<ReportRow>& rows() const { return rows_; }

  void add(std::string quantity, std::optional<double> symbolic, std::optional<double> numeric, double error,
           double tolerance);
  /// A yes/no check recorded as error 0 (pass) or 1 (fail) against tolerance 0.
  void add_check(std::string quantity, bool ok);
  void append(const ReportTable& other);

  bool all_pass() const;
  json to_json() const;
  std::string to_csv() const;
  void print(std::ostream& out) const;

 private:
  std::string title_;
  std::vector<ReportRow> rows_;
};

/// Writes tables as JSON (extension .json) or CSV (anything else).
void write_tables(const std::string& path, const std::vector<ReportTable>& tables, const json& extra = json::object());

}  // namespace volterra::app
