#include "volterra_app/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

namespace volterra::app {

namespace {

std::string cell(std::optional<double> v) { return v ? fmt::format("{:.10g}", *v) : "-"; }

json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void ReportTable::add(std::string quantity, std::optional<double> symbolic, std::optional<double> numeric,
                      double error, double tolerance) {
  rows_.push_back(ReportRow{std::move(quantity), symbolic, numeric, error, tolerance, error <= tolerance});
}

void ReportTable::add_check(std::string quantity, bool ok) {
  add(std::move(quantity), std::nullopt, std::nullopt, ok ? 0.0 : 1.0, 0.0);
}

void ReportTable::append(const ReportTable& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool ReportTable::all_pass() const {
  for (const auto& r : rows_)
    if (!r.pass) return false;
  return true;
}

json ReportTable::to_json() const {
  json rows = json::array();
  for (const auto& r : rows_)
    rows.push_back(json{{"quantity", r.quantity},
                        {"symbolic", number_or_null(r.symbolic)},
                        {"numeric", number_or_null(r.numeric)},
                        {"error", number_or_null(r.error)},
                        {"tolerance", number_or_null(r.tolerance)},
                        {"pass", r.pass}});
  return json{{"title", title_}, {"pass", all_pass()}, {"rows", rows}};
}

std::string ReportTable::to_csv() const {
  std::string out;
  for (const auto& r : rows_)
    out += fmt::format("{},{},{},{},{:.17g},{:.17g},{}\n", csv_escape(title_), csv_escape(r.quantity),
                       r.symbolic ? fmt::format("{:.17g}", *r.symbolic) : "",
                       r.numeric ? fmt::format("{:.17g}", *r.numeric) : "", r.error, r.tolerance,
                       r.pass ? "PASS" : "FAIL");
  return out;
}

void ReportTable::print(std::ostream& out) const {
  std::size_t width = 8;
  for (const auto& r : rows_) width = std::max(width, r.quantity.size());
  if (!title_.empty()) out << title_ << "\n";
  out << fmt::format("  {:<{}}  {:>17}  {:>17}  {:>11}  {:>9}  {}\n", "quantity", width, "symbolic", "numeric",
                     "error", "tol", "result");
  for (const auto& r : rows_)
    out << fmt::format("  {:<{}}  {:>17}  {:>17}  {:>11.3e}  {:>9.1e}  {}\n", r.quantity, width, cell(r.symbolic),
                       cell(r.numeric), r.error, r.tolerance, r.pass ? "PASS" : "FAIL");
}

void write_tables(const std::string& path, const std::vector<ReportTable>& tables, const json& extra) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write output file '{}'", path));
  if (std::filesystem::path(path).extension() == ".json") {
    json doc = extra;
    json arr = json::array();
    bool pass = true;
    for (const auto& t : tables) {
      arr.push_back(t.to_json());
      pass = pass && t.all_pass();
    }
    doc["pass"] = pass;
    doc["tables"] = arr;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "table,quantity,symbolic,numeric,error,tolerance,result\n";
  for (const auto& t : tables) out << t.to_csv();
}

}  // namespace volterra::app
