#include "ltpoly/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ltpoly {

namespace {

void sort_rows(std::vector<ConvergenceRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("report: row list must be non-empty");
  std::sort(rows.begin(), rows.end(), [](const ConvergenceRow& a, const ConvergenceRow& b) {
    if (a.method != b.method) return a.method < b.method;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.N < b.N;
  });
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("report: cannot open " + path + " for writing");
  out << body;
  if (!out.flush()) throw std::runtime_error("report: write to " + path + " failed");
}

}  // namespace

std::string csv_string(std::vector<ConvergenceRow> rows) {
  sort_rows(rows);
  std::ostringstream out;
  out << "method,alpha,nu,N,value,analytic,rel_err\n";
  for (const ConvergenceRow& row : rows) {
    out << row.method << ',';
    if (row.alpha) out << *row.alpha;
    out << ',' << row.nu << ',' << row.N << ',' << row.value.sci_string() << ','
        << row.analytic.sci_string() << ',' << row.rel_err.sci_string() << '\n';
  }
  return out.str();
}

void emit_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
  out << csv_string(rows);
}

void emit_csv(const std::vector<ConvergenceRow>& rows, const std::string& path) {
  write_file(path, csv_string(rows));
}

std::string json_string(std::vector<ConvergenceRow> rows) {
  sort_rows(rows);
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ConvergenceRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["method"] = row.method;
    if (row.alpha)
      obj["alpha"] = *row.alpha;
    else
      obj["alpha"] = nullptr;
    obj["nu"] = row.nu;
    obj["N"] = row.N;
    obj["value"] = row.value.sci_string();
    obj["analytic"] = row.analytic.sci_string();
    obj["rel_err"] = row.rel_err.sci_string();
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

void emit_json(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
  out << json_string(rows);
}

void emit_json(const std::vector<ConvergenceRow>& rows, const std::string& path) {
  write_file(path, json_string(rows));
}

}  // namespace ltpoly
