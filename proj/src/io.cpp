#include "muntzlab/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace muntzlab {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

ExperimentRecord to_record(const std::string& experiment, const SweepPoint& p) {
  return {experiment, p.n, p.big_n, p.rho_n, p.dist_sq, std::nullopt, std::nullopt};
}

ExperimentRecord to_record(const std::string& experiment, const VanishPoint& p) {
  return {experiment, p.n, p.big_n, p.rho_n, p.dist_sq, p.leak_sq, std::nullopt};
}

ExperimentRecord to_record(const std::string& experiment, const ContinuousPoint& p) {
  return {experiment, p.n, p.big_n, p.rho_n, p.dist_sq, std::nullopt, p.sup_err};
}

std::string record_csv_header() { return "experiment,n,N_n,rho_n,dist_sq,leak_sq,sup_err"; }

std::string to_csv_row(const ExperimentRecord& r) {
  std::string row = r.experiment;
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.big_n);
  row += ',' + r.rho_n.str();
  row += ',' + r.dist_sq.str();
  row += ',';
  if (r.leak_sq) row += r.leak_sq->str();
  row += ',';
  if (r.sup_err) row += format_double(*r.sup_err);
  return row;
}

std::string to_json_line(const ExperimentRecord& r) {
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  j["n"] = r.n;
  j["N_n"] = r.big_n;
  j["rho_n"] = r.rho_n.str();
  j["dist_sq"] = r.dist_sq.str();
  j["leak_sq"] = r.leak_sq ? nlohmann::ordered_json(r.leak_sq->str())
                           : nlohmann::ordered_json(nullptr);
  j["sup_err"] = r.sup_err ? nlohmann::ordered_json(*r.sup_err)
                           : nlohmann::ordered_json(nullptr);
  return j.dump();
}

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format)
    : out_(out), format_(format) {}

void RecordWriter::write(const ExperimentRecord& r) {
  if (format_ == OutputFormat::kCsv) {
    if (!wrote_header_) {
      out_ << record_csv_header() << '\n';
      wrote_header_ = true;
    }
    out_ << to_csv_row(r) << '\n';
  } else {
    out_ << to_json_line(r) << '\n';
  }
}

nlohmann::ordered_json to_json(const ConditioningReport& report) {
  nlohmann::ordered_json j;
  auto exps = nlohmann::ordered_json::array();
  for (const Rational& a : report.exponents) exps.push_back(a.str());
  j["exponents"] = std::move(exps);
  j["det_closed"] = report.det_closed.str();
  j["det_bareiss"] = report.det_bareiss.str();
  j["det_float"] = report.det_float;
  j["rel_err_float"] = report.rel_err_float;
  j["t_exact_ns"] = report.t_exact_ns;
  j["t_float_ns"] = report.t_float_ns;
  return j;
}

std::string conditioning_csv(const ConditioningReport& report) {
  std::string exps;
  for (const Rational& a : report.exponents) {
    if (!exps.empty()) exps += ' ';
    exps += a.str();
  }
  std::string row = "exponents,det_closed,det_bareiss,det_float,rel_err_float,";
  row += "t_exact_ns,t_float_ns\n";
  row += '"' + exps + "\"," + report.det_closed.str() + ',' + report.det_bareiss.str();
  row += ',' + format_double(report.det_float) + ',' + format_double(report.rel_err_float);
  row += ',' + std::to_string(report.t_exact_ns) + ',' + std::to_string(report.t_float_ns);
  return row;
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, a] : p.coeffs()) {
    arr.push_back(nlohmann::ordered_json::array({k, a.str()}));
  }
  return arr;
}

}  // namespace muntzlab
