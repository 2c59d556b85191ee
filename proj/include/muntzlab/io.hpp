#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "muntzlab/gram.hpp"
#include "muntzlab/polynomial.hpp"
#include "muntzlab/windows.hpp"

namespace muntzlab {

enum class OutputFormat { kJson, kCsv };

OutputFormat parse_format(const std::string& name);

/// One sweep/experiment row. Rationals are serialized as canonical "num/den"
/// strings so nothing is lost at the boundary; absent fields render as JSON
/// null / empty CSV cells.
struct ExperimentRecord {
  std::string experiment;
  long n = 0;
  long big_n = 0;
  Rational rho_n;
  Rational dist_sq;
  std::optional<Rational> leak_sq;
  std::optional<double> sup_err;
};

ExperimentRecord to_record(const std::string& experiment, const SweepPoint& p);
ExperimentRecord to_record(const std::string& experiment, const VanishPoint& p);
ExperimentRecord to_record(const std::string& experiment, const ContinuousPoint& p);

std::string record_csv_header();
std::string to_csv_row(const ExperimentRecord& r);
std::string to_json_line(const ExperimentRecord& r);

/// Streams records in the requested format; CSV gets a header row.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format);
  void write(const ExperimentRecord& r);

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool wrote_header_ = false;
};

nlohmann::ordered_json to_json(const ConditioningReport& report);
std::string conditioning_csv(const ConditioningReport& report);

/// Sorted (degree, "num/den") pairs.
nlohmann::ordered_json to_json(const Polynomial& p);

}  // namespace muntzlab
