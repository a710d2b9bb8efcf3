#ifndef QECC_JSON_IO_HPP
#define QECC_JSON_IO_HPP

#include <json.hpp>

#include "qecc/bounds.hpp"
#include "qecc/css.hpp"
#include "qecc/scan.hpp"
#include "qecc/threshold.hpp"

// JSON bindings for every report type. Big integers and high-precision
// reals travel as decimal strings so nothing is squeezed through a double;
// parse(emit(x)) == x holds for all of them.

namespace qecc {

void to_json(nlohmann::json& j, const QuantumParams& p);
void from_json(const nlohmann::json& j, QuantumParams& p);

void to_json(nlohmann::json& j, const BoundVerdict& v);
void from_json(const nlohmann::json& j, BoundVerdict& v);

void to_json(nlohmann::json& j, const Classification& c);
void from_json(const nlohmann::json& j, Classification& c);

void to_json(nlohmann::json& j, const OpenEntry& e);
void from_json(const nlohmann::json& j, OpenEntry& e);

void to_json(nlohmann::json& j, const ScanReport& r);
void from_json(const nlohmann::json& j, ScanReport& r);

void to_json(nlohmann::json& j, const OracleFailure& f);
void from_json(const nlohmann::json& j, OracleFailure& f);

void to_json(nlohmann::json& j, const OracleReport& r);
void from_json(const nlohmann::json& j, OracleReport& r);

void to_json(nlohmann::json& j, const DerivedReport& r);
void from_json(const nlohmann::json& j, DerivedReport& r);

// Threshold reports carry 168-bit reals; they are serialized with
// max_digits10 so the value survives the trip exactly.
struct ThresholdReportJson {
  ThresholdReport report;
  friend bool operator==(const ThresholdReportJson& a, const ThresholdReportJson& b) {
    return a.report.q == b.report.q && a.report.delta == b.report.delta &&
           a.report.one_minus_delta == b.report.one_minus_delta && a.report.status == b.report.status &&
           a.report.margin == b.report.margin && a.report.precision_bits == b.report.precision_bits;
  }
};
void to_json(nlohmann::json& j, const ThresholdReportJson& r);
void from_json(const nlohmann::json& j, ThresholdReportJson& r);

std::string real_to_string(const Real& v);

}  // namespace qecc

#endif
