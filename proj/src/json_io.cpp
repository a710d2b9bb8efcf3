#include "qecc/json_io.hpp"

#include <sstream>

namespace qecc {

using nlohmann::json;

std::string real_to_string(const Real& v) {
  std::ostringstream os;
  os.precision(std::numeric_limits<Real>::max_digits10);
  os << v;
  return os.str();
}

void to_json(json& j, const QuantumParams& p) {
  j = json{{"n", p.n}, {"K", p.K.str()}, {"d", p.d}, {"q", p.q}, {"t", p.t()}, {"css", p.css}};
  if (p.k)
    j["k"] = *p.k;
  else
    j["k"] = nullptr;
}

void from_json(const json& j, QuantumParams& p) {
  p = QuantumParams::from_K(j.at("n").get<int>(), BigInt(j.at("K").get<std::string>()), j.at("d").get<int>(),
                            j.at("q").get<int>(), j.at("css").get<bool>());
}

void to_json(json& j, const BoundVerdict& v) {
  j = json{{"bound", v.bound},   {"applicable", v.applicable}, {"satisfied", v.satisfied},
           {"equality", v.equality}, {"lhs", v.lhs},           {"rhs", v.rhs},
           {"note", v.note}};
}

void from_json(const json& j, BoundVerdict& v) {
  j.at("bound").get_to(v.bound);
  j.at("applicable").get_to(v.applicable);
  j.at("satisfied").get_to(v.satisfied);
  j.at("equality").get_to(v.equality);
  j.at("lhs").get_to(v.lhs);
  j.at("rhs").get_to(v.rhs);
  j.at("note").get_to(v.note);
}

void to_json(json& j, const Classification& c) {
  j = json{{"params", c.params}, {"category", to_string(c.category)}, {"reasons", c.reasons}};
}

void from_json(const json& j, Classification& c) {
  j.at("params").get_to(c.params);
  c.category = category_from_string(j.at("category").get<std::string>());
  j.at("reasons").get_to(c.reasons);
}

void to_json(json& j, const OpenEntry& e) {
  j = json{{"n", e.n}, {"k", e.k}, {"d", e.d}, {"q", e.q}, {"css", e.css}};
}

void from_json(const json& j, OpenEntry& e) {
  j.at("n").get_to(e.n);
  j.at("k").get_to(e.k);
  j.at("d").get_to(e.d);
  j.at("q").get_to(e.q);
  j.at("css").get_to(e.css);
}

void to_json(json& j, const ScanReport& r) {
  j = json{{"schema_version", r.schema_version},
           {"n_max", r.n_max},
           {"q_list", r.qs},
           {"css", r.css},
           {"total", r.total},
           {"counts", r.counts},
           {"open", r.open}};
}

void from_json(const json& j, ScanReport& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("n_max").get_to(r.n_max);
  j.at("q_list").get_to(r.qs);
  j.at("css").get_to(r.css);
  j.at("total").get_to(r.total);
  j.at("counts").get_to(r.counts);
  j.at("open").get_to(r.open);
}

void to_json(json& j, const OracleFailure& f) {
  j = json{{"n", f.n}, {"k1", f.k1}, {"k2", f.k2}, {"check", f.check}, {"detail", f.detail}};
}

void from_json(const json& j, OracleFailure& f) {
  j.at("n").get_to(f.n);
  j.at("k1").get_to(f.k1);
  j.at("k2").get_to(f.k2);
  j.at("check").get_to(f.check);
  j.at("detail").get_to(f.detail);
}

void to_json(json& j, const OracleReport& r) {
  json per_n = json::object();
  for (const auto& [n, c] : r.pairs_per_n) per_n[std::to_string(n)] = c;
  j = json{{"schema_version", r.schema_version},
           {"q", r.q},
           {"n_max", r.n_max},
           {"budget", r.budget},
           {"seed", r.seed},
           {"exhaustive_n_limit", r.exhaustive_n_limit},
           {"samples_per_n", r.samples_per_n},
           {"complete", r.complete},
           {"pairs_checked", r.pairs_checked},
           {"pairs_per_n", per_n},
           {"failures", r.failures}};
}

void from_json(const json& j, OracleReport& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("q").get_to(r.q);
  j.at("n_max").get_to(r.n_max);
  j.at("budget").get_to(r.budget);
  j.at("seed").get_to(r.seed);
  j.at("exhaustive_n_limit").get_to(r.exhaustive_n_limit);
  j.at("samples_per_n").get_to(r.samples_per_n);
  j.at("complete").get_to(r.complete);
  j.at("pairs_checked").get_to(r.pairs_checked);
  r.pairs_per_n.clear();
  for (const auto& [key, val] : j.at("pairs_per_n").items()) r.pairs_per_n[std::stoi(key)] = val.get<std::uint64_t>();
  j.at("failures").get_to(r.failures);
}

void to_json(json& j, const DerivedReport& r) {
  j = json{{"d_code", json{{"length", r.d_length}, {"dim", r.d_dim}, {"min_weight", r.d_min_weight}}},
           {"dprime_code",
            json{{"length", r.dprime_length}, {"dim", r.dprime_dim}, {"min_weight", r.dprime_min_weight}}},
           {"lemma1_holds", r.lemma1_holds}};
}

void from_json(const json& j, DerivedReport& r) {
  const auto& d = j.at("d_code");
  d.at("length").get_to(r.d_length);
  d.at("dim").get_to(r.d_dim);
  d.at("min_weight").get_to(r.d_min_weight);
  const auto& dp = j.at("dprime_code");
  dp.at("length").get_to(r.dprime_length);
  dp.at("dim").get_to(r.dprime_dim);
  dp.at("min_weight").get_to(r.dprime_min_weight);
  j.at("lemma1_holds").get_to(r.lemma1_holds);
}

void to_json(json& j, const ThresholdReportJson& r) {
  j = json{{"q", r.report.q},
           {"delta", real_to_string(r.report.delta)},
           {"one_minus_delta", real_to_string(r.report.one_minus_delta)},
           {"status", to_string(r.report.status)},
           {"margin", real_to_string(r.report.margin)},
           {"precision_bits", r.report.precision_bits}};
}

void from_json(const json& j, ThresholdReportJson& r) {
  j.at("q").get_to(r.report.q);
  r.report.delta = Real(j.at("delta").get<std::string>());
  r.report.one_minus_delta = Real(j.at("one_minus_delta").get<std::string>());
  const std::string s = j.at("status").get<std::string>();
  for (Thm1Status st : {Thm1Status::kApplies, Thm1Status::kDoesNotApply, Thm1Status::kIndeterminate,
                        Thm1Status::kNotApplicable, Thm1Status::kSingletonInconsistent})
    if (to_string(st) == s) r.report.status = st;
  r.report.margin = Real(j.at("margin").get<std::string>());
  j.at("precision_bits").get_to(r.report.precision_bits);
}

}  // namespace qecc
