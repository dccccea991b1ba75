#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "hnnforge/quotient.hpp"
#include "hnnforge/small_cancellation.hpp"

// JSON serialization of report types. Every top-level document carries
// "schema": "hnn-forge/1" so downstream tooling can evolve. Serialization is
// lossless and deterministic (nlohmann orders keys), which is what makes
// byte-identical certification reports possible.

namespace hnnforge {

inline constexpr const char* SCHEMA_ID = "hnn-forge/1";

using json = nlohmann::json;

inline void to_json(json& j, const ConditionReport& r) {
  j = json{{"l_even", r.l_even},   {"distinct", r.distinct},
           {"min_ok", r.min_ok},   {"alt_sum", r.alt_sum},
           {"total", r.total},     {"max_window3", r.max_window3},
           {"sixth_ok", r.sixth_ok}, {"valid", r.valid}};
}

inline void from_json(const json& j, ConditionReport& r) {
  j.at("l_even").get_to(r.l_even);
  j.at("distinct").get_to(r.distinct);
  j.at("min_ok").get_to(r.min_ok);
  j.at("alt_sum").get_to(r.alt_sum);
  j.at("total").get_to(r.total);
  j.at("max_window3").get_to(r.max_window3);
  j.at("sixth_ok").get_to(r.sixth_ok);
  j.at("valid").get_to(r.valid);
}

inline void to_json(json& j, const PieceReport& r) {
  j = json{{"max_run_blocks", r.max_run_blocks},
           {"max_piece_tlen", r.max_piece_tlen},
           {"total_tlen", r.total_tlen},
           {"sixth_certified", r.sixth_certified}};
}

inline void from_json(const json& j, PieceReport& r) {
  j.at("max_run_blocks").get_to(r.max_run_blocks);
  j.at("max_piece_tlen").get_to(r.max_piece_tlen);
  j.at("total_tlen").get_to(r.total_tlen);
  j.at("sixth_certified").get_to(r.sixth_certified);
}

inline std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::G: return "G";
    case SearchMode::K: return "K";
    default: return "presentation";
  }
}

inline SearchMode search_mode_from_string(const std::string& s) {
  if (s == "G") return SearchMode::G;
  if (s == "K") return SearchMode::K;
  if (s == "presentation") return SearchMode::Presentation;
  throw Error("unknown search mode: " + s);
}

inline void to_json(json& j, const SearchReport& r) {
  j = json{{"mode", to_string(r.mode)},
           {"degree", r.degree},
           {"pairs_checked", r.pairs_checked},
           {"g_hom_count", r.g_hom_count},
           {"g_all_alpha_trivial", r.g_all_alpha_trivial},
           {"k_hom_count", r.k_hom_count},
           {"elapsed_us", r.elapsed_us}};
}

inline void from_json(const json& j, SearchReport& r) {
  r.mode = search_mode_from_string(j.at("mode").get<std::string>());
  j.at("degree").get_to(r.degree);
  j.at("pairs_checked").get_to(r.pairs_checked);
  j.at("g_hom_count").get_to(r.g_hom_count);
  j.at("g_all_alpha_trivial").get_to(r.g_all_alpha_trivial);
  j.at("k_hom_count").get_to(r.k_hom_count);
  j.at("elapsed_us").get_to(r.elapsed_us);
}

// Aggregate outcome of the full certification pipeline. Stages that were
// never reached stay disengaged and serialize as null.
struct CertReport {
  std::uint64_t seed = 0;
  int max_degree = 0;
  USequence u;
  ConditionReport spec_report;
  std::optional<long long> relator_tlength;
  std::optional<bool> cyclically_reduced;
  std::optional<long long> t_exponent_sum;
  std::optional<PieceReport> piece_report;
  std::optional<bool> star_samples_passed;
  std::optional<long long> star_samples_count;
  std::vector<SearchReport> quotient_reports;
  std::optional<int> certified_order;
  bool certified = false;
  std::string failure_reason;  // empty iff certified

  friend bool operator==(const CertReport&, const CertReport&) = default;
};

namespace detail {

template <typename T>
json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return json(*v);
}

template <typename T>
void opt_from(const json& j, const char* key, std::optional<T>& out) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    out.reset();
    return;
  }
  out = it->get<T>();
}

}  // namespace detail

inline void to_json(json& j, const CertReport& r) {
  j = json{{"schema", SCHEMA_ID},
           {"kind", "cert_report"},
           {"seed", r.seed},
           {"max_degree", r.max_degree},
           {"u", r.u},
           {"spec_report", r.spec_report},
           {"relator_tlength", detail::opt_json(r.relator_tlength)},
           {"cyclically_reduced", detail::opt_json(r.cyclically_reduced)},
           {"t_exponent_sum", detail::opt_json(r.t_exponent_sum)},
           {"piece_report", detail::opt_json(r.piece_report)},
           {"star_samples_passed", detail::opt_json(r.star_samples_passed)},
           {"star_samples_count", detail::opt_json(r.star_samples_count)},
           {"quotient_reports", r.quotient_reports},
           {"certified_order", detail::opt_json(r.certified_order)},
           {"verdict", r.certified ? "certified" : "failed"}};
  if (!r.certified) j["failure_reason"] = r.failure_reason;
}

inline void from_json(const json& j, CertReport& r) {
  j.at("seed").get_to(r.seed);
  j.at("max_degree").get_to(r.max_degree);
  j.at("u").get_to(r.u);
  j.at("spec_report").get_to(r.spec_report);
  detail::opt_from(j, "relator_tlength", r.relator_tlength);
  detail::opt_from(j, "cyclically_reduced", r.cyclically_reduced);
  detail::opt_from(j, "t_exponent_sum", r.t_exponent_sum);
  detail::opt_from(j, "piece_report", r.piece_report);
  detail::opt_from(j, "star_samples_passed", r.star_samples_passed);
  detail::opt_from(j, "star_samples_count", r.star_samples_count);
  j.at("quotient_reports").get_to(r.quotient_reports);
  detail::opt_from(j, "certified_order", r.certified_order);
  r.certified = j.at("verdict").get<std::string>() == "certified";
  r.failure_reason = j.value("failure_reason", std::string{});
}

}  // namespace hnnforge
