#include "starspec/bounds_report.hpp"

#include <cstdio>

#include "starspec/extremal.hpp"
#include "starspec/graph6.hpp"

namespace starspec {

namespace {

std::optional<std::string> join_regular_graph6(int n, int k, int dk) {
  if (n > kMaxOrder || !join_regular_feasible(n, k, dk)) return std::nullopt;
  return graph6_encode(make_join_regular(n, k, dk));
}

std::optional<std::string> complete_bipartite_graph6(int n, int k) {
  if (n > kMaxOrder) return std::nullopt;
  return graph6_encode(make_complete_bipartite(k - 1, n - k + 1));
}

}  // namespace

BoundReport report_spectral_bound(int n, int k, int dk) {
  return {"t17", {n, k, dk, std::nullopt}, spectral_bound(n, k, dk), join_regular_graph6(n, k, dk)};
}

BoundReport report_bipartite_bound(int n, int k) {
  return {"t18", {n, k, std::nullopt, std::nullopt}, bipartite_spectral_bound(n, k),
          complete_bipartite_graph6(n, k)};
}

BoundReport report_least_eigenvalue_bound(int n, int k) {
  return {"c19", {n, k, std::nullopt, std::nullopt}, least_eigenvalue_bound(n, k),
          complete_bipartite_graph6(n, k)};
}

BoundReport report_signless_bound(int n, int k, int dk) {
  return {"conj32", {n, k, dk, std::nullopt}, signless_bound(n, k, dk), join_regular_graph6(n, k, dk)};
}

BoundReport report_edge_bound_coarse(int n, const StarForest& f) {
  return {"l21", {n, f.k(), f.smallest(), f}, edge_bound_coarse(f, n), std::nullopt};
}

BoundReport report_edge_bound_large_order(int n, const StarForest& f) {
  return {"t12", {n, f.k(), f.smallest(), f}, edge_bound_large_order(f, n), std::nullopt};
}

BoundReport report_threshold(ThresholdKind kind, const StarForest& f) {
  return {std::string(threshold_kind_name(kind)), {std::nullopt, f.k(), f.smallest(), f},
          threshold(kind, f), std::nullopt};
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json params = nlohmann::json::object();
  if (report.params.n) params["n"] = *report.params.n;
  if (report.params.k) params["k"] = *report.params.k;
  if (report.params.dk) params["d_k"] = *report.params.dk;
  if (report.params.forest) params["forest"] = report.params.forest->to_string();

  nlohmann::json out;
  out["name"] = report.name;
  out["params"] = params;
  if (const auto* d = std::get_if<double>(&report.value)) {
    out["value"] = *d;
  } else if (const auto* i = std::get_if<std::int64_t>(&report.value)) {
    out["value"] = *i;
  } else {
    const auto& r = std::get<BigRational>(report.value);
    out["value"] = to_string(r);
    out["numerator"] = boost::multiprecision::numerator(r).str();
    out["denominator"] = boost::multiprecision::denominator(r).str();
  }
  out["attained_by"] = report.attained_by ? nlohmann::json(*report.attained_by) : nlohmann::json(nullptr);
  return out;
}

std::string format_value(const BoundReport& report) {
  if (const auto* d = std::get_if<double>(&report.value)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", *d);
    return buf;
  }
  if (const auto* i = std::get_if<std::int64_t>(&report.value)) return std::to_string(*i);
  return to_string(std::get<BigRational>(report.value));
}

}  // namespace starspec
