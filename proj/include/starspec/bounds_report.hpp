#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "starspec/star_forest.hpp"
#include "starspec/thresholds.hpp"

namespace starspec {

struct BoundParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> dk;
  std::optional<StarForest> forest;
};

/// One evaluated bound. Spectral bounds are doubles, edge bounds exact
/// integers, order thresholds exact rationals.
struct BoundReport {
  std::string name;
  BoundParams params;
  std::variant<double, std::int64_t, BigRational> value;
  /// graph6 of the extremal construction, when it exists at these parameters.
  std::optional<std::string> attained_by;
};

BoundReport report_spectral_bound(int n, int k, int dk);          // t17
BoundReport report_bipartite_bound(int n, int k);                 // t18
BoundReport report_least_eigenvalue_bound(int n, int k);          // c19
BoundReport report_signless_bound(int n, int k, int dk);          // conj32
BoundReport report_edge_bound_coarse(int n, const StarForest& f);       // l21
BoundReport report_edge_bound_large_order(int n, const StarForest& f);  // t12
BoundReport report_threshold(ThresholdKind kind, const StarForest& f);

/// Rationals serialize as {"value": "p/q", "numerator": "p", "denominator": "q"}.
nlohmann::json to_json(const BoundReport& report);

/// Human-readable value: 12 significant digits for doubles.
std::string format_value(const BoundReport& report);

}  // namespace starspec
