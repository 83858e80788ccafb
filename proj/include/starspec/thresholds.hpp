#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "starspec/star_forest.hpp"

namespace starspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Order thresholds above which the spectral extremal results are proved.
enum class ThresholdKind {
  /// (sum 2d_i + 5k - 8)^4 (sum d_i + k - 2)^4 / (k - 2), all F-free graphs.
  general,
  /// (sum 2d_i + 5k - 7)^2 (sum d_i + k - 2)^2, connected F-free graphs.
  connected,
  /// f(k, d_1..d_k), connected bipartite F-free graphs.
  connected_bipartite,
  /// f^2 / (4k - 8), bipartite graphs and the least-eigenvalue bound.
  bipartite,
};

/// CLI names: thm_1_7, thm_3_1, f_value, thm_1_8_and_cor_1_9.
std::string_view threshold_kind_name(ThresholdKind kind);
ThresholdKind parse_threshold_kind(std::string_view name);

/// f(k, d_1, ..., d_k) =
///   (k^2 (S + k - 2)^2 (2S + 5k - 4)^(4k-2) + 2(k-2) S) / (k - 2), S = sum d_i.
/// Throws Error{division_by_zero_k2} at k = 2.
BigRational f_value(const StarForest& f);

/// Exact threshold. Requires k >= 2; the kinds with a k - 2 or 4k - 8
/// denominator throw Error{division_by_zero_k2} at k = 2.
BigRational threshold(ThresholdKind kind, const StarForest& f);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& r);

}  // namespace starspec
