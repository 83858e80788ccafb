#include "starspec/thresholds.hpp"

#include "starspec/error.hpp"

namespace starspec {

namespace {

using boost::multiprecision::pow;

void require_k(const StarForest& f) {
  if (f.k() < 2) throw Error(Errc::param_out_of_range, "thresholds need at least two stars");
}

[[noreturn]] void k2_gap(std::string_view what) {
  throw Error(Errc::division_by_zero_k2,
              std::string(what) + " has denominator k - 2 (or 4k - 8), undefined at k = 2");
}

}  // namespace

std::string_view threshold_kind_name(ThresholdKind kind) {
  switch (kind) {
    case ThresholdKind::general: return "thm_1_7";
    case ThresholdKind::connected: return "thm_3_1";
    case ThresholdKind::connected_bipartite: return "f_value";
    case ThresholdKind::bipartite: return "thm_1_8_and_cor_1_9";
  }
  return "?";
}

ThresholdKind parse_threshold_kind(std::string_view name) {
  for (auto kind : {ThresholdKind::general, ThresholdKind::connected,
                    ThresholdKind::connected_bipartite, ThresholdKind::bipartite}) {
    if (name == threshold_kind_name(kind)) return kind;
  }
  throw Error(Errc::parse_error, "unknown threshold kind '" + std::string(name) + "'");
}

BigRational f_value(const StarForest& f) {
  require_k(f);
  const long k = f.k();
  if (k == 2) k2_gap("f(k, d_1, ..., d_k)");
  const BigInt s = f.sum_degrees();
  const BigInt a = s + k - 2;
  const BigInt b = 2 * s + 5 * k - 4;
  const BigInt numerator = BigInt(k * k) * a * a * pow(b, static_cast<unsigned>(4 * k - 2)) +
                           2 * BigInt(k - 2) * s;
  return BigRational(numerator, BigInt(k - 2));
}

BigRational threshold(ThresholdKind kind, const StarForest& f) {
  require_k(f);
  const long k = f.k();
  const BigInt s = f.sum_degrees();
  switch (kind) {
    case ThresholdKind::general: {
      if (k == 2) k2_gap("the general-graph order threshold");
      const BigInt a = 2 * s + 5 * k - 8;
      const BigInt b = s + k - 2;
      return BigRational(pow(a, 4) * pow(b, 4), BigInt(k - 2));
    }
    case ThresholdKind::connected: {
      const BigInt a = 2 * s + 5 * k - 7;
      const BigInt b = s + k - 2;
      return BigRational(a * a * b * b);
    }
    case ThresholdKind::connected_bipartite:
      return f_value(f);
    case ThresholdKind::bipartite: {
      if (k == 2) k2_gap("the bipartite order threshold");
      const BigRational fv = f_value(f);
      return fv * fv / BigRational(4 * k - 8);
    }
  }
  throw Error(Errc::param_out_of_range, "unknown threshold kind");
}

std::string to_string(const BigRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace starspec
