#include <doctest.h>

#include "oracles.hpp"
#include "starspec/bounds_report.hpp"
#include "starspec/error.hpp"
#include "starspec/thresholds.hpp"

using namespace starspec;

namespace {

StarForest sf(std::vector<int> d) { return StarForest(std::move(d)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("f value at k = 3, d = (1,1,1)") {
  BigInt p = 1;
  for (int i = 0; i < 10; ++i) p *= 17;
  CHECK(f_value(sf({1, 1, 1})) == BigRational(144 * p + 6));
  CHECK(to_string(f_value(sf({1, 1, 1}))) == oracle::gmp_string(oracle::gmp_f(sf({1, 1, 1}))));
}

TEST_CASE("connected threshold at k = 2, d = (2,2)") {
  // (2*4 + 10 - 7)^2 (4 + 0)^2 = 11^2 * 16.
  CHECK(threshold(ThresholdKind::connected, sf({2, 2})) == BigRational(1936));
}

TEST_CASE("k = 2 has no defined threshold for the k - 2 kinds") {
  CHECK(code_of([] { threshold(ThresholdKind::general, sf({2, 2})); }) == Errc::division_by_zero_k2);
  CHECK(code_of([] { threshold(ThresholdKind::connected_bipartite, sf({3, 1})); }) == Errc::division_by_zero_k2);
  CHECK(code_of([] { threshold(ThresholdKind::bipartite, sf({1, 1})); }) == Errc::division_by_zero_k2);
  CHECK(code_of([] { threshold(ThresholdKind::connected, sf({4})); }) == Errc::param_out_of_range);
}

TEST_CASE("all kinds agree with GMP on a grid") {
  for (int k = 3; k <= 5; ++k) {
    for (int d1 = 1; d1 <= 5; ++d1) {
      for (int dk = 1; dk <= d1; ++dk) {
        std::vector<int> d(k, dk);
        d[0] = d1;
        const StarForest f(d);
        CHECK(to_string(threshold(ThresholdKind::general, f)) == oracle::gmp_string(oracle::gmp_general(f)));
        CHECK(to_string(threshold(ThresholdKind::connected, f)) == oracle::gmp_string(oracle::gmp_connected(f)));
        CHECK(to_string(threshold(ThresholdKind::connected_bipartite, f)) == oracle::gmp_string(oracle::gmp_f(f)));
        CHECK(to_string(threshold(ThresholdKind::bipartite, f)) == oracle::gmp_string(oracle::gmp_bipartite(f)));
      }
    }
  }
  for (int d1 = 1; d1 <= 6; ++d1) {
    for (int d2 = 1; d2 <= d1; ++d2) {
      const StarForest f = sf({d1, d2});
      CHECK(to_string(threshold(ThresholdKind::connected, f)) == oracle::gmp_string(oracle::gmp_connected(f)));
    }
  }
}

TEST_CASE("kind names round trip") {
  for (auto kind : {ThresholdKind::general, ThresholdKind::connected, ThresholdKind::connected_bipartite,
                    ThresholdKind::bipartite}) {
    CHECK(parse_threshold_kind(threshold_kind_name(kind)) == kind);
  }
  CHECK(code_of([] { parse_threshold_kind("nope"); }) == Errc::parse_error);
}

TEST_CASE("bound reports") {
  const BoundReport t18 = report_bipartite_bound(11, 3);
  CHECK(t18.name == "t18");
  CHECK(std::get<double>(t18.value) == doctest::Approx(std::sqrt(18.0)).epsilon(1e-12));
  REQUIRE(t18.attained_by.has_value());
  CHECK(*t18.attained_by == "J]rEEB?oE??");

  CHECK_FALSE(report_spectral_bound(8, 2, 2).attained_by.has_value());
  CHECK(report_spectral_bound(9, 2, 2).attained_by.has_value());
  CHECK(std::get<std::int64_t>(report_edge_bound_coarse(10, sf({2, 2})).value) == 45);
  CHECK(std::get<std::int64_t>(report_edge_bound_large_order(12, sf({2, 2, 2})).value) == 26);

  const nlohmann::json j = to_json(report_threshold(ThresholdKind::connected_bipartite, sf({1, 1, 1})));
  CHECK(j.at("value").get<std::string>() == to_string(f_value(sf({1, 1, 1}))));
  CHECK(j.at("denominator").get<std::string>() == "1");
  CHECK(to_json(report_spectral_bound(8, 2, 2)).at("attained_by").is_null());
  CHECK(format_value(report_bipartite_bound(11, 3)) == "4.24264068712");
}

TEST_CASE("rational thresholds keep the denominator") {
  const BigRational t = threshold(ThresholdKind::general, sf({1, 1, 1}));
  // (6 + 15 - 8)^4 (3 + 1)^4 / 1 at k = 3.
  CHECK(t == BigRational(BigInt(28561) * 256));
  const BigRational u = threshold(ThresholdKind::general, sf({1, 1, 1, 1}));
  CHECK(to_string(u) == oracle::gmp_string(oracle::gmp_general(sf({1, 1, 1, 1}))));
  CHECK(to_string(u).find('/') == std::string::npos);  // 16^4 * 6^4 / 2 is an integer
  const BigRational v = threshold(ThresholdKind::general, sf({2, 1, 1, 1, 1}));
  CHECK(to_string(v) == oracle::gmp_string(oracle::gmp_general(sf({2, 1, 1, 1, 1}))));
}
