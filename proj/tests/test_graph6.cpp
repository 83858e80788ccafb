#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "starspec/enumeration.hpp"
#include "starspec/error.hpp"
#include "starspec/extremal.hpp"
#include "starspec/graph6.hpp"

using namespace starspec;

namespace {

std::size_t parse_offset(std::string_view text) {
  try {
    graph6_decode(text);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    return e.position();
  }
  FAIL("expected ParseError for '" << std::string(text) << "'");
  return Error::npos;
}

}  // namespace

TEST_CASE("known encodings") {
  CHECK(graph6_encode(empty_graph(1)) == "@");
  CHECK(graph6_encode(empty_graph(0)) == "?");
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(path_graph(4)) == "Ch");
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(cycle_graph(5)) == "Dhc");
  CHECK(graph6_decode("Dhc") == cycle_graph(5));
  CHECK(graph6_decode(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("round trip on every class with n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    if (n == 0) {
      CHECK(graph6_decode(graph6_encode(empty_graph(0))) == empty_graph(0));
      continue;
    }
    for_each_graph(n, GraphClass::all, [](const Graph& g) { CHECK(graph6_decode(graph6_encode(g)) == g); });
  }
}

TEST_CASE("round trip at large orders") {
  std::mt19937_64 rng(17);
  for (int n : {8, 30, 62, 63, 64}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  CHECK(graph6_encode(empty_graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("malformed input reports a byte offset") {
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("C") == 1);        // truncated
  CHECK(parse_offset("C~~") == 2);      // trailing byte
  CHECK(parse_offset("C\x7f") == 1);    // out of range
  CHECK(parse_offset("A`") == 1);       // padding bit set
  CHECK(parse_offset(" C~") == 0);
}

TEST_CASE("orders above 64 are refused") {
  try {
    graph6_decode("~?@A" + std::string(200, '?'));
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_too_large);
  }
}

TEST_CASE("multi-line decode") {
  const auto gs = graph6_decode_all("@\nA_\n\nC~\n");
  REQUIRE(gs.size() == 3);
  CHECK(gs[2] == complete_graph(4));
}
