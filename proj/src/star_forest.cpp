#include "starspec/star_forest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>

#include "starspec/error.hpp"

namespace starspec {

StarForest::StarForest(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw Error(Errc::param_out_of_range, "a star forest needs at least one star");
  for (int d : degrees_) {
    if (d < 1) throw Error(Errc::param_out_of_range, "star degree " + std::to_string(d) + " < 1");
    if (d >= kMaxOrder) throw Error(Errc::param_out_of_range, "star degree " + std::to_string(d) + " too large");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  sum_ = std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

StarForest StarForest::parse(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return Error(Errc::parse_error, "star forest '" + std::string(text) + "': " + why);
  };
  int declared = -1;
  std::string_view body = text;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon);
    auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), declared);
    if (ec != std::errc{} || p != head.data() + head.size()) throw bad("bad component count");
    body = text.substr(colon + 1);
  }
  std::vector<int> degrees;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    int d = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
    if (item.empty() || ec != std::errc{} || p != item.data() + item.size()) throw bad("bad degree list");
    degrees.push_back(d);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (declared >= 0 && declared != static_cast<int>(degrees.size())) {
    throw bad("declares " + std::to_string(declared) + " stars but lists " + std::to_string(degrees.size()));
  }
  return StarForest(std::move(degrees));
}

std::string StarForest::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

std::string StarForest::to_compact_string() const { return std::to_string(k()) + ":" + to_string(); }

Graph star_forest_graph(const StarForest& f) {
  std::vector<Edge> edges;
  int next = 0;
  for (int d : f.degrees()) {
    const int center = next++;
    for (int j = 0; j < d; ++j) edges.emplace_back(center, next++);
  }
  return Graph::from_edges(f.order(), edges);
}

namespace {

// Leaf assignment for fixed centers: a b-matching found by augmenting paths,
// which is max-flow on the unit-capacity network.
class LeafAssignment {
 public:
  LeafAssignment(const Graph& g, std::span<const int> centers, std::span<const int> demand)
      : centers_(centers), demand_(demand) {
    VertexMask center_set = 0;
    for (int c : centers) center_set |= bit(c);
    for (std::size_t r = 0; r < centers.size(); ++r) candidates_[r] = g.neighbors(centers[r]) & ~center_set;
    owner_.fill(-1);
  }

  bool feasible() {
    for (std::size_t r = 0; r < centers_.size(); ++r) {
      for (int unit = 0; unit < demand_[r]; ++unit) {
        visited_ = 0;
        if (!augment(static_cast<int>(r))) return false;
      }
    }
    return true;
  }

 private:
  bool augment(int role) {
    for (VertexMask rest = candidates_[role] & ~visited_; rest != 0; rest &= rest - 1) {
      const int leaf = std::countr_zero(rest);
      if (visited_ & bit(leaf)) continue;
      visited_ |= bit(leaf);
      if (owner_[leaf] < 0 || augment(owner_[leaf])) {
        owner_[leaf] = role;
        return true;
      }
    }
    return false;
  }

  std::span<const int> centers_;
  std::span<const int> demand_;
  std::array<VertexMask, kMaxOrder> candidates_{};
  std::array<int, kMaxOrder> owner_{};
  VertexMask visited_ = 0;
};

class CenterSearch {
 public:
  CenterSearch(const Graph& g, const StarForest& f)
      : g_(g), demand_(f.degrees().begin(), f.degrees().end()), centers_(f.k()) {}

  bool run() { return choose(0, 0); }

 private:
  bool choose(std::size_t role, VertexMask used) {
    if (role == demand_.size()) return LeafAssignment(g_, centers_, demand_).feasible();
    const int d = demand_[role];
    // Roles with equal demand are interchangeable: keep their centers increasing.
    const int first = (role > 0 && demand_[role - 1] == d) ? centers_[role - 1] + 1 : 0;
    for (int v = first; v < g_.order(); ++v) {
      if (used & bit(v)) continue;
      if (std::popcount(g_.neighbors(v) & ~used) < d) continue;
      centers_[role] = v;
      if (choose(role + 1, used | bit(v))) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> demand_;
  std::vector<int> centers_;
};

bool oracle_place(const Graph& g, std::span<const int> demand, std::size_t i, VertexMask used) {
  if (i == demand.size()) return true;
  const int d = demand[i];
  for (int c = 0; c < g.order(); ++c) {
    if (used & bit(c)) continue;
    const VertexMask avail = g.neighbors(c) & ~used;
    if (std::popcount(avail) < d) continue;
    // Every d-subset of the available neighbors.
    for (VertexMask sub = avail;; sub = (sub - 1) & avail) {
      if (std::popcount(sub) == d && oracle_place(g, demand, i + 1, used | bit(c) | sub)) return true;
      if (sub == 0) break;
    }
  }
  return false;
}

void require_bound_params(const StarForest& f, std::int64_t n) {
  if (f.k() < 2) throw Error(Errc::param_out_of_range, "edge bounds need at least two stars");
  if (n < f.order()) {
    throw Error(Errc::param_out_of_range, "order " + std::to_string(n) + " is below " +
                                              std::to_string(f.order()) + " = sum d_i + k");
  }
}

}  // namespace

bool contains_star_forest(const Graph& g, const StarForest& f) {
  if (g.order() < f.order()) return false;
  return CenterSearch(g, f).run();
}

bool contains_star_forest_oracle(const Graph& g, const StarForest& f) {
  if (g.order() < f.order()) return false;
  return oracle_place(g, f.degrees(), 0, 0);
}

std::int64_t edge_bound_coarse(const StarForest& f, std::int64_t n) {
  require_bound_params(f, n);
  const std::int64_t s = f.sum_degrees();
  const std::int64_t k = f.k();
  return (s + 2 * k - 3) * n - (k - 1) * (s + k - 1);
}

std::int64_t edge_bound_large_order(const StarForest& f, std::int64_t n) {
  require_bound_params(f, n);
  if (f.smallest() < 2) throw Error(Errc::param_out_of_range, "this edge bound needs every d_i >= 2");
  std::int64_t best = 0;
  for (std::int64_t i = 1; i <= f.k(); ++i) {
    const std::int64_t d = f.degrees()[i - 1];
    const std::int64_t rest = n - i + 1;
    const std::int64_t term = (i - 1) * rest + (i - 1) * (i - 2) / 2 + (d - 1) * rest / 2;
    best = std::max(best, term);
  }
  return best;
}

}  // namespace starspec
