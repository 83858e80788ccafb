#include "starspec/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "starspec/canonical.hpp"
#include "starspec/error.hpp"
#include "starspec/extremal.hpp"
#include "starspec/graph6.hpp"
#include "starspec/spectra.hpp"
#include "starspec/thresholds.hpp"

namespace starspec {

namespace {

constexpr double kTie = kCrossCheckTolerance;

bool all_degrees_two(const StarForest& f) {
  return std::all_of(f.degrees().begin(), f.degrees().end(), [](int d) { return d == 2; });
}

bool reaches(int n, ThresholdKind kind, const StarForest& f) {
  try {
    return BigRational(n) >= threshold(kind, f);
  } catch (const Error& e) {
    if (e.code() == Errc::division_by_zero_k2) return false;
    throw;
  }
}

struct Candidate {
  CanonicalCode code;
  std::string graph6;
  double rho;
};

struct SearchState {
  std::int64_t enumerated = 0;
  std::int64_t f_free = 0;
  double max_rho = -std::numeric_limits<double>::infinity();
  std::vector<Candidate> candidates;

  void prune() {
    std::erase_if(candidates, [&](const Candidate& c) { return c.rho < max_rho - kTie; });
  }
};

}  // namespace

std::optional<Graph> extremal_construction(int n, const StarForest& f, GraphClass cls) {
  const int k = f.k();
  if (k < 2 || n < k || n > kMaxOrder) return std::nullopt;
  if (is_bipartite_class(cls)) return make_complete_bipartite(k - 1, n - k + 1);
  return make_join_near_regular(n, k, f.smallest());
}

std::optional<double> class_bound(int n, const StarForest& f, GraphClass cls) {
  const int k = f.k();
  if (k < 2 || n < k) return std::nullopt;
  if (is_bipartite_class(cls)) return bipartite_spectral_bound(n, k);
  return spectral_bound(n, k, f.smallest());
}

bool bound_applicable(int n, const StarForest& f, GraphClass cls) {
  const int k = f.k();
  if (k < 2 || n < k) return false;
  switch (cls) {
    case GraphClass::all:
      return reaches(n, ThresholdKind::general, f);
    case GraphClass::connected:
      return reaches(n, ThresholdKind::connected, f);
    case GraphClass::bipartite:
      return (all_degrees_two(f) && n >= 11 * k - 4) || reaches(n, ThresholdKind::bipartite, f);
    case GraphClass::connected_bipartite:
      return (all_degrees_two(f) && n >= 11 * k - 4) ||
             reaches(n, ThresholdKind::connected_bipartite, f);
  }
  return false;
}

SearchRecord extremal_search(int n, const StarForest& f, GraphClass cls, unsigned threads) {
  SearchState result = parallel_scan(
      n, cls, threads, SearchState{},
      [&](SearchState& s, const Graph& g) {
        ++s.enumerated;
        if (contains_star_forest(g, f)) return;
        ++s.f_free;
        const double rho = spectral_radius(g);
        if (rho > s.max_rho) {
          s.max_rho = rho;
          s.prune();
        }
        if (rho >= s.max_rho - kTie) {
          s.candidates.push_back({canonical_code(g, kCanonicalMaxOrder), graph6_encode(g), rho});
        }
      },
      [](SearchState& acc, SearchState part) {
        acc.enumerated += part.enumerated;
        acc.f_free += part.f_free;
        acc.max_rho = std::max(acc.max_rho, part.max_rho);
        for (auto& c : part.candidates) acc.candidates.push_back(std::move(c));
        acc.prune();
      });

  if (result.f_free == 0) {
    throw Error(Errc::empty_class, "no F-free graph in class " + std::string(graph_class_name(cls)) +
                                       " at n=" + std::to_string(n));
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.code < b.code; });

  SearchRecord rec;
  rec.n = n;
  rec.cls = cls;
  rec.forest = f;
  rec.count_enumerated = result.enumerated;
  rec.count_f_free = result.f_free;
  rec.max_rho = result.max_rho;
  for (auto& c : result.candidates) rec.argmax.push_back(std::move(c.graph6));
  rec.bound_value = class_bound(n, f, cls);
  rec.bound_applicable = bound_applicable(n, f, cls);
  if (rec.bound_value) rec.gap = *rec.bound_value - rec.max_rho;
  if (auto family = extremal_construction(n, f, cls)) {
    rec.family_graph6 = graph6_encode(*family);
    rec.family_rho = spectral_radius(*family);
  }
  return rec;
}

std::vector<EdgeViolation> verify_edge_bound(int n, const StarForest& f, GraphClass cls, unsigned threads) {
  const std::int64_t bound = edge_bound_coarse(f, n);
  auto found = parallel_scan(
      n, cls, threads, std::vector<EdgeViolation>{},
      [&](std::vector<EdgeViolation>& out, const Graph& g) {
        if (g.edge_count() <= bound) return;
        if (contains_star_forest(g, f)) return;
        out.push_back({graph6_encode(g), g.edge_count(), bound});
      },
      [](std::vector<EdgeViolation>& acc, std::vector<EdgeViolation> part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  return found;
}

namespace {

bool row_order(const MarginRow& a, const MarginRow& b) {
  if (a.margin != b.margin) return a.margin > b.margin;
  return a.graph6 < b.graph6;
}

struct MarginState {
  std::int64_t f_free = 0;
  double max_margin = -std::numeric_limits<double>::infinity();
  std::vector<MarginRow> top;
  std::vector<MarginRow> exceeding;
};

void keep_top(std::vector<MarginRow>& rows, std::size_t limit) {
  std::sort(rows.begin(), rows.end(), row_order);
  if (rows.size() > limit) rows.resize(limit);
}

}  // namespace

ConjectureReport test_conjecture_q(int n, const StarForest& f, GraphClass cls, std::size_t top,
                                   unsigned threads) {
  const int k = f.k();
  if (k < 2) throw Error(Errc::param_out_of_range, "the signless bound needs at least two stars");
  const double bound = signless_bound(n, k, f.smallest());
  MarginState st = parallel_scan(
      n, cls, threads, MarginState{},
      [&](MarginState& s, const Graph& g) {
        if (contains_star_forest(g, f)) return;
        ++s.f_free;
        const double q = signless_laplacian_radius(g);
        MarginRow row{graph6_encode(g), q, q - bound};
        s.max_margin = std::max(s.max_margin, row.margin);
        if (row.margin > kTie) s.exceeding.push_back(row);
        s.top.push_back(std::move(row));
        if (s.top.size() > 4 * top + 16) keep_top(s.top, top);
      },
      [&](MarginState& acc, MarginState part) {
        acc.f_free += part.f_free;
        acc.max_margin = std::max(acc.max_margin, part.max_margin);
        acc.top.insert(acc.top.end(), part.top.begin(), part.top.end());
        keep_top(acc.top, top);
        acc.exceeding.insert(acc.exceeding.end(), part.exceeding.begin(), part.exceeding.end());
      });
  keep_top(st.top, top);
  std::sort(st.exceeding.begin(), st.exceeding.end(), row_order);

  ConjectureReport rep;
  rep.n = n;
  rep.cls = cls;
  rep.forest = f;
  rep.bound = bound;
  rep.count_f_free = st.f_free;
  rep.max_margin = st.max_margin;
  rep.top = std::move(st.top);
  rep.exceeding = std::move(st.exceeding);
  if (n >= k && n <= kMaxOrder) {
    const Graph family = make_join_near_regular(n, k, f.smallest());
    if (in_class(family, cls)) {
      const double q = signless_laplacian_radius(family);
      rep.family = MarginRow{graph6_encode(family), q, q - bound};
    }
  }
  return rep;
}

JoinCheck check_join_bound(int n, int k, int d) {
  JoinCheck out;
  out.n = n;
  out.k = k;
  out.d = d;
  out.bound = spectral_bound(n, k, d);
  const Graph g = make_join_regular(n, k, d);
  out.rho_regular = spectral_radius(g);
  out.equality_holds = std::abs(out.rho_regular - out.bound) <= kCrossCheckTolerance;
  // First edge inside H (vertices k-1 and up).
  for (const auto& [u, v] : g.edges()) {
    if (u >= k - 1) {
      out.rho_deleted = spectral_radius(g.without_edge(u, v));
      out.deletion_strict = out.bound - *out.rho_deleted > 1e-6;
      break;
    }
  }
  return out;
}

std::vector<BipartiteViolation> verify_bipartite(int n, const StarForest& f, GraphClass cls,
                                                 unsigned threads) {
  if (!is_bipartite_class(cls)) {
    throw Error(Errc::param_out_of_range, "bipartite suite needs a bipartite class");
  }
  const bool applicable = bound_applicable(n, f, cls);
  const std::optional<double> bound = class_bound(n, f, cls);
  auto found = parallel_scan(
      n, cls, threads, std::vector<BipartiteViolation>{},
      [&](std::vector<BipartiteViolation>& out, const Graph& g) {
        if (contains_star_forest(g, f)) return;
        const std::string g6 = graph6_encode(g);
        const double rho = spectral_radius(g);
        if (rho > n / 2.0 + kCrossCheckTolerance) out.push_back({g6, "wilf", rho, n / 2.0});
        const auto spec = adjacency_spectrum(g).eigenvalues;
        double asym = 0.0;
        for (std::size_t i = 0; i < spec.size(); ++i) asym = std::max(asym, std::abs(spec[i] + spec[spec.size() - 1 - i]));
        if (asym > kCrossCheckTolerance) out.push_back({g6, "symmetry", asym, kCrossCheckTolerance});
        if (applicable && bound && rho > *bound + kCrossCheckTolerance) {
          out.push_back({g6, "bipartite_bound", rho, *bound});
        }
      },
      [](std::vector<BipartiteViolation>& acc, std::vector<BipartiteViolation> part) {
        acc.insert(acc.end(), part.begin(), part.end());
      });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.graph6, a.property) < std::tie(b.graph6, b.property);
  });
  return found;
}

}  // namespace starspec
