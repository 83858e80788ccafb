#include "starspec/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <utility>

#include "starspec/error.hpp"

namespace starspec {

std::string CanonicalCode::to_hex() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%d:%016llx%016llx", n,
                static_cast<unsigned long long>(words[0]),
                static_cast<unsigned long long>(words[1]));
  return buf;
}

CanonicalCode code_under(const Graph& g, std::span<const int> position) {
  const int n = g.order();
  std::array<int, kMaxOrder> at{};
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  CanonicalCode code;
  code.n = n;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    const VertexMask row = g.neighbors(at[i]);
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((row >> at[j]) & 1U) code.words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
  }
  return code;
}

std::vector<VertexMask> refine(const Graph& g, std::vector<VertexMask> cells) {
  std::vector<VertexMask> next;
  std::array<int, kMaxOrder> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexMask splitter = cells[s];
      next.clear();
      for (VertexMask cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        int lo = kMaxOrder;
        int hi = -1;
        for (VertexMask rest = cell; rest != 0; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          count[v] = std::popcount(g.neighbors(v) & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) {
          next.push_back(cell);
          continue;
        }
        // Sub-cells in increasing order of neighbor count.
        for (int c = lo; c <= hi; ++c) {
          VertexMask part = 0;
          for (VertexMask rest = cell; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (count[v] == c) part |= bit(v);
          }
          if (part != 0) next.push_back(part);
        }
        changed = true;
      }
      if (changed) cells.swap(next);
    }
  }
  return cells;
}

namespace {

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(std::vector<VertexMask> cells) {
    visit(refine(g_, std::move(cells)));
    CanonicalLabeling out;
    out.position = best_pos_;
    out.code = best_;
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  void visit(const std::vector<VertexMask>& cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    VertexMask explored = 0;
    for (VertexMask rest = cells[target]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored != 0 && equivalent_to_explored(v, explored)) continue;
      explored |= bit(v);
      std::vector<VertexMask> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(bit(v));
          child.push_back(cells[i] & ~bit(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix_.push_back(v);
      visit(refine(g_, std::move(child)));
      prefix_.pop_back();
    }
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current prefix pointwise.
  bool equivalent_to_explored(int v, VertexMask explored) {
    std::array<int, kMaxOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& perm : autos_) {
      bool fixes = true;
      for (int p : prefix_) {
        if (perm[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(perm[x]);
    }
    const int root = find(v);
    for (VertexMask rest = explored; rest != 0; rest &= rest - 1) {
      if (find(std::countr_zero(rest)) == root) return true;
    }
    return false;
  }

  void leaf(const std::vector<VertexMask>& cells) {
    std::vector<int> pos(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) pos[std::countr_zero(cells[i])] = static_cast<int>(i);
    const CanonicalCode code = code_under(g_, pos);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = best_ = code;
      first_pos_ = best_pos_ = pos;
      return;
    }
    if (code == first_) {
      record_automorphism(pos, first_pos_);
    } else if (code == best_) {
      record_automorphism(pos, best_pos_);
    } else if (code < best_) {
      best_ = code;
      best_pos_ = pos;
    }
  }

  void record_automorphism(const std::vector<int>& pos, const std::vector<int>& ref) {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[ref[v]] = v;
    std::vector<int> perm(n_);
    for (int v = 0; v < n_; ++v) perm[v] = at[pos[v]];
    autos_.push_back(std::move(perm));
  }

  const Graph& g_;
  int n_;
  std::vector<int> prefix_;
  bool have_leaf_ = false;
  CanonicalCode first_;
  CanonicalCode best_;
  std::vector<int> first_pos_;
  std::vector<int> best_pos_;
  std::vector<std::vector<int>> autos_;
};

void check_ceiling(const Graph& g, int ceiling) {
  if (ceiling > kCanonicalMaxOrder || g.order() > ceiling) {
    throw Error(Errc::order_too_large, "canonical labeling supports at most " +
                                           std::to_string(std::min(ceiling, kCanonicalMaxOrder)) +
                                           " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexMask> cells,
                                     int ceiling) {
  check_ceiling(g, ceiling);
  if (g.order() == 0) return CanonicalLabeling{};
  std::vector<VertexMask> initial;
  VertexMask covered = 0;
  for (VertexMask c : cells) {
    c &= g.vertices() & ~covered;
    if (c != 0) initial.push_back(c);
    covered |= c;
  }
  if (covered != g.vertices()) initial.push_back(g.vertices() & ~covered);
  return Search(g).run(std::move(initial));
}

CanonicalLabeling canonical_labeling(const Graph& g, int ceiling) {
  const VertexMask all = g.vertices();
  return canonical_labeling(g, std::span<const VertexMask>(&all, 1), ceiling);
}

CanonicalCode canonical_code(const Graph& g, int ceiling) {
  return canonical_labeling(g, ceiling).code;
}

Graph canonical_form(const Graph& g, int ceiling) {
  return g.relabeled(canonical_labeling(g, ceiling).position);
}

bool same_orbit(const Graph& g, int u, int v, int ceiling) {
  if (u == v) return true;
  const VertexMask cu[2] = {bit(u), g.vertices() & ~bit(u)};
  const VertexMask cv[2] = {bit(v), g.vertices() & ~bit(v)};
  return canonical_labeling(g, cu, ceiling).code == canonical_labeling(g, cv, ceiling).code;
}

}  // namespace starspec
