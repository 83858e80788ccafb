#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "starspec/graph.hpp"

namespace starspec {

/// Default ceiling for canonical labeling and enumeration.
inline constexpr int kCanonicalCeiling = 12;

/// Hard limit: the packed upper triangle must fit in two words.
inline constexpr int kCanonicalMaxOrder = 16;

/// Upper triangle of the canonically relabeled adjacency matrix, read row by
/// row ((0,1),(0,2),...,(0,n-1),(1,2),...) and packed most significant bit
/// first. Equal codes iff the graphs are isomorphic.
struct CanonicalCode {
  int n = 0;
  std::array<std::uint64_t, 2> words{};

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  std::string to_hex() const;
};

struct CanonicalLabeling {
  /// Vertex v of the input sits at canonical position position[v].
  std::vector<int> position;
  CanonicalCode code;
  /// Automorphism generators discovered during the search; each maps
  /// vertex v to perm[v]. Not necessarily a full generating set.
  std::vector<std::vector<int>> automorphisms;
};

/// Packs the upper triangle of `g` relabeled by `position`.
CanonicalCode code_under(const Graph& g, std::span<const int> position);

/// Canonical labeling by equitable refinement and individualization, with
/// pruning by automorphisms that fix the current prefix. `cells` optionally
/// supplies an ordered initial vertex coloring.
CanonicalLabeling canonical_labeling(const Graph& g, int ceiling = kCanonicalCeiling);
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexMask> cells,
                                     int ceiling = kCanonicalCeiling);

CanonicalCode canonical_code(const Graph& g, int ceiling = kCanonicalCeiling);
Graph canonical_form(const Graph& g, int ceiling = kCanonicalCeiling);

/// True iff some automorphism of `g` maps u to v.
bool same_orbit(const Graph& g, int u, int v, int ceiling = kCanonicalCeiling);

/// Coarsest equitable refinement of an ordered partition. Cells split in
/// place, so the start offset of every cell is preserved.
std::vector<VertexMask> refine(const Graph& g, std::vector<VertexMask> cells);

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::uint64_t h = c.words[0] * 0x9E3779B97F4A7C15ULL;
    h ^= c.words[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(c.n));
  }
};

}  // namespace starspec
