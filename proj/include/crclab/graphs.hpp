// Copyright 2026 The crclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CRCLAB_GRAPHS_HPP
#define CRCLAB_GRAPHS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/regularity.hpp"

namespace crclab {

using Vertex = std::uint32_t;

/// Undirected simple graph in compressed adjacency form; neighbour lists are sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Duplicate edges collapse; loops and out-of-range endpoints throw BadParameters.
  static SimpleGraph from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
                                std::string label = {});

  /// Cayley graph of (F_Q)^m under the connection set `gens` (closed under negation).
  static SimpleGraph cayley(const SyndromeSpace& space, std::span<const std::uint64_t> gens, std::string label = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbours_.size() / 2; }
  std::span<const Vertex> neighbours(Vertex v) const {
    return {neighbours_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  const std::string& label() const noexcept { return label_; }
  /// True for graphs built as Cayley graphs, which are vertex-transitive.
  bool vertex_transitive() const noexcept { return cayley_; }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> neighbours_;
  std::string label_;
  bool cayley_ = false;
};

/// Breadth-first distances from src; unreachable vertices get 0xFFFF.
std::vector<std::uint16_t> bfs_distances(const SimpleGraph& g, Vertex src);
/// Throws Disconnected.
unsigned diameter(const SimpleGraph& g);

/// Vertices are syndromes; s ~ s' iff s - s' is a generator syndrome. Throws GraphTooLarge.
SimpleGraph coset_graph(const CosetTable& table, const Limits& limits = {});

struct DrgMode {
  enum class Kind { full, sampled } kind = Kind::full;
  std::uint64_t seed = 0;
  std::size_t samples = 64;
};

/// Full mode up to 4096 vertices, sampled (seed 0, 64 bases) above.
DrgMode default_drg_mode(const SimpleGraph& g);
std::string to_string(const DrgMode& mode);

struct DrgWitness {
  Vertex base = 0;
  Vertex vertex = 0;
  unsigned distance = 0;
  std::string quantity;  // "degree", "c" or "b"
  std::uint64_t expected = 0;
  std::uint64_t found = 0;
};

struct DrgVerdict {
  std::optional<IntersectionArray> array;
  std::optional<DrgWitness> witness;
  std::string mode;
  std::vector<Vertex> bases;

  bool distance_regular() const noexcept { return array.has_value(); }
};

/// Throws Disconnected when some base vertex does not reach the whole graph.
DrgVerdict check_distance_regular(const SimpleGraph& g, const DrgMode& mode);

/// d x e matrices over F_q, adjacent iff their difference has rank one.
/// Vertex index: sum entry(i, j) q^{i e + j}.
SimpleGraph bilinear_forms_graph(const FieldPtr& field, std::size_t d, std::size_t e, const Limits& limits = {});

struct BilinearIso {
  bool verified = false;
  std::size_t rows = 0;  // bilinear forms shape
  std::size_t cols = 0;
  std::vector<std::uint64_t> map;  // syndrome -> matrix index
  bool edge_checked = false;       // every coset-graph edge checked against the target graph
  std::optional<std::string> mismatch;
  std::optional<std::uint64_t> failing_generator;
};

/**
 * Builds the linear bijection syndrome -> matrix over F_q and verifies it is
 * an isomorphism onto the bilinear forms graph: it must be bijective, send
 * every generator syndrome to a rank-one matrix, and the number of distinct
 * generators must equal the number of rank-one matrices.
 *
 * Kronecker codes: the syndrome is arranged with base-factor rows down and
 * extension-factor rows across, then each row is expanded through the
 * coordinate map. Lifted codes: column i of the r x m matrix is the expansion
 * of syndrome entry i.
 *
 * `target`, when given, must be the natural shape or its transpose.
 * Throws UnsupportedProvenance for raw or non-nested codes.
 */
BilinearIso explicit_bilinear_isomorphism(const LinearCode& code, const CosetTable& table,
                                          std::optional<std::pair<std::size_t, std::size_t>> target = std::nullopt);

inline constexpr std::size_t kGenericIsoLimit = 4096;

/// Refinement + individualization search. Returns the vertex map g1 -> g2 on success.
/// Throws TooLargeForGenericIso above 4096 vertices.
std::optional<std::vector<Vertex>> graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

/// True iff phi is a bijection preserving adjacency in both directions.
bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, std::span<const Vertex> phi);

enum class Antipodality { antipodal, not_antipodal, not_applicable };
std::string to_string(Antipodality a);

/// Distance-D graph is a disjoint union of cliques (D >= 3). Throws Disconnected.
Antipodality check_antipodal(const SimpleGraph& g);

/// "u v" per line, 0-indexed, u < v, sorted.
void write_edge_list(std::ostream& out, const SimpleGraph& g);

}  // namespace crclab

#endif  // CRCLAB_GRAPHS_HPP
