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

#ifndef CRCLAB_CODE_HPP
#define CRCLAB_CODE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crclab/linalg.hpp"

namespace crclab {

/// Size caps. All of them are configuration; the CLI overrides them.
struct Limits {
  std::uint64_t max_syndromes = std::uint64_t{1} << 28;
  std::uint64_t max_dual_words = std::uint64_t{1} << 25;
  std::uint64_t max_ambient = std::uint64_t{1} << 24;
  std::uint64_t max_graph_vertices = std::uint64_t{1} << 20;
};

enum class Provenance { hamming, kronecker, lifted, repetition_product, raw };

std::string to_string(Provenance p);
/// Inverse of to_string; throws ParseError.
Provenance provenance_from_string(const std::string& s);

/**
 * How a code was built, in enough detail to rebuild the syndrome-to-matrix
 * correspondence used by the bilinear forms isomorphism.
 *
 * The base field F_q is F_{p^j}. For kronecker codes one factor is over
 * F_{q^ext_degree} with m_ext rows and the other over F_q with m_base rows;
 * ext_first says the extension-field factor is the left one. For lifted codes
 * H has m_base rows over F_q and the code lives over F_{q^ext_degree}.
 */
struct Origin {
  Provenance kind = Provenance::raw;
  unsigned p = 0;
  unsigned j = 0;
  unsigned ext_degree = 1;
  std::size_t m_ext = 0;
  std::size_t m_base = 0;
  bool ext_first = true;
  /// False when the factors' fields are not nested (no bilinear structure).
  bool nested = true;
};

/// Syndromes (F_Q)^m indexed in mixed radix: s = sum s_i Q^i.
class SyndromeSpace {
 public:
  SyndromeSpace(FieldPtr field, std::size_t m);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return m_; }
  /// Q^m; throws SyndromeSpaceTooLarge if it does not fit in 63 bits.
  std::uint64_t size() const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (binary_) return a ^ b;
    return digit_add(a, b);
  }
  std::uint64_t scale(Element alpha, std::uint64_t s) const;
  std::uint64_t encode(std::span<const Element> v) const;
  std::vector<Element> decode(std::uint64_t s) const;

 private:
  std::uint64_t digit_add(std::uint64_t a, std::uint64_t b) const;

  FieldPtr field_;
  std::size_t m_;
  bool binary_;
  unsigned digits_;  // k*m base-p digits
  bool fits_;
};

class LinearCode {
 public:
  /// Throws EmptyMatrix when H has no rows/columns or is zero.
  explicit LinearCode(FieldMatrix h, Origin origin = {});

  const FieldPtr& field() const noexcept { return h_.field(); }
  const FieldMatrix& parity_check() const noexcept { return h_; }
  /// Linearly independent subset of H's rows (all of them when H has full rank).
  const FieldMatrix& reduced() const noexcept { return reduced_; }
  std::size_t length() const noexcept { return h_.cols(); }
  std::size_t redundancy() const noexcept { return reduced_.rows(); }
  std::size_t dimension() const noexcept { return length() - redundancy(); }
  const Origin& origin() const noexcept { return origin_; }
  bool has_zero_column() const noexcept { return zero_column_; }

  SyndromeSpace syndrome_space() const { return {field(), redundancy()}; }
  /// Syndrome index of v with respect to the reduced parity-check matrix.
  std::uint64_t syndrome_index(std::span<const Element> v) const;
  /// Syndrome of every column h^(i) of the reduced matrix.
  std::vector<std::uint64_t> column_syndromes() const;
  /// Generator multiset {alpha h^(i)}: entry i*(Q-1) + (alpha-1).
  std::vector<std::uint64_t> generator_syndromes() const;

 private:
  FieldMatrix h_;
  FieldMatrix reduced_;
  Origin origin_;
  bool zero_column_ = false;
};

LinearCode code_from_parity(FieldMatrix h, Origin origin = {});

/// Coset weights of every syndrome, by BFS over the Cayley graph of the syndrome group.
struct CosetTable {
  SyndromeSpace space;
  std::size_t length = 0;
  std::vector<std::uint64_t> generators;  // multiset, see LinearCode::generator_syndromes
  std::vector<std::uint8_t> weights;
  std::vector<std::uint64_t> mu;          // cosets per weight
  unsigned rho = 0;

  std::uint64_t size() const noexcept { return weights.size(); }
};

/// Throws SyndromeSpaceTooLarge above limits.max_syndromes.
CosetTable coset_weights(const LinearCode& code, const Limits& limits = {});

inline unsigned covering_radius(const CosetTable& table) { return table.rho; }

/// Sorted distinct nonzero weights of the dual code. Throws DualTooLarge.
std::vector<unsigned> dual_weight_set(const LinearCode& code, const Limits& limits = {});
unsigned outer_distance(const LinearCode& code, const Limits& limits = {});

/// Smallest number of dependent columns if it is at most 4, nullopt otherwise.
std::optional<unsigned> min_distance_upto4(const LinearCode& code);

/// Same parity-check entries read over F_{Q^r}.
LinearCode lift(const LinearCode& code, unsigned r);

/// Weight distribution of every coset, by classifying all of F_Q^n.
struct CosetDistributions {
  std::size_t length = 0;
  std::vector<std::uint64_t> counts;  // (syndrome, weight) -> count, row length length+1

  std::span<const std::uint64_t> of(std::uint64_t syndrome) const {
    return {counts.data() + syndrome * (length + 1), length + 1};
  }
  std::uint64_t syndromes() const { return counts.size() / (length + 1); }
};

/// Throws AmbientTooLarge when Q^n exceeds limits.max_ambient.
CosetDistributions coset_weight_distributions(const LinearCode& code, const Limits& limits = {});

}  // namespace crclab

#endif  // CRCLAB_CODE_HPP
