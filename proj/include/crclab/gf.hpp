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

#ifndef CRCLAB_GF_HPP
#define CRCLAB_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "crclab/error.hpp"

namespace crclab {

/// Field elements are base-p positional encodings of their polynomial
/// representative: sum a_i x^i  <->  sum a_i p^i.
using Element = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

inline constexpr unsigned kDefaultMaxDegree = 16;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;
// Orders up to this bound get full log/antilog tables.
inline constexpr std::uint64_t kTableOrderLimit = std::uint64_t{1} << 16;

/**
 * The field F_{p^k}, realized as F_p[x]/(f) where f is the least-encoded monic
 * irreducible polynomial of degree k. Immutable after construction.
 *
 * Instances are interned: field_create(p, k) returns the same object for the
 * same (p, k), so pointer equality is field identity.
 */
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned k, unsigned max_degree = kDefaultMaxDegree);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  Element order() const noexcept { return order_; }
  /// Coefficients c_0 .. c_k of the monic modulus (c_k == 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  /// Least-encoded primitive element.
  Element generator() const noexcept { return generator_; }

  bool contains(Element a) const noexcept { return a < order_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  /// Coefficient of x^i in the polynomial representative of a.
  unsigned digit(Element a, unsigned i) const;
  Element from_digits(std::span<const unsigned> digits) const;

 private:
  Element poly_mul(Element a, Element b) const;
  Element digit_add(Element a, Element b) const;
  Element digit_neg(Element a) const;

  unsigned p_;
  unsigned k_;
  Element order_;
  std::vector<unsigned> modulus_;
  Element generator_ = 1;
  std::vector<Element> powers_of_p_;
  bool tables_ = false;
  std::vector<Element> exp_;   // size 2(order-1)
  std::vector<Element> log_;   // size order, log_[0] unused
  std::vector<Element> add_table_;  // only for small odd-characteristic fields
  std::vector<Element> neg_table_;
};

/// Interned field constructor. Throws NotPrime / DegreeTooLarge / OrderTooLarge.
FieldPtr field_create(unsigned p, unsigned k, unsigned max_degree = kDefaultMaxDegree);

bool is_prime(std::uint64_t n);

/// Splits a prime power q into (p, j); throws BadParameters otherwise.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);

/// Injective ring homomorphism F_{p^j} -> F_{p^{jt}}.
class EmbeddingMap {
 public:
  EmbeddingMap(FieldPtr sub, FieldPtr sup, std::vector<Element> image)
      : sub_(std::move(sub)), sup_(std::move(sup)), image_(std::move(image)) {}

  const FieldPtr& sub() const noexcept { return sub_; }
  const FieldPtr& sup() const noexcept { return sup_; }
  Element operator()(Element a) const { return image_.at(a); }
  std::span<const Element> table() const noexcept { return image_; }

 private:
  FieldPtr sub_;
  FieldPtr sup_;
  std::vector<Element> image_;
};

/**
 * Embeds sub into sup. When sub is a maximal subfield of sup, x goes to the
 * least-encoded root of sub's modulus whose embedding agrees with the already
 * fixed embeddings of the smaller maximal subfields on their intersection.
 * Otherwise the map factors through the smallest maximal subfield of sup that
 * contains sub. This makes e(b->c) o e(a->b) == e(a->c) for every tower.
 *
 * Prime fields and same-degree pairs yield the identity table.
 */
EmbeddingMap field_embed(const FieldPtr& sub, const FieldPtr& sup);

/// Coordinates of F_{q^u} over an embedded F_q in the basis 1, g, ..., g^{u-1}
/// where g is the big field's generator.
class MuBasis {
 public:
  MuBasis(FieldPtr big, FieldPtr small);

  const FieldPtr& big() const noexcept { return big_; }
  const FieldPtr& small() const noexcept { return small_; }
  const EmbeddingMap& embedding() const noexcept { return embedding_; }
  unsigned dimension() const noexcept { return u_; }
  /// Basis elements in the big field.
  std::span<const Element> basis() const noexcept { return basis_; }

  std::vector<Element> expand(Element a) const;
  std::span<const Element> expand_view(Element a) const {
    return {coords_.data() + static_cast<std::size_t>(a) * u_, u_};
  }
  Element contract(std::span<const Element> coords) const;

 private:
  FieldPtr big_;
  FieldPtr small_;
  EmbeddingMap embedding_;
  unsigned u_;
  std::vector<Element> basis_;
  std::vector<Element> coords_;  // order(big) * u, small-field elements
};

}  // namespace crclab

#endif  // CRCLAB_GF_HPP
