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

#ifndef CRCLAB_LINALG_HPP
#define CRCLAB_LINALG_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "crclab/gf.hpp"

namespace crclab {

/// Dense row-major matrix over a declared finite field.
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws InvalidElement if any entry is not a valid encoding, ShapeMismatch on size.
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Element> col(std::size_t c) const;
  const std::vector<Element>& data() const noexcept { return data_; }

  bool is_zero() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

FieldMatrix identity_matrix(const FieldPtr& field, std::size_t n);
FieldMatrix transpose(const FieldMatrix& m);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix add(const FieldMatrix& a, const FieldMatrix& b);

/// Maps every entry through the embedding into its target field.
FieldMatrix embed(const FieldMatrix& m, const EmbeddingMap& e);
/// Embeds into target if needed (identity when m is already over target).
FieldMatrix embed_into(const FieldMatrix& m, const FieldPtr& target);

/**
 * Kronecker product A (x) B over target. Block (r, s) of the result is
 * embed(a_{r,s}) * embed(B): row index r * rows(B) + i, column index
 * s * cols(B) + t, so column s * n_b + t is a^{(s)} (x) b^{(t)}.
 *
 * Throws NoEmbedding / CharMismatch if either factor's field does not embed.
 */
FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b, const FieldPtr& target);

/// Parity-check matrix of the Hamming code: all nonzero columns of F^m whose
/// topmost nonzero entry is 1, in increasing order of the column read top to
/// bottom as a base-Q number.
FieldMatrix hamming_matrix(const FieldPtr& field, std::size_t m);

/// [I_{n-1} | -1^T]; throws LengthTooSmall for n < 2.
FieldMatrix repetition_matrix(const FieldPtr& field, std::size_t n);

/// Reduced row echelon form plus its pivot columns.
struct Echelon {
  FieldMatrix form;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

/// Indices of a maximal linearly independent set of rows, chosen greedily in row order.
std::vector<std::size_t> independent_rows(const FieldMatrix& m);

/// Basis of {x : M x^T = 0}, one vector per row of the result.
FieldMatrix null_space(const FieldMatrix& m);

FieldMatrix select_rows(const FieldMatrix& m, std::span<const std::size_t> rows);

/// Expands each row of S (over mu.big()) entrywise through the coordinate map:
/// an r x c matrix becomes r x (u c) over mu.small().
FieldMatrix mu_matrix(const MuBasis& mu, const FieldMatrix& s);
/// Inverse of mu_matrix.
FieldMatrix mu_contract_matrix(const MuBasis& mu, const FieldMatrix& expanded);

// Matrix text format: "p k rows cols" then one line of encodings per row.
void write_matrix(std::ostream& out, const FieldMatrix& m);
FieldMatrix read_matrix(std::istream& in);

}  // namespace crclab

#endif  // CRCLAB_LINALG_HPP
