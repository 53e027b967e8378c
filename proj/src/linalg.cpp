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

#include "crclab/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace crclab {

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error(ErrorCode::ShapeMismatch, "data length does not match rows*cols");
  for (Element e : data_)
    if (!field_->contains(e))
      throw Error(ErrorCode::InvalidElement, std::to_string(e) + " is not an element of F_" + std::to_string(field_->order()));
}

std::vector<Element> FieldMatrix::col(std::size_t c) const {
  std::vector<Element> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

FieldMatrix identity_matrix(const FieldPtr& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix transpose(const FieldMatrix& m) {
  FieldMatrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "multiply: operands over different fields");
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "multiply: inner dimensions differ");
  const auto& f = *a.field();
  FieldMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

FieldMatrix add(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "add: operands over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "add: shapes differ");
  FieldMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field()->add(a(r, c), b(r, c));
  return out;
}

FieldMatrix embed(const FieldMatrix& m, const EmbeddingMap& e) {
  if (m.field() != e.sub()) throw Error(ErrorCode::FieldMismatch, "embed: matrix is not over the embedding's source");
  FieldMatrix out(e.sup(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e(m(r, c));
  return out;
}

FieldMatrix embed_into(const FieldMatrix& m, const FieldPtr& target) {
  if (m.field() == target) return m;
  return embed(m, field_embed(m.field(), target));
}

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b, const FieldPtr& target) {
  const FieldMatrix ea = embed_into(a, target);
  const FieldMatrix eb = embed_into(b, target);
  const auto& f = *target;
  FieldMatrix out(target, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t s = 0; s < a.cols(); ++s) {
      const Element x = ea(r, s);
      if (!x) continue;
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t t = 0; t < b.cols(); ++t) out(r * b.rows() + i, s * b.cols() + t) = f.mul(x, eb(i, t));
    }
  return out;
}

FieldMatrix hamming_matrix(const FieldPtr& field, std::size_t m) {
  if (m < 1) throw Error(ErrorCode::BadParameters, "Hamming redundancy must be at least 1");
  const std::uint64_t q = field->order();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < m; ++i) {
    space *= q;
    if (space > (std::uint64_t{1} << 32)) throw Error(ErrorCode::BadParameters, "Hamming matrix too large");
  }
  std::vector<std::vector<Element>> cols;
  std::vector<Element> digits(m);
  for (std::uint64_t v = 1; v < space; ++v) {
    // top entry is the most significant digit
    std::uint64_t x = v;
    for (std::size_t i = m; i-- > 0; x /= q) digits[i] = static_cast<Element>(x % q);
    const auto first = std::find_if(digits.begin(), digits.end(), [](Element e) { return e != 0; });
    if (*first == 1) cols.push_back(digits);
  }
  FieldMatrix h(field, m, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) h(r, c) = cols[c][r];
  return h;
}

FieldMatrix repetition_matrix(const FieldPtr& field, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::LengthTooSmall, "repetition code length must be at least 2");
  FieldMatrix r(field, n - 1, n);
  const Element minus_one = field->neg(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r(i, i) = 1;
    r(i, n - 1) = minus_one;
  }
  return r;
}

Echelon row_echelon(const FieldMatrix& m) {
  FieldMatrix a = m;
  const auto& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const Element inv = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Element factor = f.neg(a(r, col));
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = f.add(a(r, c), f.mul(factor, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<std::size_t> independent_rows(const FieldMatrix& m) {
  std::vector<std::size_t> picked;
  FieldMatrix basis(m.field(), 0, m.cols());
  std::size_t current = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::size_t> trial = picked;
    trial.push_back(r);
    const std::size_t rk = rank(select_rows(m, trial));
    if (rk > current) {
      picked = std::move(trial);
      current = rk;
    }
  }
  return picked;
}

FieldMatrix null_space(const FieldMatrix& m) {
  const auto ech = row_echelon(m);
  const auto& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  FieldMatrix out(m.field(), free.size(), m.cols());
  for (std::size_t i = 0; i < free.size(); ++i) {
    out(i, free[i]) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) out(i, ech.pivots[r]) = f.neg(ech.form(r, free[i]));
  }
  return out;
}

FieldMatrix select_rows(const FieldMatrix& m, std::span<const std::size_t> rows) {
  FieldMatrix out(m.field(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(rows[i], c);
  return out;
}

FieldMatrix mu_matrix(const MuBasis& mu, const FieldMatrix& s) {
  if (s.field() != mu.big()) throw Error(ErrorCode::FieldMismatch, "mu_matrix: matrix is not over the big field");
  const unsigned u = mu.dimension();
  FieldMatrix out(mu.small(), s.rows(), s.cols() * u);
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c) {
      const auto coords = mu.expand_view(s(r, c));
      for (unsigned i = 0; i < u; ++i) out(r, c * u + i) = coords[i];
    }
  return out;
}

FieldMatrix mu_contract_matrix(const MuBasis& mu, const FieldMatrix& expanded) {
  if (expanded.field() != mu.small()) throw Error(ErrorCode::FieldMismatch, "mu_contract: matrix is not over the subfield");
  const unsigned u = mu.dimension();
  if (expanded.cols() % u) throw Error(ErrorCode::ShapeMismatch, "mu_contract: width is not a multiple of u");
  FieldMatrix out(mu.big(), expanded.rows(), expanded.cols() / u);
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = mu.contract(expanded.row(r).subspan(c * u, u));
  return out;
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.field()->characteristic() << ' ' << m.field()->degree() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

FieldMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "missing header line");
  std::istringstream header(line);
  long long p = 0, k = 0, rows = 0, cols = 0;
  if (!(header >> p >> k >> rows >> cols) || p < 2 || k < 1 || rows < 0 || cols < 0)
    throw Error(ErrorCode::ParseError, "header must be 'p k rows cols'");
  auto field = field_create(static_cast<unsigned>(p), static_cast<unsigned>(k));
  std::vector<Element> data;
  data.reserve(static_cast<std::size_t>(rows * cols));
  for (long long r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "expected " + std::to_string(rows) + " rows");
    std::istringstream row(line);
    long long v;
    long long count = 0;
    while (row >> v) {
      if (v < 0) throw Error(ErrorCode::ParseError, "negative element encoding");
      data.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != cols || !row.eof()) throw Error(ErrorCode::ParseError, "row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
  }
  return FieldMatrix(std::move(field), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(data));
}

}  // namespace crclab
