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

#include "crclab/code.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "crclab/parallel.hpp"

namespace crclab {

namespace {
unsigned g_workers = 0;
}

unsigned worker_count() {
  if (g_workers) return g_workers;
  if (const char* env = std::getenv("CRCLAB_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_worker_count(unsigned n) { g_workers = n; }

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::hamming: return "hamming";
    case Provenance::kronecker: return "kronecker";
    case Provenance::lifted: return "lifted";
    case Provenance::repetition_product: return "repetition-product";
    case Provenance::raw: return "raw";
  }
  return "raw";
}

Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::hamming, Provenance::kronecker, Provenance::lifted, Provenance::repetition_product,
                 Provenance::raw})
    if (to_string(p) == s) return p;
  throw Error(ErrorCode::ParseError, "unknown provenance '" + s + "'");
}

// ---------------------------------------------------------------- syndromes

SyndromeSpace::SyndromeSpace(FieldPtr field, std::size_t m)
    : field_(std::move(field)), m_(m), binary_(field_->characteristic() == 2),
      digits_(static_cast<unsigned>(field_->degree() * m)) {
  long double bits = 0;
  for (std::size_t i = 0; i < m_; ++i) bits += std::log2l(static_cast<long double>(field_->order()));
  fits_ = bits < 63;
}

std::uint64_t SyndromeSpace::size() const {
  if (!fits_) throw Error(ErrorCode::SyndromeSpaceTooLarge, "syndrome space does not fit a 63-bit index");
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < m_; ++i) s *= field_->order();
  return s;
}

std::uint64_t SyndromeSpace::digit_add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = field_->characteristic();
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < digits_ && (a || b); ++i, place *= p) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
  }
  return out;
}

std::uint64_t SyndromeSpace::encode(std::span<const Element> v) const {
  if (!fits_) throw Error(ErrorCode::SyndromeSpaceTooLarge, "syndrome space does not fit a 63-bit index");
  std::uint64_t s = 0;
  for (std::size_t i = m_; i-- > 0;) s = s * field_->order() + v[i];
  return s;
}

std::vector<Element> SyndromeSpace::decode(std::uint64_t s) const {
  std::vector<Element> v(m_);
  for (std::size_t i = 0; i < m_; ++i, s /= field_->order()) v[i] = static_cast<Element>(s % field_->order());
  return v;
}

std::uint64_t SyndromeSpace::scale(Element alpha, std::uint64_t s) const {
  auto v = decode(s);
  for (auto& x : v) x = field_->mul(alpha, x);
  return encode(v);
}

// ---------------------------------------------------------------- codes

LinearCode::LinearCode(FieldMatrix h, Origin origin)
    : h_(std::move(h)), reduced_(h_.field(), 0, 0), origin_(origin) {
  if (h_.rows() == 0 || h_.cols() == 0 || h_.is_zero()) throw Error(ErrorCode::EmptyMatrix, "parity-check matrix is empty or zero");
  const auto rows = independent_rows(h_);
  reduced_ = select_rows(h_, rows);
  for (std::size_t c = 0; c < h_.cols() && !zero_column_; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < h_.rows(); ++r) zero = zero && h_(r, c) == 0;
    zero_column_ = zero;
  }
}

LinearCode code_from_parity(FieldMatrix h, Origin origin) { return LinearCode(std::move(h), origin); }

std::uint64_t LinearCode::syndrome_index(std::span<const Element> v) const {
  if (v.size() != length()) throw Error(ErrorCode::ShapeMismatch, "vector length differs from code length");
  const auto& f = *field();
  std::vector<Element> s(redundancy(), 0);
  for (std::size_t r = 0; r < redundancy(); ++r)
    for (std::size_t c = 0; c < length(); ++c) s[r] = f.add(s[r], f.mul(reduced_(r, c), v[c]));
  return syndrome_space().encode(s);
}

std::vector<std::uint64_t> LinearCode::column_syndromes() const {
  const auto space = syndrome_space();
  std::vector<std::uint64_t> out(length());
  for (std::size_t c = 0; c < length(); ++c) out[c] = space.encode(reduced_.col(c));
  return out;
}

std::vector<std::uint64_t> LinearCode::generator_syndromes() const {
  const auto space = syndrome_space();
  const Element q = field()->order();
  std::vector<std::uint64_t> out;
  out.reserve(length() * (q - 1));
  for (auto s : column_syndromes())
    for (Element alpha = 1; alpha < q; ++alpha) out.push_back(space.scale(alpha, s));
  return out;
}

// ---------------------------------------------------------------- coset weights

CosetTable coset_weights(const LinearCode& code, const Limits& limits) {
  CosetTable table{code.syndrome_space(), code.length(), code.generator_syndromes(), {}, {}, 0};
  const std::uint64_t size = table.space.size();
  if (size > limits.max_syndromes)
    throw Error(ErrorCode::SyndromeSpaceTooLarge,
                std::to_string(size) + " syndromes exceed the cap of " + std::to_string(limits.max_syndromes));

  // Distances do not depend on generator multiplicity.
  std::vector<std::uint64_t> gens = table.generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), 0u), gens.end());

  constexpr std::uint8_t kUnseen = 0xFF;
  auto& w = table.weights;
  w.assign(size, kUnseen);
  w[0] = 0;
  const auto& space = table.space;

  auto prefer_top_down = [&](std::uint64_t count, std::uint64_t remaining) {
    const long double top_down = static_cast<long double>(count) * gens.size();
    const long double bottom_up = static_cast<long double>(remaining) *
                                  std::min<long double>(gens.size(), static_cast<long double>(size) / count);
    return top_down <= bottom_up;
  };
  std::vector<std::uint64_t> frontier{0};
  std::uint64_t frontier_count = 1;
  std::uint64_t unvisited = size - 1;
  table.mu.push_back(1);
  std::uint8_t layer = 0;
  while (unvisited > 0 && frontier_count > 0) {
    if (layer == kUnseen - 1) throw Error(ErrorCode::SyndromeSpaceTooLarge, "coset weights exceed 254");
    const std::uint8_t next = layer + 1;
    if (!frontier.empty()) {
      parallel_for(0, frontier.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          const std::uint64_t s = frontier[i];
          for (auto g : gens) {
            std::atomic_ref<std::uint8_t> cell(w[space.add(s, g)]);
            if (cell.load(std::memory_order_relaxed) == kUnseen) cell.store(next, std::memory_order_relaxed);
          }
        }
      });
    } else {
      parallel_for(0, size, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t v = lo; v < hi; ++v) {
          std::atomic_ref<std::uint8_t> cell(w[v]);
          if (cell.load(std::memory_order_relaxed) != kUnseen) continue;
          for (auto g : gens) {
            std::atomic_ref<std::uint8_t> nb(w[space.add(v, g)]);
            if (nb.load(std::memory_order_relaxed) == layer) {
              cell.store(next, std::memory_order_relaxed);
              break;
            }
          }
        }
      });
    }
    frontier_count = 0;
    for (std::uint64_t v = 0; v < size; ++v)
      if (w[v] == next) ++frontier_count;
    unvisited -= frontier_count;
    if (frontier_count) table.mu.push_back(frontier_count);
    layer = next;
    // Materialize the frontier only when the next round will expand it top-down.
    frontier.clear();
    if (frontier_count && unvisited && prefer_top_down(frontier_count, unvisited)) {
      frontier.reserve(frontier_count);
      for (std::uint64_t v = 0; v < size; ++v)
        if (w[v] == next) frontier.push_back(v);
    }
  }
  if (unvisited) throw Error(ErrorCode::BadParameters, "generator syndromes do not span the syndrome space");
  table.rho = static_cast<unsigned>(table.mu.size() - 1);
  return table;
}

// ---------------------------------------------------------------- dual code

std::vector<unsigned> dual_weight_set(const LinearCode& code, const Limits& limits) {
  const auto& h = code.reduced();
  const auto& f = *code.field();
  const std::size_t m = h.rows(), n = h.cols();
  const Element q = f.order();
  long double words = 1;
  for (std::size_t i = 0; i < m; ++i) words *= q;
  if (words > static_cast<long double>(limits.max_dual_words))
    throw Error(ErrorCode::DualTooLarge, "dual code has more than " + std::to_string(limits.max_dual_words) + " words");

  // scaled[i][alpha] = alpha * row_i
  std::vector<std::vector<Element>> scaled(m * q, std::vector<Element>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (Element a = 0; a < q; ++a)
      for (std::size_t c = 0; c < n; ++c) scaled[i * q + a][c] = f.mul(a, h(i, c));

  const bool binary = f.characteristic() == 2;
  auto add_into = [&](std::vector<Element>& dst, const std::vector<Element>& x, const std::vector<Element>& y) {
    if (binary)
      for (std::size_t c = 0; c < n; ++c) dst[c] = x[c] ^ y[c];
    else
      for (std::size_t c = 0; c < n; ++c) dst[c] = f.add(x[c], y[c]);
  };

  // The leading coefficient is split across workers; the rest is a depth-first walk.
  const unsigned workers = worker_count();
  std::vector<std::vector<char>> seen(std::max(1u, workers), std::vector<char>(n + 1, 0));
  parallel_for(0, q, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
    auto& mine = seen[worker];
    // partial[i] = sum of the chosen multiples of rows 0 .. i-1
    std::vector<std::vector<Element>> partial(m + 1, std::vector<Element>(n, 0));
    std::vector<Element> word(n);
    auto record = [&](const std::vector<Element>& x) {
      unsigned wt = 0;
      for (auto e : x) wt += e != 0;
      mine[wt] = 1;
    };
    auto walk = [&](auto&& self, std::size_t i) -> void {
      if (i == m) {
        record(partial[m]);
        return;
      }
      if (i + 1 == m) {
        for (Element a = 0; a < q; ++a) {
          add_into(word, partial[i], scaled[i * q + a]);
          record(word);
        }
        return;
      }
      for (Element a = 0; a < q; ++a) {
        add_into(partial[i + 1], partial[i], scaled[i * q + a]);
        self(self, i + 1);
      }
    };
    for (std::uint64_t lead = lo; lead < hi; ++lead) {
      partial[1] = scaled[lead];
      walk(walk, 1);
    }
  });
  std::vector<unsigned> out;
  for (std::size_t wt = 1; wt <= n; ++wt)
    for (const auto& s : seen)
      if (s[wt]) {
        out.push_back(static_cast<unsigned>(wt));
        break;
      }
  return out;
}

unsigned outer_distance(const LinearCode& code, const Limits& limits) {
  return static_cast<unsigned>(dual_weight_set(code, limits).size());
}

// ---------------------------------------------------------------- minimum distance

namespace {

std::string key_of(const std::vector<Element>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Element)};
}

// Scales v so that its first nonzero entry is 1; returns false for the zero vector.
bool normalize(const FiniteField& f, std::vector<Element>& v) {
  auto it = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
  if (it == v.end()) return false;
  const Element inv = f.inv(*it);
  for (auto& x : v) x = f.mul(inv, x);
  return true;
}

}  // namespace

std::optional<unsigned> min_distance_upto4(const LinearCode& code) {
  const auto& h = code.reduced();
  const auto& f = *code.field();
  const std::size_t n = h.cols(), m = h.rows();
  const Element q = f.order();

  std::vector<std::vector<Element>> cols(n);
  std::unordered_set<std::string> normalized_cols;
  if (code.has_zero_column()) return 1u;
  bool two = false;
  for (std::size_t c = 0; c < n; ++c) {
    cols[c] = h.col(c);
    auto v = cols[c];
    if (!normalize(f, v)) return 1u;
    if (!normalized_cols.insert(key_of(v)).second) two = true;
  }
  if (two) return 2u;

  std::unordered_set<std::string> pair_sums;
  bool four = false;
  std::vector<Element> v(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (Element a = 1; a < q; ++a) {
        for (std::size_t r = 0; r < m; ++r) v[r] = f.add(f.mul(a, cols[i][r]), cols[j][r]);
        if (!normalize(f, v)) return 2u;  // unreachable once pairs are independent
        const auto key = key_of(v);
        if (normalized_cols.count(key)) return 3u;
        if (!pair_sums.insert(key).second) four = true;
      }
  if (four) return 4u;
  return std::nullopt;
}

// ---------------------------------------------------------------- lifting

LinearCode lift(const LinearCode& code, unsigned r) {
  if (r < 1) throw Error(ErrorCode::BadParameters, "lift degree must be at least 1");
  if (r == 1) return code;
  const auto& base = code.field();
  auto big = field_create(base->characteristic(), base->degree() * r);
  Origin origin;
  origin.kind = Provenance::lifted;
  origin.p = base->characteristic();
  origin.j = base->degree();
  origin.ext_degree = r;
  origin.m_base = code.parity_check().rows();
  return LinearCode(embed_into(code.parity_check(), big), origin);
}

// ---------------------------------------------------------------- coset distributions

CosetDistributions coset_weight_distributions(const LinearCode& code, const Limits& limits) {
  const std::size_t n = code.length();
  const Element q = code.field()->order();
  long double ambient = 1;
  for (std::size_t i = 0; i < n; ++i) ambient *= q;
  if (ambient > static_cast<long double>(limits.max_ambient))
    throw Error(ErrorCode::AmbientTooLarge, "F_Q^n has more than " + std::to_string(limits.max_ambient) + " vectors");

  const auto space = code.syndrome_space();
  CosetDistributions out;
  out.length = n;
  out.counts.assign(space.size() * (n + 1), 0);
  const auto gens = code.generator_syndromes();

  // Depth-first walk over coordinates carrying the running syndrome and weight.
  auto walk = [&](auto&& self, std::size_t i, std::uint64_t s, std::size_t wt) -> void {
    if (i == n) {
      ++out.counts[s * (n + 1) + wt];
      return;
    }
    self(self, i + 1, s, wt);
    for (Element a = 1; a < q; ++a) self(self, i + 1, space.add(s, gens[i * (q - 1) + a - 1]), wt + 1);
  };
  walk(walk, 0, 0, 0);
  return out;
}

}  // namespace crclab
