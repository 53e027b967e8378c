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

#include "crclab/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <mutex>
#include <string>

namespace crclab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::CharMismatch: return "CharMismatch";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LengthTooSmall: return "LengthTooSmall";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::SyndromeSpaceTooLarge: return "SyndromeSpaceTooLarge";
    case ErrorCode::DualTooLarge: return "DualTooLarge";
    case ErrorCode::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLargeForGenericIso: return "TooLargeForGenericIso";
    case ErrorCode::UnsupportedProvenance: return "UnsupportedProvenance";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SlowModeRequired: return "SlowModeRequired";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::BadParameters, "q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned j = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++j;
  }
  if (rest != 1) throw Error(ErrorCode::BadParameters, "q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(p), j};
}

namespace {

using Poly = std::vector<unsigned>;  // low degree first, no trailing zeros except for the zero polynomial

void trim(Poly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
  unsigned r = 1;
  for (unsigned e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of f modulo g over F_p, g nonzero.
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
  const std::size_t dg = g.size() - 1;
  const unsigned lead_inv = inv_mod_p(g.back(), p);
  trim(f);
  while (f.size() > dg && !(f.size() == 1 && f[0] == 0)) {
    const unsigned coef = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + p - coef * g[i] % p) % p;
    trim(f);
  }
  return f;
}

bool is_zero(const Poly& f) { return f.size() == 1 && f[0] == 0; }

bool irreducible(const Poly& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i, c /= p) g[i] = static_cast<unsigned>(c % p);
      g[d] = 1;
      if (is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned k, unsigned max_degree) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  if (k < 1 || k > max_degree)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(k) + " outside [1, " + std::to_string(max_degree) + "]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::OrderTooLarge, std::to_string(p) + "^" + std::to_string(k) + " exceeds the element encoding width");
  }
  order_ = static_cast<Element>(q);
  powers_of_p_.resize(k + 1);
  powers_of_p_[0] = 1;
  for (unsigned i = 1; i <= k; ++i) powers_of_p_[i] = powers_of_p_[i - 1] * p;

  // Least-encoded monic irreducible: enumerate (c_0, ..., c_{k-1}) by increasing sum c_i p^i.
  for (Element code = 0; code < order_; ++code) {
    Poly f(k + 1);
    Element c = code;
    for (unsigned i = 0; i < k; ++i, c /= p) f[i] = c % p;
    f[k] = 1;
    if (irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  const std::uint64_t group = order_ - 1;
  if (group == 1) {
    generator_ = 1;
  } else {
    const auto factors = prime_factors(group);
    for (Element a = 2; a < order_; ++a) {
      bool primitive = true;
      for (auto r : factors) {
        Element x = 1, b = a;
        for (std::uint64_t e = group / r; e; e >>= 1, b = poly_mul(b, b))
          if (e & 1) x = poly_mul(x, b);
        if (x == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = a;
        break;
      }
    }
  }

  if (p_ != 2 && k_ > 1 && order_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b) add_table_[static_cast<std::size_t>(a) * order_ + b] = digit_add(a, b);
  }
  if (p_ != 2) {
    neg_table_.resize(order_);
    for (Element a = 0; a < order_; ++a) neg_table_[a] = digit_neg(a);
  }

  if (order_ <= kTableOrderLimit) {
    exp_.resize(2 * static_cast<std::size_t>(group) + 1);
    log_.assign(order_, 0);
    Element x = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<Element>(i);
      x = poly_mul(x, generator_);
    }
    for (std::uint64_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];
    tables_ = true;
  }
}

unsigned FiniteField::digit(Element a, unsigned i) const { return (a / powers_of_p_[i]) % p_; }

Element FiniteField::from_digits(std::span<const unsigned> digits) const {
  Element out = 0;
  for (std::size_t i = 0; i < digits.size() && i < k_; ++i) out += (digits[i] % p_) * powers_of_p_[i];
  return out;
}

Element FiniteField::digit_add(Element a, Element b) const {
  Element out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * powers_of_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Element FiniteField::digit_neg(Element a) const {
  Element out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * powers_of_p_[i];
    a /= p_;
  }
  return out;
}

Element FiniteField::poly_mul(Element a, Element b) const {
  if (p_ == 2) {
    // carry-less product, then reduce by the modulus bit pattern
    std::uint64_t prod = 0;
    for (std::uint64_t x = a, sh = 0; x; x >>= 1, ++sh)
      if (x & 1) prod ^= std::uint64_t{b} << sh;
    std::uint64_t mod = 0;
    for (unsigned i = 0; i <= k_; ++i)
      if (modulus_[i]) mod |= std::uint64_t{1} << i;
    for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit)
      if (prod >> bit & 1) prod ^= mod << (bit - k_);
    return static_cast<Element>(prod);
  }
  std::vector<unsigned> da(k_), db(k_), prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = digit(a, i);
    db[i] = digit(b, i);
  }
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (int deg = 2 * static_cast<int>(k_) - 2; deg >= static_cast<int>(k_); --deg) {
    const unsigned c = prod[deg];
    if (!c) continue;
    for (unsigned i = 0; i <= k_; ++i)
      prod[deg - k_ + i] = (prod[deg - k_ + i] + p_ * p_ - c * modulus_[i] % p_) % p_;
  }
  return from_digits(std::span<const unsigned>(prod.data(), k_));
}

Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  return digit_add(a, b);
}

Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  return neg_table_[a];
}

Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
  return poly_mul(a, b);
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (tables_) return exp_[(order_ - 1) - log_[a]];
  return pow(a, order_ - 2);
}

Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element r = 1;
  for (Element b = a; e; e >>= 1, b = mul(b, b))
    if (e & 1) r = mul(r, b);
  return r;
}

FieldPtr field_create(unsigned p, unsigned k, unsigned max_degree) {
  if (k < 1 || k > max_degree)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(k) + " outside [1, " + std::to_string(max_degree) + "]");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> registry;
  {
    std::lock_guard lock(mutex);
    if (auto it = registry.find({p, k}); it != registry.end()) return it->second;
  }
  auto field = std::make_shared<const FiniteField>(p, k, max_degree);
  std::lock_guard lock(mutex);
  return registry.emplace(std::pair{p, k}, std::move(field)).first->second;
}

namespace {

std::vector<unsigned> prime_factors(unsigned k) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= k; ++r) {
    if (k % r) continue;
    out.push_back(r);
    while (k % r == 0) k /= r;
  }
  if (k > 1) out.push_back(k);
  return out;
}

FieldPtr field_of_degree(unsigned p, unsigned k) { return field_create(p, k, std::max(k, kDefaultMaxDegree)); }

EmbeddingMap compose(const EmbeddingMap& inner, const EmbeddingMap& outer) {
  std::vector<Element> image(inner.sub()->order());
  for (Element a = 0; a < image.size(); ++a) image[a] = outer(inner(a));
  return EmbeddingMap(inner.sub(), outer.sup(), std::move(image));
}

// Image table of the embedding sending x to root.
std::vector<Element> image_from_root(const FiniteField& sub, const FiniteField& sup, Element root) {
  const unsigned j = sub.degree();
  std::vector<Element> root_powers(j);
  root_powers[0] = 1;
  for (unsigned i = 1; i < j; ++i) root_powers[i] = sup.mul(root_powers[i - 1], root);
  std::vector<Element> image(sub.order());
  for (Element a = 0; a < sub.order(); ++a) {
    Element acc = 0;
    for (unsigned i = 0; i < j; ++i) {
      const unsigned d = sub.digit(a, i);
      if (d) acc = sup.add(acc, sup.mul(d, root_powers[i]));
    }
    image[a] = acc;
  }
  return image;
}

void validate(const FiniteField& sub, const FiniteField& sup, const std::vector<Element>& image) {
  // Additive on basis monomials, multiplicative along the generator's powers, injective.
  std::vector<bool> seen(sup.order(), false);
  for (Element a = 0; a < sub.order(); ++a) {
    if (seen[image[a]]) throw Error(ErrorCode::NoEmbedding, "embedding table is not injective");
    seen[image[a]] = true;
    Element mono = 1;
    for (unsigned i = 0; i < sub.degree(); ++i, mono *= sub.characteristic())
      if (image[sub.add(a, mono)] != sup.add(image[a], image[mono]))
        throw Error(ErrorCode::NoEmbedding, "embedding is not additive");
  }
  const Element g = sub.generator();
  Element gi = 1, img = 1;
  for (Element i = 0; i + 1 < sub.order(); ++i) {
    if (image[gi] != img) throw Error(ErrorCode::NoEmbedding, "embedding is not multiplicative");
    gi = sub.mul(gi, g);
    img = sup.mul(img, image[g]);
  }
}

// sub has degree j = k / r for a prime r dividing k. Picks the least root of
// sub's modulus whose embedding agrees with every smaller maximal subfield on
// the common subfield.
EmbeddingMap embed_maximal(const FieldPtr& sub, const FieldPtr& sup) {
  const unsigned p = sub->characteristic(), j = sub->degree(), k = sup->degree();
  struct Constraint {
    EmbeddingMap via_other;  // F_g -> sup through the other maximal subfield
    EmbeddingMap into_sub;   // F_g -> sub
  };
  std::vector<Constraint> constraints;
  for (unsigned r : prime_factors(k)) {
    const unsigned b = k / r;
    if (b >= j) continue;
    const unsigned g = std::gcd(b, j);
    if (g == 1) continue;
    const auto fg = field_of_degree(p, g), fb = field_of_degree(p, b);
    constraints.push_back({compose(field_embed(fg, fb), field_embed(fb, sup)), field_embed(fg, sub)});
  }

  const auto& f = sub->modulus();
  for (Element r = 0; r < sup->order(); ++r) {
    Element acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = sup->add(sup->mul(acc, r), f[i]);
    if (acc != 0) continue;
    auto image = image_from_root(*sub, *sup, r);
    bool ok = true;
    for (const auto& c : constraints) {
      const Element gen = c.via_other.sub()->generator();
      if (image[c.into_sub(gen)] != c.via_other(gen)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    validate(*sub, *sup, image);
    return EmbeddingMap(sub, sup, std::move(image));
  }
  throw Error(ErrorCode::NoEmbedding, "no compatible root of the modulus in the target field");
}

}  // namespace

EmbeddingMap field_embed(const FieldPtr& sub, const FieldPtr& sup) {
  if (sub->characteristic() != sup->characteristic())
    throw Error(ErrorCode::CharMismatch, "fields have different characteristic");
  if (sup->degree() % sub->degree() != 0)
    throw Error(ErrorCode::NoEmbedding, "F_" + std::to_string(sub->order()) + " is not a subfield of F_" +
                                            std::to_string(sup->order()));
  const unsigned p = sub->characteristic(), j = sub->degree(), k = sup->degree();
  if (j == 1 || j == k) {
    std::vector<Element> image(sub->order());
    for (Element a = 0; a < image.size(); ++a) image[a] = a;
    return EmbeddingMap(sub, sup, std::move(image));
  }

  static std::mutex mutex;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, std::vector<Element>> cache;
  const auto key = std::make_tuple(p, j, k);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return EmbeddingMap(sub, sup, it->second);
  }

  // Route through the smallest maximal subfield of sup containing sub.
  unsigned via = k;
  for (unsigned r : prime_factors(k))
    if ((k / r) % j == 0) via = std::min(via, k / r);
  EmbeddingMap result = via == j ? embed_maximal(sub, sup)
                                 : compose(field_embed(sub, field_of_degree(p, via)),
                                           field_embed(field_of_degree(p, via), sup));
  std::lock_guard lock(mutex);
  cache.emplace(key, std::vector<Element>(result.table().begin(), result.table().end()));
  return EmbeddingMap(sub, sup, std::vector<Element>(result.table().begin(), result.table().end()));
}

MuBasis::MuBasis(FieldPtr big, FieldPtr small)
    : big_(std::move(big)), small_(std::move(small)), embedding_(field_embed(small_, big_)),
      u_(big_->degree() / small_->degree()) {
  basis_.resize(u_);
  basis_[0] = 1;
  for (unsigned i = 1; i < u_; ++i) basis_[i] = big_->mul(basis_[i - 1], big_->generator());

  const std::size_t order = big_->order();
  coords_.assign(order * u_, 0);
  std::vector<bool> hit(order, false);
  std::vector<Element> c(u_, 0);
  const Element q = small_->order();
  // Walk (F_q)^u in mixed radix and record the element each coordinate vector hits.
  for (std::size_t idx = 0; idx < order; ++idx) {
    Element a = 0;
    for (unsigned i = 0; i < u_; ++i) a = big_->add(a, big_->mul(embedding_(c[i]), basis_[i]));
    if (hit[a]) throw Error(ErrorCode::NotABasis, "powers of the generator are dependent over the subfield");
    hit[a] = true;
    std::copy(c.begin(), c.end(), coords_.begin() + static_cast<std::ptrdiff_t>(a * u_));
    for (unsigned i = 0; i < u_; ++i) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
  }
}

std::vector<Element> MuBasis::expand(Element a) const {
  if (!big_->contains(a)) throw Error(ErrorCode::InvalidElement, "element outside the big field");
  auto v = expand_view(a);
  return {v.begin(), v.end()};
}

Element MuBasis::contract(std::span<const Element> coords) const {
  if (coords.size() != u_) throw Error(ErrorCode::ShapeMismatch, "coordinate vector has wrong length");
  Element a = 0;
  for (unsigned i = 0; i < u_; ++i) {
    if (!small_->contains(coords[i])) throw Error(ErrorCode::InvalidElement, "coordinate outside the subfield");
    a = big_->add(a, big_->mul(embedding_(coords[i]), basis_[i]));
  }
  return a;
}

}  // namespace crclab
