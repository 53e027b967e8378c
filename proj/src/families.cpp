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

#include "crclab/families.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace crclab {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::kronecker_same: return "kronecker_same";
    case FamilyKind::kronecker_mixed: return "kronecker_mixed";
    case FamilyKind::lifted: return "lifted";
    case FamilyKind::main_family: return "main_family";
    case FamilyKind::corollary_family: return "corollary_family";
    case FamilyKind::up_repetition: return "up_repetition";
    case FamilyKind::remark: return "remark";
  }
  return "unknown";
}

namespace {

constexpr const char* kAsserted = "asserted, unverified";

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::uint64_t hamming_length(std::uint64_t field_order, unsigned m) { return (ipow(field_order, m) - 1) / (field_order - 1); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameters, what);
}

// H_{m_ext} over F_{q^ext} and H_{m_base} over F_q, multiplied in the order given by ext_first.
FamilyMember kronecker_member(std::uint64_t q, unsigned ext, unsigned m_ext, unsigned m_base, bool ext_first) {
  require(ext >= 1 && m_ext >= 1 && m_base >= 1, "extension degree and redundancies must be positive");
  const auto [p, j] = prime_power(q);
  const auto small = field_create(p, j);
  const auto big = field_create(p, j * ext);
  const auto he = hamming_matrix(big, m_ext);
  const auto hb = hamming_matrix(small, m_base);
  auto h = ext_first ? kronecker(he, hb, big) : kronecker(hb, he, big);

  Origin o;
  o.kind = Provenance::kronecker;
  o.p = p;
  o.j = j;
  o.ext_degree = ext;
  o.m_ext = m_ext;
  o.m_base = m_base;
  o.ext_first = ext_first;

  FamilySpec spec;
  spec.field_order = big->order();
  spec.claims.n = hamming_length(big->order(), m_ext) * hamming_length(q, m_base);
  spec.claims.k = spec.claims.n - std::size_t{m_ext} * m_base;
  if (std::max(m_ext, m_base) >= 2) spec.claims.d = 3;
  spec.claims.rho = std::min(ext * m_ext, m_base);
  spec.claims.s = spec.claims.rho;
  spec.claims.array = predicted_intersection_array(q, ext, m_ext, m_base);
  spec.claims.cr = true;
  spec.claims.up = true;
  spec.degenerate = m_ext == 1 || m_base == 1;
  spec.complete_transitivity = kAsserted;
  return {LinearCode(std::move(h), o), std::move(spec)};
}

std::vector<std::vector<Element>> sorted_columns(const FieldMatrix& m) {
  std::vector<std::vector<Element>> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  std::sort(cols.begin(), cols.end());
  return cols;
}

}  // namespace

std::size_t divisor_count(unsigned n) {
  std::size_t t = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) ++t;
  return t;
}

bool same_columns(const LinearCode& a, const LinearCode& b) {
  return a.field()->order() == b.field()->order() && a.length() == b.length() &&
         sorted_columns(a.reduced()) == sorted_columns(b.reduced());
}

FamilyMember kronecker_code(std::uint64_t q, unsigned u, unsigned m_a, unsigned m_b) {
  auto member = kronecker_member(q, u, m_a, m_b, true);
  auto& spec = member.spec;
  spec.kind = u == 1 ? FamilyKind::kronecker_same : FamilyKind::kronecker_mixed;
  spec.label = "kronecker(q=" + std::to_string(q) + ", u=" + std::to_string(u) + ", m_a=" + std::to_string(m_a) +
               ", m_b=" + std::to_string(m_b) + ")";
  spec.params = {{"q", q}, {"u", u}, {"m_a", m_a}, {"m_b", m_b}};
  return member;
}

FamilyMember lifted_code(std::uint64_t q, unsigned m, unsigned r) {
  require(m >= 1 && r >= 1, "redundancy and lift degree must be positive");
  const auto [p, j] = prime_power(q);
  const auto small = field_create(p, j);
  const auto big = field_create(p, j * r);

  Origin o;
  o.kind = Provenance::lifted;
  o.p = p;
  o.j = j;
  o.ext_degree = r;
  o.m_base = m;

  FamilySpec spec;
  spec.kind = FamilyKind::lifted;
  spec.label = "lifted(q=" + std::to_string(q) + ", m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")";
  spec.params = {{"q", q}, {"m", m}, {"r", r}};
  spec.field_order = big->order();
  spec.claims.n = hamming_length(q, m);
  spec.claims.k = spec.claims.n - m;
  if (m >= 2) spec.claims.d = 3;
  spec.claims.rho = std::min(m, r);
  spec.claims.s = spec.claims.rho;
  spec.claims.array = predicted_intersection_array(q, 1, m, r);
  spec.claims.cr = true;
  spec.claims.up = true;
  spec.degenerate = m == 1;
  spec.complete_transitivity = kAsserted;
  return {LinearCode(embed_into(hamming_matrix(small, m), big), o), std::move(spec)};
}

std::vector<FamilyMember> theorem_main_family(std::uint64_t q, unsigned a, unsigned b, unsigned u) {
  require(a >= 1 && b >= 1 && u >= 1, "a, b and u must be positive");
  const unsigned ua = u * a;
  std::vector<FamilyMember> out;
  out.push_back(lifted_code(q, b, ua));
  out.push_back(lifted_code(q, ua, b));
  out.push_back(kronecker_member(q, 1, ua, b, false));
  out.push_back(kronecker_member(q, a, u, b, false));
  out.push_back(kronecker_member(q, u, a, b, false));

  static constexpr const char* kItems[] = {"i", "ii", "iii", "iv", "v"};
  const auto array = predicted_intersection_array(q, 1, ua, b);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& spec = out[i].spec;
    spec.kind = FamilyKind::main_family;
    spec.label = "main(q=" + std::to_string(q) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                 ", u=" + std::to_string(u) + ") item " + kItems[i];
    spec.params = {{"q", q}, {"a", a}, {"b", b}, {"u", u}, {"item", i + 1}};
    spec.claims.rho = std::min(ua, b);
    spec.claims.s = spec.claims.rho;
    spec.claims.array = array;
  }
  return out;
}

CorollaryFamily corollary_family(std::uint64_t q, unsigned a, unsigned b) {
  require(a > 1 && b > 1, "corollary family needs a, b > 1");
  std::vector<FamilyMember> all;
  for (unsigned d = 2; d <= a; ++d)
    if (a % d == 0) all.push_back(kronecker_member(q, a / d, d, b, true));
  for (unsigned d = 2; d <= b; ++d)
    if (b % d == 0) all.push_back(kronecker_member(q, b / d, d, a, false));
  all.push_back(lifted_code(q, b, a));
  all.push_back(lifted_code(q, a, b));

  CorollaryFamily fam;
  fam.constructed = all.size();
  fam.bound = divisor_count(a) + divisor_count(b);
  const auto array = predicted_intersection_array(q, 1, a, b);
  std::set<std::tuple<std::uint64_t, std::size_t, std::vector<std::vector<Element>>>> seen;
  std::set<std::uint64_t> orders;
  for (auto& m : all) {
    auto key = std::make_tuple(std::uint64_t{m.code.field()->order()}, m.code.length(), sorted_columns(m.code.reduced()));
    if (!seen.insert(std::move(key)).second) continue;
    auto& spec = m.spec;
    spec.kind = FamilyKind::corollary_family;
    spec.label = "corollary(q=" + std::to_string(q) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                 ") over F_" + std::to_string(spec.field_order) + " n=" + std::to_string(spec.claims.n);
    spec.params = {{"q", q}, {"a", a}, {"b", b}};
    spec.claims.rho = std::min(a, b);
    spec.claims.s = spec.claims.rho;
    spec.claims.array = array;
    orders.insert(spec.field_order);
    fam.members.push_back(std::move(m));
  }
  fam.field_choices = orders.size();
  return fam;
}

FamilyMember up_family(std::uint64_t q, unsigned u, unsigned m, unsigned n_b) {
  require(n_b >= 4, "repetition length n_b must be at least 4");
  require(m >= 2 && u >= 1, "need m >= 2 and u >= 1");
  const auto [p, j] = prime_power(q);
  const auto small = field_create(p, j);
  const auto big = field_create(p, j * u);
  auto h = kronecker(hamming_matrix(big, m), repetition_matrix(small, n_b), big);

  Origin o;
  o.kind = Provenance::repetition_product;
  o.p = p;
  o.j = j;
  o.ext_degree = u;
  o.m_ext = m;
  o.m_base = n_b - 1;

  const std::uint64_t n_a = hamming_length(big->order(), m);
  const std::uint64_t bound = (big->order() - 1) * n_a + 1;

  FamilySpec spec;
  spec.kind = FamilyKind::up_repetition;
  spec.label = "up(q=" + std::to_string(q) + ", u=" + std::to_string(u) + ", m=" + std::to_string(m) +
               ", n_b=" + std::to_string(n_b) + ")";
  spec.params = {{"q", q}, {"u", u}, {"m", m}, {"n_b", n_b}};
  spec.field_order = big->order();
  spec.claims.n = n_a * n_b;
  spec.claims.k = spec.claims.n - std::size_t{m} * (n_b - 1);
  spec.claims.d = 3;
  spec.claims.s = n_b - 1;
  spec.claims.cr = false;
  if (n_b <= bound) {
    spec.claims.rho = n_b - 1;
    spec.claims.up = true;
  } else {
    if (n_b == bound + 1) spec.claims.rho = n_b - 2;
    spec.claims.up = false;
  }
  return {LinearCode(std::move(h), o), std::move(spec)};
}

FamilyMember remark_counterexample(bool slow) {
  if (!slow) throw Error(ErrorCode::SlowModeRequired, "the F_64 [45,41] code needs slow mode (64^4 syndromes)");
  const auto f4 = field_create(2, 2);
  const auto f8 = field_create(2, 3);
  const auto f64 = field_create(2, 6);
  auto h = kronecker(hamming_matrix(f4, 2), hamming_matrix(f8, 2), f64);

  Origin o;
  o.kind = Provenance::kronecker;
  o.p = 2;
  o.j = 1;
  o.ext_degree = 6;
  o.m_ext = 2;
  o.m_base = 2;
  o.nested = false;

  FamilySpec spec;
  spec.kind = FamilyKind::remark;
  spec.label = "remark: H_2 over F_4 (x) H_2 over F_8, in F_64";
  spec.params = {{"q", 64}};
  spec.field_order = 64;
  spec.claims.n = 45;
  spec.claims.k = 41;
  spec.claims.d = 3;
  spec.claims.rho = 3;
  spec.claims.s = 7;
  spec.claims.cr = false;
  spec.claims.up = false;
  return {LinearCode(std::move(h), o), std::move(spec)};
}

}  // namespace crclab
