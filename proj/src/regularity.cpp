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

#include "crclab/regularity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crclab {

std::int64_t IntersectionArray::a(std::size_t l, std::uint64_t degree) const {
  const std::uint64_t bl = l < b.size() ? b[l] : 0;
  const std::uint64_t cl = (l >= 1 && l <= c.size()) ? c[l - 1] : 0;
  return static_cast<std::int64_t>(degree) - static_cast<std::int64_t>(bl) - static_cast<std::int64_t>(cl);
}

std::string to_string(const IntersectionArray& ia) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ia.b.size(); ++i) out << (i ? ", " : "") << ia.b[i];
  out << "; ";
  for (std::size_t i = 0; i < ia.c.size(); ++i) out << (i ? ", " : "") << ia.c[i];
  out << ')';
  return out.str();
}

CrVerdict check_completely_regular(const CosetTable& table) {
  const auto& w = table.weights;
  const auto& space = table.space;
  const unsigned rho = table.rho;
  struct First {
    bool set = false;
    std::uint64_t syndrome = 0, c = 0, b = 0;
  };
  std::vector<First> first(rho + 1);

  for (std::uint64_t s = 0; s < w.size(); ++s) {
    const unsigned l = w[s];
    std::uint64_t c = 0, b = 0;
    for (auto g : table.generators) {
      const unsigned t = w[space.add(s, g)];
      if (t + 1 == l) ++c;
      else if (t == l + 1) ++b;
    }
    auto& f = first[l];
    if (!f.set) {
      f = {true, s, c, b};
    } else if (f.c != c || f.b != b) {
      return {std::nullopt, CrWitness{l, f.syndrome, s, f.c, f.b, c, b}};
    }
  }

  IntersectionArray ia;
  for (unsigned l = 0; l < rho; ++l) ia.b.push_back(first[l].b);
  for (unsigned l = 1; l <= rho; ++l) ia.c.push_back(first[l].c);
  return {ia, std::nullopt};
}

namespace {
std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}
}  // namespace

IntersectionArray predicted_intersection_array(std::uint64_t q, unsigned u, unsigned m_a, unsigned m_b) {
  if (q < 2 || u < 1 || m_a < 1 || m_b < 1) throw Error(ErrorCode::BadParameters, "predicted array needs q >= 2 and positive degrees");
  const unsigned big = u * m_a;
  const unsigned rho = std::min(big, m_b);
  IntersectionArray ia;
  for (unsigned l = 0; l < rho; ++l) ia.b.push_back((ipow(q, big) - ipow(q, l)) * (ipow(q, m_b) - ipow(q, l)) / (q - 1));
  for (unsigned l = 1; l <= rho; ++l) ia.c.push_back(ipow(q, l - 1) * (ipow(q, l) - 1) / (q - 1));
  return ia;
}

bool verify_mu_recurrence(const CosetTable& table, const IntersectionArray& ia) {
  if (ia.b.size() != table.rho || ia.c.size() != table.rho || table.mu.size() != table.rho + 1) return false;
  for (unsigned i = 0; i < table.rho; ++i)
    if (table.mu[i] * ia.b[i] != table.mu[i + 1] * ia.c[i]) return false;
  return true;
}

UPCertificate check_uniformly_packed(const LinearCode& code, const CosetTable& table, const Limits& limits) {
  UPCertificate cert;
  cert.rho = covering_radius(table);
  cert.s = outer_distance(code, limits);
  cert.is_up = cert.rho == cert.s;
  return cert;
}

std::optional<std::vector<Rational>> solve_alpha(const LinearCode&, const CosetDistributions& dists, unsigned rho) {
  // One equation per distinct (f_0, ..., f_rho).
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::uint64_t s = 0; s < dists.syndromes(); ++s) {
    const auto d = dists.of(s);
    std::vector<std::uint64_t> f(d.begin(), d.begin() + std::min<std::size_t>(rho + 1, d.size()));
    f.resize(rho + 1, 0);
    rows.push_back(std::move(f));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const std::size_t unknowns = rho + 1;
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(unknowns + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < unknowns; ++k) a[i][k] = Rational(rows[i][k]);
    a[i][unknowns] = 1;
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < a.size(); ++col) {
    std::size_t sel = r;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[r]);
    const Rational piv = a[r][col];
    for (auto& x : a[r]) x /= piv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t k = col; k <= unknowns; ++k) a[i][k] -= factor * a[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (a[i][unknowns] != 0) return std::nullopt;

  std::vector<Rational> alpha(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) alpha[pivots[i]] = a[i][unknowns];
  return alpha;
}

std::optional<std::vector<Rational>> solve_alpha(const LinearCode& code, const Limits& limits) {
  const auto dists = coset_weight_distributions(code, limits);
  unsigned rho = 0;
  for (std::uint64_t s = 0; s < dists.syndromes(); ++s) {
    const auto d = dists.of(s);
    const auto it = std::find_if(d.begin(), d.end(), [](std::uint64_t x) { return x != 0; });
    rho = std::max(rho, static_cast<unsigned>(it - d.begin()));
  }
  return solve_alpha(code, dists, rho);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> distribution_cr_violation(const CosetDistributions& dists) {
  std::map<std::size_t, std::uint64_t> first_of_weight;
  for (std::uint64_t s = 0; s < dists.syndromes(); ++s) {
    const auto d = dists.of(s);
    const auto wt = static_cast<std::size_t>(std::find_if(d.begin(), d.end(), [](std::uint64_t x) { return x != 0; }) - d.begin());
    auto [it, inserted] = first_of_weight.emplace(wt, s);
    if (inserted) continue;
    const auto ref = dists.of(it->second);
    if (!std::equal(d.begin(), d.end(), ref.begin())) return std::pair{it->second, s};
  }
  return std::nullopt;
}

}  // namespace crclab
