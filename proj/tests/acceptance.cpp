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


// Acceptance run: one PASS/FAIL line per criterion with its time budget.
// Criterion 6 needs --slow.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "crclab/families.hpp"
#include "crclab/graphs.hpp"
#include "crclab/regularity.hpp"
#include "oracles.hpp"

using namespace crclab;

namespace {

// Time budgets in seconds.
constexpr double kBudget1 = 5;
constexpr double kBudget2 = 1;
constexpr double kBudget3 = 60;
constexpr double kBudget4 = 10;
constexpr double kBudget5 = 5;
constexpr double kBudget6Dual = 120;
constexpr double kBudget6Total = 1800;
constexpr double kBudget7 = 60;
constexpr double kBudget8 = 120;

constexpr int kLiftVectors = 1000;
constexpr int kRowOpPairs = 100;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FieldPtr gf(unsigned p, unsigned k = 1) { return field_create(p, k); }

std::string str(const std::optional<IntersectionArray>& a) { return a ? to_string(*a) : "none"; }

// ---------------------------------------------------------------- criteria

void criterion1(Outcome& o) {
  const auto a = lifted_code(4, 3, 2);
  const auto b = lifted_code(2, 6, 2);
  const auto ta = coset_weights(a.code), tb = coset_weights(b.code);
  const auto ca = check_completely_regular(ta), cb = check_completely_regular(tb);
  o.require(ta.size() == 4096 && tb.size() == 4096, "syndrome counts");
  o.require(ca.array == IntersectionArray{{315, 240}, {1, 20}}, "lifted(4,3,2) array " + str(ca.array));
  o.require(cb.array == IntersectionArray{{189, 124}, {1, 6}}, "lifted(2,6,2) array " + str(cb.array));
  if (o.pass) o.detail << "lifted(4,3,2) " << str(ca.array) << ", lifted(2,6,2) " << str(cb.array);
}

void criterion2(Outcome& o) {
  const auto m = kronecker_code(2, 1, 2, 2);
  const auto& c = m.code;
  const auto t = coset_weights(c);
  const auto cr = check_completely_regular(t);
  o.require(c.length() == 9 && c.dimension() == 5, "[n,k]");
  o.require(min_distance_upto4(c) == 3u, "d = 3");
  o.require(t.rho == 2, "rho = 2");
  o.require(cr.array == IntersectionArray{{9, 4}, {1, 6}}, "array " + str(cr.array));
  const auto ref = oracle::ambient_coset_weights(c);
  bool agree = ref.size() == t.size();
  for (std::size_t s = 0; agree && s < ref.size(); ++s) agree = ref[s] == t.weights[s];
  o.require(agree, "BFS weights differ from the 512-vector enumeration");
  if (o.pass) o.detail << "[9,5,3]_2, rho=2, " << str(cr.array) << ", 16/16 syndromes agree with ambient oracle";
}

void criterion3(Outcome& o) {
  const auto m = kronecker_code(2, 2, 2, 4);
  const auto t = coset_weights(m.code);
  const auto cr = check_completely_regular(t);
  const IntersectionArray expected{{225, 196, 144, 64}, {1, 6, 28, 120}};
  o.require(m.code.length() == 75 && m.code.dimension() == 67, "[75,67]");
  o.require(m.code.field()->order() == 4, "field F_4");
  o.require(t.size() == 65536, "65536 syndromes");
  o.require(t.rho == 4, "rho = 4");
  o.require(predicted_intersection_array(2, 2, 2, 4) == expected, "closed form");
  o.require(cr.array == expected, "scan array " + str(cr.array));
  if (o.pass) o.detail << "[75,67]_4, rho=4, scan " << str(cr.array) << " equals closed form";
}

void criterion4(Outcome& o) {
  const auto fam = theorem_main_family(2, 2, 3, 1);
  const IntersectionArray expected{{21, 12}, {1, 6}};
  std::vector<const FamilyMember*> distinct;
  for (const auto& m : fam) {
    const auto t = coset_weights(m.code);
    const auto cr = check_completely_regular(t);
    o.require(cr.array == expected, m.spec.label + " array " + str(cr.array));
    bool seen = false;
    for (const auto* d : distinct) seen = seen || same_columns(d->code, m.code);
    if (!seen) distinct.push_back(&m);
  }
  o.require(distinct.size() == 3, "expected three distinct members, got " + std::to_string(distinct.size()));
  const auto target = bilinear_forms_graph(gf(2), 3, 2);
  std::vector<SimpleGraph> graphs;
  for (const auto* m : distinct) {
    const auto t = coset_weights(m->code);
    const auto iso = explicit_bilinear_isomorphism(m->code, t, std::pair<std::size_t, std::size_t>{3, 2});
    o.require(iso.verified && iso.edge_checked, m->spec.label + " explicit map");
    graphs.push_back(coset_graph(t));
    o.require(graphs.back().vertex_count() == 64, "64 vertices");
    const auto phi = graph_isomorphic(graphs.back(), target);
    o.require(phi && is_isomorphism(graphs.back(), target, *phi), m->spec.label + " generic vs bilinear");
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const auto phi = graph_isomorphic(graphs[i], graphs[j]);
      o.require(phi && is_isomorphism(graphs[i], graphs[j], *phi), "generic pairwise isomorphism");
    }
  if (o.pass)
    o.detail << "5 members with " << to_string(expected) << ", " << distinct.size()
             << " distinct 64-vertex graphs, explicit maps to 3x2 bilinear and generic checks agree";
}

void criterion5(Outcome& o) {
  const auto a = up_family(2, 1, 2, 4);
  const auto ta = coset_weights(a.code);
  const auto ua = check_uniformly_packed(a.code, ta);
  const auto ca = check_completely_regular(ta);
  o.require(ua.rho == 3 && ua.s == 3 && ua.is_up, "up(2,1,2,4) rho = s = 3");
  o.require(!ca.completely_regular() && ca.witness.has_value(), "up(2,1,2,4) NotCR witness");
  const auto alpha = solve_alpha(a.code);
  o.require(alpha.has_value(), "up(2,1,2,4) alpha solvable");
  if (alpha) {
    const auto dists = coset_weight_distributions(a.code);
    bool holds = true;
    for (std::uint64_t s = 0; s < dists.syndromes(); ++s) {
      Rational sum = 0;
      const auto f = dists.of(s);
      for (std::size_t k = 0; k < alpha->size(); ++k) sum += (*alpha)[k] * f[k];
      holds = holds && sum == 1;
    }
    o.require(holds, "alpha identity on every coset");
  }

  const auto b = up_family(2, 1, 2, 5);
  const auto ub = check_uniformly_packed(b.code, coset_weights(b.code));
  o.require(ub.rho == 3 && ub.s == 4 && !ub.is_up, "up(2,1,2,5) rho = 3, s = 4");
  o.require(!solve_alpha(b.code).has_value(), "up(2,1,2,5) alpha has no solution");
  if (o.pass) {
    o.detail << "n_b=4: rho=s=3, NotCR at layer " << ca.witness->layer << " (syndromes " << ca.witness->first << ", "
             << ca.witness->second << "), alpha=(";
    for (std::size_t k = 0; k < alpha->size(); ++k) o.detail << (k ? ", " : "") << (*alpha)[k].str();
    o.detail << "); n_b=5: rho=3, s=4, no alpha";
  }
}

void criterion6(Outcome& o) {
  const auto m = remark_counterexample(true);
  o.require(m.code.length() == 45 && m.code.dimension() == 41, "[45,41]");
  o.require(m.code.field()->order() == 64, "F_64");
  o.require(min_distance_upto4(m.code) == 3u, "d = 3");
  Limits limits;
  const auto t0 = std::chrono::steady_clock::now();
  const unsigned s = outer_distance(m.code, limits);
  const double dual_secs = seconds_since(t0);
  o.require(s == 7, "s = " + std::to_string(s));
  o.require(dual_secs < kBudget6Dual, "dual enumeration over budget");
  const auto t = coset_weights(m.code, limits);
  o.require(t.size() == 16777216, "64^4 syndromes");
  o.require(t.generators.size() == 2835, "2835 generators");
  o.require(t.rho == 3, "rho = " + std::to_string(t.rho));
  o.require(!check_completely_regular(t).completely_regular(), "not CR");
  if (o.pass) o.detail << "[45,41,3]_64, s=7 (" << dual_secs << " s), rho=3 over 64^4 syndromes, not CR";
}

// A vector is in the lifted code iff each of its coordinate rows is in the base code.
bool lifting_membership(const LinearCode& lifted, std::mt19937_64& rng) {
  const auto big = lifted.field();
  const auto small = field_create(lifted.origin().p, lifted.origin().j);
  const LinearCode base(FieldMatrix(small, lifted.parity_check().rows(), lifted.parity_check().cols(),
                                    [&] {
                                      std::vector<Element> d;
                                      const auto e = field_embed(small, big);
                                      for (auto x : lifted.parity_check().data()) {
                                        Element pre = 0;
                                        while (e(pre) != x) ++pre;
                                        d.push_back(pre);
                                      }
                                      return d;
                                    }()));
  const MuBasis mu(big, small);
  const auto gens = null_space(lifted.parity_check());
  for (int t = 0; t < kLiftVectors; ++t) {
    std::vector<Element> v(lifted.length(), 0);
    if (t % 2 == 0) {
      for (std::size_t r = 0; r < gens.rows(); ++r) {
        const Element c = static_cast<Element>(rng() % big->order());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = big->add(v[j], big->mul(c, gens(r, j)));
      }
    } else {
      for (auto& x : v) x = static_cast<Element>(rng() % big->order());
    }
    const bool in_lifted = lifted.syndrome_index(v) == 0;
    bool rows = true;
    for (unsigned i = 0; i < mu.dimension(); ++i) {
      std::vector<Element> row(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) row[j] = mu.expand(v[j])[i];
      rows = rows && oracle::syndrome(base, row) == 0;
    }
    if (in_lifted != rows) return false;
  }
  return true;
}

// Syndromes as m_b x m_a matrices: K^T S_x = S_y iff K^T mu(S_x) = mu(S_y).
bool row_operation_equivalence(unsigned p, unsigned j, unsigned u, std::size_t m_b, std::size_t m_a,
                               std::mt19937_64& rng) {
  const auto small = field_create(p, j), big = field_create(p, j * u);
  const MuBasis mu(big, small);
  int related = 0;
  for (int t = 0; t < kRowOpPairs; ++t) {
    FieldMatrix k(small, m_b, m_b);
    do k = oracle::random_matrix(small, m_b, m_b, rng);
    while (oracle::rank(k) != m_b);
    const auto kt = transpose(k);
    const auto kt_big = embed_into(kt, big);
    const auto sx = oracle::random_matrix(big, m_b, m_a, rng);
    FieldMatrix sy = multiply(kt_big, sx);
    if (t % 3 == 1) sy(rng() % m_b, rng() % m_a) = static_cast<Element>(rng() % big->order());
    if (t % 3 == 2) sy = oracle::random_matrix(big, m_b, m_a, rng);
    const bool lhs = multiply(kt_big, sx) == sy;
    const bool rhs = multiply(kt, mu_matrix(mu, sx)) == mu_matrix(mu, sy);
    if (lhs != rhs) return false;
    related += lhs;
  }
  return related >= kRowOpPairs / 3;
}

bool hamming_surjective(unsigned p, std::size_t m) {
  const auto f = gf(p);
  const auto b = hamming_matrix(f, m);
  const Element q = f->order();
  const std::size_t nb = b.cols();
  std::uint64_t total = 1, image = 1;
  for (std::size_t i = 0; i < nb; ++i) total *= q;
  for (std::size_t i = 0; i < m; ++i) image *= q;
  std::vector<std::uint64_t> hits(image, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx, w = 0;
    std::vector<Element> v(nb);
    for (auto& e : v) {
      e = static_cast<Element>(x % q);
      x /= q;
    }
    for (std::size_t s = 0; s < m; ++s) {
      Element acc = 0;
      for (std::size_t c = 0; c < nb; ++c) acc = f->add(acc, f->mul(v[c], b(s, c)));
      w = w * q + acc;
    }
    ++hits[w];
  }
  // Kernel size q^{n_b - m_b} and every image point hit equally often.
  for (auto h : hits)
    if (h != total / image) return false;
  return true;
}

std::vector<FamilyMember> criteria_codes() {
  std::vector<FamilyMember> out;
  out.push_back(lifted_code(4, 3, 2));
  out.push_back(lifted_code(2, 6, 2));
  out.push_back(kronecker_code(2, 1, 2, 2));
  out.push_back(kronecker_code(2, 2, 2, 4));
  for (auto& m : theorem_main_family(2, 2, 3, 1)) out.push_back(std::move(m));
  out.push_back(up_family(2, 1, 2, 4));
  out.push_back(up_family(2, 1, 2, 5));
  return out;
}

void criterion7(Outcome& o) {
  std::mt19937_64 rng(2026);
  std::size_t codes = 0, lifted = 0;
  for (const auto& m : criteria_codes()) {
    ++codes;
    const auto t = coset_weights(m.code);
    const auto up = check_uniformly_packed(m.code, t);
    const auto cr = check_completely_regular(t);
    o.require(up.rho <= up.s, m.spec.label + ": rho <= s");
    if (cr.completely_regular()) {
      o.require(up.rho == up.s, m.spec.label + ": CR implies rho = s");
      o.require(verify_mu_recurrence(t, *cr.array), m.spec.label + ": mu recurrence");
    }
    if (m.code.origin().kind == Provenance::lifted) {
      ++lifted;
      o.require(lifting_membership(m.code, rng), m.spec.label + ": lifted membership");
    }
  }
  o.require(row_operation_equivalence(2, 1, 2, 4, 2, rng), "row-operation equivalence (q=2, u=2)");
  o.require(row_operation_equivalence(2, 1, 3, 3, 2, rng), "row-operation equivalence (q=2, u=3)");
  o.require(row_operation_equivalence(3, 1, 2, 2, 2, rng), "row-operation equivalence (q=3, u=2)");
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}})
    o.require(hamming_surjective(p, m), "surjectivity q=" + std::to_string(p) + " m_b=" + std::to_string(m));
  if (o.pass)
    o.detail << codes << " codes: rho<=s, CR=>rho=s, mu recurrence; " << lifted << " lifted codes x " << kLiftVectors
             << " vectors; 3 x " << kRowOpPairs << " row-operation pairs; 3 surjectivity cases";
}

void criterion8(Outcome& o) {
  std::size_t graphs = 0;
  for (const auto& m : criteria_codes()) {
    const auto t = coset_weights(m.code);
    const auto cr = check_completely_regular(t);
    if (!cr.completely_regular()) continue;
    const auto g = coset_graph(t);
    const auto drg = check_distance_regular(g, default_drg_mode(g));
    o.require(drg.array == cr.array, m.spec.label + ": graph array " + str(drg.array) + " (" + drg.mode + ")");
    ++graphs;
  }
  const auto big = kronecker_code(2, 2, 2, 4);
  const auto g = coset_graph(coset_weights(big.code));
  o.require(diameter(g) == 4, "diameter 4");
  o.require(check_antipodal(g) == Antipodality::not_antipodal, "criterion-3 graph antipodality");
  if (o.pass) o.detail << graphs << " coset graphs distance-regular with their code arrays; 65536-vertex graph not antipodal";
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else {
      std::cerr << "usage: crclab_acceptance [--slow]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<void(Outcome&)> run;
    bool needs_slow = false;
  };
  const std::vector<Criterion> criteria = {
      {1, "lifted Hamming arrays", kBudget1, criterion1},
      {2, "binary Kronecker [9,5,3]", kBudget2, criterion2},
      {3, "mixed-alphabet Kronecker over F_4", kBudget3, criterion3},
      {4, "main family coherence", kBudget4, criterion4},
      {5, "repetition family regimes", kBudget5, criterion5},
      {6, "[45,41,3] code over F_64", kBudget6Total, criterion6, true},
      {7, "structural property suite", kBudget7, criterion7},
      {8, "coset graph checks", kBudget8, criterion8},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (c.needs_slow && !slow) {
      std::cout << "SKIP criterion " << c.id << " (" << c.name << "): needs --slow" << std::endl;
      continue;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    o.require(secs < c.budget, "over time budget");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << secs << " s / "
              << c.budget << " s: " << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
