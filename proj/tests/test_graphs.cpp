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


#include <doctest.h>

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "crclab/graphs.hpp"
#include "crclab/regularity.hpp"
#include "oracles.hpp"

using namespace crclab;

namespace {

FieldPtr gf(unsigned p, unsigned k = 1) { return field_create(p, k); }

LinearCode hamming(unsigned p, unsigned k, std::size_t m) { return LinearCode(hamming_matrix(gf(p, k), m)); }

LinearCode kron_code(unsigned q_p, unsigned q_k, unsigned u, std::size_t ma, std::size_t mb) {
  const auto big = gf(q_p, q_k * u), small = gf(q_p, q_k);
  Origin o;
  o.kind = Provenance::kronecker;
  o.p = q_p;
  o.j = q_k;
  o.ext_degree = u;
  o.m_ext = ma;
  o.m_base = mb;
  o.ext_first = true;
  return LinearCode(kronecker(hamming_matrix(big, ma), hamming_matrix(small, mb), big), o);
}

LinearCode h2h2() { return kron_code(2, 1, 1, 2, 2); }

SimpleGraph graph_of(const LinearCode& c) { return coset_graph(coset_weights(c)); }

using Edge = std::pair<Vertex, Vertex>;

SimpleGraph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return SimpleGraph::from_edges(10, e, "petersen");
}

SimpleGraph prism5() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 1) % 5);
  }
  return SimpleGraph::from_edges(10, e, "prism");
}

SimpleGraph cube3() {
  std::vector<Edge> e;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) e.emplace_back(v, v ^ b);
  return SimpleGraph::from_edges(8, e, "cube");
}

FieldMatrix matrix_of(const FieldPtr& f, std::uint64_t index, std::size_t rows, std::size_t cols) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = static_cast<Element>(index % f->order());
      index /= f->order();
    }
  return m;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("simple graph construction") {
    const std::vector<Edge> e = {{0, 1}, {1, 0}, {1, 2}};
    const auto g = SimpleGraph::from_edges(3, e);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    const std::vector<Edge> loop = {{1, 1}};
    CHECK(code_of([&] { SimpleGraph::from_edges(3, loop); }) == ErrorCode::BadParameters);
    const std::vector<Edge> out = {{0, 3}};
    CHECK(code_of([&] { SimpleGraph::from_edges(3, out); }) == ErrorCode::BadParameters);
  }

  TEST_CASE("coset graph examples") {
    const auto g = graph_of(h2h2());
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 72);
    for (Vertex v = 0; v < 16; ++v) CHECK(g.degree(v) == 9);
    CHECK(g.vertex_transitive());

    const auto k8 = graph_of(hamming(2, 1, 3));
    CHECK(k8.vertex_count() == 8);
    CHECK(k8.edge_count() == 28);

    const auto l = graph_of(lift(hamming(2, 1, 3), 2));
    CHECK(l.vertex_count() == 64);
    for (Vertex v = 0; v < 64; ++v) CHECK(l.degree(v) == 21);
  }

  TEST_CASE("coset graph structure") {
    for (const auto& c : {h2h2(), hamming(3, 1, 2), lift(hamming(2, 1, 2), 2), kron_code(2, 1, 2, 1, 2)}) {
      const auto g = graph_of(c);
      CHECK(g.edge_count() * 2 == g.vertex_count() * c.length() * (c.field()->order() - 1));
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::set<Vertex> seen;
        for (Vertex v : g.neighbours(u)) {
          CHECK(v != u);
          CHECK(seen.insert(v).second);
          CHECK(g.adjacent(v, u));
        }
      }
    }
  }

  TEST_CASE("graph caps") {
    Limits tight;
    tight.max_graph_vertices = 8;
    CHECK(code_of([&] { coset_graph(coset_weights(h2h2()), tight); }) == ErrorCode::GraphTooLarge);
    CHECK(code_of([&] { bilinear_forms_graph(gf(2), 2, 2, tight); }) == ErrorCode::GraphTooLarge);
  }

  TEST_CASE("distance-regular examples") {
    const auto c5 = check_distance_regular(oracle::cycle(5), default_drg_mode(oracle::cycle(5)));
    REQUIRE(c5.distance_regular());
    CHECK(*c5.array == IntersectionArray{{2, 1}, {1, 1}});
    CHECK(c5.mode == "full");

    const std::vector<Edge> path = {{0, 1}, {1, 2}};
    const auto p3 = check_distance_regular(SimpleGraph::from_edges(3, path), DrgMode{});
    CHECK_FALSE(p3.distance_regular());
    REQUIRE(p3.witness.has_value());
    CHECK(p3.witness->quantity == "degree");

    const auto k = check_distance_regular(graph_of(h2h2()), DrgMode{});
    REQUIRE(k.distance_regular());
    CHECK(*k.array == IntersectionArray{{9, 4}, {1, 6}});

    const auto pet = check_distance_regular(petersen(), DrgMode{});
    REQUIRE(pet.distance_regular());
    CHECK(*pet.array == IntersectionArray{{3, 2}, {1, 1}});

    // Prism is regular but not distance-regular.
    CHECK_FALSE(check_distance_regular(prism5(), DrgMode{}).distance_regular());
  }

  TEST_CASE("disconnected graphs are rejected") {
    const std::vector<Edge> e = {{0, 1}, {2, 3}};
    const auto g = SimpleGraph::from_edges(4, e);
    CHECK(code_of([&] { check_distance_regular(g, DrgMode{}); }) == ErrorCode::Disconnected);
    CHECK(code_of([&] { diameter(g); }) == ErrorCode::Disconnected);
  }

  TEST_CASE("coset graph arrays equal code arrays") {
    for (const auto& c : {h2h2(), hamming(2, 1, 3), lift(hamming(2, 1, 2), 2), lift(hamming(2, 1, 3), 2),
                          kron_code(2, 1, 2, 1, 2), kron_code(3, 1, 1, 2, 2), kron_code(2, 1, 1, 3, 2)}) {
      const auto table = coset_weights(c);
      const auto cr = check_completely_regular(table);
      REQUIRE(cr.completely_regular());
      const auto g = coset_graph(table);
      const auto drg = check_distance_regular(g, default_drg_mode(g));
      REQUIRE(drg.distance_regular());
      CHECK(*drg.array == *cr.array);
      CHECK(diameter(g) == table.rho);
    }
  }

  TEST_CASE("sampled mode is deterministic and labelled") {
    const auto g = graph_of(lift(hamming(2, 1, 3), 2));
    const DrgMode mode{DrgMode::Kind::sampled, 42, 16};
    const auto a = check_distance_regular(g, mode);
    const auto b = check_distance_regular(g, mode);
    CHECK(a.bases == b.bases);
    CHECK(a.bases.size() == 16);
    CHECK(std::set<Vertex>(a.bases.begin(), a.bases.end()).size() == 16);
    CHECK(a.mode == "sampled(seed=42, count=16)");
    REQUIRE(a.distance_regular());
    CHECK(*a.array == IntersectionArray{{21, 12}, {1, 6}});
    const auto other = check_distance_regular(g, DrgMode{DrgMode::Kind::sampled, 43, 16});
    CHECK(other.bases != a.bases);
    CHECK(to_string(DrgMode{}) == "full");
  }

  TEST_CASE("default mode switches above 4096 vertices") {
    CHECK(default_drg_mode(oracle::cycle(4096)).kind == DrgMode::Kind::full);
    CHECK(default_drg_mode(oracle::cycle(4097)).kind == DrgMode::Kind::sampled);
  }

  TEST_CASE("bilinear forms graph examples") {
    struct Case {
      unsigned p;
      std::size_t d, e, vertices, degree;
    };
    for (auto c : {Case{2, 2, 2, 16, 9}, Case{2, 3, 2, 64, 21}, Case{3, 2, 2, 81, 32}, Case{2, 1, 3, 8, 7}}) {
      const auto g = bilinear_forms_graph(gf(c.p), c.d, c.e);
      CHECK(g.vertex_count() == c.vertices);
      for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == c.degree);
    }
  }

  TEST_CASE("bilinear adjacency is rank-one difference") {
    for (auto [p, d, e] : {std::tuple{2u, 2u, 2u}, {2u, 3u, 2u}, {3u, 2u, 2u}, {2u, 2u, 3u}}) {
      const auto f = gf(p);
      const auto g = bilinear_forms_graph(f, d, e);
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto mu = matrix_of(f, u, d, e);
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
          FieldMatrix diff(f, d, e);
          const auto mv = matrix_of(f, v, d, e);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < e; ++j) diff(i, j) = f->sub(mu(i, j), mv(i, j));
          CHECK(g.adjacent(u, v) == (oracle::rank(diff) == 1));
        }
      }
    }
  }

  TEST_CASE("explicit bilinear isomorphism examples") {
    const auto c = h2h2();
    const auto iso = explicit_bilinear_isomorphism(c, coset_weights(c));
    CHECK(iso.verified);
    CHECK(iso.rows == 2);
    CHECK(iso.cols == 2);
    CHECK(iso.edge_checked);

    const auto l = lift(hamming(2, 1, 3), 2);
    const auto li = explicit_bilinear_isomorphism(l, coset_weights(l));
    CHECK(li.verified);
    CHECK(li.rows * li.cols == 6);
    CHECK(is_isomorphism(graph_of(l), bilinear_forms_graph(gf(2), li.rows, li.cols),
                         std::vector<Vertex>(li.map.begin(), li.map.end())));
  }

  TEST_CASE("explicit isomorphism on 65536 vertices") {
    const auto c = kron_code(2, 1, 2, 2, 4);
    const auto start = std::chrono::steady_clock::now();
    const auto iso = explicit_bilinear_isomorphism(c, coset_weights(c), std::pair<std::size_t, std::size_t>{4, 4});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(iso.verified);
    CHECK(iso.rows == 4);
    CHECK(iso.cols == 4);
    CHECK(iso.map.size() == 65536);
    CHECK(secs < 30.0);
  }

  TEST_CASE("explicit isomorphism rejects raw codes and bad shapes") {
    const auto raw = hamming(2, 1, 3);
    CHECK(code_of([&] { explicit_bilinear_isomorphism(raw, coset_weights(raw)); }) == ErrorCode::UnsupportedProvenance);
    const auto c = h2h2();
    CHECK(code_of([&] {
            explicit_bilinear_isomorphism(c, coset_weights(c), std::pair<std::size_t, std::size_t>{1, 4});
          }) == ErrorCode::BadParameters);
  }

  TEST_CASE("mu matrix rank equals coset weight") {
    for (const auto& c : {h2h2(), lift(hamming(2, 1, 3), 2), lift(hamming(2, 1, 2), 3), kron_code(2, 1, 2, 1, 3),
                          kron_code(2, 1, 2, 2, 2), kron_code(3, 1, 1, 2, 2), kron_code(2, 2, 1, 2, 2)}) {
      const auto table = coset_weights(c);
      const auto iso = explicit_bilinear_isomorphism(c, table);
      REQUIRE(iso.verified);
      const auto base = gf(c.origin().p, c.origin().j);
      for (std::uint64_t s = 0; s < table.size(); ++s)
        CHECK(oracle::rank(matrix_of(base, iso.map[s], iso.rows, iso.cols)) == table.weights[s]);
    }
  }

  TEST_CASE("generic isomorphism") {
    const auto g = graph_of(h2h2());
    const auto self = graph_isomorphic(g, g);
    REQUIRE(self.has_value());
    CHECK(is_isomorphism(g, g, *self));

    CHECK_FALSE(graph_isomorphic(oracle::complete(4), oracle::cycle(4)).has_value());
    CHECK_FALSE(graph_isomorphic(petersen(), prism5()).has_value());
    CHECK_FALSE(graph_isomorphic(oracle::cycle(6), oracle::cycle(7)).has_value());

    const auto a = graph_of(lift(hamming(2, 1, 3), 2));
    const auto b = graph_of(lift(hamming(2, 1, 2), 3));
    const auto ab = graph_isomorphic(a, b);
    REQUIRE(ab.has_value());
    CHECK(is_isomorphism(a, b, *ab));

    std::mt19937_64 rng(8);
    std::vector<Vertex> perm(a.vertex_count());
    for (Vertex i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto shuffled = oracle::relabel(a, perm);
    const auto back = graph_isomorphic(a, shuffled);
    REQUIRE(back.has_value());
    CHECK(is_isomorphism(a, shuffled, *back));

    // Two non-isomorphic strongly regular graphs with equal parameters would be the hard case;
    // 4x4 rook graph vs Shrikhande graph.
    std::vector<Edge> rook, shrik;
    for (Vertex u = 0; u < 16; ++u)
      for (Vertex v = u + 1; v < 16; ++v) {
        const int dr = (v / 4 - u / 4 + 4) % 4, dc = (v % 4 - u % 4 + 4) % 4;
        if (dr == 0 || dc == 0) rook.emplace_back(u, v);
        if ((dr == 0 && dc != 2) || (dc == 0 && dr != 2) || (dr == dc && dr != 2)) shrik.emplace_back(u, v);
      }
    const auto rg = SimpleGraph::from_edges(16, rook), sg = SimpleGraph::from_edges(16, shrik);
    CHECK(rg.edge_count() == sg.edge_count());
    CHECK_FALSE(graph_isomorphic(rg, sg).has_value());
  }

  TEST_CASE("generic isomorphism cap") {
    CHECK(code_of([] { graph_isomorphic(oracle::cycle(5000), oracle::cycle(5000)); }) ==
          ErrorCode::TooLargeForGenericIso);
  }

  TEST_CASE("is_isomorphism rejects non-maps") {
    const auto c = oracle::cycle(5);
    CHECK_FALSE(is_isomorphism(c, c, std::vector<Vertex>{0, 2, 4, 1, 3}));
    CHECK_FALSE(is_isomorphism(c, c, std::vector<Vertex>{0, 0, 1, 2, 3}));
    CHECK(is_isomorphism(c, c, std::vector<Vertex>{1, 2, 3, 4, 0}));
  }

  TEST_CASE("explicit and generic isomorphism agree") {
    for (const auto& c : {h2h2(), lift(hamming(2, 1, 3), 2), kron_code(2, 1, 2, 1, 3), kron_code(3, 1, 1, 2, 2)}) {
      const auto table = coset_weights(c);
      const auto iso = explicit_bilinear_isomorphism(c, table);
      const auto g = coset_graph(table);
      const auto target = bilinear_forms_graph(gf(c.origin().p, c.origin().j), iso.rows, iso.cols);
      CHECK(iso.verified == graph_isomorphic(g, target).has_value());
    }
  }

  TEST_CASE("antipodality") {
    CHECK(check_antipodal(oracle::cycle(6)) == Antipodality::antipodal);
    CHECK(check_antipodal(cube3()) == Antipodality::antipodal);
    CHECK(check_antipodal(oracle::cycle(7)) == Antipodality::not_antipodal);
    CHECK(check_antipodal(graph_of(h2h2())) == Antipodality::not_applicable);
    CHECK(check_antipodal(graph_of(kron_code(2, 1, 1, 3, 3))) == Antipodality::not_antipodal);
    CHECK(to_string(Antipodality::not_applicable) == "not_applicable");
  }

  TEST_CASE("antipodality of the 65536-vertex member") {
    CHECK(check_antipodal(graph_of(kron_code(2, 1, 2, 2, 4))) == Antipodality::not_antipodal);
  }

  TEST_CASE("edge list format") {
    std::ostringstream out;
    write_edge_list(out, graph_of(h2h2()));
    std::istringstream in(out.str());
    std::string line;
    std::size_t lines = 0;
    std::set<std::pair<Vertex, Vertex>> seen;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      Vertex u = 0, v = 0;
      REQUIRE(static_cast<bool>(ls >> u >> v));
      CHECK(u < v);
      CHECK(seen.insert({u, v}).second);
      ++lines;
    }
    CHECK(lines == 72);
    CHECK(out.str().back() == '\n');
  }
}
