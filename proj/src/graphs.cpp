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

#include "crclab/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "crclab/parallel.hpp"

namespace crclab {

namespace {

constexpr std::uint16_t kUnseen = 0xFFFF;

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::vector<std::uint64_t> distinct_nonzero(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty() && v.front() == 0) v.erase(v.begin());
  return v;
}

}  // namespace

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
                                    std::string label) {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw Error(ErrorCode::BadParameters, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::BadParameters, "loops are not allowed");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  SimpleGraph g;
  g.label_ = std::move(label);
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& a = adj[v];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    g.offsets_[v + 1] = g.offsets_[v] + a.size();
  }
  g.neighbours_.reserve(g.offsets_.back());
  for (auto& a : adj) g.neighbours_.insert(g.neighbours_.end(), a.begin(), a.end());
  return g;
}

SimpleGraph SimpleGraph::cayley(const SyndromeSpace& space, std::span<const std::uint64_t> gens, std::string label) {
  const std::uint64_t n = space.size();
  const auto conn = distinct_nonzero({gens.begin(), gens.end()});
  const std::size_t k = conn.size();
  SimpleGraph g;
  g.label_ = std::move(label);
  g.cayley_ = true;
  g.offsets_.resize(n + 1);
  for (std::uint64_t v = 0; v <= n; ++v) g.offsets_[v] = v * k;
  g.neighbours_.resize(n * k);
  parallel_for(0, n, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (std::uint64_t s = lo; s < hi; ++s) {
      Vertex* out = g.neighbours_.data() + s * k;
      for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<Vertex>(space.add(s, conn[i]));
      std::sort(out, out + k);
    }
  });
  return g;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint16_t> bfs_distances(const SimpleGraph& g, Vertex src) {
  std::vector<std::uint16_t> dist(g.vertex_count(), kUnseen);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbours(x)) {
      if (dist[y] == kUnseen) {
        dist[y] = static_cast<std::uint16_t>(dist[x] + 1);
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

unsigned eccentricity(const std::vector<std::uint16_t>& dist) {
  unsigned ecc = 0;
  for (auto d : dist) {
    if (d == kUnseen) throw Error(ErrorCode::Disconnected, "graph is not connected");
    ecc = std::max<unsigned>(ecc, d);
  }
  return ecc;
}

}  // namespace

unsigned diameter(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return 0;
  if (g.vertex_transitive()) return eccentricity(bfs_distances(g, 0));
  unsigned best = 0;
  for (Vertex v = 0; v < n; ++v) best = std::max(best, eccentricity(bfs_distances(g, v)));
  return best;
}

SimpleGraph coset_graph(const CosetTable& table, const Limits& limits) {
  if (table.size() > limits.max_graph_vertices)
    throw Error(ErrorCode::GraphTooLarge, "coset graph has " + std::to_string(table.size()) + " vertices, cap is " +
                                              std::to_string(limits.max_graph_vertices));
  return SimpleGraph::cayley(table.space, table.generators, "coset");
}

DrgMode default_drg_mode(const SimpleGraph& g) {
  DrgMode m;
  m.kind = g.vertex_count() <= 4096 ? DrgMode::Kind::full : DrgMode::Kind::sampled;
  return m;
}

std::string to_string(const DrgMode& mode) {
  if (mode.kind == DrgMode::Kind::full) return "full";
  return "sampled(seed=" + std::to_string(mode.seed) + ", count=" + std::to_string(mode.samples) + ")";
}

namespace {

struct BaseProfile {
  std::vector<std::uint64_t> b, c;  // indexed by distance
  std::vector<Vertex> first;        // first vertex met at each distance
  std::optional<DrgWitness> witness;
};

// Single BFS pass: when x at distance d is dequeued, every vertex at distance
// <= d is already labelled, so unseen neighbours are exactly those at d + 1.
BaseProfile profile_from(const SimpleGraph& g, Vertex base, std::vector<std::uint16_t>& dist, std::vector<Vertex>& queue) {
  BaseProfile p;
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.clear();
  dist[base] = 0;
  queue.push_back(base);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const unsigned d = dist[x];
    std::uint64_t c = 0, b = 0;
    for (Vertex y : g.neighbours(x)) {
      if (dist[y] == kUnseen) {
        dist[y] = static_cast<std::uint16_t>(d + 1);
        queue.push_back(y);
        ++b;
      } else if (dist[y] + 1u == d) {
        ++c;
      } else if (dist[y] == d + 1) {
        ++b;
      }
    }
    if (d == p.b.size()) {
      p.b.push_back(b);
      p.c.push_back(c);
      p.first.push_back(x);
    } else if (!p.witness) {
      if (p.c[d] != c) p.witness = DrgWitness{base, x, d, "c", p.c[d], c};
      else if (p.b[d] != b) p.witness = DrgWitness{base, x, d, "b", p.b[d], b};
    }
    if (p.witness) break;
  }
  if (!p.witness && queue.size() != g.vertex_count())
    throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(base) + " does not reach every vertex");
  return p;
}

}  // namespace

DrgVerdict check_distance_regular(const SimpleGraph& g, const DrgMode& mode) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::BadParameters, "empty graph");
  DrgVerdict out;
  out.mode = to_string(mode);

  if (mode.kind == DrgMode::Kind::full) {
    out.bases.resize(n);
    std::iota(out.bases.begin(), out.bases.end(), Vertex{0});
  } else {
    std::mt19937_64 rng(mode.seed);
    std::set<Vertex> seen;
    const std::size_t want = std::min(mode.samples, n);
    while (out.bases.size() < want) {
      const auto v = static_cast<Vertex>(rng() % n);
      if (seen.insert(v).second) out.bases.push_back(v);
    }
  }

  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) {
      out.witness = DrgWitness{0, v, 1, "degree", k, g.degree(v)};
      return out;
    }

  std::vector<BaseProfile> profiles(out.bases.size());
  parallel_for(0, out.bases.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<std::uint16_t> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::uint64_t i = lo; i < hi; ++i) profiles[i] = profile_from(g, out.bases[i], dist, queue);
  });

  const auto& ref = profiles.front();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    if (p.witness) {
      out.witness = p.witness;
      return out;
    }
    const std::size_t depth = std::max(p.b.size(), ref.b.size());
    for (std::size_t d = 0; d < depth; ++d) {
      const std::uint64_t rc = d < ref.c.size() ? ref.c[d] : 0, rb = d < ref.b.size() ? ref.b[d] : 0;
      const std::uint64_t pc = d < p.c.size() ? p.c[d] : 0, pb = d < p.b.size() ? p.b[d] : 0;
      const Vertex where = d < p.first.size() ? p.first[d] : out.bases[i];
      if (rc != pc) {
        out.witness = DrgWitness{out.bases[i], where, static_cast<unsigned>(d), "c", rc, pc};
        return out;
      }
      if (rb != pb) {
        out.witness = DrgWitness{out.bases[i], where, static_cast<unsigned>(d), "b", rb, pb};
        return out;
      }
    }
  }

  IntersectionArray ia;
  const std::size_t diam = ref.b.size() - 1;
  for (std::size_t d = 0; d < diam; ++d) ia.b.push_back(ref.b[d]);
  for (std::size_t d = 1; d <= diam; ++d) ia.c.push_back(ref.c[d]);
  out.array = std::move(ia);
  return out;
}

SimpleGraph bilinear_forms_graph(const FieldPtr& field, std::size_t d, std::size_t e, const Limits& limits) {
  if (d == 0 || e == 0) throw Error(ErrorCode::BadParameters, "bilinear forms need positive dimensions");
  SyndromeSpace space(field, d * e);
  const std::uint64_t n = space.size();
  if (n > limits.max_graph_vertices)
    throw Error(ErrorCode::GraphTooLarge, "bilinear forms graph has " + std::to_string(n) + " vertices, cap is " +
                                              std::to_string(limits.max_graph_vertices));
  const Element q = field->order();

  // Rank-one matrices x y^T, x with leading nonzero entry 1, y nonzero: each exactly once.
  std::vector<std::uint64_t> rank_one;
  std::vector<Element> x(d), y(e), m(d * e);
  auto next = [q](std::vector<Element>& v) {
    for (auto& a : v) {
      if (++a < q) return true;
      a = 0;
    }
    return false;
  };
  std::fill(x.begin(), x.end(), 0);
  while (next(x)) {
    const auto lead = std::find_if(x.begin(), x.end(), [](Element a) { return a != 0; });
    if (*lead != 1) continue;
    std::fill(y.begin(), y.end(), 0);
    while (next(y)) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < e; ++j) m[i * e + j] = field->mul(x[i], y[j]);
      rank_one.push_back(space.encode(m));
    }
  }
  return SimpleGraph::cayley(space, rank_one, "bilinear");
}

BilinearIso explicit_bilinear_isomorphism(const LinearCode& code, const CosetTable& table,
                                          std::optional<std::pair<std::size_t, std::size_t>> target) {
  const Origin& o = code.origin();
  if ((o.kind != Provenance::kronecker && o.kind != Provenance::lifted) || !o.nested)
    throw Error(ErrorCode::UnsupportedProvenance, "no bilinear forms structure for provenance " + to_string(o.kind));

  BilinearIso out;
  const auto fail = [&out](std::string why) {
    out.mismatch = std::move(why);
    return out;
  };
  if (code.redundancy() != code.parity_check().rows()) return fail("parity-check matrix is not of full rank");

  const FieldPtr base = field_create(o.p, o.j);
  if (code.field()->order() != ipow(base->order(), o.ext_degree)) return fail("code field does not match its origin");
  const MuBasis mu(code.field(), base);
  const std::size_t u = mu.dimension();

  const bool kron = o.kind == Provenance::kronecker;
  std::size_t rows = 0, cols = 0;
  if (kron) {
    if (o.m_ext * o.m_base != code.redundancy()) return fail("syndrome length does not match the factor shapes");
    rows = o.m_base;
    cols = u * o.m_ext;
  } else {
    if (o.m_base != code.redundancy()) return fail("syndrome length does not match the lifted shape");
    rows = u;
    cols = o.m_base;
  }
  bool flip = false;
  if (target) {
    if (*target == std::pair{cols, rows} && rows != cols) flip = true;
    else if (*target != std::pair{rows, cols})
      throw Error(ErrorCode::BadParameters, "requested shape " + std::to_string(target->first) + "x" +
                                                std::to_string(target->second) + " does not match " +
                                                std::to_string(rows) + "x" + std::to_string(cols));
  }
  out.rows = flip ? cols : rows;
  out.cols = flip ? rows : cols;

  const SyndromeSpace matrices(base, rows * cols);
  const std::size_t m_a = o.ext_first ? o.m_ext : o.m_base;
  const std::size_t m_b = o.ext_first ? o.m_base : o.m_ext;
  auto to_matrix = [&](std::uint64_t s) {
    const auto syn = table.space.decode(s);
    std::vector<Element> m(rows * cols);
    if (kron) {
      for (std::size_t r = 0; r < m_a; ++r)
        for (std::size_t t = 0; t < m_b; ++t) {
          const std::size_t row = o.ext_first ? t : r;
          const std::size_t block = o.ext_first ? r : t;
          const auto coords = mu.expand_view(syn[r * m_b + t]);
          for (std::size_t k = 0; k < u; ++k) m[row * cols + block * u + k] = coords[k];
        }
    } else {
      for (std::size_t i = 0; i < cols; ++i) {
        const auto coords = mu.expand_view(syn[i]);
        for (std::size_t k = 0; k < u; ++k) m[k * cols + i] = coords[k];
      }
    }
    if (flip) {
      std::vector<Element> mt(m.size());
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) mt[c * rows + r] = m[r * cols + c];
      m.swap(mt);
    }
    return matrices.encode(m);
  };

  const std::uint64_t n = table.size();
  out.map.resize(n);
  parallel_for(0, n, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (std::uint64_t s = lo; s < hi; ++s) out.map[s] = to_matrix(s);
  });

  std::vector<bool> hit(n, false);
  for (std::uint64_t s = 0; s < n; ++s) {
    if (out.map[s] >= n || hit[out.map[s]]) return fail("map is not injective at syndrome " + std::to_string(s));
    hit[out.map[s]] = true;
  }

  const auto gens = distinct_nonzero(table.generators);
  const SyndromeSpace shaped(base, out.rows * out.cols);
  for (auto g : gens) {
    const FieldMatrix m(base, out.rows, out.cols, shaped.decode(out.map[g]));
    if (rank(m) != 1) {
      out.failing_generator = g;
      return fail("generator syndrome " + std::to_string(g) + " maps to a matrix of rank " + std::to_string(rank(m)));
    }
  }

  const std::uint64_t q = base->order();
  const std::uint64_t expected = (ipow(q, out.rows) - 1) * (ipow(q, out.cols) - 1) / (q - 1);
  if (gens.size() != expected)
    return fail("coset graph degree " + std::to_string(gens.size()) + " differs from the " + std::to_string(expected) +
                " rank-one matrices");

  // Additivity spot check on a fixed stride of syndromes.
  const std::uint64_t stride = std::max<std::uint64_t>(1, n / 64);
  for (std::uint64_t s = 0; s < n; s += stride)
    for (auto g : gens)
      if (out.map[table.space.add(s, g)] != shaped.add(out.map[s], out.map[g]))
        return fail("map is not additive at syndrome " + std::to_string(s));

  if (n <= kGenericIsoLimit) {
    const auto bg = bilinear_forms_graph(base, out.rows, out.cols);
    for (std::uint64_t s = 0; s < n; ++s)
      for (auto g : gens)
        if (!bg.adjacent(static_cast<Vertex>(out.map[s]), static_cast<Vertex>(out.map[table.space.add(s, g)]))) {
          out.failing_generator = g;
          return fail("edge from syndrome " + std::to_string(s) + " is not mapped to an edge");
        }
    out.edge_checked = true;
  }
  out.verified = true;
  return out;
}

bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, std::span<const Vertex> phi) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || phi.size() != n || g1.edge_count() != g2.edge_count()) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : phi) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g1.neighbours(v))
      if (!g2.adjacent(phi[v], phi[w])) return false;
  return true;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& g1, const SimpleGraph& g2) : g1_(g1), g2_(g2), n_(g1.vertex_count()) {
    dist1_ = all_distances(g1);
    dist2_ = all_distances(g2);
  }

  std::optional<std::vector<Vertex>> run() {
    std::vector<std::uint32_t> c1(n_, 0), c2(n_, 0);
    return search(std::move(c1), std::move(c2));
  }

 private:
  static std::vector<std::uint8_t> all_distances(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> d(n * n);
    for (Vertex v = 0; v < n; ++v) {
      const auto row = bfs_distances(g, v);
      for (Vertex w = 0; w < n; ++w) d[v * n + w] = static_cast<std::uint8_t>(std::min<unsigned>(row[w], 255));
    }
    return d;
  }

  using Signature = std::vector<std::uint64_t>;

  Signature signature(const std::vector<std::uint8_t>& dist, const std::vector<std::uint32_t>& colour, Vertex v) const {
    Signature sig;
    sig.reserve(n_ + 1);
    for (Vertex w = 0; w < n_; ++w) sig.push_back((std::uint64_t{dist[v * n_ + w]} << 32) | colour[w]);
    std::sort(sig.begin(), sig.end());
    sig.insert(sig.begin(), colour[v]);
    return sig;
  }

  // Refines both colourings in lockstep with shared colour names. Returns
  // false as soon as the colour class sizes differ.
  bool refine(std::vector<std::uint32_t>& c1, std::vector<std::uint32_t>& c2) const {
    std::size_t classes = count_classes(c1);
    for (;;) {
      std::vector<Signature> s1(n_), s2(n_);
      for (Vertex v = 0; v < n_; ++v) {
        s1[v] = signature(dist1_, c1, v);
        s2[v] = signature(dist2_, c2, v);
      }
      std::map<Signature, std::uint32_t> names;
      for (const auto& s : s1) names.emplace(s, 0);
      for (const auto& s : s2) names.emplace(s, 0);
      std::uint32_t next = 0;
      for (auto& [sig, id] : names) id = next++;
      std::vector<std::size_t> size1(next, 0), size2(next, 0);
      for (Vertex v = 0; v < n_; ++v) {
        c1[v] = names[s1[v]];
        c2[v] = names[s2[v]];
        ++size1[c1[v]];
        ++size2[c2[v]];
      }
      if (size1 != size2) return false;
      if (next == classes) return true;
      classes = next;
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> s(c);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  std::optional<std::vector<Vertex>> search(std::vector<std::uint32_t> c1, std::vector<std::uint32_t> c2) const {
    if (!refine(c1, c2)) return std::nullopt;
    std::vector<std::size_t> size(n_, 0);
    for (auto c : c1) ++size[c];

    std::uint32_t cell = 0;
    std::size_t best = 0;
    for (std::uint32_t c = 0; c < n_; ++c)
      if (size[c] > 1 && (best == 0 || size[c] < best)) {
        best = size[c];
        cell = c;
      }
    if (best == 0) {
      std::vector<Vertex> phi(n_);
      std::vector<Vertex> by_colour(n_);
      for (Vertex w = 0; w < n_; ++w) by_colour[c2[w]] = w;
      for (Vertex v = 0; v < n_; ++v) phi[v] = by_colour[c1[v]];
      if (is_isomorphism(g1_, g2_, phi)) return phi;
      return std::nullopt;
    }

    const auto fresh = static_cast<std::uint32_t>(n_);
    const Vertex v = static_cast<Vertex>(std::find(c1.begin(), c1.end(), cell) - c1.begin());
    for (Vertex w = 0; w < n_; ++w) {
      if (c2[w] != cell) continue;
      auto d1 = c1;
      auto d2 = c2;
      d1[v] = fresh;
      d2[w] = fresh;
      if (auto phi = search(std::move(d1), std::move(d2))) return phi;
    }
    return std::nullopt;
  }

  const SimpleGraph& g1_;
  const SimpleGraph& g2_;
  std::size_t n_;
  std::vector<std::uint8_t> dist1_, dist2_;
};

}  // namespace

std::optional<std::vector<Vertex>> graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2) {
  const std::size_t n = g1.vertex_count();
  if (n > kGenericIsoLimit || g2.vertex_count() > kGenericIsoLimit)
    throw Error(ErrorCode::TooLargeForGenericIso, "generic isomorphism search is limited to " +
                                                      std::to_string(kGenericIsoLimit) + " vertices");
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};
  std::vector<std::size_t> deg1(n), deg2(n);
  for (Vertex v = 0; v < n; ++v) {
    deg1[v] = g1.degree(v);
    deg2[v] = g2.degree(v);
  }
  std::sort(deg1.begin(), deg1.end());
  std::sort(deg2.begin(), deg2.end());
  if (deg1 != deg2) return std::nullopt;
  return IsoSearch(g1, g2).run();
}

std::string to_string(Antipodality a) {
  switch (a) {
    case Antipodality::antipodal: return "antipodal";
    case Antipodality::not_antipodal: return "not_antipodal";
    case Antipodality::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Antipodality check_antipodal(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  const unsigned diam = diameter(g);
  if (diam < 3) return Antipodality::not_applicable;

  // {v} + Gamma_D(v) must be the same set K for every member of K.
  std::vector<bool> done(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (done[v]) continue;
    const auto dv = bfs_distances(g, v);
    std::vector<Vertex> cell{v};
    for (Vertex w = 0; w < n; ++w)
      if (dv[w] == diam) cell.push_back(w);
    std::sort(cell.begin(), cell.end());
    for (Vertex w : cell) {
      if (w == v) continue;
      const auto dw = bfs_distances(g, w);
      std::size_t far = 0;
      for (Vertex x = 0; x < n; ++x) {
        if (dw[x] != diam) continue;
        if (!std::binary_search(cell.begin(), cell.end(), x)) return Antipodality::not_antipodal;
        ++far;
      }
      if (far + 1 != cell.size()) return Antipodality::not_antipodal;
    }
    for (Vertex w : cell) done[w] = true;
  }
  return Antipodality::antipodal;
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbours(u))
      if (u < v) out << u << ' ' << v << '\n';
}

}  // namespace crclab
