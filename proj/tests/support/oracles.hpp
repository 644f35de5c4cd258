#pragma once

// Test-side reference computations. They share no code with the library
// beyond its data structures.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqftdef/complex.hpp"
#include "tqftdef/examples.hpp"
#include "tqftdef/frobenius_data.hpp"
#include "tqftdef/serialization.hpp"

namespace oracle {

using tqftdef::Scalar;

inline std::string data_path(const std::string& relative) {
  return std::string(TQD_DATA_DIR) + "/" + relative;
}

inline tqftdef::CurveSurfaceComplex load_complex(const std::string& name) {
  return tqftdef::complex_from_json(
      tqftdef::read_text_file(data_path("complexes/" + name + ".json")));
}

inline tqftdef::SystemData load_system(const std::string& name) {
  return tqftdef::system_from_json(
      tqftdef::read_text_file(data_path("systems/" + name + ".json")));
}

// ---- flat connections ------------------------------------------------------

struct DirectedEdge {
  int tail;
  int head;
  bool curve;
};

// Orients every edge: along the curve, away from the curve, or up the
// off-curve ranking.
inline std::vector<DirectedEdge> orient_edges(const tqftdef::CurveSurfaceComplex& complex,
                                              std::map<std::pair<int, int>, int>& index) {
  std::map<int, bool> on;
  for (const auto& v : complex.vertices) on[v.id] = v.on_curve;
  std::map<int, int> rank;
  for (std::size_t i = 0; i < complex.off_curve_order.size(); ++i)
    rank[complex.off_curve_order[i]] = static_cast<int>(i);
  std::map<std::pair<int, int>, bool> along;
  for (const auto& cycle : complex.curve_cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      along[{cycle[i], cycle[(i + 1) % cycle.size()]}] = true;

  std::vector<DirectedEdge> edges;
  for (const auto& t : complex.triangles) {
    for (int i = 0; i < 3; ++i) {
      int u = t[i], v = t[(i + 1) % 3];
      auto key = std::minmax(u, v);
      if (index.contains(key)) continue;
      DirectedEdge e{u, v, false};
      if (on[u] && on[v]) {
        e.curve = true;
        if (!along.contains({u, v})) std::swap(e.tail, e.head);
      } else if (on[v] || (!on[u] && rank[u] > rank[v])) {
        std::swap(e.tail, e.head);
      }
      index[key] = static_cast<int>(edges.size());
      edges.push_back(e);
    }
  }
  return edges;
}

struct Constraint {
  int sm, mt, st;
};

inline std::vector<Constraint> triangle_constraints(const tqftdef::CurveSurfaceComplex& complex,
                                                    const std::vector<DirectedEdge>& edges,
                                                    const std::map<std::pair<int, int>, int>& index) {
  auto edge_of = [&](int u, int v) { return index.at(std::minmax(u, v)); };
  std::vector<Constraint> out;
  for (const auto& t : complex.triangles) {
    std::map<int, int> out_degree;
    for (int i = 0; i < 3; ++i) out_degree[t[i]] = 0;
    for (int i = 0; i < 3; ++i) ++out_degree[edges[edge_of(t[i], t[(i + 1) % 3])].tail];
    int s = -1, m = -1, k = -1;
    for (auto [v, d] : out_degree) (d == 2 ? s : d == 1 ? m : k) = v;
    out.push_back({edge_of(s, m), edge_of(m, k), edge_of(s, k)});
  }
  return out;
}

// Counts labelings of the edges listed in `order` (all others are fixed to
// `fixed`) such that g(s,m) g(m,t) = g(s,t) on every triangle with source s,
// middle m and sink t.
inline std::uint64_t count_labelings(const std::vector<Constraint>& constraints,
                                     std::size_t num_edges, const std::vector<int>& order,
                                     const std::vector<std::size_t>& fixed,
                                     const tqftdef::GroupTable& group) {
  std::vector<int> position(num_edges, -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<std::vector<Constraint>> due(order.size() + 1);
  for (const auto& c : constraints)
    due[1 + std::max({position[c.sm], position[c.mt], position[c.st]})].push_back(c);
  std::vector<std::size_t> label = fixed;
  auto holds = [&](std::size_t slot) {
    for (const auto& c : due[slot])
      if (group.table[label[c.sm]][label[c.mt]] != label[c.st]) return false;
    return true;
  };
  if (!holds(0)) return 0;
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      ++count;
      return;
    }
    for (std::size_t g = 0; g < group.order(); ++g) {
      label[order[i]] = g;
      if (holds(i + 1)) self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return count;
}

// Number of flat G-connections by direct enumeration of every edge label.
// With trivial_curve, curve edges carry the identity.
inline std::uint64_t flat_connections_naive(const tqftdef::CurveSurfaceComplex& complex,
                                            const tqftdef::GroupTable& group, bool trivial_curve) {
  std::map<std::pair<int, int>, int> index;
  auto edges = orient_edges(complex, index);
  std::vector<int> order;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!(trivial_curve && edges[e].curve)) order.push_back(static_cast<int>(e));
  std::vector<std::size_t> fixed(edges.size(), group.identity);
  return count_labelings(triangle_constraints(complex, edges, index), edges.size(), order, fixed,
                         group);
}

// Same count with a spanning tree gauge-fixed to the identity. Gauge
// transformations act by g(u,v) -> k(u) g(u,v) k(v)^-1; with trivial_curve
// they must agree along the curve. Each class of gauge-fixed connections is
// hit |G|^(gauge vertices - 1) times.
inline Scalar flat_connections(const tqftdef::CurveSurfaceComplex& complex,
                               const tqftdef::GroupTable& group, bool trivial_curve) {
  std::map<std::pair<int, int>, int> index;
  auto edges = orient_edges(complex, index);
  std::map<int, int> parent;
  for (const auto& v : complex.vertices) parent[v.id] = v.id;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> in_tree(edges.size(), false);
  long gauge_vertices = static_cast<long>(complex.vertices.size());
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((pass == 0) != (trivial_curve && edges[e].curve)) continue;
      int a = find(edges[e].tail), b = find(edges[e].head);
      if (a == b) continue;
      parent[a] = b;
      in_tree[e] = true;
      if (pass == 0) --gauge_vertices;
    }

  // free edges in the order a breadth-first sweep over triangles meets them
  auto constraints = triangle_constraints(complex, edges, index);
  std::vector<std::vector<int>> tris_of_edge(edges.size());
  for (std::size_t t = 0; t < constraints.size(); ++t)
    for (int e : {constraints[t].sm, constraints[t].mt, constraints[t].st})
      tris_of_edge[e].push_back(static_cast<int>(t));
  std::vector<int> order;
  std::vector<bool> seen_edge(edges.size(), false), seen_tri(constraints.size(), false);
  std::vector<int> queue{0};
  seen_tri[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto& c = constraints[queue[qi]];
    for (int e : {c.sm, c.mt, c.st}) {
      if (seen_edge[e]) continue;
      seen_edge[e] = true;
      if (!in_tree[e] && !(trivial_curve && edges[e].curve)) order.push_back(e);
      for (int t : tris_of_edge[e])
        if (!seen_tri[t]) seen_tri[t] = true, queue.push_back(t);
    }
  }
  std::vector<std::size_t> fixed(edges.size(), group.identity);
  Scalar count(static_cast<unsigned long>(
      count_labelings(constraints, edges.size(), order, fixed, group)));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), group.order(), static_cast<unsigned long>(gauge_vertices - 1));
  return count * Scalar(scale);
}

// ---- algebra axioms via vector operations ----------------------------------

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

inline Vec basis_vector(std::size_t d, std::size_t i) {
  Vec v(d);
  v[i] = 1;
  return v;
}

inline Vec multiply(const tqftdef::AlgebraData& alg, const Vec& x, const Vec& y) {
  std::size_t d = alg.dim();
  Vec out(d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t u = 0; u < d; ++u) out[u] += x[s] * y[t] * alg.mult(s, t, u);
  return out;
}

inline Mat comultiply(const tqftdef::AlgebraData& alg, const Vec& x) {
  std::size_t d = alg.dim();
  Mat out(d, Vec(d));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) out[r][s] += x[t] * alg.comult(t, r, s);
  return out;
}

inline Vec row(const Mat& m, std::size_t r) { return m[r]; }
inline Vec column(const Mat& m, std::size_t c) {
  Vec v;
  for (const auto& r : m) v.push_back(r[c]);
  return v;
}

struct AxiomWitness {
  std::vector<std::size_t> values;
  Scalar lhs, rhs;
};

// Associativity, coassociativity and the four Frobenius compatibilities,
// scanned with the same free-index order as the library reports them.
inline std::optional<AxiomWitness> algebra_axiom(const tqftdef::AlgebraData& alg, int id) {
  std::size_t d = alg.dim();
  auto e = [&](std::size_t i) { return basis_vector(d, i); };
  for (std::size_t i0 = 0; i0 < d; ++i0)
    for (std::size_t i1 = 0; i1 < d; ++i1)
      for (std::size_t i2 = 0; i2 < d; ++i2)
        for (std::size_t i3 = 0; i3 < d; ++i3) {
          Scalar lhs, rhs;
          std::size_t q = i0, r = i1;
          switch (id) {
            case 2: {  // q(ts) = (qt)s, indices (q,r,t,s)
              std::size_t t = i2, s = i3;
              lhs = multiply(alg, e(q), multiply(alg, e(t), e(s)))[r];
              rhs = multiply(alg, multiply(alg, e(q), e(t)), e(s))[r];
              break;
            }
            case 3: {  // (id x d) d = (d x id) d, indices (q,r,s,t)
              std::size_t s = i2, t = i3;
              Mat dq = comultiply(alg, e(q));
              lhs = comultiply(alg, row(dq, r))[s][t];
              rhs = comultiply(alg, column(dq, t))[r][s];
              break;
            }
            case 4: {  // (mu x id)(q x d(t)) = d(qt), indices (q,r,t,s)
              std::size_t t = i2, s = i3;
              lhs = multiply(alg, e(q), column(comultiply(alg, e(t)), s))[r];
              rhs = comultiply(alg, multiply(alg, e(q), e(t)))[r][s];
              break;
            }
            case 5: {  // (id x mu)(d(q) x t) = d(qt), indices (q,r,t,s)
              std::size_t t = i2, s = i3;
              lhs = multiply(alg, row(comultiply(alg, e(q)), r), e(t))[s];
              rhs = comultiply(alg, multiply(alg, e(q), e(t)))[r][s];
              break;
            }
            case 6: {  // (id x L_s) d(q) = (R_s x id) d(q), indices (q,r,s,t)
              std::size_t s = i2, t = i3;
              Mat dq = comultiply(alg, e(q));
              lhs = multiply(alg, e(s), row(dq, r))[t];
              rhs = multiply(alg, column(dq, t), e(s))[r];
              break;
            }
            case 7: {  // (L_q x id) d(s) = (R_s x id) d(q), indices (q,r,s,t)
              std::size_t s = i2, t = i3;
              lhs = multiply(alg, e(q), row(comultiply(alg, e(s)), t))[r];
              rhs = multiply(alg, column(comultiply(alg, e(q)), t), e(s))[r];
              break;
            }
            default: return std::nullopt;
          }
          if (lhs != rhs) return AxiomWitness{{i0, i1, i2, i3}, lhs, rhs};
        }
  return std::nullopt;
}

}  // namespace oracle
