#include "tqftdef/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "tqftdef/error.hpp"

namespace tqftdef {
namespace {

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::string simplex_text(const std::vector<int>& ids) {
  std::string out = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + ")";
}

// Directed curve edges (tail, head) keyed by their unordered pair.
std::unordered_map<std::uint64_t, std::pair<int, int>> curve_edges(const CurveSurfaceComplex& c) {
  std::unordered_map<std::uint64_t, std::pair<int, int>> out;
  for (const auto& cycle : c.curve_cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int u = cycle[i];
      const int w = cycle[(i + 1) % cycle.size()];
      out.emplace(edge_key(u, w), std::pair{u, w});
    }
  }
  return out;
}

// Unordered edges in order of first appearance over the triangle sides.
std::vector<std::pair<int, int>> edge_list(const CurveSurfaceComplex& c) {
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;
  for (const auto& t : c.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int u = t[i];
      const int v = t[(i + 1) % 3];
      if (seen.insert(edge_key(u, v)).second) edges.emplace_back(u, v);
    }
  }
  return edges;
}

// Surface and curve conditions; flag-likeness is checked separately.
std::vector<Violation> surface_violations(const CurveSurfaceComplex& c) {
  std::vector<Violation> out;
  auto add = [&](std::string kind, std::vector<int> simplex, std::string message) {
    out.push_back({std::move(kind), std::move(simplex), std::move(message)});
  };

  std::map<int, bool> on_curve;
  for (const auto& v : c.vertices) {
    if (!on_curve.emplace(v.id, v.on_curve).second) {
      add("duplicate-vertex", {v.id}, "vertex id listed twice");
    }
    if (v.id < 0) add("vertex-id", {v.id}, "vertex ids must be nonnegative");
  }

  std::set<std::vector<int>> faces;
  std::map<std::pair<int, int>, int> directed;
  std::map<int, std::map<int, int>> link;  // link[v][a] = b for triangle (v,a,b)
  bool triangles_ok = true;
  for (const auto& t : c.triangles) {
    std::vector<int> ids(t.begin(), t.end());
    bool known = true;
    for (int id : t) {
      if (!on_curve.contains(id)) {
        add("unknown-vertex", ids, "triangle refers to unknown vertex " + std::to_string(id));
        known = false;
      }
    }
    if (!known) {
      triangles_ok = false;
      continue;
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      add("degenerate-triangle", ids, "triangle repeats a vertex");
      triangles_ok = false;
      continue;
    }
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (!faces.insert(sorted).second) {
      add("duplicate-triangle", ids, "two triangles share all three vertices");
      triangles_ok = false;
    }
    for (int i = 0; i < 3; ++i) {
      ++directed[{t[i], t[(i + 1) % 3]}];
      auto [it, inserted] = link[t[i]].emplace(t[(i + 1) % 3], t[(i + 2) % 3]);
      if (!inserted) triangles_ok = false;
    }
  }

  for (const auto& [edge, count] : directed) {
    const auto [u, v] = edge;
    const auto back = directed.find({v, u});
    const int reverse = back == directed.end() ? 0 : back->second;
    if (u < v || reverse == 0) {
      if (count != 1 || reverse != 1) {
        add("edge-manifold", {u, v},
            "edge " + simplex_text({u, v}) + " is traversed " + std::to_string(count) + " and " +
                std::to_string(reverse) + " times in the two directions (expected 1 and 1)");
        triangles_ok = false;
      }
    }
  }

  for (const auto& v : c.vertices) {
    const auto it = link.find(v.id);
    if (it == link.end()) {
      add("isolated-vertex", {v.id}, "vertex lies in no triangle");
      continue;
    }
    if (!triangles_ok) continue;
    const auto& next = it->second;
    int start = next.begin()->first;
    int current = start;
    std::size_t steps = 0;
    do {
      auto step = next.find(current);
      if (step == next.end()) break;
      current = step->second;
      ++steps;
    } while (current != start && steps <= next.size());
    if (current != start || steps != next.size()) {
      add("vertex-link", {v.id}, "link of vertex is not a single cycle");
    }
  }

  std::set<int> ranked;
  for (int id : c.off_curve_order) {
    auto it = on_curve.find(id);
    if (it == on_curve.end()) {
      add("order", {id}, "off_curve_order names an unknown vertex");
    } else if (it->second) {
      add("order", {id}, "off_curve_order names a curve vertex");
    } else if (!ranked.insert(id).second) {
      add("order", {id}, "vertex ranked twice");
    }
  }
  for (const auto& [id, curve] : on_curve) {
    if (!curve && !ranked.contains(id)) add("order", {id}, "off-curve vertex has no rank");
  }

  std::set<int> on_cycles;
  for (const auto& cycle : c.curve_cycles) {
    if (cycle.size() < 3) {
      add("curve", cycle, "curve cycle has fewer than three vertices");
      continue;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int u = cycle[i];
      const int w = cycle[(i + 1) % cycle.size()];
      auto it = on_curve.find(u);
      if (it == on_curve.end() || !it->second) {
        add("curve", {u}, "curve cycle passes through a vertex not marked on_curve");
      }
      if (!on_cycles.insert(u).second) add("curve", {u}, "curve passes twice through vertex");
      if (!directed.contains({u, w}) && !directed.contains({w, u})) {
        add("curve", {u, w}, "curve edge " + simplex_text({u, w}) + " is not an edge of the surface");
      }
    }
  }
  for (const auto& [id, curve] : on_curve) {
    if (curve && !on_cycles.contains(id)) add("curve", {id}, "on-curve vertex lies on no curve cycle");
  }
  return out;
}

std::vector<Violation> flag_violations(const CurveSurfaceComplex& c) {
  std::vector<Violation> out;
  std::unordered_map<int, bool> on_curve;
  for (const auto& v : c.vertices) on_curve[v.id] = v.on_curve;
  const auto curve = curve_edges(c);
  for (const auto& [u, v] : edge_list(c)) {
    if (on_curve[u] && on_curve[v] && !curve.contains(edge_key(u, v))) {
      out.push_back({"flag-like", {u, v},
                     "edge " + simplex_text({u, v}) + " meets the curve in its two endpoints only"});
    }
  }
  for (const auto& t : c.triangles) {
    if (on_curve[t[0]] && on_curve[t[1]] && on_curve[t[2]]) {
      out.push_back({"flag-like", {t[0], t[1], t[2]},
                     "triangle " + simplex_text({t[0], t[1], t[2]}) +
                         " has all three vertices on the curve"});
    }
  }
  return out;
}

}  // namespace

Triangle canonical_rotation(Triangle t) {
  const auto smallest = std::min_element(t.begin(), t.end()) - t.begin();
  std::rotate(t.begin(), t.begin() + smallest, t.end());
  return t;
}

std::vector<Violation> validate(const CurveSurfaceComplex& complex) {
  auto out = surface_violations(complex);
  if (!out.empty()) return out;
  out = flag_violations(complex);
  if (!out.empty()) return out;
  try {
    const Topology topology(complex);
    for (std::size_t t = 0; t < complex.triangles.size(); ++t) {
      try {
        classify_triangle(topology, t);
      } catch (const Error& error) {
        const auto& tri = complex.triangles[t];
        out.push_back({"orientation", {tri[0], tri[1], tri[2]}, error.what()});
      }
    }
  } catch (const Error& error) {
    out.push_back({"topology", {}, error.what()});
  }
  return out;
}

Topology::Topology(const CurveSurfaceComplex& complex) : complex_(&complex) {
  const auto& c = complex;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (!index_.emplace(c.vertices[i].id, static_cast<int>(i)).second) {
      throw Error(ErrorCode::InvalidSurface, "duplicate vertex " + std::to_string(c.vertices[i].id));
    }
    on_curve_.push_back(c.vertices[i].on_curve);
  }
  rank_.assign(c.vertices.size(), -1);
  for (std::size_t r = 0; r < c.off_curve_order.size(); ++r) {
    auto it = index_.find(c.off_curve_order[r]);
    if (it == index_.end() || on_curve_[it->second]) {
      throw Error(ErrorCode::InvalidSurface, "bad off_curve_order entry");
    }
    rank_[it->second] = static_cast<int>(r);
  }
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (!on_curve_[i] && rank_[i] < 0) {
      throw Error(ErrorCode::InvalidSurface,
                  "vertex " + std::to_string(c.vertices[i].id) + " has no rank");
    }
  }

  const auto curve = curve_edges(c);
  star_.resize(c.vertices.size());
  for (std::size_t t = 0; t < c.triangles.size(); ++t) {
    const auto& tri = c.triangles[t];
    std::array<int, 3> ids{};
    for (int i = 0; i < 3; ++i) {
      const int u = tri[i];
      const int v = tri[(i + 1) % 3];
      if (!index_.contains(u) || !index_.contains(v)) {
        throw Error(ErrorCode::InvalidSurface, "triangle refers to an unknown vertex");
      }
      star_[index_.at(u)].push_back(static_cast<int>(t));
      const auto key = edge_key(u, v);
      auto [it, inserted] = edge_index_.emplace(key, static_cast<int>(edges_.size()));
      if (inserted) {
        Edge edge;
        const bool cu = on_curve(u);
        const bool cv = on_curve(v);
        if (cu && cv) {
          auto ce = curve.find(key);
          if (ce == curve.end()) {
            throw Error(ErrorCode::InvalidSurface,
                        "edge " + simplex_text({u, v}) + " joins two curve vertices off the curve");
          }
          edge = {ce->second.first, ce->second.second, EdgeKind::C};
        } else if (cu || cv) {
          edge = cu ? Edge{u, v, EdgeKind::B} : Edge{v, u, EdgeKind::B};
        } else {
          edge = rank(u) < rank(v) ? Edge{u, v, EdgeKind::A} : Edge{v, u, EdgeKind::A};
        }
        edges_.push_back(edge);
        edge_tris_.push_back({static_cast<int>(t), -1});
      } else {
        auto& tris = edge_tris_[it->second];
        if (tris[1] >= 0) {
          throw Error(ErrorCode::InvalidSurface,
                      "edge " + simplex_text({u, v}) + " lies in more than two triangles");
        }
        tris[1] = static_cast<int>(t);
      }
      ids[i] = it->second;
    }
    tri_edges_.push_back(ids);
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edge_tris_[e][1] < 0) {
      throw Error(ErrorCode::InvalidSurface,
                  "edge " + simplex_text({edges_[e].tail, edges_[e].head}) +
                      " lies in only one triangle");
    }
  }
}

std::optional<int> Topology::find_edge(int u, int v) const {
  auto it = edge_index_.find(edge_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool Topology::on_curve(int id) const { return on_curve_[index_.at(id)]; }

int Topology::rank(int id) const { return rank_[index_.at(id)]; }

int Topology::degree(int id) const { return static_cast<int>(star(id).size()); }

const std::vector<int>& Topology::star(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::NoSuchSimplex, "vertex " + std::to_string(id));
  return star_[it->second];
}

TriangleClass triangle_class(int on_curve_vertices, Sign sign) {
  static constexpr std::array<Coefficient, 6> tags = {Coefficient::a, Coefficient::abar,
                                                      Coefficient::b, Coefficient::bbar,
                                                      Coefficient::c, Coefficient::cbar};
  if (on_curve_vertices < 0 || on_curve_vertices > 2) {
    throw Error(ErrorCode::InvalidSurface,
                "triangle with " + std::to_string(on_curve_vertices) + " curve vertices");
  }
  const auto index = static_cast<std::size_t>(on_curve_vertices * 2 + (sign == Sign::Minus));
  return {on_curve_vertices, sign, tags[index]};
}

Classification classify_triangle(const Topology& topology, std::size_t triangle,
                                 BarredOrder order) {
  const auto& tri = topology.complex().triangles.at(triangle);
  const auto& sides = topology.triangle_edges(triangle);
  std::array<bool, 3> agrees{};
  int agreeing = 0;
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    agrees[i] = topology.edges()[sides[i]].tail == tri[i];
    agreeing += agrees[i];
    k += topology.on_curve(tri[i]);
  }
  if (agreeing == 0 || agreeing == 3) {
    throw Error(ErrorCode::OrientationContradiction,
                "triangle " + simplex_text({tri[0], tri[1], tri[2]}) + " has " +
                    std::to_string(agreeing) + " edges agreeing with its boundary");
  }
  const Sign sign = agreeing == 2 ? Sign::Plus : Sign::Minus;
  Classification out;
  out.cls = triangle_class(k, sign);
  if (sign == Sign::Plus) {
    // Source, middle, sink counterclockwise: (sm, mt, st).
    const int d = static_cast<int>(std::find(agrees.begin(), agrees.end(), false) - agrees.begin());
    out.edge_ids = {sides[(d + 1) % 3], sides[(d + 2) % 3], sides[d]};
  } else {
    // Source, sink, middle counterclockwise: (st, sm, mt).
    const int g = static_cast<int>(std::find(agrees.begin(), agrees.end(), true) - agrees.begin());
    out.edge_ids = {sides[g], sides[(g + 2) % 3], sides[(g + 1) % 3]};
    if (order == BarredOrder::Reversed) std::swap(out.edge_ids[1], out.edge_ids[2]);
  }
  for (int i = 0; i < 3; ++i) out.edges[i] = topology.edges()[out.edge_ids[i]];
  return out;
}

CurveSurfaceComplex barycentric_subdivide(const CurveSurfaceComplex& complex) {
  for (const auto& v : surface_violations(complex)) {
    throw Error(ErrorCode::InvalidSurface, v.message);
  }
  CurveSurfaceComplex out;
  int next_id = 0;
  for (const auto& v : complex.vertices) next_id = std::max(next_id, v.id + 1);
  out.vertices = complex.vertices;
  out.off_curve_order = complex.off_curve_order;

  const auto curve = curve_edges(complex);
  std::unordered_map<std::uint64_t, int> midpoint;
  for (const auto& [u, v] : edge_list(complex)) {
    const int id = next_id++;
    const bool on = curve.contains(edge_key(u, v));
    midpoint.emplace(edge_key(u, v), id);
    out.vertices.push_back({id, on});
    if (!on) out.off_curve_order.push_back(id);
  }
  for (const auto& t : complex.triangles) {
    const int f = next_id++;
    out.vertices.push_back({f, false});
    out.off_curve_order.push_back(f);
    for (int i = 0; i < 3; ++i) {
      const int a = t[i];
      const int b = t[(i + 1) % 3];
      const int m = midpoint.at(edge_key(a, b));
      out.triangles.push_back(canonical_rotation({a, m, f}));
      out.triangles.push_back(canonical_rotation({m, b, f}));
    }
  }
  for (const auto& cycle : complex.curve_cycles) {
    std::vector<int> spliced;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      spliced.push_back(cycle[i]);
      spliced.push_back(midpoint.at(edge_key(cycle[i], cycle[(i + 1) % cycle.size()])));
    }
    out.curve_cycles.push_back(std::move(spliced));
  }
  return out;
}

std::size_t count_edges(const CurveSurfaceComplex& complex) { return edge_list(complex).size(); }

long euler_characteristic(const CurveSurfaceComplex& complex) {
  return static_cast<long>(complex.vertices.size()) - static_cast<long>(count_edges(complex)) +
         static_cast<long>(complex.triangles.size());
}

std::size_t curve_components(const CurveSurfaceComplex& complex) {
  return complex.curve_cycles.size();
}

namespace {

CurveSurfaceComplex make_complex(int vertex_count, const std::vector<Triangle>& triangles,
                                 const std::vector<int>& curve) {
  CurveSurfaceComplex c;
  for (int id = 0; id < vertex_count; ++id) {
    const bool on = std::find(curve.begin(), curve.end(), id) != curve.end();
    c.vertices.push_back({id, on});
    if (!on) c.off_curve_order.push_back(id);
  }
  for (const auto& t : triangles) c.triangles.push_back(canonical_rotation(t));
  if (!curve.empty()) c.curve_cycles.push_back(curve);
  return c;
}

const std::vector<Triangle> kTetrahedron = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};

const std::vector<Triangle> kSevenVertexTorus = {
    {0, 1, 3}, {0, 3, 2}, {1, 2, 4}, {1, 4, 3}, {2, 3, 5}, {2, 5, 4}, {3, 4, 6},
    {3, 6, 5}, {4, 5, 0}, {4, 0, 6}, {5, 6, 1}, {5, 1, 0}, {6, 0, 2}, {6, 2, 1}};

}  // namespace

const std::vector<std::string>& seed_names() {
  static const std::vector<std::string> names = {"plain_sphere", "plain_torus", "sphere_equator",
                                                 "torus_meridian"};
  return names;
}

CurveSurfaceComplex seed_complex(std::string_view name) {
  CurveSurfaceComplex c;
  if (name == "plain_sphere") {
    c = make_complex(4, kTetrahedron, {});
  } else if (name == "plain_torus") {
    c = make_complex(7, kSevenVertexTorus, {});
  } else if (name == "sphere_equator") {
    c = barycentric_subdivide(make_complex(4, kTetrahedron, {0, 1, 2}));
  } else if (name == "torus_meridian") {
    c = barycentric_subdivide(make_complex(7, kSevenVertexTorus, {0, 1, 2}));
  } else {
    throw Error(ErrorCode::UnknownSeed, std::string(name));
  }
  if (const auto violations = validate(c); !violations.empty()) {
    throw Error(ErrorCode::InvalidSurface, "seed " + std::string(name) + ": " +
                                               violations.front().message);
  }
  return c;
}

CurveSurfaceComplex with_off_curve_order(const CurveSurfaceComplex& complex,
                                         std::vector<int> order) {
  std::vector<int> expected;
  for (const auto& v : complex.vertices) {
    if (!v.on_curve) expected.push_back(v.id);
  }
  std::vector<int> given = order;
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given) {
    throw Error(ErrorCode::InvalidArgument, "order is not a permutation of the off-curve vertices");
  }
  CurveSurfaceComplex out = complex;
  out.off_curve_order = std::move(order);
  return out;
}

std::vector<int> canonical_form(const CurveSurfaceComplex& complex) {
  // next[v][a] = b when (v,a,b) is a counterclockwise triangle.
  std::unordered_map<int, std::unordered_map<int, int>> next;
  for (const auto& t : complex.triangles) {
    for (int i = 0; i < 3; ++i) next[t[i]][t[(i + 1) % 3]] = t[(i + 2) % 3];
  }
  std::unordered_map<int, bool> on_curve;
  for (const auto& v : complex.vertices) on_curve[v.id] = v.on_curve;
  const auto curve = curve_edges(complex);
  const std::size_t n = complex.vertices.size();

  std::vector<int> best;
  for (const auto& t : complex.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int u = t[i];
      const int v = t[(i + 1) % 3];
      std::unordered_map<int, int> label;
      std::vector<int> queue;
      label[u] = 0;
      label[v] = 1;
      queue = {u, v};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int w = queue[head];
        const auto& around = next.at(w);
        int first = -1;
        if (w == u) {
          first = v;
        } else {
          int lowest = -1;
          for (const auto& [a, b] : around) {
            auto it = label.find(a);
            if (it != label.end() && (lowest < 0 || it->second < lowest)) {
              lowest = it->second;
              first = a;
            }
          }
        }
        int current = first;
        do {
          if (!label.contains(current)) {
            label[current] = static_cast<int>(queue.size());
            queue.push_back(current);
          }
          current = around.at(current);
        } while (current != first);
      }
      if (queue.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "canonical form needs a connected complex");
      }

      std::vector<int> code;
      code.push_back(static_cast<int>(n));
      for (int w : queue) code.push_back(on_curve.at(w) ? 1 : 0);
      std::vector<Triangle> tris;
      for (const auto& tri : complex.triangles) {
        tris.push_back(canonical_rotation({label[tri[0]], label[tri[1]], label[tri[2]]}));
      }
      std::sort(tris.begin(), tris.end());
      code.push_back(static_cast<int>(tris.size()));
      for (const auto& tri : tris) code.insert(code.end(), tri.begin(), tri.end());
      std::vector<std::pair<int, int>> directed;
      for (const auto& [key, edge] : curve) {
        directed.emplace_back(label[edge.first], label[edge.second]);
      }
      std::sort(directed.begin(), directed.end());
      code.push_back(static_cast<int>(directed.size()));
      for (const auto& [a, b] : directed) {
        code.push_back(a);
        code.push_back(b);
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  if (best.empty()) best.push_back(static_cast<int>(n));
  return best;
}

bool isomorphic(const CurveSurfaceComplex& lhs, const CurveSurfaceComplex& rhs) {
  return canonical_form(lhs) == canonical_form(rhs);
}

}  // namespace tqftdef
