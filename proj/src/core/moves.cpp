#include "tqftdef/moves.hpp"

#include <algorithm>
#include <optional>
#include <variant>
#include <unordered_map>

#include "tqftdef/error.hpp"

namespace tqftdef {
namespace {

struct Refusal {
  ErrorCode code;
  std::string reason;
};

[[noreturn]] void refuse(const Refusal& refusal) { throw Error(refusal.code, refusal.reason); }

int next_vertex_id(const CurveSurfaceComplex& c) {
  int id = 0;
  for (const auto& v : c.vertices) id = std::max(id, v.id + 1);
  return id;
}

// Index of the triangle traversing u -> v counterclockwise, and its third vertex.
std::pair<std::size_t, int> triangle_on(const Topology& topology, int edge, int u, int v) {
  const auto& c = topology.complex();
  for (int t : topology.edge_triangles(static_cast<std::size_t>(edge))) {
    const auto& tri = c.triangles[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] == u && tri[(i + 1) % 3] == v) return {static_cast<std::size_t>(t), tri[(i + 2) % 3]};
    }
  }
  throw Error(ErrorCode::InvalidSurface, "edge without a triangle on one side");
}

// next[a] = b for every triangle (v,a,b) around v.
std::unordered_map<int, int> link_of(const Topology& topology, int v) {
  std::unordered_map<int, int> next;
  for (int t : topology.star(v)) {
    const auto& tri = topology.complex().triangles[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] == v) next[tri[(i + 1) % 3]] = tri[(i + 2) % 3];
    }
  }
  return next;
}

bool has_triangle(const CurveSurfaceComplex& c, Triangle t) {
  std::sort(t.begin(), t.end());
  return std::any_of(c.triangles.begin(), c.triangles.end(), [&](Triangle other) {
    std::sort(other.begin(), other.end());
    return other == t;
  });
}

std::optional<std::size_t> find_triangle(const CurveSurfaceComplex& c, const Triangle& t) {
  const Triangle wanted = canonical_rotation(t);
  for (std::size_t i = 0; i < c.triangles.size(); ++i) {
    if (canonical_rotation(c.triangles[i]) == wanted) return i;
  }
  return std::nullopt;
}

// Removes the given triangles and puts `added` where the first removed ones were.
void replace_triangles(CurveSurfaceComplex& c, std::vector<std::size_t> removed,
                       const std::vector<Triangle>& added) {
  std::sort(removed.begin(), removed.end());
  std::vector<Triangle> out;
  std::size_t next_added = 0;
  for (std::size_t i = 0; i < c.triangles.size(); ++i) {
    if (std::binary_search(removed.begin(), removed.end(), i)) {
      if (next_added < added.size()) out.push_back(canonical_rotation(added[next_added++]));
    } else {
      out.push_back(c.triangles[i]);
    }
  }
  while (next_added < added.size()) out.push_back(canonical_rotation(added[next_added++]));
  c.triangles = std::move(out);
}

void erase_vertex(CurveSurfaceComplex& c, int id) {
  std::erase_if(c.vertices, [&](const Vertex& v) { return v.id == id; });
  std::erase(c.off_curve_order, id);
  for (auto& cycle : c.curve_cycles) std::erase(cycle, id);
}

std::vector<Triangle> triangles_at(const CurveSurfaceComplex& c, const std::vector<std::size_t>& ids) {
  std::vector<Triangle> out;
  for (auto i : ids) out.push_back(c.triangles[i]);
  return out;
}

struct FlipPlan {
  int a, b, c, d;
  std::size_t first, second;
};

std::variant<FlipPlan, Refusal> plan_flip(const Topology& topology, int u, int v) {
  const auto edge = topology.find_edge(u, v);
  if (!edge) return Refusal{ErrorCode::NoSuchSimplex, "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}"};
  const Edge& e = topology.edges()[static_cast<std::size_t>(*edge)];
  if (e.kind == EdgeKind::C) return Refusal{ErrorCode::NotFlippable, "curve edge"};
  const auto [first, c] = triangle_on(topology, *edge, u, v);
  const auto [second, d] = triangle_on(topology, *edge, v, u);
  if (c == d) return Refusal{ErrorCode::NotFlippable, "degenerate quad"};
  if (topology.find_edge(c, d)) return Refusal{ErrorCode::NotFlippable, "diagonal exists"};
  if (topology.on_curve(c) && topology.on_curve(d)) {
    return Refusal{ErrorCode::NotFlippable, "flag-likeness violation"};
  }
  return FlipPlan{u, v, c, d, first, second};
}

struct Merge31Plan {
  Triangle merged;
  std::vector<std::size_t> star;
};

std::variant<Merge31Plan, Refusal> plan_merge31(const Topology& topology, int x) {
  if (!topology.has_vertex(x)) return Refusal{ErrorCode::NoSuchSimplex, "no vertex " + std::to_string(x)};
  if (topology.on_curve(x)) return Refusal{ErrorCode::NotMergeable, "curve vertex"};
  if (topology.degree(x) != 3) return Refusal{ErrorCode::NotMergeable, "wrong degree"};
  const auto next = link_of(topology, x);
  const int a = next.begin()->first;
  const int b = next.at(a);
  const int c = next.at(b);
  const Triangle merged{a, b, c};
  if (has_triangle(topology.complex(), merged)) {
    return Refusal{ErrorCode::NotMergeable, "merged triangle already exists"};
  }
  if (topology.on_curve(a) && topology.on_curve(b) && topology.on_curve(c)) {
    return Refusal{ErrorCode::NotMergeable, "flag-likeness violation"};
  }
  std::vector<std::size_t> star;
  for (int t : topology.star(x)) star.push_back(static_cast<std::size_t>(t));
  return Merge31Plan{canonical_rotation(merged), star};
}

struct Split24Plan {
  int u, w, p, q;
  std::size_t first, second;
};

std::variant<Split24Plan, Refusal> plan_split24(const Topology& topology, int u, int v) {
  const auto edge = topology.find_edge(u, v);
  if (!edge) return Refusal{ErrorCode::NoSuchSimplex, "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}"};
  const Edge& e = topology.edges()[static_cast<std::size_t>(*edge)];
  if (e.kind != EdgeKind::C) return Refusal{ErrorCode::NotSplittable, "not a curve edge"};
  const auto [first, p] = triangle_on(topology, *edge, e.tail, e.head);
  const auto [second, q] = triangle_on(topology, *edge, e.head, e.tail);
  return Split24Plan{e.tail, e.head, p, q, first, second};
}

struct Merge42Plan {
  int u, w, p, q;
  std::vector<std::size_t> star;
};

std::variant<Merge42Plan, Refusal> plan_merge42(const Topology& topology, int x) {
  if (!topology.has_vertex(x)) return Refusal{ErrorCode::NoSuchSimplex, "no vertex " + std::to_string(x)};
  if (!topology.on_curve(x)) return Refusal{ErrorCode::NotMergeable, "off-curve vertex"};
  if (topology.degree(x) != 4) return Refusal{ErrorCode::NotMergeable, "wrong degree"};
  int u = -1;
  int w = -1;
  for (const auto& cycle : topology.complex().curve_cycles) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    if (it == cycle.end()) continue;
    const auto i = static_cast<std::size_t>(it - cycle.begin());
    u = cycle[(i + cycle.size() - 1) % cycle.size()];
    w = cycle[(i + 1) % cycle.size()];
  }
  const auto next = link_of(topology, x);
  const int p = next.at(w);
  const int q = next.at(u);
  if (next.at(p) != u || next.at(q) != w) {
    return Refusal{ErrorCode::NotMergeable, "curve neighbours are adjacent in the link"};
  }
  if (topology.find_edge(u, w)) return Refusal{ErrorCode::NotMergeable, "merged edge already exists"};
  std::vector<std::size_t> star;
  for (int t : topology.star(x)) star.push_back(static_cast<std::size_t>(t));
  return Merge42Plan{u, w, p, q, star};
}

template <typename Plan>
const Plan& accept(const std::variant<Plan, Refusal>& plan) {
  if (const auto* refusal = std::get_if<Refusal>(&plan)) refuse(*refusal);
  return std::get<Plan>(plan);
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Flip22: return "flip22";
    case MoveKind::Subdivide13: return "subdivide13";
    case MoveKind::Merge31: return "merge31";
    case MoveKind::Split24: return "split24";
    case MoveKind::Merge42: return "merge42";
  }
  return "?";
}

MoveResult flip22(const CurveSurfaceComplex& complex, int u, int v) {
  const Topology topology(complex);
  const FlipPlan plan = accept(plan_flip(topology, u, v));
  MoveResult out{complex, {}};
  const std::vector<std::size_t> removed{plan.first, plan.second};
  const std::vector<Triangle> added{Triangle{plan.a, plan.d, plan.c}, Triangle{plan.d, plan.b, plan.c}};
  out.record.kind = MoveKind::Flip22;
  out.record.target = {u, v};
  out.record.removed = triangles_at(complex, removed);
  replace_triangles(out.complex, removed, added);
  for (const auto& t : added) out.record.added.push_back(canonical_rotation(t));
  out.record.inverse_target = {plan.c, plan.d};
  return out;
}

MoveResult subdivide13(const CurveSurfaceComplex& complex, const Triangle& triangle) {
  const auto index = find_triangle(complex, triangle);
  if (!index) {
    throw Error(ErrorCode::NoSuchSimplex, "no triangle (" + std::to_string(triangle[0]) + "," +
                                              std::to_string(triangle[1]) + "," +
                                              std::to_string(triangle[2]) + ")");
  }
  const Triangle t = complex.triangles[*index];
  const int x = next_vertex_id(complex);
  MoveResult out{complex, {}};
  out.complex.vertices.push_back({x, false});
  out.complex.off_curve_order.push_back(x);
  const std::vector<Triangle> added{Triangle{t[0], t[1], x}, Triangle{t[1], t[2], x},
                                    Triangle{t[2], t[0], x}};
  replace_triangles(out.complex, {*index}, added);
  out.record.kind = MoveKind::Subdivide13;
  out.record.target = {t[0], t[1], t[2]};
  out.record.removed = {t};
  for (const auto& a : added) out.record.added.push_back(canonical_rotation(a));
  out.record.created_vertex = x;
  out.record.inverse_target = {x};
  return out;
}

MoveResult merge31(const CurveSurfaceComplex& complex, int vertex) {
  const Topology topology(complex);
  const Merge31Plan plan = accept(plan_merge31(topology, vertex));
  MoveResult out{complex, {}};
  out.record.kind = MoveKind::Merge31;
  out.record.target = {vertex};
  out.record.removed = triangles_at(complex, plan.star);
  out.record.added = {plan.merged};
  out.record.deleted_vertex = vertex;
  out.record.inverse_target = {plan.merged.begin(), plan.merged.end()};
  replace_triangles(out.complex, plan.star, {plan.merged});
  erase_vertex(out.complex, vertex);
  return out;
}

MoveResult split24(const CurveSurfaceComplex& complex, int u, int v) {
  const Topology topology(complex);
  const Split24Plan plan = accept(plan_split24(topology, u, v));
  const int x = next_vertex_id(complex);
  MoveResult out{complex, {}};
  out.complex.vertices.push_back({x, true});
  for (auto& cycle : out.complex.curve_cycles) {
    auto it = std::find(cycle.begin(), cycle.end(), plan.u);
    if (it == cycle.end()) continue;
    cycle.insert(it + 1, x);
    break;
  }
  const std::vector<std::size_t> removed{plan.first, plan.second};
  const std::vector<Triangle> added{Triangle{plan.u, x, plan.p}, Triangle{x, plan.w, plan.p},
                                    Triangle{plan.w, x, plan.q}, Triangle{x, plan.u, plan.q}};
  out.record.kind = MoveKind::Split24;
  out.record.target = {plan.u, plan.w};
  out.record.removed = triangles_at(complex, removed);
  for (const auto& a : added) out.record.added.push_back(canonical_rotation(a));
  out.record.created_vertex = x;
  out.record.inverse_target = {x};
  replace_triangles(out.complex, removed, added);
  return out;
}

MoveResult merge42(const CurveSurfaceComplex& complex, int vertex) {
  const Topology topology(complex);
  const Merge42Plan plan = accept(plan_merge42(topology, vertex));
  MoveResult out{complex, {}};
  const std::vector<Triangle> added{Triangle{plan.u, plan.w, plan.p}, Triangle{plan.w, plan.u, plan.q}};
  out.record.kind = MoveKind::Merge42;
  out.record.target = {vertex};
  out.record.removed = triangles_at(complex, plan.star);
  for (const auto& a : added) out.record.added.push_back(canonical_rotation(a));
  out.record.deleted_vertex = vertex;
  out.record.inverse_target = {plan.u, plan.w};
  replace_triangles(out.complex, plan.star, added);
  erase_vertex(out.complex, vertex);
  return out;
}

MoveResult apply_inverse(const CurveSurfaceComplex& complex, const MoveRecord& record) {
  const auto& t = record.inverse_target;
  switch (record.kind) {
    case MoveKind::Flip22: return flip22(complex, t.at(0), t.at(1));
    case MoveKind::Subdivide13: return merge31(complex, t.at(0));
    case MoveKind::Merge31: return subdivide13(complex, {t.at(0), t.at(1), t.at(2)});
    case MoveKind::Split24: return merge42(complex, t.at(0));
    case MoveKind::Merge42: return split24(complex, t.at(0), t.at(1));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown move kind");
}

std::vector<MoveCandidate> applicable_moves(const CurveSurfaceComplex& complex,
                                            std::size_t max_edges) {
  const Topology topology(complex);
  const bool may_grow = max_edges == 0 || topology.num_edges() + 3 <= max_edges;
  std::vector<MoveCandidate> out;
  for (const auto& e : topology.edges()) {
    if (std::holds_alternative<FlipPlan>(plan_flip(topology, e.tail, e.head))) {
      out.push_back({MoveKind::Flip22, {e.tail, e.head}});
    }
  }
  if (may_grow) {
    for (const auto& t : complex.triangles) out.push_back({MoveKind::Subdivide13, {t[0], t[1], t[2]}});
  }
  for (const auto& v : complex.vertices) {
    if (!v.on_curve && std::holds_alternative<Merge31Plan>(plan_merge31(topology, v.id))) {
      out.push_back({MoveKind::Merge31, {v.id}});
    }
  }
  if (may_grow) {
    for (const auto& e : topology.edges()) {
      if (e.kind == EdgeKind::C) out.push_back({MoveKind::Split24, {e.tail, e.head}});
    }
  }
  for (const auto& v : complex.vertices) {
    if (v.on_curve && std::holds_alternative<Merge42Plan>(plan_merge42(topology, v.id))) {
      out.push_back({MoveKind::Merge42, {v.id}});
    }
  }
  return out;
}

MoveResult apply_move(const CurveSurfaceComplex& complex, const MoveCandidate& move) {
  const auto& t = move.target;
  switch (move.kind) {
    case MoveKind::Flip22: return flip22(complex, t.at(0), t.at(1));
    case MoveKind::Subdivide13: return subdivide13(complex, {t.at(0), t.at(1), t.at(2)});
    case MoveKind::Merge31: return merge31(complex, t.at(0));
    case MoveKind::Split24: return split24(complex, t.at(0), t.at(1));
    case MoveKind::Merge42: return merge42(complex, t.at(0));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown move kind");
}

RandomWalker::RandomWalker(CurveSurfaceComplex start, std::uint64_t seed, WalkOptions options)
    : complex_(std::move(start)),
      rng_(seed),
      max_edges_(options.max_edges ? options.max_edges : count_edges(complex_) + 60) {}

bool RandomWalker::step() {
  const auto moves = applicable_moves(complex_, max_edges_);
  if (moves.empty()) return false;
  auto result = apply_move(complex_, moves[rng_.below(moves.size())]);
  complex_ = std::move(result.complex);
  records_.push_back(std::move(result.record));
  return true;
}

WalkResult random_walk(const CurveSurfaceComplex& complex, std::uint64_t seed, std::size_t steps,
                       WalkOptions options) {
  RandomWalker walker(complex, seed, options);
  for (std::size_t i = 0; i < steps && walker.step(); ++i) {
  }
  return {walker.complex(), walker.records()};
}

}  // namespace tqftdef
