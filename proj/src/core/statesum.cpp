#include "tqftdef/statesum.hpp"

#include <limits>

#include "tqftdef/error.hpp"

namespace tqftdef {
namespace {

struct TriangleTerm {
  const Tensor3* table;
  std::array<int, 3> edges;
  Coefficient tag;
};

std::vector<TriangleTerm> triangle_terms(const SystemData& system, const Topology& topology,
                                         BarredOrder order) {
  std::vector<TriangleTerm> out;
  out.reserve(topology.complex().triangles.size());
  for (std::size_t t = 0; t < topology.complex().triangles.size(); ++t) {
    const Classification cls = classify_triangle(topology, t, order);
    const Tensor3& table = system.coefficient(cls.cls.tag);
    for (int i = 0; i < 3; ++i) {
      if (table.dims()[i] != system.dim(cls.edges[i].kind)) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string("coefficient ") + std::string(name(cls.cls.tag)) +
                        " cannot take a " + std::string(name(cls.edges[i].kind)) +
                        "-edge in argument " + std::to_string(i));
      }
    }
    out.push_back({&table, cls.edge_ids, cls.cls.tag});
  }
  return out;
}

void require_valid(const CurveSurfaceComplex& complex) {
  const auto violations = validate(complex);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidSurface, violations.front().message);
  }
}

std::vector<std::size_t> edge_dims(const SystemData& system, const Topology& topology) {
  std::vector<std::size_t> dims;
  for (const auto& e : topology.edges()) dims.push_back(system.dim(e.kind));
  return dims;
}

}  // namespace

Scalar local_weight(const SystemData& system, const Topology& topology, std::size_t triangle,
                    const Coloring& coloring, BarredOrder order) {
  const Classification cls = classify_triangle(topology, triangle, order);
  const Tensor3& table = system.coefficient(cls.cls.tag);
  std::array<std::size_t, 3> index{};
  for (int i = 0; i < 3; ++i) {
    index[i] = coloring.at(static_cast<std::size_t>(cls.edge_ids[i]));
    if (index[i] >= table.dims()[i]) {
      throw Error(ErrorCode::InvalidArgument, "color out of range for edge " +
                                                  std::to_string(cls.edge_ids[i]));
    }
  }
  return table(index[0], index[1], index[2]);
}

std::uint64_t coloring_count(const SystemData& system, const Topology& topology) {
  std::uint64_t total = 1;
  for (auto d : edge_dims(system, topology)) {
    if (d == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / d) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= d;
  }
  return total;
}

Scalar evaluate_bruteforce(const SystemData& system, const CurveSurfaceComplex& complex,
                           const EvaluationOptions& options) {
  check_dimensions(system);
  require_valid(complex);
  const Topology topology(complex);
  const std::uint64_t count = coloring_count(system, topology);
  if (count > options.brute_force_cap) {
    throw Error(ErrorCode::TooLarge, std::to_string(count) + " colorings exceed the cap of " +
                                         std::to_string(options.brute_force_cap) +
                                         "; use contraction");
  }
  const auto terms = triangle_terms(system, topology, options.barred_order);
  const auto dims = edge_dims(system, topology);
  const std::size_t n_edges = dims.size();

  // Triangles whose last edge (in id order) is edge e are evaluated at depth e+1.
  std::vector<std::vector<std::size_t>> ready(n_edges + 1);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    int last = -1;
    for (int e : terms[t].edges) last = std::max(last, e);
    ready[static_cast<std::size_t>(last + 1)].push_back(t);
  }

  Coloring coloring(n_edges, 0);
  std::vector<Scalar> partial(n_edges + 1);
  Scalar total = 0;
  // Iterative depth-first enumeration with zero pruning.
  std::size_t depth = 0;
  partial[0] = 1;
  auto apply_ready = [&](std::size_t d) {
    for (auto t : ready[d]) {
      const auto& term = terms[t];
      const Scalar& w = (*term.table)(coloring[static_cast<std::size_t>(term.edges[0])],
                                      coloring[static_cast<std::size_t>(term.edges[1])],
                                      coloring[static_cast<std::size_t>(term.edges[2])]);
      if (is_zero(w)) {
        partial[d] = 0;
        return;
      }
      partial[d] *= w;
    }
  };
  apply_ready(0);
  if (is_zero(partial[0])) return 0;
  if (n_edges == 0) return partial[0];

  coloring[0] = 0;
  depth = 0;
  while (true) {
    // Assign edge `depth` the value coloring[depth] and evaluate.
    partial[depth + 1] = partial[depth];
    apply_ready(depth + 1);
    const bool alive = !is_zero(partial[depth + 1]);
    if (alive && depth + 1 == n_edges) {
      total += partial[n_edges];
    } else if (alive) {
      ++depth;
      coloring[depth] = 0;
      continue;
    }
    // Advance to the next value, backtracking as needed.
    while (true) {
      if (++coloring[depth] < dims[depth]) break;
      if (depth == 0) return total;
      --depth;
    }
  }
}

Scalar evaluate_contraction(const SystemData& system, const CurveSurfaceComplex& complex,
                            const EvaluationOptions& options, ContractionStats* stats) {
  check_dimensions(system);
  require_valid(complex);
  const Topology topology(complex);
  const auto terms = triangle_terms(system, topology, options.barred_order);
  std::vector<LabeledTensor> network;
  network.reserve(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    LabeledTensor tensor;
    tensor.labels.assign(terms[t].edges.begin(), terms[t].edges.end());
    const auto& d = terms[t].table->dims();
    tensor.dims.assign(d.begin(), d.end());
    tensor.data = terms[t].table->data();
    tensor.id = static_cast<int>(t);
    network.push_back(std::move(tensor));
  }
  const LabeledTensor result =
      contract_network(std::move(network), {}, options.order, options.memory_budget, stats);
  return result.data.at(0);
}

ClassCounts class_counts(const Topology& topology) {
  ClassCounts counts{};
  for (std::size_t t = 0; t < topology.complex().triangles.size(); ++t) {
    ++counts[static_cast<std::size_t>(classify_triangle(topology, t).cls.tag)];
  }
  return counts;
}

InvariantValue normalized_invariant(const ValidatedSystem& system,
                                    const CurveSurfaceComplex& complex, Method method,
                                    const EvaluationOptions& options) {
  require_valid(complex);
  InvariantValue value;
  switch (method) {
    case Method::Brute:
      value.unnormalized = evaluate_bruteforce(system.data(), complex, options);
      value.method = Method::Brute;
      break;
    case Method::Contract:
      value.unnormalized = evaluate_contraction(system.data(), complex, options);
      value.method = Method::Contract;
      break;
    case Method::Auto:
      try {
        value.unnormalized = evaluate_contraction(system.data(), complex, options);
        value.method = Method::Contract;
      } catch (const Error& error) {
        if (error.code() != ErrorCode::OutOfMemoryBudget) throw;
        value.unnormalized = evaluate_bruteforce(system.data(), complex, options);
        value.method = Method::Brute;
      }
      break;
  }
  for (const auto& v : complex.vertices) {
    if (v.on_curve) ++value.n_on_vertices;
    else ++value.n_off_vertices;
  }
  value.normalized = power(system.rho(), -value.n_off_vertices) *
                     power(system.lambda(), -value.n_on_vertices) * value.unnormalized;
  value.class_counts = class_counts(Topology(complex));
  return value;
}

}  // namespace tqftdef
