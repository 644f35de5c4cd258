#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tqftdef/complex.hpp"
#include "tqftdef/frobenius_data.hpp"
#include "tqftdef/tensor_network.hpp"

namespace tqftdef {

enum class Method : unsigned char { Auto, Brute, Contract };

struct EvaluationOptions {
  std::uint64_t brute_force_cap = 100'000'000;  ///< colorings
  std::uint64_t memory_budget = 1ULL << 26;     ///< entries per intermediate tensor
  ContractionOrder order = ContractionOrder::Greedy;
  BarredOrder barred_order = BarredOrder::Path;
};

/// Basis index per edge id of the complex's Topology.
using Coloring = std::vector<std::size_t>;

/// Number of triangles per coefficient class, indexed like kAllCoefficients.
using ClassCounts = std::array<std::size_t, 6>;

struct InvariantValue {
  Scalar unnormalized;
  long n_off_vertices = 0;
  long n_on_vertices = 0;
  Scalar normalized;
  ClassCounts class_counts{};
  Method method = Method::Contract;  ///< evaluation route actually taken
};

Scalar local_weight(const SystemData& system, const Topology& topology, std::size_t triangle,
                    const Coloring& coloring, BarredOrder order = BarredOrder::Path);

/// Number of kind-respecting colorings (saturates at UINT64_MAX).
std::uint64_t coloring_count(const SystemData& system, const Topology& topology);

/// Sum over all colorings of the product of local weights.
/// Throws TooLarge above options.brute_force_cap colorings.
Scalar evaluate_bruteforce(const SystemData& system, const CurveSurfaceComplex& complex,
                           const EvaluationOptions& options = {});

/// Same value by contracting one tensor per triangle.
/// Throws OutOfMemoryBudget.
Scalar evaluate_contraction(const SystemData& system, const CurveSurfaceComplex& complex,
                            const EvaluationOptions& options = {},
                            ContractionStats* stats = nullptr);

ClassCounts class_counts(const Topology& topology);

/// rho^(-#off-curve vertices) * lambda^(-#curve vertices) * Z. Auto contracts
/// and falls back to brute force when the contraction exceeds its budget.
InvariantValue normalized_invariant(const ValidatedSystem& system,
                                    const CurveSurfaceComplex& complex,
                                    Method method = Method::Auto,
                                    const EvaluationOptions& options = {});

}  // namespace tqftdef
