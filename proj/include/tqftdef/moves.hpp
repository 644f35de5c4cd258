#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tqftdef/complex.hpp"

namespace tqftdef {

enum class MoveKind : unsigned char { Flip22, Subdivide13, Merge31, Split24, Merge42 };

std::string_view to_string(MoveKind kind);

/// One applied flag-like move.
///
/// `target` identifies what the move was applied to (edge endpoints, triangle
/// vertices or a single vertex). Removed/added triangles and the created
/// vertex make the record self-contained; `inverse_target` is what the
/// inverse move must be applied to.
struct MoveRecord {
  MoveKind kind = MoveKind::Flip22;
  std::vector<int> target;
  std::vector<Triangle> removed;
  std::vector<Triangle> added;
  int created_vertex = -1;
  int deleted_vertex = -1;
  std::vector<int> inverse_target;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

struct MoveResult {
  CurveSurfaceComplex complex;
  MoveRecord record;
};

/// Replaces edge {u,v} by the opposite diagonal of its quadrilateral.
/// Throws NotFlippable (curve edge, degenerate quad, diagonal exists,
/// flag-likeness violation) or NoSuchSimplex.
MoveResult flip22(const CurveSurfaceComplex& complex, int u, int v);

/// Cones a triangle off to a new off-curve vertex ranked last.
MoveResult subdivide13(const CurveSurfaceComplex& complex, const Triangle& triangle);

/// Inverse of subdivide13 on an off-curve vertex of degree 3.
/// Throws NotMergeable.
MoveResult merge31(const CurveSurfaceComplex& complex, int vertex);

/// Splits curve edge {u,v} with a new curve vertex joined to both opposite
/// corners. Throws NotSplittable or NoSuchSimplex.
MoveResult split24(const CurveSurfaceComplex& complex, int u, int v);

/// Inverse of split24 on a curve vertex of degree 4. Throws NotMergeable.
MoveResult merge42(const CurveSurfaceComplex& complex, int vertex);

/// Applies the inverse of `record` to the complex it produced.
MoveResult apply_inverse(const CurveSurfaceComplex& complex, const MoveRecord& record);

/// A move that can be applied to the current complex.
struct MoveCandidate {
  MoveKind kind;
  std::vector<int> target;

  friend bool operator==(const MoveCandidate&, const MoveCandidate&) = default;
};

struct WalkOptions {
  /// Growth moves (1-3, 2-4) are not offered once the edge count would exceed
  /// this bound. 0 means "initial edge count + 60".
  std::size_t max_edges = 0;
};

/// Every applicable move, in a deterministic order: flips by edge, 1-3 by
/// triangle, 3-1 by vertex, 2-4 by curve edge, 4-2 by vertex. Growth moves
/// are left out when they would push the edge count above `max_edges`
/// (0 = no bound).
std::vector<MoveCandidate> applicable_moves(const CurveSurfaceComplex& complex,
                                            std::size_t max_edges);

MoveResult apply_move(const CurveSurfaceComplex& complex, const MoveCandidate& move);

/// 64-bit linear congruential generator (Knuth's MMIX constants). Draws use
/// the high 31 bits of the state.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_ >> 33;
  }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

 private:
  std::uint64_t state_;
};

/// Seeded random walk over the flag-like moves; each step picks uniformly
/// among applicable_moves().
class RandomWalker {
 public:
  RandomWalker(CurveSurfaceComplex start, std::uint64_t seed, WalkOptions options = {});

  /// Applies one move; returns false (and does nothing) if no move applies.
  bool step();

  const CurveSurfaceComplex& complex() const noexcept { return complex_; }
  const std::vector<MoveRecord>& records() const noexcept { return records_; }
  std::size_t max_edges() const noexcept { return max_edges_; }

 private:
  CurveSurfaceComplex complex_;
  Lcg64 rng_;
  std::size_t max_edges_;
  std::vector<MoveRecord> records_;
};

struct WalkResult {
  CurveSurfaceComplex complex;
  std::vector<MoveRecord> records;
};

WalkResult random_walk(const CurveSurfaceComplex& complex, std::uint64_t seed, std::size_t steps,
                       WalkOptions options = {});

}  // namespace tqftdef
