#pragma once

#include <array>
#include <string_view>

namespace tqftdef {

enum class EdgeKind : unsigned char { A, B, C };

/// The six coefficient functions, one per triangle class (k on-curve
/// vertices, sign = two (+) or one (-) boundary-agreeing edges).
enum class Coefficient : unsigned char { a, abar, b, bbar, c, cbar };

inline constexpr std::array<Coefficient, 6> kAllCoefficients = {
    Coefficient::a, Coefficient::abar, Coefficient::b,
    Coefficient::bbar, Coefficient::c, Coefficient::cbar};

/// Edge kind of each argument slot, in storage order.
///   a    (A,A,A)   a_{st}^u        abar (A,A,A)   abar_t^{rs}
///   b    (B,A,B)   b_{qs}^r        bbar (B,B,A)   bbar_q^{rs}
///   c    (C,B,B)   c_{rq}^u        cbar (B,C,B)   cbar_q^{ru}
constexpr std::array<EdgeKind, 3> argument_kinds(Coefficient tag) {
  using enum EdgeKind;
  switch (tag) {
    case Coefficient::a:
    case Coefficient::abar: return {A, A, A};
    case Coefficient::b: return {B, A, B};
    case Coefficient::bbar: return {B, B, A};
    case Coefficient::c: return {C, B, B};
    case Coefficient::cbar: return {B, C, B};
  }
  return {A, A, A};
}

constexpr std::string_view name(Coefficient tag) {
  switch (tag) {
    case Coefficient::a: return "a";
    case Coefficient::abar: return "abar";
    case Coefficient::b: return "b";
    case Coefficient::bbar: return "bbar";
    case Coefficient::c: return "c";
    case Coefficient::cbar: return "cbar";
  }
  return "?";
}

constexpr std::string_view name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::A: return "A";
    case EdgeKind::B: return "B";
    case EdgeKind::C: return "C";
  }
  return "?";
}

}  // namespace tqftdef
