#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bintail {

enum class BoundKind {
  ELEM_LB,
  ELEM_UB,
  EXP_FIT_LB,
  CHERNLIKE_LB,
  CHERNLIKE_UB,
  FINITE_LB,
  FINITE_UB,
  CONT_LB,
  CONT_UB,
  CHERNOFF_EVEN,
  CHERNOFF_ODD,
  HOEFFDING,
  BERNSTEIN,
  SLUD_LB,
};

enum class Side { lower, upper };

inline constexpr std::array<BoundKind, 14> all_bound_kinds = {
    BoundKind::ELEM_LB,      BoundKind::ELEM_UB,       BoundKind::EXP_FIT_LB,   BoundKind::CHERNLIKE_LB,
    BoundKind::CHERNLIKE_UB, BoundKind::FINITE_LB,     BoundKind::FINITE_UB,    BoundKind::CONT_LB,
    BoundKind::CONT_UB,      BoundKind::CHERNOFF_EVEN, BoundKind::CHERNOFF_ODD, BoundKind::HOEFFDING,
    BoundKind::BERNSTEIN,    BoundKind::SLUD_LB,
};

inline constexpr std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::ELEM_LB: return "ELEM_LB";
    case BoundKind::ELEM_UB: return "ELEM_UB";
    case BoundKind::EXP_FIT_LB: return "EXP_FIT_LB";
    case BoundKind::CHERNLIKE_LB: return "CHERNLIKE_LB";
    case BoundKind::CHERNLIKE_UB: return "CHERNLIKE_UB";
    case BoundKind::FINITE_LB: return "FINITE_LB";
    case BoundKind::FINITE_UB: return "FINITE_UB";
    case BoundKind::CONT_LB: return "CONT_LB";
    case BoundKind::CONT_UB: return "CONT_UB";
    case BoundKind::CHERNOFF_EVEN: return "CHERNOFF_EVEN";
    case BoundKind::CHERNOFF_ODD: return "CHERNOFF_ODD";
    case BoundKind::HOEFFDING: return "HOEFFDING";
    case BoundKind::BERNSTEIN: return "BERNSTEIN";
    case BoundKind::SLUD_LB: return "SLUD_LB";
  }
  return "?";
}

inline constexpr std::string_view to_string(Side s) { return s == Side::lower ? "lower" : "upper"; }

inline std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (BoundKind k : all_bound_kinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

inline constexpr Side side_of(BoundKind k) {
  switch (k) {
    case BoundKind::ELEM_LB:
    case BoundKind::EXP_FIT_LB:
    case BoundKind::CHERNLIKE_LB:
    case BoundKind::FINITE_LB:
    case BoundKind::CONT_LB:
    case BoundKind::SLUD_LB:
      return Side::lower;
    default:
      return Side::upper;
  }
}

/// One evaluated bound on P[B(p,n) >= n/2].
///
/// `value` is never clamped: upper bounds above 1 and lower bounds below 0
/// are kept verbatim and flagged `vacuous`. `applicable` records whether the
/// bound's hypotheses hold at (n, p); the value is computed either way.
struct BoundResult {
  BoundKind kind;
  Side side;
  double value;
  bool applicable;
  bool vacuous;
};

inline BoundResult make_bound(BoundKind kind, double value, bool applicable) {
  const Side side = side_of(kind);
  const bool vacuous = side == Side::upper ? value > 1.0 : value < 0.0;
  return {kind, side, value, applicable, vacuous};
}

inline constexpr double violation_slack = 1e-12;

/// True when an applicable bound sits on the wrong side of `exact` by more than `slack`.
inline bool violates(const BoundResult& b, double exact, double slack = violation_slack) {
  if (!b.applicable) return false;
  return b.side == Side::lower ? b.value > exact + slack : b.value < exact - slack;
}

}  // namespace bintail
