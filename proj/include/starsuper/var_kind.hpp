#pragma once

#include <array>
#include <string>

namespace starsuper {

/// Variable kinds of the free *-superalgebra: y+ (even symmetric), y- (even
/// skew), z+ (odd symmetric), z- (odd skew) and x (unrestricted).
enum class VarKind { YPlus = 0, YMinus = 1, ZPlus = 2, ZMinus = 3, Any = 4 };

inline constexpr std::array<VarKind, 4> kGradedKinds = {VarKind::YPlus, VarKind::YMinus,
                                                        VarKind::ZPlus, VarKind::ZMinus};

std::string to_string(VarKind k);  // "y+", "y-", "z+", "z-", "x"
/// Accepts the to_string spellings; throws ParseError otherwise.
VarKind parse_var_kind(const std::string& text);

/// Dimensions of A_0^+, A_0^-, A_1^+, A_1^-.
struct HomDims {
  int m_plus = 0;
  int m_minus = 0;
  int l_plus = 0;
  int l_minus = 0;

  int of(VarKind k) const;
  int total() const { return m_plus + m_minus + l_plus + l_minus; }
  HomDims plus_one() const { return {m_plus + 1, m_minus + 1, l_plus + 1, l_minus + 1}; }

  friend bool operator==(const HomDims&, const HomDims&) = default;
};

std::string to_string(const HomDims& d);  // "(M+,M-,L+,L-)"

}  // namespace starsuper
