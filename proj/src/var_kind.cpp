#include "starsuper/var_kind.hpp"

#include "starsuper/errors.hpp"

namespace starsuper {

std::string to_string(VarKind k) {
  switch (k) {
    case VarKind::YPlus: return "y+";
    case VarKind::YMinus: return "y-";
    case VarKind::ZPlus: return "z+";
    case VarKind::ZMinus: return "z-";
    case VarKind::Any: return "x";
  }
  return "x";
}

VarKind parse_var_kind(const std::string& text) {
  if (text == "y+") return VarKind::YPlus;
  if (text == "y-") return VarKind::YMinus;
  if (text == "z+") return VarKind::ZPlus;
  if (text == "z-") return VarKind::ZMinus;
  if (text == "x") return VarKind::Any;
  throw ParseError("unknown variable kind '" + text + "' (expected y+, y-, z+, z- or x)");
}

int HomDims::of(VarKind k) const {
  switch (k) {
    case VarKind::YPlus: return m_plus;
    case VarKind::YMinus: return m_minus;
    case VarKind::ZPlus: return l_plus;
    case VarKind::ZMinus: return l_minus;
    case VarKind::Any: break;
  }
  return total();
}

std::string to_string(const HomDims& d) {
  return "(" + std::to_string(d.m_plus) + "," + std::to_string(d.m_minus) + "," +
         std::to_string(d.l_plus) + "," + std::to_string(d.l_minus) + ")";
}

}  // namespace starsuper
