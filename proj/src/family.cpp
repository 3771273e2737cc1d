#include "starsuper/family.hpp"

#include "starsuper/errors.hpp"

#include <sstream>
#include <vector>

namespace starsuper {

int FamilyTag::size() const {
  switch (family) {
    case Family::MhlTranspose:
    case Family::MhlExchange:
      return h + l;
    case Family::MhhSymplectic:
      return 2 * h;
    case Family::MnCmnStar:
    case Family::MnCmnDagger:
    case Family::MnCmnExchange:
      return 2 * n;
    case Family::Custom:
      break;
  }
  throw InvalidArgument("custom blocks have no matrix size");
}

bool FamilyTag::trivially_graded() const {
  return (family == Family::MhlTranspose || family == Family::MhlExchange) && l == 0;
}

void FamilyTag::check() const {
  const auto fail = [this](const std::string& why) {
    throw InvalidArgument("invalid parameters for " + describe() + ": " + why);
  };
  switch (family) {
    case Family::MhlTranspose:
    case Family::MhlExchange:
      if (h < 1) fail("h must be at least 1");
      if (l < 0 || l > h) fail("need h >= l >= 0");
      break;
    case Family::MhhSymplectic:
      if (h < 1) fail("h must be at least 1");
      if (l != h) fail("symplectic involution needs h = l");
      break;
    case Family::MnCmnStar:
    case Family::MnCmnDagger:
      if (n < 1) fail("n must be at least 1");
      if (diamond == Diamond::Symplectic && n % 2 != 0) fail("symplectic involution needs even n");
      break;
    case Family::MnCmnExchange:
      if (n < 1) fail("n must be at least 1");
      break;
    case Family::Custom:
      break;
  }
}

std::string FamilyTag::name() const {
  switch (family) {
    case Family::MhlTranspose: return "mhl-t";
    case Family::MhhSymplectic: return "mhh-s";
    case Family::MhlExchange: return "mhl-exc";
    case Family::MnCmnStar:
    case Family::MnCmnDagger: return "mn-cmn";
    case Family::MnCmnExchange: return "mn-cmn-exc";
    case Family::Custom: return "custom";
  }
  return "custom";
}

std::string FamilyTag::describe() const {
  std::ostringstream os;
  os << name();
  switch (family) {
    case Family::MhlTranspose:
    case Family::MhlExchange:
      os << "(" << h << "," << l << ")";
      break;
    case Family::MhhSymplectic:
      os << "(" << h << ")";
      break;
    case Family::MnCmnStar:
    case Family::MnCmnDagger:
      os << "(" << n << "," << (diamond == Diamond::Transpose ? "t" : "s") << ","
         << (family == Family::MnCmnStar ? "-" : "+") << ")";
      break;
    case Family::MnCmnExchange:
      os << "(" << n << ")";
      break;
    case Family::Custom:
      break;
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer in '" + context + "', got '" + s + "'");
  }
}

Diamond to_diamond(const std::string& s, const std::string& context) {
  if (s == "t") return Diamond::Transpose;
  if (s == "s") return Diamond::Symplectic;
  throw ParseError("diamond must be t or s in '" + context + "'");
}

}  // namespace

FamilyTag parse_family_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("missing ':' in component '" + text + "'");
  const std::string name = text.substr(0, colon);
  const auto args = split(text.substr(colon + 1), ',');
  const auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw ParseError("component '" + text + "' expects " + std::to_string(k) + " parameters");
    }
  };
  FamilyTag tag;
  if (name == "mhl-t") {
    need(2);
    tag = FamilyTag::mhl_t(to_int(args[0], text), to_int(args[1], text));
  } else if (name == "mhh-s") {
    need(1);
    tag = FamilyTag::mhh_s(to_int(args[0], text));
  } else if (name == "mhl-exc") {
    need(2);
    tag = FamilyTag::mhl_exc(to_int(args[0], text), to_int(args[1], text));
  } else if (name == "mn-cmn") {
    need(3);
    const int n = to_int(args[0], text);
    const Diamond d = to_diamond(args[1], text);
    if (args[2] == "minus" || args[2] == "-") {
      tag = FamilyTag::mn_cmn_star(n, d);
    } else if (args[2] == "plus" || args[2] == "+") {
      tag = FamilyTag::mn_cmn_dagger(n, d);
    } else {
      throw ParseError("sign must be plus or minus in '" + text + "'");
    }
  } else if (name == "mn-cmn-exc") {
    need(1);
    tag = FamilyTag::mn_cmn_exc(to_int(args[0], text));
  } else {
    throw ParseError("unknown family '" + name + "'");
  }
  tag.check();
  return tag;
}

}  // namespace starsuper
