#include "starsuper/io.hpp"

#include "starsuper/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace starsuper {

using nlohmann::json;

namespace {

json family_params(const FamilyTag& t) {
  switch (t.family) {
    case Family::MhlTranspose:
    case Family::MhlExchange:
      return {{"h", t.h}, {"l", t.l}};
    case Family::MhhSymplectic:
      return {{"h", t.h}};
    case Family::MnCmnStar:
    case Family::MnCmnDagger:
      return {{"n", t.n},
              {"diamond", t.diamond == Diamond::Transpose ? "t" : "s"},
              {"sign", t.family == Family::MnCmnStar ? "minus" : "plus"}};
    case Family::MnCmnExchange:
      return {{"n", t.n}};
    case Family::Custom:
      break;
  }
  return json::object();
}

FamilyTag family_from_json(const std::string& name, const json& p) {
  if (name == "custom") return FamilyTag{};
  const auto num = [&](const char* key) {
    if (!p.contains(key) || !p.at(key).is_number_integer()) {
      throw ParseError("wedderburn block of family " + name + " needs integer param '" + key + "'");
    }
    return p.at(key).get<int>();
  };
  const auto str = [&](const char* key) {
    if (!p.contains(key) || !p.at(key).is_string()) {
      throw ParseError("wedderburn block of family " + name + " needs string param '" + key + "'");
    }
    return p.at(key).get<std::string>();
  };
  std::string descriptor;
  if (name == "mhl-t" || name == "mhl-exc") {
    descriptor = name + ":" + std::to_string(num("h")) + "," + std::to_string(num("l"));
  } else if (name == "mhh-s") {
    descriptor = name + ":" + std::to_string(num("h"));
  } else if (name == "mn-cmn") {
    descriptor = name + ":" + std::to_string(num("n")) + "," + str("diamond") + "," + str("sign");
  } else if (name == "mn-cmn-exc") {
    descriptor = name + ":" + std::to_string(num("n"));
  } else {
    throw ParseError("unknown family '" + name + "'");
  }
  try {
    return parse_family_descriptor(descriptor);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::vector<int> index_array(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(what + " must contain integers");
    const auto v = x.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= dim) throw ParseError(what + " index out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Rational rational_field(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " coefficient must be a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

int index_field(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " index must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) throw ParseError(what + " index out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string serialize_algebra(const StarSuperAlgebra& a) {
  json doc;
  doc["dim"] = a.dim();
  doc["labels"] = a.labels();
  json structure = json::array();
  for (const auto& c : a.structure()) structure.push_back({c.i, c.j, c.k, to_fraction_string(c.coef)});
  doc["structure"] = std::move(structure);
  doc["grading"] = a.grading();
  json involution = json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      const Rational& x = a.involution()[r][c];
      if (sgn(x) != 0) involution.push_back({r, c, to_fraction_string(x)});
    }
  }
  doc["involution"] = std::move(involution);
  if (a.wedderburn()) {
    json blocks = json::array();
    for (const auto& b : a.wedderburn()->blocks) {
      blocks.push_back({{"indices", b.indices}, {"family", b.family.name()}, {"params", family_params(b.family)}});
    }
    doc["wedderburn"] = {{"blocks", std::move(blocks)}, {"radical", a.wedderburn()->radical}};
  }
  return doc.dump(2) + "\n";
}

StarSuperAlgebra parse_algebra(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  for (const char* key : {"dim", "labels", "structure", "grading", "involution"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0) {
    throw ParseError("dim must be a non-negative integer");
  }
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());

  if (!doc["labels"].is_array() || doc["labels"].size() != dim) throw ParseError("labels must have dim entries");
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  if (!doc["structure"].is_array()) throw ParseError("structure must be an array");
  std::vector<StructureConstant> structure;
  for (const auto& e : doc["structure"]) {
    if (!e.is_array() || e.size() != 4) throw ParseError("structure entries are [i, j, k, \"num/den\"]");
    structure.push_back({index_field(e[0], dim, "structure"), index_field(e[1], dim, "structure"),
                         index_field(e[2], dim, "structure"), rational_field(e[3], "structure")});
  }

  if (!doc["grading"].is_array() || doc["grading"].size() != dim) throw ParseError("grading must have dim entries");
  std::vector<int> grading;
  for (const auto& g : doc["grading"]) {
    if (!g.is_number_integer() || (g.get<long long>() != 0 && g.get<long long>() != 1)) {
      throw ParseError("grading entries must be 0 or 1");
    }
    grading.push_back(g.get<int>());
  }

  if (!doc["involution"].is_array()) throw ParseError("involution must be an array");
  RationalMatrix involution(dim, Vec(dim));
  for (const auto& e : doc["involution"]) {
    if (!e.is_array() || e.size() != 3) throw ParseError("involution entries are [row, col, \"num/den\"]");
    const int r = index_field(e[0], dim, "involution");
    const int c = index_field(e[1], dim, "involution");
    involution[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += rational_field(e[2], "involution");
  }

  std::optional<WedderburnData> wedderburn;
  if (doc.contains("wedderburn") && !doc["wedderburn"].is_null()) {
    const json& w = doc["wedderburn"];
    if (!w.is_object() || !w.contains("blocks") || !w["blocks"].is_array()) {
      throw ParseError("wedderburn needs a blocks array");
    }
    WedderburnData data;
    for (const auto& b : w["blocks"]) {
      if (!b.is_object() || !b.contains("indices") || !b.contains("family") || !b["family"].is_string()) {
        throw ParseError("wedderburn blocks need indices and family");
      }
      data.blocks.push_back({index_array(b["indices"], dim, "wedderburn block"),
                             family_from_json(b["family"].get<std::string>(),
                                              b.contains("params") ? b["params"] : json::object())});
    }
    if (w.contains("radical")) data.radical = index_array(w["radical"], dim, "wedderburn radical");
    wedderburn = std::move(data);
  }
  try {
    return StarSuperAlgebra(std::move(labels), std::move(structure), std::move(grading), std::move(involution),
                            std::move(wedderburn));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

StarSuperAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void write_algebra_file(const StarSuperAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << serialize_algebra(a);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << kCsvHeader << "\n";
  for (const auto& r : rows) {
    os << csv_field(r.check) << ',' << csv_field(r.subject) << ',' << csv_field(r.kind) << ',' << csv_field(r.n)
       << ',' << csv_field(r.expected) << ',' << csv_field(r.actual) << ',' << csv_field(r.status) << "\n";
  }
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

ReportRow compare_row(std::string check, std::string subject, std::string kind, std::string n,
                      const std::string& expected, const std::string& actual) {
  return {std::move(check), std::move(subject), std::move(kind), std::move(n), expected, actual,
          expected == actual ? "pass" : "fail"};
}

}  // namespace starsuper
