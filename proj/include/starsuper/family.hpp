#pragma once

#include <optional>
#include <string>

namespace starsuper {

enum class Diamond { Transpose, Symplectic };

/// Which classified simple *-superalgebra a Wedderburn block is.
enum class Family {
  MhlTranspose,   // (M_{h,l}, t)
  MhhSymplectic,  // (M_{h,h}, s)
  MhlExchange,    // (M_{h,l} + M_{h,l}^op, exc)
  MnCmnStar,      // (M_n + cM_n), (a+cb) -> a^d - c b^d
  MnCmnDagger,    // (M_n + cM_n), (a+cb) -> a^d + c b^d
  MnCmnExchange,  // ((M_n + cM_n) + (M_n + cM_n)^op, exc)
  Custom,         // anything not built by a constructor
};

struct FamilyTag {
  Family family = Family::Custom;
  int h = 0;
  int l = 0;
  int n = 0;
  Diamond diamond = Diamond::Transpose;

  static FamilyTag mhl_t(int h, int l) { return {Family::MhlTranspose, h, l, 0, Diamond::Transpose}; }
  static FamilyTag mhh_s(int h) { return {Family::MhhSymplectic, h, h, 0, Diamond::Symplectic}; }
  static FamilyTag mhl_exc(int h, int l) { return {Family::MhlExchange, h, l, 0, Diamond::Transpose}; }
  static FamilyTag mn_cmn_star(int n, Diamond d) { return {Family::MnCmnStar, 0, 0, n, d}; }
  static FamilyTag mn_cmn_dagger(int n, Diamond d) { return {Family::MnCmnDagger, 0, 0, n, d}; }
  static FamilyTag mn_cmn_exc(int n) { return {Family::MnCmnExchange, 0, 0, n, Diamond::Transpose}; }

  /// Matrix size of the block inside a UT* embedding: h+l or 2n.
  int size() const;
  /// Whether the block's own Z2-grading is trivial (only M_{h,0} families).
  bool trivially_graded() const;
  /// Throws InvalidArgument when parameters violate the family constraints.
  void check() const;

  std::string name() const;      // "mhl-t", "mn-cmn", ...
  std::string describe() const;  // "mhl-t(2,1)", "mn-cmn(2,s,-)", ...

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Parses compact descriptors such as "mhl-t:2,1", "mhh-s:1", "mhl-exc:1,1",
/// "mn-cmn:2,s,minus", "mn-cmn-exc:1".
FamilyTag parse_family_descriptor(const std::string& text);

}  // namespace starsuper
