#pragma once

#include "starsuper/algebra.hpp"
#include "starsuper/var_kind.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace starsuper {

/// Multilinear polynomial: each term is a word visiting every slot exactly
/// once, stored as the sequence of slot indices.
class MultilinearPoly {
 public:
  using Word = std::vector<int>;

  MultilinearPoly() = default;
  explicit MultilinearPoly(std::vector<VarKind> slot_kinds, std::vector<std::string> slot_names = {});

  /// Adds c * word. Throws InvalidArgument unless word is a permutation of the slots.
  void add_term(const Word& word, const Rational& c);

  std::size_t slot_count() const { return kinds_.size(); }
  const std::vector<VarKind>& slot_kinds() const { return kinds_; }
  const std::vector<std::string>& slot_names() const { return names_; }
  const std::map<Word, Rational>& terms() const { return terms_; }

  /// The polynomial with slots i and j exchanged.
  MultilinearPoly swapped_slots(int i, int j) const;
  MultilinearPoly negated() const;

  std::string to_string() const;

  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.kinds_ == b.kinds_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<VarKind> kinds_;
  std::vector<std::string> names_;
  std::map<Word, Rational> terms_;
};

/// Cap_m[T, X] of the given alternating kind with the x-variables listed in
/// `deleted` removed (deleted[j] refers to x_{j+1}).
///
/// Slot layout of the materialized polynomial: the m alternating slots first,
/// then the surviving x slots in order.
struct CapelliDescriptor {
  int m = 1;
  VarKind kind = VarKind::Any;
  std::vector<bool> deleted;  // size m-1

  static CapelliDescriptor unbarred(int m, VarKind kind);
  int kept_x() const;
  std::size_t slot_count() const { return static_cast<std::size_t>(m + kept_x()); }
  /// e.g. "cap3[y+]" or "cap3[y+] without x1,x2".
  std::string describe() const;

  friend bool operator==(const CapelliDescriptor&, const CapelliDescriptor&) = default;
};

/// A generator is either a (barred) Capelli polynomial, kept as its
/// descriptor so that large ranks are never expanded, or an explicit polynomial.
class GeneratorMember {
 public:
  explicit GeneratorMember(CapelliDescriptor d) : descriptor_(std::move(d)) {}
  explicit GeneratorMember(MultilinearPoly p) : explicit_(std::move(p)) {}

  const std::optional<CapelliDescriptor>& descriptor() const { return descriptor_; }
  /// Materializes Capelli members (m! terms).
  MultilinearPoly poly() const;
  std::string describe() const;

 private:
  std::optional<CapelliDescriptor> descriptor_;
  std::optional<MultilinearPoly> explicit_;
};

using GeneratorSet = std::vector<GeneratorMember>;

MultilinearPoly capelli_ordinary(int m);
MultilinearPoly capelli_graded(int m, VarKind kind);
MultilinearPoly barred_capelli(const CapelliDescriptor& d);

/// The 2^{m-1} members, ordered by the bitmask of deleted x's (member 0
/// deletes nothing).
GeneratorSet barred_capelli_set(int m, VarKind kind);

/// Union of the barred sets Cap_{M+}[Y+], Cap_{M-}[Y-], Cap_{L+}[Z+], Cap_{L-}[Z-].
GeneratorSet gamma_generators(int m_plus, int m_minus, int l_plus, int l_minus);
GeneratorSet gamma_generators(const HomDims& ranks);

/// Sum over terms of coefficient times the left-to-right product of the
/// assigned vectors. assignment[i] is the value of slot i.
Vec evaluate(const StarSuperAlgebra& a, const MultilinearPoly& p, const std::vector<Vec>& assignment);

/// Same value as evaluate() on barred_capelli(d), computed by a dynamic
/// program over subsets of the alternating entries (2^m m products).
Vec evaluate_alternating_fast(const StarSuperAlgebra& a, const CapelliDescriptor& d,
                              const std::vector<Vec>& assignment);

/// Sign of a permutation given as a sequence of distinct indices.
int permutation_sign(const std::vector<int>& perm);

}  // namespace starsuper
