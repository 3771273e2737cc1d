#include "starsuper/polynomials.hpp"

#include "starsuper/errors.hpp"

#include <algorithm>
#include <numeric>

namespace starsuper {

MultilinearPoly::MultilinearPoly(std::vector<VarKind> slot_kinds, std::vector<std::string> slot_names)
    : kinds_(std::move(slot_kinds)), names_(std::move(slot_names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < kinds_.size(); ++i) names_.push_back("v" + std::to_string(i + 1));
  }
  if (names_.size() != kinds_.size()) throw InvalidArgument("one name per slot is required");
}

void MultilinearPoly::add_term(const Word& word, const Rational& c) {
  if (word.size() != kinds_.size()) throw InvalidArgument("word length does not match the slot count");
  std::vector<bool> seen(kinds_.size(), false);
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= kinds_.size() || seen[static_cast<std::size_t>(s)]) {
      throw InvalidArgument("word must use every slot exactly once");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
  if (sgn(c) == 0) return;
  auto& slot = terms_[word];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(word);
}

MultilinearPoly MultilinearPoly::swapped_slots(int i, int j) const {
  MultilinearPoly out(kinds_, names_);
  std::swap(out.kinds_[static_cast<std::size_t>(i)], out.kinds_[static_cast<std::size_t>(j)]);
  std::swap(out.names_[static_cast<std::size_t>(i)], out.names_[static_cast<std::size_t>(j)]);
  for (const auto& [w, c] : terms_) {
    Word v = w;
    for (int& s : v) {
      if (s == i) {
        s = j;
      } else if (s == j) {
        s = i;
      }
    }
    out.terms_[v] = c;
  }
  return out;
}

MultilinearPoly MultilinearPoly::negated() const {
  MultilinearPoly out(*this);
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += " ";
      out += names_[static_cast<std::size_t>(w[k])];
    }
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

CapelliDescriptor CapelliDescriptor::unbarred(int m, VarKind kind) {
  return {m, kind, std::vector<bool>(static_cast<std::size_t>(std::max(m - 1, 0)), false)};
}

int CapelliDescriptor::kept_x() const {
  return static_cast<int>(std::count(deleted.begin(), deleted.end(), false));
}

std::string CapelliDescriptor::describe() const {
  std::string out = "cap" + std::to_string(m) + "[" + starsuper::to_string(kind) + "]";
  std::string gone;
  for (std::size_t j = 0; j < deleted.size(); ++j) {
    if (!deleted[j]) continue;
    gone += (gone.empty() ? "" : ",") + std::string("x") + std::to_string(j + 1);
  }
  if (!gone.empty()) out += " without " + gone;
  return out;
}

namespace {

std::string alternating_name(VarKind kind, int i) {
  const std::string n = std::to_string(i + 1);
  switch (kind) {
    case VarKind::YPlus: return "y" + n + "+";
    case VarKind::YMinus: return "y" + n + "-";
    case VarKind::ZPlus: return "z" + n + "+";
    case VarKind::ZMinus: return "z" + n + "-";
    case VarKind::Any: break;
  }
  return "t" + n;
}

void check_descriptor(const CapelliDescriptor& d) {
  if (d.m < 1) throw InvalidArgument("Capelli rank must be at least 1");
  if (d.deleted.size() != static_cast<std::size_t>(d.m - 1)) {
    throw InvalidArgument("Capelli descriptor needs m-1 deletion flags");
  }
}

}  // namespace

MultilinearPoly barred_capelli(const CapelliDescriptor& d) {
  check_descriptor(d);
  std::vector<VarKind> kinds(static_cast<std::size_t>(d.m), d.kind);
  std::vector<std::string> names;
  for (int i = 0; i < d.m; ++i) names.push_back(alternating_name(d.kind, i));
  std::vector<int> x_slot(d.deleted.size(), -1);
  for (std::size_t j = 0; j < d.deleted.size(); ++j) {
    if (d.deleted[j]) continue;
    x_slot[j] = static_cast<int>(kinds.size());
    kinds.push_back(VarKind::Any);
    names.push_back("x" + std::to_string(j + 1));
  }
  MultilinearPoly p(std::move(kinds), std::move(names));
  std::vector<int> perm(static_cast<std::size_t>(d.m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MultilinearPoly::Word w;
    for (int i = 0; i < d.m; ++i) {
      w.push_back(perm[static_cast<std::size_t>(i)]);
      if (i + 1 < d.m && x_slot[static_cast<std::size_t>(i)] >= 0) w.push_back(x_slot[static_cast<std::size_t>(i)]);
    }
    p.add_term(w, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

MultilinearPoly GeneratorMember::poly() const {
  return descriptor_ ? barred_capelli(*descriptor_) : *explicit_;
}

std::string GeneratorMember::describe() const {
  return descriptor_ ? descriptor_->describe() : explicit_->to_string();
}

MultilinearPoly capelli_ordinary(int m) { return barred_capelli(CapelliDescriptor::unbarred(m, VarKind::Any)); }

MultilinearPoly capelli_graded(int m, VarKind kind) {
  if (kind == VarKind::Any) throw InvalidArgument("graded Capelli polynomials need a graded kind");
  return barred_capelli(CapelliDescriptor::unbarred(m, kind));
}

GeneratorSet barred_capelli_set(int m, VarKind kind) {
  if (m < 1) throw InvalidArgument("Capelli rank must be at least 1");
  GeneratorSet out;
  const unsigned long members = 1UL << static_cast<unsigned>(m - 1);
  for (unsigned long mask = 0; mask < members; ++mask) {
    CapelliDescriptor d = CapelliDescriptor::unbarred(m, kind);
    for (int j = 0; j < m - 1; ++j) d.deleted[static_cast<std::size_t>(j)] = ((mask >> j) & 1UL) != 0;
    out.emplace_back(std::move(d));
  }
  return out;
}

GeneratorSet gamma_generators(int m_plus, int m_minus, int l_plus, int l_minus) {
  if (m_plus < 1 || m_minus < 1 || l_plus < 1 || l_minus < 1) {
    throw InvalidArgument("generator ranks must be at least 1");
  }
  GeneratorSet out;
  const int ranks[4] = {m_plus, m_minus, l_plus, l_minus};
  for (std::size_t k = 0; k < 4; ++k) {
    GeneratorSet part = barred_capelli_set(ranks[k], kGradedKinds[k]);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

GeneratorSet gamma_generators(const HomDims& r) {
  return gamma_generators(r.m_plus, r.m_minus, r.l_plus, r.l_minus);
}

Vec evaluate(const StarSuperAlgebra& a, const MultilinearPoly& p, const std::vector<Vec>& assignment) {
  if (assignment.size() != p.slot_count()) throw InvalidArgument("assignment length does not match the slot count");
  for (const auto& v : assignment) {
    if (v.size() != a.dim()) throw InvalidArgument("assigned vector has the wrong length");
  }
  Vec out(a.dim());
  for (const auto& [w, c] : p.terms()) {
    Vec prod = assignment[static_cast<std::size_t>(w[0])];
    for (std::size_t k = 1; k < w.size() && !is_zero(prod); ++k) {
      prod = a.multiply(prod, assignment[static_cast<std::size_t>(w[k])]);
    }
    axpy(out, c, prod);
  }
  return out;
}

Vec evaluate_alternating_fast(const StarSuperAlgebra& a, const CapelliDescriptor& d,
                              const std::vector<Vec>& assignment) {
  check_descriptor(d);
  if (assignment.size() != d.slot_count()) throw InvalidArgument("assignment length does not match the slot count");
  for (const auto& v : assignment) {
    if (v.size() != a.dim()) throw InvalidArgument("assigned vector has the wrong length");
  }
  const int m = d.m;
  if (m > 24) throw SizeCapExceeded("subset evaluation is limited to m <= 24");
  // x value following position j (1-based level j), or nullptr when deleted.
  std::vector<const Vec*> x(static_cast<std::size_t>(m), nullptr);
  std::size_t next = static_cast<std::size_t>(m);
  for (std::size_t j = 0; j < d.deleted.size(); ++j) {
    if (!d.deleted[j]) x[j + 1] = &assignment[next++];
  }
  // v(S) = sum over orderings of S of sign * a_first x_1 a_second ... ; appending i
  // after S\{i} contributes (-1)^{#{k in S : k > i}}.
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<Vec> v(full + 1);
  std::vector<Vec> vx(full + 1);  // v(S) x_{|S|}
  for (std::size_t s = 1; s <= full; ++s) {
    const int size = __builtin_popcountll(s);
    if (size == 1) {
      v[s] = assignment[static_cast<std::size_t>(__builtin_ctzll(s))];
    } else {
      Vec acc(a.dim());
      int greater = 0;
      for (int i = m - 1; i >= 0; --i) {
        if (!((s >> i) & 1U)) continue;
        const Vec& prev = vx[s & ~(std::size_t{1} << i)];
        if (!is_zero(prev)) {
          const Vec t = a.multiply(prev, assignment[static_cast<std::size_t>(i)]);
          axpy(acc, greater % 2 == 0 ? Rational(1) : Rational(-1), t);
        }
        ++greater;
      }
      v[s] = std::move(acc);
    }
    if (size < m) {
      const Vec* xs = x[static_cast<std::size_t>(size)];
      vx[s] = xs ? a.multiply(v[s], *xs) : v[s];
    }
  }
  return v[full];
}

}  // namespace starsuper
