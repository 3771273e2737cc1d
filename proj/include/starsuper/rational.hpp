#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace starsuper {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

/// Dense coordinate vector with respect to an algebra basis.
using Vec = std::vector<Rational>;

/// Dense row-major rational matrix.
using RationalMatrix = std::vector<Vec>;

/// "num/den" in lowest terms; integers keep the "/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_zero(const Vec& v);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

void axpy(Vec& acc, const Rational& a, const Vec& x);  // acc += a*x
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& a);

/// Residue of q modulo the prime p. The denominator must be invertible.
std::uint64_t to_mod_p(const Rational& q, std::uint64_t p);

}  // namespace starsuper
