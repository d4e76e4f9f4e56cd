#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Three-valued answer for questions that are only decidable on some fields.
enum class Tri { No, Yes, Unknown };

inline Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }
const char* tri_name(Tri t);

namespace nt {

bool is_prime_u64(std::uint64_t n);

// Prime factorization of |n|; nullopt if a cofactor resists trial division,
// Miller-Rabin and Pollard rho (only happens above 2^64).
std::optional<std::vector<std::pair<BigInt, int>>> factor(const BigInt& n);

// Square-free part with sign, e.g. -12 -> -3.
std::optional<BigInt> squarefree_part(const BigInt& n);

// Square-free integer representing the square class of a nonzero rational.
std::optional<BigInt> squarefree_class(const Rational& x);

bool is_square_int(const BigInt& n);
BigInt isqrt(const BigInt& n);

// Is a a square modulo the odd prime p (a not divisible by p)?
bool is_qr(const BigInt& a, const BigInt& p);

// Does a x^2 + b y^2 + c z^2 = 0 have a nontrivial rational solution?
Tri legendre_isotropic(const Rational& a, const Rational& b, const Rational& c);

// Is x = a^2 + b^2 for rationals a, b?
Tri sum_of_two_squares(const Rational& x);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace nt
}  // namespace heis
