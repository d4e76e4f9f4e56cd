#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "heis/ntheory.hpp"

namespace heis {

class FieldImpl;
struct QuadVal;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial over GF(p), lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

struct RatFunc {
  Poly num, den;  // gcd 1, den monic
  bool operator==(const RatFunc&) const = default;
};

class Elem {
 public:
  using Rep = std::variant<std::uint64_t, Rational, RatFunc, std::shared_ptr<const QuadVal>>;

  Elem() = default;
  Elem(const FieldImpl* f, Rep r) : f_(f), r_(std::move(r)) {}

  const FieldImpl* field() const { return f_; }
  const Rep& rep() const { return r_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  Elem inv() const;
  Elem pow(long long e) const;
  std::string str() const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a);
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

 private:
  const FieldImpl* f_ = nullptr;
  Rep r_;
};

struct QuadVal {
  Elem a, b;  // a + b*u
};

std::ostream& operator<<(std::ostream& os, const Elem& e);

enum class FieldKind { Rationals, Prime, Extension, FunctionField, Quadratic };

// Fields live for the whole process; Field is a cheap handle.
class Field {
 public:
  Field() = default;
  explicit Field(const FieldImpl* f) : f_(f) {}

  const FieldImpl* impl() const { return f_; }
  const std::string& spec() const;
  FieldKind kind() const;
  std::uint64_t characteristic() const;
  bool is_finite() const;
  std::uint64_t order() const;  // 0 when infinite
  bool is_perfect() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long n) const;
  Elem from_bigint(const BigInt& n) const;
  Elem parse(const std::string& s) const;
  Elem element(std::uint64_t code) const;
  std::uint64_t code(const Elem& e) const;
  std::vector<Elem> elements() const;

  bool operator==(const Field& o) const { return f_ == o.f_; }
  bool operator!=(const Field& o) const { return f_ != o.f_; }

 private:
  const FieldImpl* f_ = nullptr;
};

Field field_of(const Elem& e);

// Parses `q` | `gf:p` | `gf:p^k[:coeffs]` | `fp_t:p` | `quad:<base>:<t>,<d>`.
Field make_field(const std::string& spec);

class FieldImpl {
 public:
  virtual ~FieldImpl() = default;

  const std::string& spec() const { return spec_; }
  virtual FieldKind kind() const = 0;
  virtual std::uint64_t characteristic() const = 0;
  virtual bool is_finite() const = 0;
  virtual std::uint64_t order() const { return 0; }
  virtual bool is_perfect() const = 0;

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem from_bigint(const BigInt& n) const = 0;
  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem sub(const Elem& a, const Elem& b) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem inv(const Elem& a) const = 0;
  virtual bool is_zero(const Elem& a) const = 0;
  virtual std::string str(const Elem& a) const = 0;
  // named generators available to the expression parser
  virtual std::vector<std::pair<std::string, Elem>> symbols() const { return {}; }

  virtual Elem element(std::uint64_t code) const;
  virtual std::uint64_t code(const Elem& a) const;

  virtual Tri is_square(const Elem& a) const;
  virtual std::optional<Elem> sqrt(const Elem& a) const;

  Elem pow(const Elem& a, BigInt e) const;

 protected:
  std::string spec_;
};

// ---- field invariants -------------------------------------------------

Tri is_square(const Elem& x);
std::optional<Elem> sqrt_of(const Elem& x);
Tri same_square_class(const Elem& x, const Elem& y);

// char 2: is x in {y + y^2}?
Tri wp_member(const Elem& x);
Tri same_wp_coset(const Elem& x, const Elem& y);
// absolute trace in {0,1} for finite fields of characteristic 2
int abs_trace(const Elem& x);

struct RepSet {
  bool finite = true;
  std::vector<Elem> reps;
  std::string marker;  // description when infinite
  std::size_t size() const { return reps.size(); }
};

struct FieldProfile {
  Field field;
  std::uint64_t characteristic = 0;
  bool is_perfect = true;
  bool is_finite = false;
  std::uint64_t order = 0;
  RepSet square_classes;  // R_*
  RepSet wp_cosets;       // R_wp, char 2 only
  RepSet plus_orbits;     // R_+, char 2 only
};

FieldProfile profile(const Field& f);

// Representative of the square class of x taken from the profile's R_* when
// finite, or the square-free integer for Q.
std::optional<Elem> square_class_rep(const Elem& x);

// a + b*u in a field built from a quad: spec; a, b from its base field.
Elem quad_element(const Field& l, const Elem& a, const Elem& b);

// Smallest (by code) non-square of a finite field of odd order.
Elem least_nonsquare(const Field& f);

}  // namespace heis
