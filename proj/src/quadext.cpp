#include "heis/quadext.hpp"

namespace heis {

namespace {

std::string quad_spec(const Field& base, const Elem& t, const Elem& d) {
  return "quad:" + base.spec() + ":" + t.str() + "," + d.str();
}

}  // namespace

QuadExtension::QuadExtension(const Field& base, const Elem& t, const Elem& d)
    : base_(base), l_(make_field(quad_spec(base, t, d))), t_(t), d_(d) {}

Elem QuadExtension::u() const { return l_.parse("u"); }

Elem QuadExtension::make(const Elem& a, const Elem& b) const {
  return quad_element(l_, a, b);
}

Elem QuadExtension::re(const Elem& x) const {
  return std::get<std::shared_ptr<const QuadVal>>(x.rep())->a;
}
Elem QuadExtension::im(const Elem& x) const {
  return std::get<std::shared_ptr<const QuadVal>>(x.rep())->b;
}

Elem QuadExtension::conj(const Elem& x) const {
  Elem a = re(x), b = im(x);
  return make(a + t_ * b, -b);
}

Elem QuadExtension::norm(const Elem& x) const {
  Elem a = re(x), b = im(x);
  return a * a + t_ * a * b + d_ * b * b;
}

Elem QuadExtension::trace(const Elem& x) const {
  Elem a = re(x), b = im(x);
  return a + a - t_ * b;
}

Tri QuadExtension::norm_class(const Elem& x) const {
  if (x.is_zero()) throw FieldError("norm class of zero");
  if (base_.is_finite()) return Tri::Yes;
  if (base_.kind() == FieldKind::Rationals && t_.is_zero()) {
    // x = a^2 + d b^2  <=>  <1, d, -x> isotropic
    return nt::legendre_isotropic(Rational(1), std::get<Rational>(d_.rep()), -std::get<Rational>(x.rep()));
  }
  return Tri::Unknown;
}

Tri QuadExtension::same_norm_class(const Elem& x, const Elem& y) const { return norm_class(x / y); }

Matrix<Elem> QuadExtension::u_matrix() const {
  Matrix<Elem> m(2, 2, base_.zero());
  m(0, 1) = -d_;
  m(1, 0) = base_.one();
  m(1, 1) = t_;
  return m;
}

Matrix<Elem> QuadExtension::xi_matrix() const {
  Matrix<Elem> m(2, 2, base_.zero());
  m(0, 0) = base_.one();
  m(0, 1) = t_;
  m(1, 1) = -base_.one();
  return m;
}

Matrix<Elem> QuadExtension::delta_matrix() const {
  Matrix<Elem> m(2, 2, base_.zero());
  m(0, 0) = d_;
  m(1, 1) = -base_.one();
  return m;
}

Matrix<Elem> QuadExtension::embed(const Elem& x) const {
  Elem a = re(x), b = im(x);
  Matrix<Elem> m(2, 2, base_.zero());
  m(0, 0) = a;
  m(0, 1) = -b * d_;
  m(1, 0) = b;
  m(1, 1) = a + b * t_;
  return m;
}

std::optional<Elem> QuadExtension::unembed(const Matrix<Elem>& m) const {
  Elem a = m(0, 0), b = m(1, 0);
  if (m(0, 1) != -b * d_ || m(1, 1) != a + b * t_) return std::nullopt;
  return make(a, b);
}

Elem QuadExtension::primitive() const { return primitive_element(l_); }

std::vector<Elem> QuadExtension::additive_basis() const {
  std::vector<Elem> out;
  for (auto& b : prime_field_basis(base_)) {
    out.push_back(make(b, base_.zero()));
    out.push_back(make(base_.zero(), b));
  }
  return out;
}

Elem primitive_element(const Field& f) {
  if (!f.is_finite()) throw FieldError("primitive elements need a finite field");
  std::uint64_t q = f.order();
  // prime divisors of q-1
  std::vector<std::uint64_t> primes;
  std::uint64_t m = q - 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t c = 1; c < q; ++c) {
    Elem g = f.element(c);
    bool ok = true;
    for (auto p : primes) ok = ok && !f.impl()->pow(g, BigInt((q - 1) / p)).is_one();
    if (ok) return g;
  }
  throw FieldError("no primitive element");
}

std::vector<Elem> prime_field_basis(const Field& f) {
  if (!f.is_finite()) return {f.one()};
  std::uint64_t p = f.characteristic(), q = f.order();
  std::vector<Elem> out;
  for (std::uint64_t c = 1; c < q; c *= p) out.push_back(f.element(c));
  return out;
}

std::pair<Elem, Elem> finite_extension_params(const Field& f) {
  if (!f.is_finite()) throw FieldError("finite field expected");
  if (f.characteristic() == 2) {
    for (std::uint64_t c = 1; c < f.order(); ++c) {
      Elem d = f.element(c);
      if (abs_trace(d) == 1) return {f.one(), d};
    }
    throw FieldError("no element of trace 1");
  }
  for (std::uint64_t c = 1; c < f.order(); ++c) {
    Elem d = f.element(c);
    if (is_square(-d) == Tri::No) return {f.zero(), d};
  }
  throw FieldError("no non-square");
}

}  // namespace heis
