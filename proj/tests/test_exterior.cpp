#include <doctest.h>

#include "gen.hpp"
#include "heis/exterior.hpp"

using namespace heis;

namespace {

Tensor<Elem> T(const char* s, const Field& f) { return parse_tensor(s, f); }
Subspace<Elem> span(std::initializer_list<const char*> names, const Field& f) {
  std::vector<Tensor<Elem>> ts;
  for (auto n : names) ts.push_back(T(n, f));
  return tensor_span(ts, f.zero());
}

}  // namespace

TEST_CASE("wedge") {
  Field f = make_field("gf:3");
  auto b = [&](int i) { return unit_vector(i, f.zero()); };
  CHECK(wedge(b(0), b(1)) == T("s01", f));
  CHECK(vec_is_zero(wedge(b(2), b(2))));
  CHECK(wedge(vec_add(b(0), b(2)), b(3)) == T("s03+s23", f));
}

TEST_CASE("pfaffian values and the determinant oracle") {
  Field q = make_field("q");
  CHECK(pfaffian(T("s01", q)).is_zero());
  CHECK(pfaffian(T("s01+s23", q)) == q.one());
  Tensor<Elem> x;
  for (int i = 1; i <= 6; ++i) x.push_back(q.from_int(i));
  CHECK(pfaffian(x) == q.from_int(8));
  // det of the skew matrix is pf^2; sign pinned by s01+s23
  CHECK(det(skew_matrix(x)) == q.from_int(64));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Tensor<Elem> y = testgen::random_matrix(1, 6, q.zero(), rng).row(0);
    REQUIRE(det(skew_matrix(y)) == pfaffian(y) * pfaffian(y));
  }
}

TEST_CASE("rearranged upper form reproduces pf") {
  for (const char* spec : {"q", "gf:2", "gf:3"}) {
    Field f = make_field(spec);
    PfaffianContext<Elem> ctx(f.zero());
    for (int k = 0; k < 6; ++k) REQUIRE(ctx.pf(basis_tensor(k, f.zero())) == pfaffian(basis_tensor(k, f.zero())));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
      Tensor<Elem> y = testgen::random_matrix(1, 6, f.zero(), rng).row(0);
      REQUIRE(ctx.pf(y) == pfaffian(y));
    }
    CHECK(ctx.rearrange.transpose() * ctx.j * ctx.rearrange == polar_gram(f.zero()));
  }
}

TEST_CASE("polar form and perp") {
  Field f = make_field("gf:5");
  CHECK(polar(T("s01", f), T("s23", f)) == f.one());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto x = testgen::random_matrix(1, 6, f.zero(), rng).row(0);
    auto y = testgen::random_matrix(1, 6, f.zero(), rng).row(0);
    REQUIRE(polar(x, y) == pfaffian(vec_add(x, y)) - pfaffian(x) - pfaffian(y));
  }
  CHECK(perp(span({"s01"}, f)) == span({"s01", "s02", "s03", "s12", "s13"}, f));
  CHECK(perp(Subspace<Elem>::whole(6, f.zero())).dim() == 0);
  for (const char* spec : {"gf:2", "gf:3"}) {
    Field g = make_field(spec);
    for (std::size_t d = 0; d <= 6; ++d) {
      for (int i = 0; i < 100; ++i) {
        auto u = testgen::random_subspace(6, d, g.zero(), rng);
        auto p = perp(u);
        REQUIRE(p.dim() == 6 - d);
        REQUIRE(perp(p) == u);
      }
    }
  }
}

TEST_CASE("GL4 action") {
  Field f = make_field("gf:5");
  Field q = make_field("q");
  Matrix<Elem> d = Matrix<Elem>::identity(4, q.zero());
  d(0, 0) = q.from_int(7);
  CHECK(act(d, T("s01", q)) == T("7*s01", q));
  CHECK(act(Matrix<Elem>::identity(4, f.zero()), T("s02+s13", f)) == T("s02+s13", f));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto a = testgen::random_invertible(4, f.zero(), rng);
    auto x = testgen::random_matrix(1, 6, f.zero(), rng).row(0);
    REQUIRE(pfaffian(act(a, x)) == det(a) * pfaffian(x));
    REQUIRE(tensor_of(a * skew_matrix(x) * a.transpose()) == act(a, x));
  }
  Field g = make_field("gf:3");
  for (int i = 0; i < 20; ++i) {
    auto a = testgen::random_invertible(4, g.zero(), rng);
    auto b = testgen::random_invertible(4, g.zero(), rng);
    auto x = testgen::random_matrix(1, 6, g.zero(), rng).row(0);
    REQUIRE(act(a * b, x) == act(a, act(b, x)));
  }
}

TEST_CASE("lines and the Klein quadric") {
  Field f = make_field("gf:2");
  auto b = [&](int i) { return unit_vector(i, f.zero()); };
  auto l01 = line_to_quadric(b(0), b(1));
  CHECK(l01 == T("s01", f));
  CHECK(quadric_to_line(l01) == Subspace<Elem>::span({b(0), b(1)}, 4, f.zero()));
  CHECK(polar(l01, line_to_quadric(b(0), b(2))).is_zero());
  CHECK_FALSE(polar(l01, line_to_quadric(b(2), b(3))).is_zero());
  CHECK_THROWS(quadric_to_line(T("s01+s23", f)));
  CHECK_THROWS(line_to_quadric(b(1), b(1)));
  std::mt19937_64 rng(8);
  Field g = make_field("gf:3");
  for (int i = 0; i < 200; ++i) {
    auto x = testgen::random_matrix(1, 6, g.zero(), rng).row(0);
    if (vec_is_zero(x)) continue;
    auto r = rank(skew_matrix(x));
    REQUIRE((r == 2 || r == 4));
    REQUIRE((r == 2) == pfaffian(x).is_zero());
  }
}

TEST_CASE("restricted forms") {
  Field f = make_field("gf:3");
  CHECK(restrict_form(span({"s01", "s02"}, f)).is_zero());
  auto m = restrict_form(span({"s01+s23"}, f));
  CHECK(m(0, 0) == f.one());
  auto ts = restrict_form(span({"s01", "s03+s12", "s23"}, f));
  Matrix<Elem> expect(3, 3, f.zero());
  expect(0, 2) = f.one();
  expect(1, 1) = f.one();
  CHECK(ts == expect);
}

TEST_CASE("tensor parsing") {
  Field f = make_field("fp_t:2");
  auto x = T("s03+t*s12+(t+1)*s23", f);
  CHECK(tensor_str(x) == "s03+t*s12+(t+1)*s23");
  CHECK(parse_tensor(tensor_str(x), f) == x);
  CHECK_THROWS_AS(T("s04", f), ParseError);
}
