#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "heis/quaternion.hpp"

using namespace heis;
using namespace heis::testgen;

namespace {

Quat random_quat(const QuatAlgebra& h, std::mt19937_64& rng) {
  return h.make(random_elem(h.field(), rng), random_elem(h.field(), rng), random_elem(h.field(), rng),
                random_elem(h.field(), rng));
}

// the other algebra conventions, written out by hand: H^{a,b} with i^2=a, j^2=b, ij=-ji
QuatAlgebra hq(int a, int b) {
  Field q = make_field("q");
  return QuatAlgebra::superscript(q, q.from_int(a), q.from_int(b));
}

}  // namespace

TEST_CASE("quaternion table: norm, trace, involution") {
  std::mt19937_64 rng(11);
  for (std::string spec : {"q", "gf:3", "gf:5", "gf:2", "gf:4", "fp_t:3", "fp_t:2"}) {
    Field k = make_field(spec);
    for (int trial = 0; trial < 10; ++trial) {
      Elem d = random_nonzero(k, rng), c = random_nonzero(k, rng);
      QuatAlgebra h(k, d, c);
      CHECK(h.mul(h.basis(1), h.basis(1)) == h.make(-d, -h.t(), k.zero(), k.zero()));
      CHECK(h.mul(h.basis(2), h.basis(1)) == h.basis(3));
      for (int i = 0; i < 20; ++i) {
        Quat x = random_quat(h, rng), y = random_quat(h, rng);
        CAPTURE(h.str(x));
        CHECK(h.mul(x, h.conj(x)) == h.scalar(h.norm(x)));
        CHECK(h.mul(h.conj(x), x) == h.scalar(h.norm(x)));
        CHECK(h.add(x, h.conj(x)) == h.scalar(h.trace(x)));
        CHECK(h.norm(h.mul(x, y)) == h.norm(x) * h.norm(y));
        CHECK(h.conj(h.mul(x, y)) == h.mul(h.conj(y), h.conj(x)));
        CHECK(h.parse(h.str(x)) == x);
        if (auto xi = h.inverse(x)) CHECK(h.mul(x, *xi) == h.one());
      }
    }
  }
}

TEST_CASE("quaternion examples over Q") {
  QuatAlgebra h = hq(-1, -1);
  CHECK(h.norm(h.parse("1+h1")) == h.field().from_int(2));
  CHECK(h.is_split().split == Tri::No);
  auto s = hq(1, 1).is_split();
  CHECK(s.split == Tri::Yes);
  REQUIRE(s.witness);
  CHECK(hq(1, 1).norm(*s.witness).is_zero());
  CHECK(hq(-1, 3).is_split().split == Tri::No);  // x^2 + y^2 = 3 z^2 has no rational points
  CHECK(hq(-1, 2).is_split().split == Tri::Yes);
  Field g3 = make_field("gf:3");
  CHECK(QuatAlgebra(g3, g3.one(), g3.one()).is_split().split == Tri::Yes);
  Field g2 = make_field("gf:2");
  CHECK(QuatAlgebra(g2, g2.one(), g2.one()).is_split().split == Tri::Yes);
}

TEST_CASE("conjugacy solvers in H^{-1,-1}") {
  QuatAlgebra h = hq(-1, -1);
  Quat h1 = h.basis(1), h2 = h.basis(2), h3 = h.basis(3);
  auto r = conjugate_solver(h, h1, h2);
  REQUIRE(r.a);
  CHECK(*r.a == h.parse("h1+h2"));
  CHECK(h.mul(h.mul(*r.a, h1), *h.inverse(*r.a)) == h2);

  CHECK(*conjugate_solver(h, h1, h1).a == h.one());
  CHECK(conjugate_solver(h, h1, h.scale(h.field().from_int(2), h2)).reason == "norms differ");
  // x = conj(v): needs the perpendicular branch
  Quat v = h.parse("1+h1"), x = h.parse("1-h1");
  auto r2 = conjugate_solver(h, v, x);
  REQUIRE(r2.a);
  CHECK(h.mul(h.mul(*r2.a, v), *h.inverse(*r2.a)) == x);

  auto p = pair_conjugate_solver(h, h1, h2, h1, h3);
  REQUIRE(p.a);
  CHECK(h.mul(h.mul(*p.a, h1), *h.inverse(*p.a)) == h1);
  CHECK(h.mul(h.mul(*p.a, h2), *h.inverse(*p.a)) == h3);
  CHECK(pair_conjugate_solver(h, h1, h2, h1, h.parse("h2+h3")).reason == "N(w) != N(y)");
  CHECK(pair_conjugate_solver(h, h1, h2, h1, h.one()).reason == "tr(w) != tr(y)");
  CHECK(pair_conjugate_solver(h, h1, h2, h2, h1).a);
  CHECK(pair_conjugate_solver(h, h1, h.scale(h.field().from_int(3), h1), h2, h3).reason == "precondition: w lies in Kv");
}

TEST_CASE("solvers refuse split algebras") {
  QuatAlgebra h = hq(1, 1);
  Quat v = h.parse("1+h1+h3");
  CHECK(h.norm(v) == h.norm(h.one()));
  CHECK(h.trace(v) == h.trace(h.one()));
  // 1+h1+h3 is a unipotent; nothing conjugates 1 to it
  CHECK_THROWS_AS(conjugate_solver(h, v, h.one()), SplitAlgebraError);
  Field g3 = make_field("gf:3");
  QuatAlgebra f(g3, g3.one(), g3.one());
  CHECK_THROWS_AS(z_action_solver(f, f.one(), f.one()), SplitAlgebraError);
}

TEST_CASE("random conjugates are recovered") {
  std::mt19937_64 rng(5);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{-1, -1}, {-1, -3}, {-2, -5}, {3, -1}}) {
    QuatAlgebra h = hq(a, b);
    REQUIRE(h.is_split().split == Tri::No);
    for (int i = 0; i < 30; ++i) {
      Quat v = random_quat(h, rng), w = random_quat(h, rng), g = random_quat(h, rng);
      if (h.is_zero(g)) continue;
      Quat gi = *h.inverse(g);
      Quat x = h.mul(h.mul(g, v), gi), y = h.mul(h.mul(g, w), gi);
      auto r = conjugate_solver(h, v, x);
      REQUIRE(r.a);
      CHECK(h.mul(h.mul(*r.a, v), *h.inverse(*r.a)) == x);
      Matrix<Elem> m = Matrix<Elem>::from_rows({h.to_vec(v), h.to_vec(w)}, 4, h.field().zero());
      if (rank(m) < 2) continue;
      auto p = pair_conjugate_solver(h, v, w, x, y);
      REQUIRE(p.a);
      CHECK(h.mul(h.mul(*p.a, w), *h.inverse(*p.a)) == y);
    }
  }
}

TEST_CASE("z-action solver") {
  QuatAlgebra h = hq(-1, -1);
  Quat v = h.basis(1);
  auto r = z_action_solver(h, v, v);
  REQUIRE(r.a);
  CHECK(*r.z == h.one());
  CHECK(*r.a == h.one());
  Quat x = h.scale(h.field().from_int(4), h.basis(2));
  auto r2 = z_action_solver(h, v, x);
  REQUIRE(r2.a);
  CHECK(h.norm(*r2.z) == h.field().from_int(4));
  CHECK(h.scale(h.norm(*r2.b), h.mul(h.mul(*r2.a, v), h.conj(*r2.a))) == x);
  CHECK(*z_action_solver(h, v, h.scale(h.field().from_int(2), v)).a == h.one());
  CHECK_FALSE(z_action_solver(h, v, h.parse("1+h1")).a);  // N(z)^2 = 2 has no solution
}

TEST_CASE("inner automorphisms act on the pure part with determinant 1") {
  std::mt19937_64 rng(8);
  for (std::string spec : {"q", "gf:3", "gf:5", "gf:2", "gf:4"}) {
    Field k = make_field(spec);
    for (int trial = 0; trial < 5; ++trial) {
      QuatAlgebra h(k, random_nonzero(k, rng), random_nonzero(k, rng));
      if (h.commutative()) continue;
      for (int i = 0; i < 10; ++i) {
        Quat a = random_quat(h, rng);
        if (!h.inverse(a)) continue;
        CHECK(so_check(h, a));
      }
    }
  }
}

TEST_CASE("norm groups") {
  QuatAlgebra h = hq(-1, -1);
  Field q = h.field();
  CHECK(norm_group_coset(h, q.from_int(5)).member == Tri::Yes);
  CHECK(norm_group_coset(h, q.from_int(-5)).member == Tri::No);
  CHECK(norm_group_coset(h, q.from_int(4)).square_member == Tri::Yes);
  CHECK(norm_group_coset(h, q.from_int(5)).square_member == Tri::No);
  Field g5 = make_field("gf:5");
  QuatAlgebra f(g5, g5.from_int(2), g5.one());
  for (auto& x : g5.elements()) {
    if (x.is_zero()) continue;
    CHECK(norm_group_coset(f, x).member == Tri::Yes);
    CHECK(norm_group_coset(f, x).square_member == is_square(x));
  }
}
