#include <doctest.h>

#include "gen.hpp"
#include "heis/field.hpp"

using namespace heis;

TEST_CASE("field specs parse and canonicalize") {
  CHECK(make_field("gf:4") == make_field("gf:2^2"));
  CHECK(make_field("gf:9").order() == 9);
  CHECK(make_field("gf:2^2:1,1").spec() == "gf:2^2");
  CHECK_THROWS_AS(make_field("gf:6"), FieldError);
  CHECK_THROWS_AS(make_field("gf:2^2:0,0,1"), FieldError);  // x^2 is reducible
  CHECK_THROWS_AS(make_field("gf:9^1"), FieldError);
  CHECK_THROWS_AS(make_field("quad:gf:3:0,2"), FieldError);  // x^2+2 = (x-1)(x+1)
  CHECK(make_field("quad:q:0,1").kind() == FieldKind::Quadratic);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"q", "gf:2", "gf:3", "gf:4", "gf:9", "gf:16", "fp_t:2", "fp_t:3", "quad:q:0,1", "quad:gf:3:0,1"}) {
    Field f = make_field(spec);
    CAPTURE(spec);
    int trials = f.kind() == FieldKind::FunctionField ? 300 : 1000;
    for (int i = 0; i < trials; ++i) {
      Elem a = testgen::random_elem(f, rng), b = testgen::random_elem(f, rng), c = testgen::random_elem(f, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == f.zero());
      if (!a.is_zero()) REQUIRE(a * a.inv() == f.one());
    }
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"q", "gf:8", "gf:9", "fp_t:2", "fp_t:5", "quad:q:0,1", "quad:fp_t:2:1,t"}) {
    Field f = make_field(spec);
    for (int i = 0; i < 200; ++i) {
      Elem a = testgen::random_elem(f, rng);
      REQUIRE(f.parse(a.str()) == a);
    }
  }
}

TEST_CASE("square classes") {
  Field q = make_field("q");
  CHECK(is_square(q.parse("4/9")) == Tri::Yes);
  CHECK(is_square(q.parse("-4")) == Tri::No);
  CHECK(is_square(q.parse("8")) == Tri::No);
  Field f3 = make_field("gf:3");
  CHECK(is_square(f3.from_int(2)) == Tri::No);
  Field ft = make_field("fp_t:2");
  CHECK(is_square(ft.parse("t")) == Tri::No);
  CHECK(is_square(ft.parse("t^2+1")) == Tri::Yes);
  Field f5t = make_field("fp_t:5");
  CHECK(is_square(f5t.parse("4*(t+1)^2/(t^2+2)^2")) == Tri::Yes);
  CHECK(is_square(f5t.parse("2*(t+1)^2")) == Tri::No);
  CHECK(same_square_class(q.parse("2"), q.parse("8")) == Tri::Yes);
  CHECK(square_class_rep(q.parse("-12/5"))->str() == "-15");
}

TEST_CASE("square roots") {
  for (const char* spec : {"gf:5", "gf:13", "gf:9", "gf:8", "gf:16"}) {
    Field f = make_field(spec);
    for (auto& x : f.elements()) {
      auto r = sqrt_of(x * x);
      REQUIRE(r);
      REQUIRE(*r * *r == x * x);
    }
  }
}

TEST_CASE("profiles of small fields") {
  auto p3 = profile(make_field("gf:3"));
  REQUIRE(p3.square_classes.size() == 2);
  CHECK(p3.square_classes.reps[0].str() == "1");
  CHECK(p3.square_classes.reps[1].str() == "2");
  auto p2 = profile(make_field("gf:2"));
  REQUIRE(p2.wp_cosets.size() == 2);
  CHECK(p2.wp_cosets.reps[0].is_zero());
  CHECK(p2.wp_cosets.reps[1].is_one());
  CHECK(p2.plus_orbits.size() == 1);
  auto p4 = profile(make_field("gf:4"));
  CHECK(p4.square_classes.size() == 1);
  CHECK(p4.wp_cosets.size() == 2);
  auto pt = profile(make_field("fp_t:2"));
  CHECK_FALSE(pt.plus_orbits.finite);
  CHECK_FALSE(pt.is_perfect);
}

TEST_CASE("wp cosets") {
  Field f2 = make_field("gf:2");
  CHECK(same_wp_coset(f2.one(), f2.zero()) == Tri::No);
  Field f4 = make_field("gf:4");
  CHECK(same_wp_coset(f4.one(), f4.zero()) == Tri::Yes);
  Field ft = make_field("fp_t:2");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Elem x = testgen::random_elem(ft, rng), a = testgen::random_elem(ft, rng);
    Elem shifted = x + a + a * a;
    if (wp_member(x - shifted) != Tri::Unknown) CHECK(same_wp_coset(x, shifted) == Tri::Yes);
  }
  CHECK(wp_member(ft.parse("t^4+t")) == Tri::Yes);
  CHECK(wp_member(ft.parse("t")) == Tri::No);
  CHECK(wp_member(ft.parse("t^2")) == Tri::No);
  CHECK(wp_member(ft.parse("1/t")) == Tri::Unknown);
  CHECK_THROWS_AS(wp_member(make_field("gf:3").one()), FieldError);
}
