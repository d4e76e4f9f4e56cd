#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "gen.hpp"
#include "heis/classify.hpp"
#include "heis/quadext.hpp"
#include "heis/search.hpp"

using namespace heis;
using namespace heis::testgen;

namespace {

Subspace<Elem> span(const Field& k, std::vector<std::string> ts) {
  std::vector<Tensor<Elem>> rows;
  for (auto& t : ts) rows.push_back(parse_tensor(t, k));
  return tensor_span(rows, k.zero());
}

std::string label_of(const Subspace<Elem>& u) { return classify_subspace(u).str(); }

// all subspaces of GF(2)^6 as membership masks over the 64 vectors
std::vector<std::uint64_t> all_subspace_masks() {
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1}, out;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto m : frontier) {
      out.push_back(m);
      for (unsigned v = 1; v < 64; ++v) {
        if (m >> v & 1) continue;
        std::uint64_t grown = m;
        for (unsigned w = 0; w < 64; ++w) {
          if (m >> w & 1) grown |= std::uint64_t{1} << (w ^ v);
        }
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Subspace<Elem> from_mask(std::uint64_t m, const Field& k) {
  std::vector<Vec<Elem>> rows;
  for (unsigned v = 1; v < 64; ++v) {
    if (!(m >> v & 1)) continue;
    Vec<Elem> x;
    for (int i = 0; i < 6; ++i) x.push_back(k.from_int(v >> i & 1));
    rows.push_back(x);
  }
  return Subspace<Elem>::span(rows, 6, k.zero());
}

}  // namespace

TEST_CASE("classification examples") {
  Field g3 = make_field("gf:3"), q = make_field("q");
  CHECK(label_of(span(g3, {"s01"})) == "point:s01");
  CHECK(label_of(span(g3, {"s01+s23"})) == "point:s01+s23");
  CHECK(label_of(span(g3, {"s02", "s03+s12", "s13"})) == "plane:T+S");
  CHECK(label_of(span(g3, {"s01+s23", "s03+s12"})) == "line:P1(t=0,d=1)");
  CHECK(label_of(span(g3, {"s01", "s02"})) == "line:E");
  CHECK(label_of(span(g3, {"s01", "s03+s12"})) == "line:T");
  CHECK(label_of(span(g3, {"s01", "s23"})) == "line:S");
  CHECK(label_of(span(g3, {"s01", "s02", "s03", "s12"})) == "perp:line:E");
  CHECK(label_of(span(g3, {"s02", "s03", "s12", "s13"})) == "perp:line:S");
  CHECK(label_of(span(g3, {"s01", "s02", "s03", "s12", "s13"})) == "perp:point:s01");

  OrbitLabel f = classify_subspace(span(g3, {"s01", "s02", "s03"}));
  CHECK(f.str() == "plane:F");
  CHECK_FALSE(f.reduced());
  CHECK_FALSE(classify_subspace(span(g3, {"s01", "s02", "s03", "s12"})).reduced());
  CHECK_FALSE(classify_subspace(span(g3, {"s01", "s02", "s03", "s12", "s13"})).reduced());
  CHECK(classify_subspace(span(g3, {"s12", "s13", "s23"})).reduced());
  CHECK(label_of(span(g3, {"s12", "s13", "s23"})) == "plane:JF");

  // the spec's perps of P_L: <s02, s13, s01-s23, s03-d s12> with d = 1
  CHECK(label_of(span(g3, {"s02", "s13", "s01-s23", "s03-s12"})) == "perp:line:P1(t=0,d=1)");

  CHECK(label_of(span(q, {"s01+s23", "s03+s12"})) == "line:P1(t=0,d=1)");
  CHECK(label_of(span(q, {"s01+s23", "s03+3*s12"})) == "line:P1(t=0,d=3)");
  CHECK(label_of(span(q, {"s01+s23", "s02-s13", "s03+s12"})) == "plane:P2(c=1,d=1,t=0)");
  CHECK(label_of(span(q, {"s02-s13", "s03+s12", "s01"})) == "plane:P3(t=0,d=1)");
  CHECK(label_of(span(q, {"s01-s23", "s03+s12"})) == "line:S");

  Field g2 = make_field("gf:2");
  CHECK(label_of(span(g2, {"s01+s23", "s03+s12+s23"})) == "line:P1(t=1,d=1)");

  CHECK_THROWS_AS(classify_subspace(Subspace<Elem>(6, g3.zero())), ClassifyError);
  CHECK_THROWS_AS(classify_subspace(Subspace<Elem>::whole(6, g3.zero())), ClassifyError);
}

TEST_CASE("F versus JF") {
  Field g2 = make_field("gf:2");
  Subspace<Elem> f = span(g2, {"s01", "s02", "s03"});
  CHECK(plane_type_F_vs_JF(f) == SingularPlane::F);
  CHECK(plane_type_F_vs_JF(span(g2, {"s12", "s13", "s23"})) == SingularPlane::JF);
  CHECK_THROWS_AS(plane_type_F_vs_JF(span(g2, {"s01", "s02", "s23"})), ClassifyError);
  int f_count = 0, total = 0;
  for_each_gl(g2, 4, [&](const Matrix<Elem>& a) {
    ++total;
    if (plane_type_F_vs_JF(act_subspace(a, f)) == SingularPlane::F) ++f_count;
    return false;
  });
  CHECK(total == 20160);
  CHECK(f_count == 20160);
}

TEST_CASE("representatives classify to their own label") {
  for (std::string spec : {"gf:2", "gf:3", "gf:4", "gf:5"}) {
    Field k = make_field(spec);
    std::set<std::string> names;
    for (auto& l : finite_orbit_labels(k)) {
      CAPTURE(l.str());
      OrbitLabel back = classify_subspace(representative(l, k));
      CHECK(back.str() == l.str());
      CHECK(same_orbit(back, l) == Tri::Yes);
      names.insert(l.str());
    }
    CHECK(names.size() == 18);
  }
  Field q = make_field("q");
  for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 5}}) {
    OrbitLabel l;
    l.tag = Tag::PlaneP2;
    l.c = q.from_int(c);
    l.d = q.from_int(d);
    l.t = q.zero();
    CHECK(classify_subspace(representative(l, q)).str() == l.str());
  }
}

TEST_CASE("label invariance under random GL4 images") {
  std::mt19937_64 rng(41);
  for (std::string spec : {"gf:2", "gf:3", "gf:4"}) {
    Field k = make_field(spec);
    for (auto& l : finite_orbit_labels(k)) {
      Subspace<Elem> rep = representative(l, k);
      int bad = 0;
      for (int i = 0; i < 100; ++i) {
        if (classify_subspace(act_subspace(random_invertible(4, k.zero(), rng), rep)).str() != l.str()) ++bad;
      }
      CAPTURE(spec);
      CAPTURE(l.str());
      CHECK(bad == 0);
    }
  }
  Field q = make_field("q");
  std::vector<Subspace<Elem>> reps{span(q, {"s01+s23", "s03+2*s12"}), span(q, {"s01+s23", "s02-s13", "s03+s12"}),
                                   span(q, {"s02-s13", "s03+5*s12", "s01"}), span(q, {"s01", "s03+s12", "s23"})};
  for (auto& u : reps) {
    OrbitLabel l = classify_subspace(u);
    for (int i = 0; i < 20; ++i) {
      OrbitLabel m = classify_subspace(act_subspace(random_invertible(4, q.zero(), rng), u));
      CHECK(m.tag == l.tag);
      // P2 parameters are not compared over Q
      CHECK(same_orbit(l, m) == (l.tag == Tag::PlaneP2 ? Tri::Unknown : Tri::Yes));
    }
  }
}

TEST_CASE("all subspaces over GF(2)") {
  Field k = make_field("gf:2");
  auto masks = all_subspace_masks();
  CHECK(masks.size() == 2825);
  auto gens = gl4_generators(k);
  std::map<int, std::set<std::string>> by_dim;
  int moved = 0;
  for (auto m : masks) {
    int dim = std::countr_zero(static_cast<unsigned>(std::popcount(m)));
    if (dim == 0 || dim == 6) continue;
    Subspace<Elem> u = from_mask(m, k);
    std::string l = label_of(u);
    by_dim[dim].insert(l);
    for (auto& g : gens) {
      if (label_of(act_subspace(g, u)) != l) ++moved;
    }
  }
  // constant on generator steps, hence on orbits
  CHECK(moved == 0);
  CHECK(by_dim[1].size() == 2);
  CHECK(by_dim[2].size() == 4);
  CHECK(by_dim[3].size() == 6);
  CHECK(by_dim[4].size() == 4);
  CHECK(by_dim[5].size() == 2);
}

TEST_CASE("witness search") {
  std::mt19937_64 rng(8);
  Field g2 = make_field("gf:2"), g3 = make_field("gf:3");
  Subspace<Elem> e = span(g2, {"s01", "s02"});
  OrbitLabel le = classify_subspace(e);
  auto id = find_witness(e, le);
  REQUIRE(id);
  CHECK(*id == Matrix<Elem>::identity(4, g2.zero()));
  for (int i = 0; i < 5; ++i) {
    Subspace<Elem> u = act_subspace(random_invertible(4, g2.zero(), rng), e);
    auto w = find_witness(u, classify_subspace(u));
    REQUIRE(w);
    CHECK(act_subspace(*w, e) == u);
  }
  Subspace<Elem> ts = span(g3, {"s01", "s03+s12", "s23"});
  for (int i = 0; i < 3; ++i) {
    Subspace<Elem> u = act_subspace(random_invertible(4, g3.zero(), rng), ts);
    auto w = find_witness(u, classify_subspace(u));
    REQUIRE(w);
    CHECK(act_subspace(*w, ts) == u);
  }
  // a wrong label exhausts its orbit without reaching u
  OrbitLabel wrong;
  wrong.tag = Tag::LineS;
  CHECK_FALSE(find_witness(e, wrong));
}
