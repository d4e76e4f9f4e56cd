#include <doctest.h>

#include <map>

#include "gen.hpp"
#include "heis/heisenberg.hpp"
#include "heis/orbits.hpp"

using namespace heis;
using namespace heis::testgen;

namespace {

OrbitLabel label(const Field& k, Tag tag, bool perp = false) {
  for (auto& l : finite_orbit_labels(k)) {
    if (l.tag == tag && l.perp == perp) return l;
  }
  throw std::runtime_error("missing label");
}

const TableRow& row(const TableReport& r, const std::string& kernel) {
  for (auto& x : r.rows) {
    if (x.kernel == kernel) return x;
  }
  throw std::runtime_error("missing row " + kernel);
}

}  // namespace

TEST_CASE("vector codes round trip") {
  Field k = make_field("gf:3");
  for (std::uint64_t c = 0; c < 81; ++c) CHECK(vec_code(vec_from_code(c, 4, k.zero())) == c);
  CHECK(vec_code(unit_vector(2, k.zero(), 4)) == 9);
}

TEST_CASE("orbits of small groups on vectors") {
  Field k = make_field("gf:2");
  auto triv = enumerate_orbits(std::vector<Matrix<Elem>>{Matrix<Elem>::identity(4, k.zero())}, 4, k.zero());
  CHECK(triv.orbit_count() == 16);
  CHECK(triv.space_size == 16);

  for (std::string spec : {"gf:2", "gf:3"}) {
    Field f = make_field(spec);
    auto rep = enumerate_orbits(sigma_generators(label(f, Tag::PointOnQ), f).gens, 4, f.zero());
    // 0, b0, b2
    CHECK(rep.reps == std::vector<std::uint64_t>{0, 1, vec_code(unit_vector(2, f.zero(), 4))});
    std::uint64_t q = f.order();
    CHECK(rep.sizes == std::vector<std::uint64_t>{1, q * q - 1, q * q * q * q - q * q});

    // the similitude group is transitive on nonzero vectors
    auto gsp = enumerate_orbits(sigma_generators(label(f, Tag::PointOffQ), f).gens, 4, f.zero());
    CHECK(gsp.orbit_count() == 2);
  }
  CHECK_THROWS_AS(enumerate_orbits(std::vector<Matrix<Elem>>{Matrix<Elem>::identity(4, k.zero())}, 4, k.zero(), 10),
                  OrbitError);
}

TEST_CASE("similitudes on the quotient over GF(3)") {
  Field k = make_field("gf:3");
  OrbitLabel l = label(k, Tag::PointOffQ);
  HeisAlgebra<Elem> h(representative(l, k));
  std::vector<Matrix<Elem>> zg;
  for (auto& g : sigma_generators(l, k).gens) zg.push_back(*induced_sigma_prime(g, h).map);
  auto rep = enumerate_orbits(zg, h.dim_z(), k.zero());
  CHECK(rep.orbit_count() == 4);
  std::uint64_t total = 0;
  for (auto s : rep.sizes) total += s;
  CHECK(total == 243);
}

TEST_CASE("brute stabilizers") {
  Field k = make_field("gf:2");
  CHECK(brute_stabilizer(representative(label(k, Tag::PointOnQ), k)).size() == 576);
  CHECK(brute_stabilizer(Subspace<Elem>::whole(6, k.zero())).size() == 20160);
  CHECK(brute_stabilizer(representative(label(k, Tag::LineE), k)).size() == 192);
  CHECK_THROWS_AS(brute_stabilizer(representative(label(make_field("gf:5"), Tag::PointOnQ), make_field("gf:5"))),
                  OrbitError);
}

TEST_CASE("group closure") {
  Field k = make_field("gf:2");
  auto all = generate_group(gl4_generators(k));
  CHECK(all.size() == 20160);
  auto gens = sigma_generators(label(k, Tag::PlaneES), k).gens;
  auto pruned = prune_generators(gens);
  CHECK(pruned.size() <= gens.size());
  CHECK(generate_group(pruned) == generate_group(gens));
  CHECK_THROWS_AS(generate_group(gl4_generators(k), 100), OrbitError);
}

TEST_CASE("subspace orbits match the classification over GF(2)") {
  Field k = make_field("gf:2");
  auto gens = gl4_generators(k);
  std::map<int, int> labels;
  for (auto& l : finite_orbit_labels(k)) ++labels[l.dim()];
  for (int d = 1; d <= 5; ++d) {
    auto sizes = subspace_orbit_sizes(gens, d, k.zero());
    CAPTURE(d);
    CHECK(static_cast<int>(sizes.size()) == labels[d]);
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    CHECK(total == all_subspaces(6, d, k.zero()).size());
  }
  // Gaussian binomials [6 choose d]_2
  CHECK(all_subspaces(6, 1, k.zero()).size() == 63);
  CHECK(all_subspaces(6, 2, k.zero()).size() == 651);
  CHECK(all_subspaces(6, 3, k.zero()).size() == 1395);
}

TEST_CASE("parallel and serial scans agree") {
  Field k = make_field("gf:3");
  GF<3> s{};
  std::vector<ScanKernel<GF<3>>> ks;
  for (auto& l : scan_labels(k)) {
    auto p = l.params(k);
    ks.emplace_back(l.str(), l.tag, FamilyParams<GF<3>>{to_scalar(p.c, s), to_scalar(p.d, s), to_scalar(p.t, s)},
                    convert(representative(l, k), s));
  }
  auto a = predicate_scan(ks, true, 2), b = predicate_scan(ks, false, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].total == b[i].total);
    CHECK(a[i].stabilizer == b[i].stabilizer);
    CHECK(a[i].predicate == b[i].predicate);
    CHECK(a[i].mismatches == 0);
  }
  // first column b0 or 2 b0: |GL3 x K^3 ...| = 2 * (81 - 3)(81 - 9)(81 - 27)
  CHECK(a[0].total == 2 * 78 * 72 * 54);
}

TEST_CASE("field invariants") {
  auto f3 = field_invariants(make_field("gf:3"));
  CHECK(f3.r_star == 2);
  CHECK(f3.hf == 2);
  CHECK(f3.r_n == 1);
  auto f2 = field_invariants(make_field("gf:2"));
  CHECK(f2.r_star == 1);
  CHECK(f2.r_wp == 2);
  CHECK(f2.r_plus == 1);
  CHECK(f2.hf == 2);
  auto f5 = field_invariants(make_field("gf:5"));
  CHECK(f5.r_star == 2);
  CHECK(f5.r_n == 1);
  CHECK_THROWS_AS(field_invariants(make_field("q")), OrbitError);
}

TEST_CASE("omega counts") {
  Field k = make_field("gf:3");
  auto s01 = omega_counts(label(k, Tag::PointOnQ), k);
  CHECK(s01.omega_v == 2);
  CHECK(s01.omega_z == 3);
  CHECK(s01.omega == 6);
  CHECK(omega_counts(label(k, Tag::PointOffQ), k).omega == 5);
  CHECK(omega_counts(label(k, Tag::LineP1, true), k).omega == 3);
  CHECK_THROWS(omega_counts(label(k, Tag::PlaneF), k));
  // V-orbits: the listed representatives are exhaustive, over GF(2) too
  Field g2 = make_field("gf:2");
  CHECK(omega_counts(label(g2, Tag::PlaneJF), g2).omega == 4);
  CHECK(omega_counts(label(g2, Tag::PlaneTS), g2).omega_v == 2);
}

// The table rows for E, T and (in characteristic 2) <s01+s23> and T+S do not
// match the computed counts; see the README. The computed values are pinned
// here, the mismatch itself is reported by verify-table and the acceptance run.
TEST_CASE("table verification over GF(3)") {
  auto r = verify_table(make_field("gf:3"));
  CHECK(r.rows.size() == 19);
  CHECK(r.checked() == 15);
  CHECK(r.failures() == 2);
  for (auto& x : r.rows) {
    if (x.skipped) continue;
    CAPTURE(x.kernel);
    CHECK(x.got.omega == x.got.omega_v + x.got.omega_z + 1);
    bool known = x.kernel == "line:E" || x.kernel == "line:T";
    CHECK(x.pass != known);
  }
  CHECK(row(r, "point:s01+s23").got.omega == 5);
  CHECK(row(r, "line:P1(t=0,d=1)").got.omega == 4);
  CHECK(row(r, "plane:P3(t=0,d=1)").got.omega == 5);
  CHECK(row(r, "line:E").got.omega_z == 4);
  CHECK(row(r, "line:E").got.omega == 8);
  CHECK(row(r, "line:T").got.omega_z == 4);
  CHECK(row(r, "line:T").got.omega == 7);
}

TEST_CASE("table verification over GF(2)") {
  auto r = verify_table(make_field("gf:2"));
  CHECK(r.checked() == 15);
  CHECK(r.failures() == 4);
  CHECK(row(r, "plane:JF").pass);
  CHECK(row(r, "plane:E+S").got.omega == 8);
  CHECK(row(r, "point:s01+s23").got.omega == 5);
  CHECK(row(r, "point:s01+s23").expected.omega == 7);
  CHECK(row(r, "plane:T+S").got.omega == 6);
  CHECK(row(r, "plane:T+S").expected.omega == 7);
  CHECK(row(r, "line:E").got.omega == 8);
  CHECK(row(r, "line:T").got.omega == 7);
  CHECK_THROWS_AS(verify_table(make_field("q")), OrbitError);
  CHECK_THROWS_AS(verify_table(make_field("gf:17")), OrbitError);
}
