#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weylext/extension.hpp"

using namespace weylext;

namespace {

// Z2 x Z2 as a table with elements 1, a, b, ab (tuple order of the
// invariant-factor enumeration)
GroupTable klein() { return FiniteAbelianGroup({2, 2}).to_table(); }

// eta(a^i b^j, a^k b^l) = j*k mod 2: the standard nontrivial class
Cocycle klein_nontrivial_cocycle(const GroupTable& v4) {
  std::vector<int> vals(16);
  auto exps = [](int x) { return std::pair<int, int>{x / 2, x % 2}; };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      vals[size_t(x) * 4 + y] = exps(x).second * exps(y).first;
  return Cocycle::from_values(v4, 2, vals);
}

Cocycle random_coboundary(const GroupTable& g, int modulus, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, modulus - 1);
  std::vector<int> f(g.order());
  for (int& v : f) v = dist(rng);
  f[g.identity] = 0;
  return Cocycle::coboundary(g, modulus, f);
}

}  // namespace

TEST_CASE("cocycle verification") {
  GroupTable v4 = klein();
  SECTION("identically zero exponents") {
    CHECK(verify_cocycle(Cocycle::trivial(v4, 2)).ok);
  }
  SECTION("coboundaries are cocycles") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      CHECK(verify_cocycle(random_coboundary(v4, 4, rng)).ok);
      CHECK(verify_cocycle(random_coboundary(make_dihedral(8), 3, rng)).ok);
    }
  }
  SECTION("the nontrivial Klein cocycle passes the exhaustive triple check") {
    CHECK(verify_cocycle(klein_nontrivial_cocycle(v4)).ok);
  }
  SECTION("a broken table is caught with a witness triple") {
    std::vector<int> vals(16, 0);
    vals[size_t(1) * 4 + 2] = 1;  // breaks normalization-compatible identity
    Cocycle c = Cocycle::from_values(v4, 2, vals);
    CocycleCheck chk = verify_cocycle(c);
    CHECK_FALSE(chk.ok);
    CHECK(chk.a >= 0);
  }
}

TEST_CASE("central extension construction") {
  GroupTable v4 = klein();
  SECTION("trivial cocycle gives the direct product") {
    CentralExtension ext = build_extension(Cocycle::trivial(v4, 2));
    CHECK(ext.total.order() == 8);
    CHECK(is_abelian(ext.total));
    CHECK(order_census(ext.total) == std::map<int, int>{{1, 1}, {2, 7}});
  }
  SECTION("the nontrivial Klein cocycle gives the dihedral signature") {
    CentralExtension ext =
        build_extension(klein_nontrivial_cocycle(v4));
    CHECK(ext.total.order() == 8);
    CHECK(order_census(ext.total) ==
          std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
  }
  SECTION("modulus 1 reproduces the base table") {
    CentralExtension ext = build_extension(Cocycle::trivial(v4, 1));
    CHECK(ext.total.order() == 4);
    CHECK(ext.total.mult_ == v4.mult_);
  }
  SECTION("projection recovers the base multiplication") {
    CentralExtension ext =
        build_extension(klein_nontrivial_cocycle(v4));
    for (int x = 0; x < ext.total.order(); ++x)
      for (int y = 0; y < ext.total.order(); ++y)
        CHECK(ext.projection[ext.total.mult(x, y)] ==
              v4.mult(ext.projection[x], ext.projection[y]));
  }
  SECTION("a non-cocycle is rejected") {
    std::vector<int> vals(16, 0);
    vals[size_t(1) * 4 + 0] = 1;  // breaks normalization
    CHECK_THROWS_AS(build_extension(Cocycle::from_values(v4, 2, vals)),
                    InputError);
  }
}

TEST_CASE("character tables of small groups") {
  SECTION("Z2") {
    CharacterTable t = character_table(make_cyclic(2));
    REQUIRE(t.values.size() == 2);
    CHECK(t.exact_values);
    CHECK(t.values[0][0].real() == Catch::Approx(1.0));
    CHECK(t.values[0][1].real() == Catch::Approx(1.0));
    CHECK(t.values[1][1].real() == Catch::Approx(-1.0));
  }
  SECTION("Klein four group has 4 linear characters") {
    CharacterTable t = character_table(klein());
    CHECK(t.degrees == std::vector<int>{1, 1, 1, 1});
  }
  SECTION("dihedral of order 8 has degrees 1,1,1,1,2") {
    CharacterTable t = character_table(make_dihedral(8));
    CHECK(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(t.orthogonality_residual < kOrthogonalityTol);
  }
  SECTION("quaternion group has the same degrees but is distinguished") {
    CharacterTable t = character_table(make_quaternion());
    CHECK(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(fingerprint(make_quaternion()).census !=
          fingerprint(make_dihedral(8)).census);
  }
  SECTION("sum of squared degrees equals the order, orders 1..16") {
    for (int m = 1; m <= 16; ++m) {
      CharacterTable t = character_table(make_cyclic(m));
      long long s = 0;
      for (int d : t.degrees) s += (long long)d * d;
      CHECK(s == m);
    }
  }
  SECTION("nonabelian dihedral tables validate at tolerance") {
    for (int order : {6, 8, 10, 12, 16, 24, 32, 48, 64}) {
      CharacterTable t = character_table(make_dihedral(order));
      CHECK(t.orthogonality_residual < kOrthogonalityTol);
      CHECK(t.degree_residual < kDegreeTol);
      long long s = 0;
      for (int d : t.degrees) s += (long long)d * d;
      CHECK(s == order);
    }
  }
  SECTION("order cap is enforced") {
    CHECK_THROWS_AS(character_table(make_cyclic(4097)), ResourceError);
  }
}

TEST_CASE("irreps with a fixed central character") {
  GroupTable v4 = klein();
  SECTION("trivial cocycle, trivial character: the whole base table") {
    CentralExtension ext = build_extension(Cocycle::trivial(v4, 1));
    CharacterTable t = character_table(ext.total);
    auto block = irreps_with_central_character(ext, t, 0);
    CHECK(block.size() == 4);
    long long s = 0;
    for (int i : block) s += (long long)t.degrees[i] * t.degrees[i];
    CHECK(s == 4);
  }
  SECTION("nontrivial cocycle, faithful character: one degree-2 irrep") {
    CentralExtension ext = build_extension(klein_nontrivial_cocycle(v4));
    CharacterTable t = character_table(ext.total);
    auto block = irreps_with_central_character(ext, t, 1);
    REQUIRE(block.size() == 1);
    CHECK(t.degrees[block[0]] == 2);
  }
  SECTION("nontrivial cocycle, trivial character: four linear characters") {
    CentralExtension ext = build_extension(klein_nontrivial_cocycle(v4));
    CharacterTable t = character_table(ext.total);
    auto block = irreps_with_central_character(ext, t, 0);
    CHECK(block.size() == 4);
    for (int i : block) CHECK(t.degrees[i] == 1);
  }
  SECTION("blocks partition the table with total n * |R|") {
    for (int modulus : {1, 2, 4}) {
      CentralExtension ext = build_extension(Cocycle::trivial(v4, modulus));
      CharacterTable t = character_table(ext.total);
      auto blocks = block_degree_multisets(ext, t);
      long long total = 0;
      for (auto& [e, degs] : blocks)
        for (int d : degs) total += (long long)d * d;
      CHECK(total == (long long)modulus * v4.order());
    }
  }
}

TEST_CASE("cohomologous cocycles give matching censuses and degree blocks") {
  GroupTable v4 = klein();
  std::mt19937 rng(20240812);
  Cocycle base = klein_nontrivial_cocycle(v4);
  CentralExtension ext0 = build_extension(base);
  auto census0 = order_census(ext0.total);
  auto blocks0 = block_degree_multisets(ext0, character_table(ext0.total));
  for (int trial = 0; trial < 10; ++trial) {
    Cocycle shift = random_coboundary(v4, 2, rng);
    std::vector<int> vals = base.values;
    for (size_t i = 0; i < vals.size(); ++i)
      vals[i] = (vals[i] + shift.values[i]) % 2;
    Cocycle moved = Cocycle::from_values(v4, 2, vals);
    REQUIRE(verify_cocycle(moved).ok);
    CentralExtension ext = build_extension(moved);
    CHECK(order_census(ext.total) == census0);
    CHECK(block_degree_multisets(ext, character_table(ext.total)) == blocks0);
  }
}

TEST_CASE("coboundary detection") {
  GroupTable v4 = klein();
  SECTION("trivial cocycle splits with the zero function") {
    auto rep = is_coboundary(Cocycle::trivial(v4, 2));
    CHECK(rep.is_coboundary);
    CHECK(rep.splitting == std::vector<int>{0, 0, 0, 0});
  }
  SECTION("the nontrivial Klein class does not split") {
    CHECK_FALSE(is_coboundary(klein_nontrivial_cocycle(v4)).is_coboundary);
  }
  SECTION("random coboundaries are recognized and re-split") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      Cocycle c = random_coboundary(v4, 2, rng);
      auto rep = is_coboundary(c);
      REQUIRE(rep.is_coboundary);
      Cocycle back = Cocycle::coboundary(v4, 2, rep.splitting);
      CHECK(back.values == c.values);
    }
  }
  SECTION("the search-space guard is explicit") {
    GroupTable big = make_dihedral(32);
    CHECK_THROWS_AS(is_coboundary(Cocycle::trivial(big, 3)), ResourceError);
  }
}

TEST_CASE("extension groups built by the tool feed back into chartables") {
  // Z4 built as a nonsplit extension of Z2 by Z2
  GroupTable z2 = make_cyclic(2);
  std::vector<int> vals = {0, 0, 0, 1};  // eta(1,1) = 1
  Cocycle c = Cocycle::from_values(z2, 2, vals);
  REQUIRE(verify_cocycle(c).ok);
  CentralExtension ext = build_extension(c);
  CHECK(order_census(ext.total) ==
        std::map<int, int>{{1, 1}, {2, 1}, {4, 2}});
  CharacterTable t = character_table(ext.total);
  CHECK(t.degrees == std::vector<int>{1, 1, 1, 1});
  CHECK(t.exact_values);
}
