#include <catch2/catch_amalgamated.hpp>

#include "weylext/rgroup.hpp"

using namespace weylext;

namespace {

// A1 x A1 realized as D2: simple roots e1-e2 and e1+e2
ExtendedWeylGroup a1a1() {
  return build_weyl_group(build_root_system('D', 2));
}

ExtendedWeylGroup a1a1_swap() {
  RootSystem rs = build_root_system('D', 2);
  Mat c = Mat::identity_matrix(2);
  c.at(1, 1) = -1;
  return build_extended_weyl(
      rs, ComponentAction::from_generators(rs, FiniteAbelianGroup({2}), {c}));
}

int reflection_of(const ExtendedWeylGroup& g, const std::vector<int>& root) {
  int idx = g.element_index(reflection_matrix(g.rs, g.rs.index_of(root)),
                            g.gamma().identity());
  REQUIRE(idx >= 0);
  return idx;
}

}  // namespace

TEST_CASE("sigma datum validation") {
  SECTION("empty Phi1 is always valid") {
    ExtendedWeylGroup g = a1a1();
    CHECK_NOTHROW(validate_sigma_datum(make_sigma_datum(g, ew_whole(g), {})));
  }
  SECTION("both reflections preserve {+-(e1-e2)}") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    CHECK_NOTHROW(
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1)));
  }
  SECTION("the swap moves e1-e2 out of Phi1: inconsistent datum") {
    ExtendedWeylGroup g = a1a1_swap();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    CHECK_THROWS_AS(
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1)),
        InconsistentDatumError);
  }
  SECTION("Phi1 missing a negative is rejected") {
    ExtendedWeylGroup g = a1a1();
    SigmaDatum d = make_sigma_datum(g, ew_whole(g), {});
    d.phi1 = {g.rs.index_of({1, -1})};
    CHECK_THROWS_AS(validate_sigma_datum(d), InputError);
  }
  SECTION("operations require validation first") {
    ExtendedWeylGroup g = a1a1();
    SigmaDatum raw = make_sigma_datum(g, ew_whole(g), {});
    CHECK_THROWS_AS(r_group(raw), InputError);
  }
}

TEST_CASE("reflection subgroup") {
  SECTION("empty Phi1 gives the trivial subgroup") {
    ExtendedWeylGroup g = a1a1();
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), {}));
    CHECK(reflection_subgroup(d).order() == 1);
  }
  SECTION("a single root pair gives order 2") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1));
    CHECK(reflection_subgroup(d).order() == 2);
  }
  SECTION("two commuting reflections in D4 give order 4") {
    ExtendedWeylGroup g = build_weyl_group(build_root_system('D', 4));
    std::vector<int> phi1 = {
        g.rs.index_of({1, -1, 0, 0}), g.rs.index_of({-1, 1, 0, 0}),
        g.rs.index_of({0, 0, 1, -1}), g.rs.index_of({0, 0, -1, 1})};
    EwSubgroup ws = ew_generate(g, {reflection_of(g, {1, -1, 0, 0}),
                                    reflection_of(g, {0, 0, 1, -1})});
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(g, ws, phi1));
    CHECK(reflection_subgroup(d).order() == 4);
  }
  SECTION("W(Phi1) escaping W(sigma) is an inconsistent datum") {
    ExtendedWeylGroup g = a1a1();
    // W(sigma) = {1, s2} does not contain s1
    EwSubgroup ws = ew_generate(g, {reflection_of(g, {1, 1})});
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(g, ws, phi1));
    CHECK_THROWS_AS(reflection_subgroup(d), InconsistentDatumError);
  }
}

TEST_CASE("R-group computation") {
  SECTION("empty Phi1 makes the condition vacuous") {
    ExtendedWeylGroup g = a1a1_swap();
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), {}));
    EwSubgroup r = r_group(d);
    CHECK(r.order() == 8);
    GroupTable rt = ew_subgroup_table(r);
    CHECK(order_census(rt) == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
  }
  SECTION("A1 x A1 with Phi1 = {+-(e1-e2)}: R = {1, s2}") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1));
    EwSubgroup r = r_group(d);
    REQUIRE(r.order() == 2);
    CHECK(r.members[0] == g.identity());
    CHECK(r.members[1] == reflection_of(g, {1, 1}));
  }
  SECTION("brute-force filter agrees (independent positivity route)") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1));
    EwSubgroup r = r_group(d);
    // oracle: positivity via explicit coordinates, first nonzero > 0 is
    // equivalent to membership in the D2 positive set
    std::vector<int> oracle;
    for (int w : d.w_sigma.members) {
      bool pos = true;
      for (int beta : d.phi1_pos) {
        std::vector<int> im = g.act_vector(w, g.rs.roots[beta]);
        int first = 0;
        for (int c : im)
          if (c != 0) {
            first = c;
            break;
          }
        if (first <= 0) pos = false;
      }
      if (pos) oracle.push_back(w);
    }
    CHECK(r.members == oracle);
  }
}

TEST_CASE("semidirect decomposition") {
  SECTION("empty Phi1: trivial times W(sigma)") {
    ExtendedWeylGroup g = a1a1_swap();
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), {}));
    auto sd = semidirect_decompose(d);
    CHECK(sd.w_phi1.order() == 1);
    CHECK(sd.r_sigma.order() == 8);
    CHECK(sd.check.ok);
  }
  SECTION("A1 x A1 splits as a direct product") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1));
    auto sd = semidirect_decompose(d);
    CHECK(sd.w_phi1.order() == 2);
    CHECK(sd.r_sigma.order() == 2);
    CHECK(sd.check.ok);
    CHECK(sd.factorizations.size() == 4);
  }
}

TEST_CASE("commuting algebra dimension") {
  SECTION("order-8 shadow gives dimension 8 by both routes") {
    ExtendedWeylGroup g = a1a1_swap();
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), {}));
    DimensionReport rep = dim_commuting_algebra(d);
    CHECK(rep.dimension == 8);
    CHECK(rep.by_rgroup_order == 8);
    CHECK(rep.by_index == 8);
  }
  SECTION("W(sigma) = W(Phi1) gives an irreducible induced representation") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    EwSubgroup ws = ew_generate(g, {reflection_of(g, {1, -1})});
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(g, ws, phi1));
    CHECK(dim_commuting_algebra(d).dimension == 1);
  }
  SECTION("A1 x A1 with one root pair gives dimension 2") {
    ExtendedWeylGroup g = a1a1();
    std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
    SigmaDatum d =
        validate_sigma_datum(make_sigma_datum(g, ew_whole(g), phi1));
    CHECK(dim_commuting_algebra(d).dimension == 2);
  }
  SECTION("inner route agrees when the inner stabilizer is supplied") {
    ExtendedWeylGroup g = a1a1_swap();
    EwSubgroup inner;
    inner.parent = &g;
    for (int i = 0; i < g.order(); ++i)
      if (g.component_of(i) == 0) inner.members.push_back(i);
    SigmaDatum d = validate_sigma_datum(
        make_sigma_datum(g, ew_whole(g), {}, std::nullopt, inner));
    DimensionReport rep = dim_commuting_algebra(d);
    REQUIRE(rep.by_inner.has_value());
    CHECK(*rep.by_inner == 8);
  }
}

TEST_CASE("positivity is violated by every nonidentity element of W(Phi1)") {
  ExtendedWeylGroup g = build_weyl_group(build_root_system('D', 3));
  std::vector<int> phi1 = {g.rs.index_of({1, -1, 0}),
                           g.rs.index_of({-1, 1, 0}),
                           g.rs.index_of({1, 1, 0}),
                           g.rs.index_of({-1, -1, 0})};
  SigmaDatum d = validate_sigma_datum(make_sigma_datum(
      g, ew_generate(g, {reflection_of(g, {1, -1, 0}),
                          reflection_of(g, {1, 1, 0})}),
      phi1));
  EwSubgroup w1 = reflection_subgroup(d);
  EwSubgroup r = r_group(d);
  for (int u : w1.members) {
    if (u == g.identity()) continue;
    bool violates = false;
    for (int beta : d.phi1_pos)
      if (!d.is_positive(g.act_root(u, beta))) violates = true;
    CHECK(violates);
    CHECK_FALSE(r.contains(u));
  }
  CHECK(d.w_sigma.order() == w1.order() * r.order());
}

TEST_CASE("R-group is equivariant under conjugating the whole datum") {
  ExtendedWeylGroup g = a1a1_swap();
  std::vector<int> phi1 = {g.rs.index_of({1, -1}), g.rs.index_of({-1, 1})};
  EwSubgroup ws = ew_generate(
      g, {reflection_of(g, {1, -1}), reflection_of(g, {1, 1})});
  SigmaDatum d = validate_sigma_datum(make_sigma_datum(g, ws, phi1));
  EwSubgroup r = r_group(d);
  for (int conj = 0; conj < g.order(); ++conj) {
    // conjugated datum: W(sigma)^c, c(Phi1), c(Phi+)
    EwSubgroup ws_c;
    ws_c.parent = &g;
    for (int w : ws.members)
      ws_c.members.push_back(
          g.multiply(g.multiply(conj, w), g.inverse(conj)));
    std::sort(ws_c.members.begin(), ws_c.members.end());
    std::vector<int> phi1_c, pos_c;
    for (int rt : phi1) phi1_c.push_back(g.act_root(conj, rt));
    for (int rt : g.rs.positive) pos_c.push_back(g.act_root(conj, rt));
    std::sort(pos_c.begin(), pos_c.end());
    SigmaDatum dc = validate_sigma_datum(
        make_sigma_datum(g, ws_c, phi1_c, pos_c));
    EwSubgroup rc = r_group(dc);
    CHECK(rc.order() == r.order());
    std::vector<int> conj_r;
    for (int w : r.members)
      conj_r.push_back(g.multiply(g.multiply(conj, w), g.inverse(conj)));
    std::sort(conj_r.begin(), conj_r.end());
    CHECK(rc.members == conj_r);
  }
}

TEST_CASE("section 5 identity check") {
  ExtendedWeylGroup g = a1a1_swap();
  SECTION("s=1, [X/X(sigma)]=2, [X1/X(sigma)]=1, ratio 2 passes") {
    EwSubgroup ws = ew_generate(
        g, {reflection_of(g, {1, -1}), reflection_of(g, {1, 1})});
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(
        g, ws, {}, std::nullopt, std::nullopt, CliffordInts{1, 2, 1}));
    Section5Report rep = section5_identity_check(d, ew_whole(g));
    CHECK(rep.lhs == 2);
    CHECK(rep.ratio == 2);
    CHECK(rep.dim_c_sigma == 4);
    CHECK(rep.dim_c_sigma0 == 8);
  }
  SECTION("connected case: all ones") {
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(
        g, ew_whole(g), {}, std::nullopt, std::nullopt,
        CliffordInts{1, 1, 1}));
    Section5Report rep = section5_identity_check(d, ew_whole(g));
    CHECK(rep.lhs == 1);
    CHECK(rep.ratio == 1);
  }
  SECTION("s=2 with unit indices against ratio 2 fails") {
    EwSubgroup ws = ew_generate(
        g, {reflection_of(g, {1, -1}), reflection_of(g, {1, 1})});
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(
        g, ws, {}, std::nullopt, std::nullopt, CliffordInts{2, 1, 1}));
    CHECK_THROWS_AS(section5_identity_check(d, ew_whole(g)),
                    InconsistentDatumError);
  }
  SECTION("W(sigma) must sit inside W(sigma0)") {
    SigmaDatum d = validate_sigma_datum(make_sigma_datum(
        g, ew_whole(g), {}, std::nullopt, std::nullopt,
        CliffordInts{1, 1, 1}));
    EwSubgroup small = ew_generate(g, {reflection_of(g, {1, -1})});
    CHECK_THROWS_AS(section5_identity_check(d, small),
                    InconsistentDatumError);
  }
}

TEST_CASE("projection p check") {
  SECTION("identity labeling with trivial kernel passes") {
    GroupTable z2 = make_cyclic(2);
    Subgroup whole = whole_group(z2);
    Subgroup triv = trivial_subgroup(z2);
    auto rep = projection_p_check(z2, whole, triv, z2, {0, 1});
    CHECK(rep.surjective);
    CHECK(rep.kernel_matches);
  }
  SECTION("Z4 onto Z2 with kernel of order 2") {
    GroupTable z4 = make_cyclic(4);
    GroupTable z2 = make_cyclic(2);
    Subgroup whole = whole_group(z4);
    Subgroup kernel = generate_subgroup(z4, {2});
    auto rep = projection_p_check(z4, whole, kernel, z2, {0, 1, 0, 1});
    CHECK(rep.surjective);
    CHECK(rep.kernel_order == 2);
    CHECK(rep.domain_order / rep.kernel_order == z2.order());
  }
  SECTION("wrong claimed kernel fails") {
    GroupTable s3 = make_dihedral(6);
    Subgroup whole = whole_group(s3);
    Subgroup claimed = generate_subgroup(s3, {3});  // a flip: not the kernel
    GroupTable z2 = make_cyclic(2);
    // sign labeling: rotations to 0, flips to 1
    std::vector<int> labeling = {0, 0, 0, 1, 1, 1};
    CHECK_THROWS_AS(projection_p_check(s3, whole, claimed, z2, labeling),
                    InconsistentDatumError);
  }
  SECTION("non-homomorphism labeling fails") {
    GroupTable z4 = make_cyclic(4);
    GroupTable z2 = make_cyclic(2);
    CHECK_THROWS_AS(projection_p_check(z4, whole_group(z4),
                                       trivial_subgroup(z4), z2,
                                       {0, 1, 1, 0}),
                    InconsistentDatumError);
  }
}
