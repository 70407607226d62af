#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include <json.hpp>

#include "tatra/autiso.hpp"

using namespace tatra;

TEST_CASE("semilinear action on points") {
  TatraScheme x = build_tatra(7, 3);
  SUBCASE("identity and kernel act trivially") {
    CHECK(perm_of(SemilinearMap::identity(), x).is_identity());
    // scalar from K = {1, 6}
    CHECK(perm_of(SemilinearMap::diag(6, 6), x).is_identity());
  }
  SUBCASE("a non-cube diagonal moves K(1,0)") {
    OmegaPoint p = x.canonical(1, 0);
    CHECK_FALSE(act(SemilinearMap::diag(2, 1), x, p) == p);
  }
}

TEST_CASE("relation images") {
  SUBCASE("SL with trivial Frobenius fixes every color") {
    TatraScheme x = build_tatra(7, 3);
    auto img = relation_image(SemilinearMap{{1, 1, 0, 1}, 0}, x);
    for (int c = 0; c < x.rank(); ++c) CHECK(img[c] == c);
  }
  SUBCASE("X(7,3), non-cube determinant shifts the s-colors only") {
    TatraScheme x = build_tatra(7, 3);
    int c = 2;  // a non-cube mod 7
    REQUIRE(x.cosets.coset_of(c) != 0);
    auto img = relation_image(SemilinearMap::diag(c, 1), x);
    int shift = x.cosets.coset_of(c);
    for (int g = 0; g < 3; ++g) {
      CHECK(img[x.r_color(g)] == x.r_color(g));
      CHECK(img[x.s_color(g)] == x.s_color((g + shift) % 3));
    }
  }
  SUBCASE("X(4,3), Frobenius doubles the labels") {
    TatraScheme x = build_tatra(4, 3);
    auto img = relation_image(SemilinearMap::diag(1, 1, 1), x);
    for (int g = 0; g < 3; ++g) {
      CHECK(img[x.r_color(g)] == x.r_color(2 * g % 3));
      CHECK(img[x.s_color(g)] == x.s_color(2 * g % 3));
    }
  }
  SUBCASE("formula matches the permutation action on random maps") {
    TatraScheme x = build_tatra(9, 4);
    std::mt19937 rng(17);
    int done = 0;
    while (done < 100) {
      SemilinearMap f{{(int)(rng() % 9), (int)(rng() % 9), (int)(rng() % 9), (int)(rng() % 9)},
                      (int)(rng() % 2)};
      int det = x.field.sub(x.field.mul(f.t[0], f.t[3]), x.field.mul(f.t[1], f.t[2]));
      if (det == 0) continue;
      relation_image(f, x);  // throws on any disagreement
      ++done;
    }
  }
}

TEST_CASE("group orders") {
  TatraScheme x43 = build_tatra(4, 3);
  CHECK(automorphism_group(x43).order() == 60);
  CHECK(isomorphism_group(x43).order() == 360);
  CHECK(automorphism_group(build_tatra(5, 2)).order() == 120);
  TatraScheme x73 = build_tatra(7, 3);
  CHECK(isomorphism_group(x73).order() == 3 * automorphism_group(x73).order());
}

TEST_CASE("schurity") {
  CHECK(schurity_check(build_tatra(4, 3)));
  CHECK(schurity_check(build_tatra(7, 3)));
}

TEST_CASE("fusing two s-colors destroys coherence") {
  TatraScheme x = build_tatra(7, 3);
  CoherentConfiguration fused = x.config;
  for (auto& c : fused.matrix)
    if (c == x.s_color(1)) c = (uint16_t)x.s_color(0);
  fused = canonical_renumber(fused);
  CHECK_FALSE(verify_axioms(fused).ok);
}

TEST_CASE("algebraic automorphisms") {
  CHECK(enumerate_algebraic_auts(build_tatra(4, 1)).size() == 1);
  CHECK(enumerate_algebraic_auts(build_tatra(4, 3)).size() == 6);
  CHECK(enumerate_algebraic_auts(build_tatra(8, 7)).size() == 42);
}

TEST_CASE("exhaustive bijection search finds exactly the holomorph") {
  SUBCASE("X(4,3)") {
    TatraScheme x = build_tatra(4, 3);
    auto found = tensor_preserving_bijections(x.config);
    std::set<std::vector<int>> expected;
    for (const auto& phi : enumerate_algebraic_auts(x)) expected.insert(color_map_of(phi, x));
    CHECK(found.size() == 6);
    CHECK(std::set<std::vector<int>>(found.begin(), found.end()) == expected);
  }
  SUBCASE("X(5,2)") {
    CHECK(tensor_preserving_bijections(build_tatra(5, 2).config).size() == 2);
  }
}

TEST_CASE("inducibility") {
  SUBCASE("identity is induced by the identity") {
    TatraScheme x = build_tatra(4, 3);
    auto w = is_induced(AlgebraicAut{1, 0}, x);
    REQUIRE(w.has_value());
    CHECK(w->t == std::array<int, 4>{1, 0, 0, 1});
  }
  SUBCASE("X(4,3): u=2 comes from Frobenius") {
    CHECK(is_induced(AlgebraicAut{2, 0}, build_tatra(4, 3)).has_value());
  }
  SUBCASE("X(7,3): u=2 is not induced, and brute force agrees on every phi") {
    TatraScheme x = build_tatra(7, 3);
    CHECK_FALSE(is_induced(AlgebraicAut{2, 0}, x).has_value());
    for (const auto& phi : enumerate_algebraic_auts(x)) {
      auto brute = is_induced_bruteforce(phi, x);
      REQUIRE(brute.has_value());
      CHECK(*brute == is_induced(phi, x).has_value());
    }
  }
  SUBCASE("the brute-force route is gated by group order") {
    TatraScheme x = build_tatra(7, 3);
    CHECK_FALSE(is_induced_bruteforce(AlgebraicAut{1, 0}, x, 10).has_value());
  }
}

TEST_CASE("induced ratio") {
  auto r43 = induced_ratio(build_tatra(4, 3));
  CHECK(r43.alg_aut_count == 6);
  CHECK(r43.induced_count == 6);
  CHECK(r43.ratio_num == 1);
  auto r73 = induced_ratio(build_tatra(7, 3));
  CHECK(r73.alg_aut_count == 6);
  CHECK(r73.induced_count == 3);
  CHECK(r73.ratio_num == 2);
  CHECK(r73.ratio_den == 1);
}

TEST_CASE("report json") {
  auto j = nlohmann::json::parse(autiso_report_json(build_tatra(4, 3)));
  CHECK(j["aut_order"] == 60);
  CHECK(j["iso_order"] == 360);
  CHECK(j["alg_aut_count"] == 6);
  CHECK(j["induced_count"] == 6);
  CHECK(j["primitive_root"] == true);
}
