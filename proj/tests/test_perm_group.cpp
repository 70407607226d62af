#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tatra/perm_group.hpp"

using namespace tatra;

namespace {

// independent oracle: closure of the generator set under composition
std::set<std::vector<int>> bruteforce_closure(const std::vector<Permutation>& gens, int degree) {
  std::set<std::vector<int>> elems;
  elems.insert(Permutation(degree).images());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(elems.begin(), elems.end());
    for (const auto& e : cur)
      for (const auto& g : gens) {
        auto prod = (Permutation(e) * g).images();
        if (elems.insert(prod).second) grew = true;
      }
  }
  return elems;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), std::invalid_argument);
  Permutation c = Permutation::from_cycles(4, {{0, 1, 2}});
  CHECK(c[0] == 1);
  CHECK(c[3] == 3);
  CHECK((c * c.inverse()).is_identity());
  // composition applies the left factor first
  Permutation t = Permutation::from_cycles(4, {{0, 1}});
  CHECK((c * t)[2] == 1);  // 2 ->c 0 ->t 1
}

TEST_CASE("orbits") {
  PermGroup trivial(5, {});
  CHECK(trivial.orbit(3) == std::vector<int>{3});

  PermGroup cyc(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(cyc.orbit(0).size() == 5);

  PermGroup two(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})});
  auto orb = two.orbit(0);
  std::sort(orb.begin(), orb.end());
  CHECK(orb == std::vector<int>{0, 1});
}

TEST_CASE("orbits on ordered pairs") {
  int count = 0;
  PermGroup trivial(2, {});
  trivial.orbits_on_pairs(&count);
  CHECK(count == 4);

  PermGroup s3(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  s3.orbits_on_pairs(&count);
  CHECK(count == 2);  // diagonal and off-diagonal

  PermGroup c3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  auto ids = c3.orbits_on_pairs(&count);
  CHECK(count == 3);
  std::vector<int> sizes(count, 0);
  for (int id : ids) ++sizes[id];
  CHECK(sizes == std::vector<int>{3, 3, 3});
}

TEST_CASE("group order via stabilizer chain") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(s4.order() == 24);
  PermGroup c5(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(c5.order() == 5);
}

TEST_CASE("membership") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(s4.contains(Permutation(4)));
  PermGroup t(3, {Permutation::from_cycles(3, {{0, 1}})});
  CHECK_FALSE(t.contains(Permutation::from_cycles(3, {{0, 1, 2}})));
  // A4 does not contain a transposition
  PermGroup a4(4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("order matches brute-force closure on random small groups") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int degree = 4 + (int)(rng() % 4);  // 4..7
    std::vector<Permutation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<int> img(degree);
      for (int p = 0; p < degree; ++p) img[p] = p;
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(std::move(img));
    }
    auto closure = bruteforce_closure(gens, degree);
    PermGroup g(degree, gens);
    CHECK(g.order() == closure.size());
    // every closure element passes membership; products of members stay in
    for (const auto& e : closure) CHECK(g.contains(Permutation(e)));
    // enumeration hits each element exactly once
    std::set<std::vector<int>> seen;
    g.for_each_element([&](const Permutation& f) { seen.insert(f.images()); });
    CHECK(seen == closure);
  }
}

TEST_CASE("pair orbits refine the diagonal split for transitive groups") {
  PermGroup c6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  int count = 0;
  auto ids = c6.orbits_on_pairs(&count);
  std::set<int> diag_ids, off_ids;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) (p == q ? diag_ids : off_ids).insert(ids[p * 6 + q]);
  for (int id : diag_ids) CHECK_FALSE(off_ids.count(id));
}
