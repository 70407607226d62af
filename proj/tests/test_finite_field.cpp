#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "tatra/finite_field.hpp"

using namespace tatra;

TEST_CASE("GF(4) has modulus x^2+x+1 with x primitive") {
  FiniteField F(2, 2);
  CHECK(F.order() == 4);
  CHECK(F.modulus() == std::vector<int>{1, 1, 1});
  CHECK(F.primitive_element() == 2);  // the residue x
  CHECK(F.pow(2, 3) == 1);
  CHECK(F.pow(2, 2) == F.add(2, 1));  // x^2 = x + 1
}

TEST_CASE("GF(5) picks 2 as primitive element") {
  FiniteField F(5, 1);
  CHECK(F.primitive_element() == 2);
  CHECK(F.pow(2, 4) == 1);
  CHECK(F.pow(2, 2) == 4);
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 17), std::invalid_argument);  // 2^17 > bound
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [r, d] : {std::pair{2, 2}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    FiniteField F(r, d);
    const int q = F.order();
    // log/exp bijection
    std::set<int> seen;
    for (int k = 0; k < q - 1; ++k) seen.insert(F.exp(k));
    CHECK((int)seen.size() == q - 1);
    for (int x = 1; x < q; ++x) CHECK(F.exp(F.log(x)) == x);
    CHECK(F.pow(F.primitive_element(), q - 1) == 1);
    for (int e = 1; e < q - 1; ++e) CHECK(F.pow(F.primitive_element(), e) != 1);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("Frobenius is a field automorphism fixing the prime field") {
  for (auto [r, d] : {std::pair{2, 2}, {3, 2}, {2, 4}}) {
    FiniteField F(r, d);
    for (int a = 0; a < F.order(); ++a) {
      for (int b = 0; b < F.order(); ++b) {
        CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
        CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
      }
      CHECK(F.frobenius(a, F.degree()) == a);
    }
    // prime subfield = {0, 1, 1+1, ...}
    int x = 0;
    for (int i = 0; i < r; ++i) {
      CHECK(F.frobenius(x, 1) == x);
      x = F.add(x, 1);
    }
  }
}

TEST_CASE("coset structure of K in F*") {
  SUBCASE("GF(4), n=3: trivial K") {
    FiniteField F(2, 2);
    CosetStructure C = coset_structure(F, 3);
    CHECK(C.n == 3);
    CHECK(C.m == 1);
    CHECK(C.coset_of(1) == 0);
  }
  SUBCASE("GF(7), n=3: K = {1,6} contains -1") {
    FiniteField F(7, 1);
    CosetStructure C = coset_structure(F, 3);
    CHECK(C.m == 2);
    CHECK(C.coset_of(1) == 0);
    CHECK(C.coset_of(6) == 0);  // -1 in K
    int in_k = 0;
    for (int x = 1; x < 7; ++x) in_k += C.coset_of(x) == 0;
    CHECK(in_k == 2);
  }
  SUBCASE("GF(5), n=4 is inadmissible (5*4/4 odd)") {
    FiniteField F(5, 1);
    CHECK_THROWS_AS(coset_structure(F, 4), std::invalid_argument);
    CHECK_THROWS_AS(coset_structure(F, 3), std::invalid_argument);  // 3 does not divide 4
  }
}

TEST_CASE("coset_of is a homomorphism with fibers of size m") {
  for (auto [r, d, n] : {std::tuple{2, 2, 3}, {7, 1, 3}, {13, 1, 6}, {2, 4, 5}, {2, 4, 15}}) {
    FiniteField F(r, d);
    CosetStructure C = coset_structure(F, n);
    std::vector<int> count(n, 0);
    for (int x = 1; x < F.order(); ++x) {
      ++count[C.coset_of(x)];
      for (int y = 1; y < F.order(); ++y)
        CHECK(C.coset_of(F.mul(x, y)) == (C.coset_of(x) + C.coset_of(y)) % n);
    }
    for (int g = 0; g < n; ++g) CHECK(count[g] == C.m);
    if (r != 2) CHECK(C.coset_of(F.neg(1)) == 0);
  }
}

TEST_CASE("Frobenius action on C") {
  auto data = [](int r, int d, int n) {
    FiniteField F(r, d);
    CosetStructure C = coset_structure(F, n);
    return frobenius_data(F, C);
  };
  SUBCASE("GF(4), n=3") {
    FrobeniusData fd = data(2, 2, 3);
    CHECK(fd.d == 2);
    CHECK(fd.d0 == 1);
    CHECK(fd.action_on_c == std::vector<int>{1, 2});
  }
  SUBCASE("GF(7), n=3") {
    FrobeniusData fd = data(7, 1, 3);
    CHECK(fd.d == 1);
    CHECK(fd.d0 == 1);
  }
  SUBCASE("GF(16), n=5") {
    FrobeniusData fd = data(2, 4, 5);
    CHECK(fd.d == 4);
    CHECK(fd.d0 == 1);
  }
  SUBCASE("d0 * ord_n(r) = d") {
    for (auto [r, d, n] : {std::tuple{2, 2, 3}, {2, 4, 3}, {2, 4, 15}, {3, 2, 4}, {2, 3, 7}}) {
      FrobeniusData fd = data(r, d, n);
      CHECK(fd.d0 * (n <= 2 ? 1 : mul_order_mod(r % n, n)) == fd.d);
    }
  }
}

TEST_CASE("euler_phi against brute-force unit count") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(15) == 8);
  for (int n = 1; n <= 60; ++n) {
    int units = 0;
    for (int k = 1; k <= n; ++k) units += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == units);
  }
}

TEST_CASE("is_primitive_root") {
  CHECK(is_primitive_root(2, 3));
  CHECK_FALSE(is_primitive_root(7, 3));  // 7 = 1 mod 3
  CHECK(is_primitive_root(5, 1));
  CHECK(is_primitive_root(3, 2));
  CHECK_FALSE(is_primitive_root(2, 15));  // ord = 4, phi = 8
  CHECK_THROWS_AS(is_primitive_root(3, 6), std::invalid_argument);
}
