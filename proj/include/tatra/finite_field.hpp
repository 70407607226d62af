#pragma once

#include <cstdint>
#include <vector>

namespace tatra {

/// Tabulated arithmetic of GF(r^d), r prime, r^d <= kMaxFieldOrder.
///
/// Elements are integers in [0, q) whose base-r digits are the coefficients
/// of the residue polynomial (digit k = coefficient of x^k).  Multiplication
/// goes through discrete-log tables; addition is digitwise mod r.
class FiniteField {
public:
  static constexpr int kMaxFieldOrder = 1 << 16;

  // Constructs GF(r^d) over a deterministic modulus: for d >= 2 the
  // lexicographically smallest monic primitive polynomial (coefficients
  // compared low-to-high degree), for d == 1 the polynomial x - g with g
  // the smallest primitive root mod r.  Throws std::invalid_argument on
  // non-prime r, d < 1, or r^d > kMaxFieldOrder.
  FiniteField(int r, int d);

  int characteristic() const { return r_; }
  int degree() const { return d_; }
  int order() const { return q_; }
  int primitive_element() const { return primitive_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int zero() const { return 0; }
  int one() const { return 1; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_tab_[(log_tab_[a] + log_tab_[b]) % (q_ - 1)];
  }
  int inv(int a) const;  // throws on a == 0
  int pow(int a, long long e) const;

  // log of a nonzero element with respect to the primitive element.
  int log(int a) const;  // throws on a == 0
  int exp(int k) const { return exp_tab_[((k % (q_ - 1)) + q_ - 1) % (q_ - 1)]; }

  // Frobenius x -> x^(r^i).
  int frobenius(int a, int i) const;

private:
  int r_, d_, q_;
  int primitive_;
  std::vector<int> modulus_;  // d+1 coefficients, low-to-high, monic
  std::vector<int> log_tab_;  // size q, log_tab_[0] = -1
  std::vector<int> exp_tab_;  // size q-1
};

/// The index-n subgroup K of F* together with the quotient C = F*/K,
/// represented additively: coset_of(x) = log(x) mod n.
struct CosetStructure {
  int n;  // index of K, |C| = n
  int m;  // |K| = (q-1)/n
  int identity_coset = 0;
  std::vector<int> coset;  // indexed by field element; coset[0] = -1

  int coset_of(int x) const { return coset[x]; }
};

// Throws std::invalid_argument unless n | q-1 and q(q-1)/n is even.
CosetStructure coset_structure(const FiniteField& F, int n);

/// Sigma = Aut(F_q) = <Frob> of order d, acting on C = F*/K; Sigma_0 is the
/// kernel of that action, of order d0 = d / ord_n(r).
struct FrobeniusData {
  int d;
  int d0;
  std::vector<int> action_on_c;  // action_on_c[i] = r^i mod n (Frob^i multiplies exponent classes by this)
};

FrobeniusData frobenius_data(const FiniteField& F, const CosetStructure& C);

bool is_prime(int p);
int euler_phi(int n);
int mul_order_mod(int a, int n);  // order of a in (Z/n)*, gcd(a,n)=1

// True iff the multiplicative order of r mod n equals phi(n); by convention
// true for n in {1, 2}.  Throws if gcd(r, n) != 1.
bool is_primitive_root(int r, int n);

}  // namespace tatra
