#include "tatra/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tatra {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int i = 2; (long long)i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int x = n;
  for (int p = 2; (long long)p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

int mul_order_mod(int a, int n) {
  if (n == 1) return 1;
  a %= n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("mul_order_mod: gcd(a,n) != 1");
  int ord = 1;
  long long cur = a;
  while (cur != 1) {
    cur = cur * a % n;
    ++ord;
  }
  return ord;
}

bool is_primitive_root(int r, int n) {
  if (n <= 2) return true;
  if (std::gcd(r % n, n) != 1) throw std::invalid_argument("is_primitive_root: gcd(r,n) != 1");
  return mul_order_mod(r, n) == euler_phi(n);
}

namespace {

using Poly = std::vector<int>;  // coefficients low-to-high

// Multiplication of residues modulo a monic polynomial f over GF(r).
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int r) {
  int d = (int)f.size() - 1;
  std::vector<int> prod(2 * d - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % r;
  }
  // reduce: x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1})
  for (int k = 2 * d - 2; k >= d; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < d; ++i)
      prod[k - d + i] = ((prod[k - d + i] - c * f[i]) % r + r) % r;
  }
  prod.resize(d);
  return prod;
}

Poly poly_powmod(Poly base, long long e, const Poly& f, int r) {
  int d = (int)f.size() - 1;
  Poly result(d, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, r);
    base = poly_mulmod(base, base, f, r);
    e >>= 1;
  }
  return result;
}

bool poly_is_one(const Poly& p) {
  if (p.empty() || p[0] != 1) return false;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0) return false;
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; (long long)p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// x generates the full multiplicative group of GF(r)[x]/(f) iff x has order
// exactly r^d - 1 there; that forces f irreducible as well.
bool x_is_primitive(const Poly& f, int r) {
  int d = (int)f.size() - 1;
  long long q1 = 1;
  for (int i = 0; i < d; ++i) q1 *= r;
  q1 -= 1;
  if (f[0] == 0) return false;  // x not invertible
  Poly x(d, 0);
  x[1 % d] = 1;
  if (!poly_is_one(poly_powmod(x, q1, f, r))) return false;
  for (int p : prime_factors((int)q1))
    if (poly_is_one(poly_powmod(x, q1 / p, f, r))) return false;
  return true;
}

// Lexicographically next coefficient tuple (c_0,...,c_{d-1}), c_0 most
// significant in the lex order.
bool next_tuple(std::vector<int>& c, int r) {
  for (int i = (int)c.size() - 1; i >= 0; --i) {
    if (++c[i] < r) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

FiniteField::FiniteField(int r, int d) : r_(r), d_(d) {
  if (!is_prime(r)) throw std::invalid_argument("FiniteField: characteristic must be prime");
  if (d < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < d; ++i) {
    q *= r;
    if (q > kMaxFieldOrder) throw std::invalid_argument("FiniteField: order exceeds bound");
  }
  q_ = (int)q;

  if (d == 1) {
    // smallest primitive root mod r
    int g = 1;
    if (r > 2) {
      for (g = 2; g < r; ++g)
        if (mul_order_mod(g, r) == r - 1) break;
    }
    primitive_ = g % r;
    modulus_ = {(r - g % r) % r, 1};  // x - g
  } else {
    std::vector<int> c(d, 0);
    bool found = false;
    do {
      Poly f(d + 1);
      for (int i = 0; i < d; ++i) f[i] = c[i];
      f[d] = 1;
      if (x_is_primitive(f, r)) {
        modulus_ = f;
        found = true;
        break;
      }
    } while (next_tuple(c, r));
    if (!found) throw std::logic_error("FiniteField: no primitive polynomial found");
    primitive_ = r;  // the element x
  }

  // power tables of the primitive element via direct polynomial arithmetic
  exp_tab_.assign(q_ - 1, 0);
  log_tab_.assign(q_, -1);
  Poly gen(d, 0);
  if (d == 1)
    gen[0] = primitive_;
  else
    gen[1] = 1;
  Poly cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    int enc = 0;
    for (int i = d - 1; i >= 0; --i) enc = enc * r + cur[i];
    exp_tab_[k] = enc;
    if (log_tab_[enc] != -1)
      throw std::logic_error("FiniteField: generator order too small");
    log_tab_[enc] = k;
    cur = poly_mulmod(cur, gen, modulus_, r);
  }
  if (!poly_is_one(cur)) throw std::logic_error("FiniteField: generator order mismatch");
}

int FiniteField::add(int a, int b) const {
  int result = 0, place = 1;
  while (a > 0 || b > 0) {
    result += (a % r_ + b % r_) % r_ * place;
    a /= r_;
    b /= r_;
    place *= r_;
  }
  return result;
}

int FiniteField::neg(int a) const {
  int result = 0, place = 1;
  while (a > 0) {
    result += (r_ - a % r_) % r_ * place;
    a /= r_;
    place *= r_;
  }
  return result;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::invalid_argument("FiniteField::inv: zero");
  return exp_tab_[(q_ - 1 - log_tab_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, long long e) const {
  if (a == 0) {
    if (e <= 0) throw std::invalid_argument("FiniteField::pow: 0^e, e <= 0");
    return 0;
  }
  long long k = (long long)log_tab_[a] * (e % (q_ - 1)) % (q_ - 1);
  return exp_tab_[(k + q_ - 1) % (q_ - 1)];
}

int FiniteField::log(int a) const {
  if (a == 0) throw std::invalid_argument("FiniteField::log: zero");
  return log_tab_[a];
}

int FiniteField::frobenius(int a, int i) const {
  if (a == 0) return 0;
  long long e = 1;
  for (int k = 0; k < ((i % d_) + d_) % d_; ++k) e = e * r_ % (q_ - 1);
  return pow(a, e);
}

CosetStructure coset_structure(const FiniteField& F, int n) {
  int q = F.order();
  if (n < 1 || (q - 1) % n != 0)
    throw std::invalid_argument("coset_structure: n does not divide q-1");
  if ((long long)q * (q - 1) / n % 2 != 0)
    throw std::invalid_argument("coset_structure: q(q-1)/n odd");
  CosetStructure cs;
  cs.n = n;
  cs.m = (q - 1) / n;
  cs.coset.assign(q, -1);
  for (int x = 1; x < q; ++x) cs.coset[x] = F.log(x) % n;
  return cs;
}

FrobeniusData frobenius_data(const FiniteField& F, const CosetStructure& C) {
  if ((int)C.coset.size() != F.order())
    throw std::invalid_argument("frobenius_data: mismatched field and cosets");
  FrobeniusData fd;
  fd.d = F.degree();
  fd.action_on_c.resize(fd.d);
  fd.d0 = 0;
  long long p = 1;
  for (int i = 0; i < fd.d; ++i) {
    fd.action_on_c[i] = (int)(p % C.n);
    if (p % C.n == 1 % C.n) ++fd.d0;
    p = p * F.characteristic() % C.n;
  }
  return fd;
}

}  // namespace tatra
