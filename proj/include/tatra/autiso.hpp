#pragma once

#include "tatra/perm_group.hpp"
#include "tatra/scheme.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tatra {

/// Element T * Frob^i of GammaL(2,q) acting on Omega by Kv -> K(T v^sigma).
struct SemilinearMap {
  std::array<int, 4> t;  // row-major 2x2 matrix over F, det != 0
  int frob_power = 0;    // sigma = Frob^frob_power

  static SemilinearMap identity() { return {{1, 0, 0, 1}, 0}; }
  static SemilinearMap diag(int a, int b, int frob = 0) { return {{a, 0, 0, b}, frob}; }
};

/// Color bijection h -> (u*h, u*h + shift): r_h -> r_{u h}, s_h -> s_{u h + shift}
/// (additive notation mod n); gcd(u, n) = 1.
struct AlgebraicAut {
  int u = 1;
  int shift = 0;

  bool operator==(const AlgebraicAut& o) const { return u == o.u && shift == o.shift; }
};

OmegaPoint act(const SemilinearMap& f, const TatraScheme& x, const OmegaPoint& p);
Permutation perm_of(const SemilinearMap& f, const TatraScheme& x);

// Color map induced by f, computed both from the closed-form rule
// (r_g -> r_{g^sigma}, s_g -> s_{det(T) g^sigma}) and from the actual
// permutation action on the color matrix; throws std::logic_error if the
// two disagree.  Entry c of the result is the image color of c.
std::vector<int> relation_image(const SemilinearMap& f, const TatraScheme& x);

// Color map of an arbitrary permutation on the color matrix; nullopt if it
// is not a color permutation.
std::optional<std::vector<int>> color_map_of(const Permutation& f, const CoherentConfiguration& x);

// Generated by SL(2,q) transvections, diag(kappa,1) with kappa generating
// K, and the Frobenius generator of Sigma_0.
PermGroup automorphism_group(const TatraScheme& x);
// Adds diag(rho,1) with rho primitive and the full Frobenius.
PermGroup isomorphism_group(const TatraScheme& x);

// Orbits of the automorphism group on ordered pairs coincide with the colors.
bool schurity_check(const TatraScheme& x);

// All pairs (u, shift) with gcd(u,n) = 1, each verified to preserve the
// brute-force intersection tensor; throws std::logic_error on a
// preservation failure.  Count is n*phi(n).
std::vector<AlgebraicAut> enumerate_algebraic_auts(const TatraScheme& x);

std::vector<int> color_map_of(const AlgebraicAut& phi, const TatraScheme& x);

bool preserves_tensor(const std::vector<int>& color_map, const IntersectionTensor& tensor);

// Exhaustive search over all valency-preserving color bijections for
// tensor-preserving ones (feasible for rank <= 12).  Returned maps are in
// lexicographic order of their image vectors.
std::vector<std::vector<int>> tensor_preserving_bijections(const CoherentConfiguration& x);

// Criterion route: phi is induced iff u = r^i mod n for some i; the witness
// diag(x, 1) * Frob^i with coset_of(x) = shift is verified via
// relation_image before being returned.
std::optional<SemilinearMap> is_induced(const AlgebraicAut& phi, const TatraScheme& x);

// Brute-force route: enumerates the whole isomorphism group and compares
// induced color maps; nullopt when the order exceeds max_order.
std::optional<bool> is_induced_bruteforce(const AlgebraicAut& phi, const TatraScheme& x,
                                          unsigned long long max_order = 100000);

struct InducedRatio {
  long long alg_aut_count = 0;
  long long induced_count = 0;
  long long ratio_num = 0;  // alg_aut_count / induced_count, reduced
  long long ratio_den = 0;
};

// induced_count is computed both by counting is_induced hits and as
// |Iso|/|Aut|; throws std::logic_error if the two routes disagree.
InducedRatio induced_ratio(const TatraScheme& x);

// {q, n, rank, degree, aut_order, iso_order, alg_aut_count, induced_count,
//  ratio, primitive_root}
std::string autiso_report_json(const TatraScheme& x);

}  // namespace tatra
