#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tatra {

/// Permutation of {0..N-1}, stored as the image array.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);                 // identity
  explicit Permutation(std::vector<int> images);    // validated bijection

  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return (int)img_.size(); }
  int operator[](int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (a * b)[p] = b[a[p]]: apply a first, then b.
  Permutation operator*(const Permutation& other) const;
  bool operator==(const Permutation& other) const { return img_ == other.img_; }

private:
  std::vector<int> img_;
};

/// Generator-set permutation group with a deterministic Schreier-Sims chain
/// (base = smallest moved point at each level), built lazily.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::vector<int> orbit(int point) const;

  // Orbit ids of the componentwise action on ordered pairs; entry p*N+q is
  // the id of the orbit of (p, q), ids numbered by first occurrence.
  std::vector<int> orbits_on_pairs(int* orbit_count = nullptr) const;

  unsigned long long order() const;
  bool contains(const Permutation& f) const;

  // Enumerates every group element exactly once (order of enumeration is
  // deterministic but unspecified).  Requires the chain; intended for
  // groups of modest order.
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;         // stabilizer generators at this level
    std::vector<int> orbit;                // points in BFS order
    std::vector<Permutation> transversal;  // indexed by point; maps base_point to it
    std::vector<char> in_orbit;
  };

  void build_chain() const;
  void rebuild_level(int l) const;
  // Sifts f through levels >= from; returns the residue and the level where
  // it got stuck (levels_.size() if fully sifted to identity).
  std::pair<Permutation, int> sift(const Permutation& f, int from) const;

  int degree_;
  std::vector<Permutation> gens_;
  mutable bool chain_built_ = false;
  mutable std::vector<Level> levels_;
};

}  // namespace tatra
