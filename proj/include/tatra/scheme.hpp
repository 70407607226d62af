#pragma once

#include "tatra/coherent.hpp"
#include "tatra/finite_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tatra {

/// Canonical representative (v1, v2) of the class Kv of a nonzero 2-vector:
/// the minimum of {xv : x in K} under lexicographic order by discrete-log
/// index, with 0 ordered first.
struct OmegaPoint {
  int v1 = 0;
  int v2 = 0;

  bool operator==(const OmegaPoint& o) const { return v1 == o.v1 && v2 == o.v2; }
};

/// The scheme X(q,n) on the n(q+1) classes Kv, with relations
///   r_g = {(a,b) : <a,b> = 0, b = g a}   (colors 0..n-1, r_e = diagonal)
///   s_g = {(a,b) : <a,b> = g}            (colors n..2n-1)
/// where g ranges over C = F*/K written additively as integers mod n.
struct TatraScheme {
  int q = 0, n = 0, m = 0;
  FiniteField field;
  CosetStructure cosets;
  FrobeniusData frobenius;
  std::vector<OmegaPoint> points;
  CoherentConfiguration config;

  int degree() const { return (int)points.size(); }
  int rank() const { return 2 * n; }
  int r_color(int g) const { return g; }
  int s_color(int g) const { return n + g; }
  bool is_r_color(int c) const { return c < n; }
  int label_of(int c) const { return c < n ? c : c - n; }  // g of r_g / s_g

  // canonical representative of the class of (v1, v2)
  OmegaPoint canonical(int v1, int v2) const;
  int point_index(const OmegaPoint& p) const;  // -1 if not a canonical point
};

// The form <a,b> = K det(a,b): nullopt for 0, else the coset as an integer
// mod n.
std::optional<int> form_value(const TatraScheme& x, const OmegaPoint& a, const OmegaPoint& b);

// Throws std::invalid_argument on inadmissible parameters (q not a prime
// power within bounds, n not dividing q-1, or q(q-1)/n odd).
TatraScheme build_tatra(int q, int n);

/// Outcome of checking the structure constants of X(q,n) against the
/// closed-form values: valencies, transposes, composition rules, the full
/// s_h s_g intersection numbers, the one-point-per-class property of s_g
/// across r_C-classes, and the parabolic r_C.
struct StructureReport {
  struct Check {
    std::string name;
    bool ok;
    std::string witness;  // empty when ok
  };
  std::vector<Check> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

StructureReport verify_structure(const TatraScheme& x);

// Label map as JSON text: {"0": {"kind": "r", "g": 0}, ...}
std::string labels_json(const TatraScheme& x);

}  // namespace tatra
