#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tatra {

/// Partition of Omega x Omega into colors, stored as a dense matrix of
/// 16-bit color indices.
struct CoherentConfiguration {
  int size = 0;
  int colors = 0;
  std::vector<uint16_t> matrix;  // row-major, size*size

  uint16_t color(int a, int b) const { return matrix[(size_t)a * size + b]; }
  uint16_t& color(int a, int b) { return matrix[(size_t)a * size + b]; }
};

// Renumbers colors by order of first occurrence in a row-major scan.
CoherentConfiguration canonical_renumber(const CoherentConfiguration& x);

// Equality up to color renaming.
bool same_up_to_renaming(const CoherentConfiguration& a, const CoherentConfiguration& b);

struct AxiomReport {
  bool ok = true;
  std::string message;  // first counterexample, when !ok
};

// Checks the coherent-configuration axioms directly: diagonal a union of
// colors, color set closed under transpose, and constancy of the triple
// counts c_{rs}^t.  O(N^3) triple loop.
AxiomReport verify_axioms(const CoherentConfiguration& x);

struct IntersectionTensor {
  int rank = 0;
  std::vector<int> entries;  // rank^3, index (r*rank + s)*rank + t

  int at(int r, int s, int t) const { return entries[((size_t)r * rank + s) * rank + t]; }
  int& at(int r, int s, int t) { return entries[((size_t)r * rank + s) * rank + t]; }
};

// Brute-force counts; requires verify_axioms to hold (this is the oracle
// the rest of the system checks against).
IntersectionTensor intersection_tensor(const CoherentConfiguration& x);

// Classes of the diagonal colors, each sorted, ordered by smallest point.
std::vector<std::vector<int>> fibers(const CoherentConfiguration& x);

// Constant out-degree of color s (0 when s is empty in some row outside its
// source fiber; computed from the first row where s occurs).
int valency(const CoherentConfiguration& x, int s);

struct Parabolic {
  std::vector<std::vector<int>> classes;    // sorted blocks, ordered by smallest point
  std::vector<int> class_of;                // point -> block index
};

// Equivalence closure of a union of colors, as a partition of Omega.
// Asserts that the closure is itself a union of colors.
Parabolic parabolic_closure(const CoherentConfiguration& x, const std::vector<int>& color_set);

// Submatrix on a fiber with colors renumbered by first occurrence.
// Throws if delta is not a fiber of x.
CoherentConfiguration restriction(const CoherentConfiguration& x, const std::vector<int>& delta);

// True iff x is a scheme (one fiber) with all valencies 1.
bool is_regular(const CoherentConfiguration& x);

// Text format: first line "N k", then N rows of N space-separated colors.
void write_matrix(std::ostream& os, const CoherentConfiguration& x);
CoherentConfiguration read_matrix(std::istream& is);

}  // namespace tatra
