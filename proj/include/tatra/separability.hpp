#pragma once

#include "tatra/autiso.hpp"
#include "tatra/scheme.hpp"

#include <optional>
#include <string>

namespace tatra {

struct SeparabilityReport {
  int q = 0, n = 0;
  bool extension_fibers_ok = false;
  bool valency_one_links_ok = false;
  bool delta_regular_ok = false;
  int s_upper_bound = 0;  // 2 when the three flags hold, 0 = not certified
  bool primitive_root = false;
  std::optional<AlgebraicAut> noninduced_witness;  // present iff !primitive_root
  int s_lower_bound = 1;  // 2 when a witness is present
};

// Fibers of the one-point extension at alpha equal {alpha s : s in S}.
bool verify_extension_fibers(const TatraScheme& x, int alpha);

// Every fiber Delta' != Delta of the extension sees a valency-1 color
// inside Delta x Delta'.
bool verify_valency_one_links(const CoherentConfiguration& ext, const std::vector<int>& delta);

// The restriction of the extension to Delta is a regular scheme.
bool verify_delta_regular(const CoherentConfiguration& ext, const std::vector<int>& delta);

// Runs the three verifications for every base point alpha (all points when
// the degree is at most all_alpha_cap, otherwise only alpha = 0) and
// records the outcome in the flags; the upper bound s <= 2 is certified
// only when all three hold. Note the Delta restriction is regular exactly
// when m = (q-1)/n = 1; for m > 1 it is the rank-(n+1) scheme with
// valencies (1, m, ..., m), so delta_regular_ok comes back false.
// Then settles the lower bound: when char is not a primitive root mod n,
// the smallest unit outside <r mod n> yields a non-induced witness.
// Throws std::logic_error only on internal inconsistencies (witness
// verification disagreeing between the two routes).
SeparabilityReport separability_verdict(int q, int n, int all_alpha_cap = 100);

std::string separability_report_json(const SeparabilityReport& r);

}  // namespace tatra
