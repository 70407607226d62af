#pragma once

#include "tatra/coherent.hpp"

namespace tatra {

/// Two-dimensional Weisfeiler-Leman stabilization.
///
/// The initial coloring is refined by the pair signature
///   (color(a,b), color(b,a), multiset over g of (color(a,g), color(g,b)))
/// until a round changes nothing; the diagonal is split from the
/// off-diagonal up front.  Colors of the result are canonical (numbered by
/// first occurrence in a row-major scan), so the output is reproducible and
/// passes verify_axioms.
CoherentConfiguration coherent_closure(int n, const std::vector<uint32_t>& initial);

// Serial reference implementation; must produce bit-identical output.
CoherentConfiguration coherent_closure_serial(int n, const std::vector<uint32_t>& initial);

CoherentConfiguration coherent_closure(const CoherentConfiguration& x);

// WL closure after individualizing alpha; {alpha} becomes a fiber and the
// result refines x.
CoherentConfiguration one_point_extension(const CoherentConfiguration& x, int alpha);

inline constexpr size_t kMaxExtensionCells = 90000;  // |Omega|^2 for m_extension

// 2-extension: WL closure on Omega^2 of the Cartesian square coloring with
// diagonal membership split off.  Only m = 2 is supported; throws when
// |Omega|^2 exceeds kMaxExtensionCells.
CoherentConfiguration m_extension(const CoherentConfiguration& x, int m);

}  // namespace tatra
