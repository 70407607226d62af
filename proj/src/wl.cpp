#include "tatra/wl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tatra {

namespace {

using Sig = std::vector<uint32_t>;

struct SigHash {
  size_t operator()(const Sig& s) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t v : s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// signature of the pair (a,b): current color, transpose color, then the
// run-length-encoded sorted multiset of (color(a,g), color(g,b))
void pair_signature(const std::vector<uint16_t>& cur, int n, int a, int b, Sig& out,
                    std::vector<uint32_t>& scratch) {
  scratch.resize(n);
  const uint16_t* row_a = cur.data() + (size_t)a * n;
  for (int g = 0; g < n; ++g)
    scratch[g] = ((uint32_t)row_a[g] << 16) | cur[(size_t)g * n + b];
  std::sort(scratch.begin(), scratch.end());
  out.clear();
  out.push_back(row_a[b]);
  out.push_back(cur[(size_t)b * n + a]);
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && scratch[j] == scratch[i]) ++j;
    out.push_back(scratch[i]);
    out.push_back((uint32_t)(j - i));
    i = j;
  }
}

CoherentConfiguration closure_impl(int n, const std::vector<uint32_t>& initial, bool parallel) {
  if ((size_t)n * n != initial.size())
    throw std::invalid_argument("coherent_closure: initial coloring has wrong size");
  CoherentConfiguration result;
  result.size = n;
  if (n == 0) return result;

  // split diagonal from off-diagonal, renumber by first occurrence
  std::vector<uint16_t> cur((size_t)n * n);
  int colors = 0;
  {
    std::unordered_map<uint64_t, int> ids;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        uint64_t key = (uint64_t)initial[(size_t)a * n + b] * 2 + (a == b ? 1 : 0);
        auto [it, inserted] = ids.emplace(key, colors);
        if (inserted) {
          if (++colors > 65536) throw std::runtime_error("coherent_closure: too many colors");
        }
        cur[(size_t)a * n + b] = (uint16_t)it->second;
      }
  }

  constexpr int kBlockRows = 32;
  std::vector<Sig> block_sigs((size_t)kBlockRows * n);
  std::vector<uint16_t> next((size_t)n * n);

  for (;;) {
    std::unordered_map<Sig, int, SigHash> ids;
    int next_colors = 0;
    for (int row0 = 0; row0 < n; row0 += kBlockRows) {
      const int rows = std::min(kBlockRows, n - row0);
#ifdef _OPENMP
#pragma omp parallel if (parallel)
      {
        std::vector<uint32_t> scratch;
#pragma omp for schedule(static)
        for (int i = 0; i < rows * n; ++i)
          pair_signature(cur, n, row0 + i / n, i % n, block_sigs[i], scratch);
      }
#else
      {
        std::vector<uint32_t> scratch;
        for (int i = 0; i < rows * n; ++i)
          pair_signature(cur, n, row0 + i / n, i % n, block_sigs[i], scratch);
      }
#endif
      // canonical ids in row-major order
      for (int i = 0; i < rows * n; ++i) {
        auto [it, inserted] = ids.emplace(block_sigs[i], next_colors);
        if (inserted) {
          if (++next_colors > 65536) throw std::runtime_error("coherent_closure: too many colors");
        }
        next[(size_t)(row0 + i / n) * n + i % n] = (uint16_t)it->second;
      }
    }
    bool stable = next_colors == colors;
    cur.swap(next);
    colors = next_colors;
    if (stable) break;  // no class split, partition unchanged
  }

  result.colors = colors;
  result.matrix = std::move(cur);
  return result;
}

}  // namespace

CoherentConfiguration coherent_closure(int n, const std::vector<uint32_t>& initial) {
  return closure_impl(n, initial, true);
}

CoherentConfiguration coherent_closure_serial(int n, const std::vector<uint32_t>& initial) {
  return closure_impl(n, initial, false);
}

CoherentConfiguration coherent_closure(const CoherentConfiguration& x) {
  std::vector<uint32_t> init(x.matrix.begin(), x.matrix.end());
  return coherent_closure(x.size, init);
}

CoherentConfiguration one_point_extension(const CoherentConfiguration& x, int alpha) {
  if (alpha < 0 || alpha >= x.size)
    throw std::out_of_range("one_point_extension: point out of range");
  std::vector<uint32_t> init(x.matrix.begin(), x.matrix.end());
  init[(size_t)alpha * x.size + alpha] = (uint32_t)x.colors;  // individualize
  return coherent_closure(x.size, init);
}

CoherentConfiguration m_extension(const CoherentConfiguration& x, int m) {
  if (m != 2) throw std::invalid_argument("m_extension: only m = 2 is supported");
  const int n = x.size;
  if ((size_t)n * n > kMaxExtensionCells)
    throw std::invalid_argument("m_extension: size bound exceeded");
  const size_t ext = (size_t)n * n;

  std::vector<uint32_t> init(ext * ext);
  std::unordered_map<uint64_t, uint32_t> ids;
  for (size_t p = 0; p < ext; ++p) {
    const int a = (int)(p / n), b = (int)(p % n);
    for (size_t q = 0; q < ext; ++q) {
      const int c = (int)(q / n), d = (int)(q % n);
      uint64_t key = ((uint64_t)x.color(a, c) * x.colors + x.color(b, d)) * 4 +
                     (a == b ? 2 : 0) + (c == d ? 1 : 0);
      auto [it, inserted] = ids.emplace(key, (uint32_t)ids.size());
      init[p * ext + q] = it->second;
    }
  }
  return coherent_closure((int)ext, init);
}

}  // namespace tatra
