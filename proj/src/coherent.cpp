#include "tatra/coherent.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tatra {

CoherentConfiguration canonical_renumber(const CoherentConfiguration& x) {
  CoherentConfiguration out;
  out.size = x.size;
  out.matrix.resize(x.matrix.size());
  std::vector<int> remap(x.colors, -1);
  int next = 0;
  for (size_t i = 0; i < x.matrix.size(); ++i) {
    int c = x.matrix[i];
    if (remap[c] == -1) remap[c] = next++;
    out.matrix[i] = (uint16_t)remap[c];
  }
  out.colors = next;
  return out;
}

bool same_up_to_renaming(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  if (a.size != b.size || a.colors != b.colors) return false;
  return canonical_renumber(a).matrix == canonical_renumber(b).matrix;
}

AxiomReport verify_axioms(const CoherentConfiguration& x) {
  const int n = x.size;
  const int k = x.colors;
  AxiomReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.message = std::move(msg);
    return rep;
  };
  if ((size_t)n * n != x.matrix.size()) return fail("matrix is not square");
  {
    std::vector<char> occurs(k, 0);
    for (uint16_t c : x.matrix) {
      if (c >= k) return fail("color index out of range");
      occurs[c] = 1;
    }
    for (int c = 0; c < k; ++c)
      if (!occurs[c]) return fail("color " + std::to_string(c) + " does not occur");
  }

  // diagonal colors must not occur off the diagonal
  std::vector<char> diag_color(k, 0);
  for (int a = 0; a < n; ++a) diag_color[x.color(a, a)] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && diag_color[x.color(a, b)])
        return fail("diagonal color " + std::to_string(x.color(a, b)) + " occurs at off-diagonal pair (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");

  // transpose closure: color(a,b) determines color(b,a)
  std::vector<int> transpose(k, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = x.color(a, b), ct = x.color(b, a);
      if (transpose[c] == -1)
        transpose[c] = ct;
      else if (transpose[c] != ct)
        return fail("color " + std::to_string(c) + " has inconsistent transpose at (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
    }

  // constancy of c_{rs}^t: pairs of equal color have equal count vectors
  std::vector<std::vector<std::pair<int, int>>> reference(k);  // t -> sorted (r*k+s, count)
  std::vector<char> have_ref(k, 0);
  std::vector<int> scratch((size_t)k * k, 0);
  std::vector<int> touched;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int t = x.color(a, b);
      touched.clear();
      for (int g = 0; g < n; ++g) {
        int idx = x.color(a, g) * k + x.color(g, b);
        if (scratch[idx]++ == 0) touched.push_back(idx);
      }
      std::sort(touched.begin(), touched.end());
      if (!have_ref[t]) {
        have_ref[t] = 1;
        auto& ref = reference[t];
        ref.reserve(touched.size());
        for (int idx : touched) ref.emplace_back(idx, scratch[idx]);
      } else {
        const auto& ref = reference[t];
        bool match = ref.size() == touched.size();
        for (size_t i = 0; match && i < ref.size(); ++i)
          match = ref[i].first == touched[i] && ref[i].second == scratch[touched[i]];
        if (!match) {
          for (int idx : touched) scratch[idx] = 0;
          return fail("intersection numbers not constant on color " + std::to_string(t) +
                      ", witness pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
      for (int idx : touched) scratch[idx] = 0;
    }
  }
  return rep;
}

IntersectionTensor intersection_tensor(const CoherentConfiguration& x) {
  const int n = x.size;
  const int k = x.colors;
  IntersectionTensor tensor;
  tensor.rank = k;
  tensor.entries.assign((size_t)k * k * k, 0);
  std::vector<char> done(k, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int t = x.color(a, b);
      if (done[t]) continue;
      done[t] = 1;
      for (int g = 0; g < n; ++g)
        ++tensor.at(x.color(a, g), x.color(g, b), t);
    }
  return tensor;
}

std::vector<std::vector<int>> fibers(const CoherentConfiguration& x) {
  std::vector<std::vector<int>> result;
  std::vector<int> fiber_of_color(x.colors, -1);
  for (int a = 0; a < x.size; ++a) {
    int c = x.color(a, a);
    if (fiber_of_color[c] == -1) {
      fiber_of_color[c] = (int)result.size();
      result.emplace_back();
    }
    result[fiber_of_color[c]].push_back(a);
  }
  return result;
}

int valency(const CoherentConfiguration& x, int s) {
  if (s < 0 || s >= x.colors) throw std::out_of_range("valency: color out of range");
  for (int a = 0; a < x.size; ++a) {
    int count = 0;
    for (int b = 0; b < x.size; ++b)
      if (x.color(a, b) == s) ++count;
    if (count > 0) return count;
  }
  return 0;
}

Parabolic parabolic_closure(const CoherentConfiguration& x, const std::vector<int>& color_set) {
  const int n = x.size;
  std::vector<char> in_set(x.colors, 0);
  for (int c : color_set) {
    if (c < 0 || c >= x.colors) throw std::out_of_range("parabolic_closure: color out of range");
    in_set[c] = 1;
  }
  // union-find over points
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (in_set[x.color(a, b)]) parent[find(a)] = find(b);

  Parabolic par;
  par.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    int root = find(a);
    if (par.class_of[root] == -1) {
      par.class_of[root] = (int)par.classes.size();
      par.classes.emplace_back();
    }
    par.class_of[a] = par.class_of[root];
    par.classes[par.class_of[a]].push_back(a);
  }

  // the closure must itself be a union of colors
  std::vector<int> same_class(x.colors, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int in = par.class_of[a] == par.class_of[b] ? 1 : 0;
      int c = x.color(a, b);
      if (same_class[c] == -1)
        same_class[c] = in;
      else if (same_class[c] != in)
        throw std::logic_error("parabolic_closure: closure is not a union of colors");
    }
  return par;
}

CoherentConfiguration restriction(const CoherentConfiguration& x, const std::vector<int>& delta) {
  auto fbs = fibers(x);
  std::vector<int> sorted_delta = delta;
  std::sort(sorted_delta.begin(), sorted_delta.end());
  bool is_fiber = false;
  for (const auto& f : fbs)
    if (f == sorted_delta) is_fiber = true;
  if (!is_fiber) throw std::invalid_argument("restriction: delta is not a fiber");

  CoherentConfiguration sub;
  sub.size = (int)sorted_delta.size();
  sub.matrix.resize((size_t)sub.size * sub.size);
  for (int i = 0; i < sub.size; ++i)
    for (int j = 0; j < sub.size; ++j)
      sub.color(i, j) = x.color(sorted_delta[i], sorted_delta[j]);
  sub.colors = x.colors;
  return canonical_renumber(sub);
}

bool is_regular(const CoherentConfiguration& x) {
  if (fibers(x).size() != 1)
    throw std::invalid_argument("is_regular: configuration is not a scheme");
  for (int s = 0; s < x.colors; ++s)
    if (valency(x, s) != 1) return false;
  return true;
}

void write_matrix(std::ostream& os, const CoherentConfiguration& x) {
  os << x.size << ' ' << x.colors << '\n';
  for (int a = 0; a < x.size; ++a) {
    for (int b = 0; b < x.size; ++b) {
      if (b) os << ' ';
      os << x.color(a, b);
    }
    os << '\n';
  }
}

CoherentConfiguration read_matrix(std::istream& is) {
  CoherentConfiguration x;
  if (!(is >> x.size >> x.colors)) throw std::runtime_error("read_matrix: bad header");
  if (x.size < 0 || x.colors < 0 || x.colors > 65536)
    throw std::runtime_error("read_matrix: bad dimensions");
  x.matrix.resize((size_t)x.size * x.size);
  for (auto& c : x.matrix) {
    int v;
    if (!(is >> v) || v < 0 || v >= x.colors) throw std::runtime_error("read_matrix: bad entry");
    c = (uint16_t)v;
  }
  return x;
}

}  // namespace tatra
