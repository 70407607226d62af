#include "tatra/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tatra {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < (int)img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < (int)img_.size(); ++i) inv[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> img(img_.size());
  for (int i = 0; i < (int)img_.size(); ++i) img[i] = other.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_)
    throw std::out_of_range("PermGroup::orbit: point out of range");
  std::vector<int> result{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (size_t head = 0; head < result.size(); ++head) {
    int p = result[head];
    for (const auto& g : gens_) {
      int q = g[p];
      if (!seen[q]) {
        seen[q] = 1;
        result.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> PermGroup::orbits_on_pairs(int* orbit_count) const {
  const int n = degree_;
  std::vector<int> id((size_t)n * n, -1);
  std::vector<int> stack;
  int next_id = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      size_t root = (size_t)a * n + b;
      if (id[root] != -1) continue;
      int cur = next_id++;
      id[root] = cur;
      stack.assign(1, (int)root);
      while (!stack.empty()) {
        int pq = stack.back();
        stack.pop_back();
        int p = pq / n, q = pq % n;
        for (const auto& g : gens_) {
          size_t im = (size_t)g[p] * n + g[q];
          if (id[im] == -1) {
            id[im] = cur;
            stack.push_back((int)im);
          }
        }
      }
    }
  }
  if (orbit_count) *orbit_count = next_id;
  return id;
}

void PermGroup::rebuild_level(int l) const {
  Level& lev = levels_[l];
  lev.orbit.assign(1, lev.base_point);
  lev.in_orbit.assign(degree_, 0);
  lev.in_orbit[lev.base_point] = 1;
  lev.transversal.assign(degree_, Permutation());
  lev.transversal[lev.base_point] = Permutation(degree_);
  for (size_t head = 0; head < lev.orbit.size(); ++head) {
    int p = lev.orbit[head];
    for (const auto& g : lev.gens) {
      int q = g[p];
      if (!lev.in_orbit[q]) {
        lev.in_orbit[q] = 1;
        lev.transversal[q] = lev.transversal[p] * g;
        lev.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, int> PermGroup::sift(const Permutation& f, int from) const {
  Permutation h = f;
  for (int l = from; l < (int)levels_.size(); ++l) {
    int p = h[levels_[l].base_point];
    if (!levels_[l].in_orbit[p]) return {h, l};
    h = h * levels_[l].transversal[p].inverse();
  }
  return {h, (int)levels_.size()};
}

void PermGroup::build_chain() const {
  if (chain_built_) return;
  levels_.clear();

  auto smallest_moved = [this](const Permutation& g) {
    for (int i = 0; i < degree_; ++i)
      if (g[i] != i) return i;
    return -1;
  };

  auto new_level = [&](int base) {
    levels_.push_back(Level{base, {}, {}, {}, {}});
  };

  // place each non-identity generator at the first level whose base it moves
  std::vector<Permutation> pending;
  for (const auto& g : gens_)
    if (!g.is_identity()) pending.push_back(g);
  if (!pending.empty()) {
    int base = degree_;
    for (const auto& g : pending) base = std::min(base, smallest_moved(g));
    new_level(base);
    levels_[0].gens = pending;
    rebuild_level(0);
  }

  // Schreier-Sims: verify each level bottom-up; a failed verification adds a
  // strong generator deeper in the chain and restarts from there.
  int l = (int)levels_.size() - 1;
  while (l >= 0) {
    bool failed = false;
    for (size_t oi = 0; !failed && oi < levels_[l].orbit.size(); ++oi) {
      int p = levels_[l].orbit[oi];
      for (size_t si = 0; si < levels_[l].gens.size(); ++si) {
        const Permutation& s = levels_[l].gens[si];
        Permutation u = levels_[l].transversal[p] * s * levels_[l].transversal[s[p]].inverse();
        if (u.is_identity()) continue;
        auto [h, j] = sift(u, l + 1);
        if (h.is_identity()) continue;
        if (j == (int)levels_.size()) new_level(smallest_moved(h));
        // h fixes the bases of levels l+1..j-1; adding it to every level up to
        // j (not just j) keeps the generator sets nested, which the orbit-size
        // product in order() depends on.
        for (int i = l + 1; i <= j; ++i) {
          levels_[i].gens.push_back(h);
          rebuild_level(i);
        }
        l = j;
        failed = true;
        break;
      }
    }
    if (!failed) --l;
  }
  chain_built_ = true;
}

unsigned long long PermGroup::order() const {
  build_chain();
  unsigned long long result = 1;
  for (const auto& lev : levels_) result *= lev.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& f) const {
  if (f.degree() != degree_)
    throw std::invalid_argument("PermGroup::contains: degree mismatch");
  build_chain();
  auto [h, l] = sift(f, 0);
  (void)l;
  return h.is_identity();
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn) const {
  build_chain();
  // every element factors uniquely as h * t_p with h in the next stabilizer
  std::function<void(int, const Permutation&)> rec = [&](int l, const Permutation& h) {
    if (l < 0) {
      fn(h);
      return;
    }
    for (int p : levels_[l].orbit) rec(l - 1, h * levels_[l].transversal[p]);
  };
  rec((int)levels_.size() - 1, Permutation(degree_));
}

}  // namespace tatra
