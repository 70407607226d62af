#include "tatra/autiso.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace tatra {

OmegaPoint act(const SemilinearMap& f, const TatraScheme& x, const OmegaPoint& p) {
  const FiniteField& F = x.field;
  int v1 = F.frobenius(p.v1, f.frob_power);
  int v2 = F.frobenius(p.v2, f.frob_power);
  int w1 = F.add(F.mul(f.t[0], v1), F.mul(f.t[1], v2));
  int w2 = F.add(F.mul(f.t[2], v1), F.mul(f.t[3], v2));
  return x.canonical(w1, w2);
}

Permutation perm_of(const SemilinearMap& f, const TatraScheme& x) {
  std::vector<int> img(x.degree());
  for (int i = 0; i < x.degree(); ++i) {
    int j = x.point_index(act(f, x, x.points[i]));
    if (j < 0) throw std::logic_error("perm_of: image is not a canonical point");
    img[i] = j;
  }
  return Permutation(std::move(img));
}

std::optional<std::vector<int>> color_map_of(const Permutation& f, const CoherentConfiguration& x) {
  std::vector<int> map(x.colors, -1);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b) {
      int c = x.color(a, b), ic = x.color(f[a], f[b]);
      if (map[c] == -1)
        map[c] = ic;
      else if (map[c] != ic)
        return std::nullopt;
    }
  std::vector<char> hit(x.colors, 0);
  for (int c : map) {
    if (c < 0 || hit[c]) return std::nullopt;
    hit[c] = 1;
  }
  return map;
}

std::vector<int> relation_image(const SemilinearMap& f, const TatraScheme& x) {
  const FiniteField& F = x.field;
  const int n = x.n;
  int det = F.sub(F.mul(f.t[0], f.t[3]), F.mul(f.t[1], f.t[2]));
  if (det == 0) throw std::invalid_argument("relation_image: singular matrix");
  int det_coset = x.cosets.coset_of(det);
  int a = x.frobenius.action_on_c[((f.frob_power % x.frobenius.d) + x.frobenius.d) % x.frobenius.d];

  std::vector<int> formula(x.config.colors);
  for (int g = 0; g < n; ++g) {
    formula[x.r_color(g)] = x.r_color((int)((long long)a * g % n));
    formula[x.s_color(g)] = x.s_color((int)(((long long)a * g + det_coset) % n));
  }

  auto actual = color_map_of(perm_of(f, x), x.config);
  if (!actual || *actual != formula)
    throw std::logic_error("relation_image: formula and permutation action disagree");
  return formula;
}

namespace {

std::vector<Permutation> aut_generators(const TatraScheme& x) {
  std::vector<Permutation> gens;
  // SL(2,q): transvections with all powers of a primitive element in the
  // off-diagonal slot (two matrices suffice only when q is prime)
  for (int i = 0; i < x.field.degree(); ++i) {
    int omega_i = x.field.exp(i);
    gens.push_back(perm_of(SemilinearMap{{1, omega_i, 0, 1}, 0}, x));
    gens.push_back(perm_of(SemilinearMap{{1, 0, omega_i, 1}, 0}, x));
  }
  if (x.m > 1)  // kappa generates K = <rho^n>
    gens.push_back(perm_of(SemilinearMap::diag(x.field.exp(x.n), 1), x));
  if (x.frobenius.d0 > 1)  // Sigma_0 = <Frob^{d/d0}>
    gens.push_back(perm_of(SemilinearMap::diag(1, 1, x.frobenius.d / x.frobenius.d0), x));
  return gens;
}

}  // namespace

PermGroup automorphism_group(const TatraScheme& x) {
  return PermGroup(x.degree(), aut_generators(x));
}

PermGroup isomorphism_group(const TatraScheme& x) {
  auto gens = aut_generators(x);
  gens.push_back(perm_of(SemilinearMap::diag(x.field.primitive_element(), 1), x));
  if (x.field.degree() > 1) gens.push_back(perm_of(SemilinearMap::diag(1, 1, 1), x));
  return PermGroup(x.degree(), gens);
}

bool schurity_check(const TatraScheme& x) {
  PermGroup aut = automorphism_group(x);
  int orbit_count = 0;
  std::vector<int> ids = aut.orbits_on_pairs(&orbit_count);
  if (orbit_count != x.config.colors) return false;
  std::vector<int> id_to_color(orbit_count, -1), color_to_id(x.config.colors, -1);
  for (size_t cell = 0; cell < ids.size(); ++cell) {
    int id = ids[cell], c = x.config.matrix[cell];
    if (id_to_color[id] == -1) id_to_color[id] = c;
    if (color_to_id[c] == -1) color_to_id[c] = id;
    if (id_to_color[id] != c || color_to_id[c] != id) return false;
  }
  return true;
}

std::vector<int> color_map_of(const AlgebraicAut& phi, const TatraScheme& x) {
  const int n = x.n;
  std::vector<int> map(x.config.colors);
  for (int g = 0; g < n; ++g) {
    map[x.r_color(g)] = x.r_color((int)((long long)phi.u * g % n));
    map[x.s_color(g)] = x.s_color((int)(((long long)phi.u * g + phi.shift) % n));
  }
  return map;
}

bool preserves_tensor(const std::vector<int>& color_map, const IntersectionTensor& tensor) {
  const int k = tensor.rank;
  if ((int)color_map.size() != k) throw std::invalid_argument("preserves_tensor: rank mismatch");
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t)
        if (tensor.at(color_map[r], color_map[s], color_map[t]) != tensor.at(r, s, t))
          return false;
  return true;
}

std::vector<AlgebraicAut> enumerate_algebraic_auts(const TatraScheme& x) {
  IntersectionTensor tensor = intersection_tensor(x.config);
  std::vector<AlgebraicAut> result;
  for (int u = 0; u < x.n; ++u) {
    if (std::gcd(u, x.n) != 1) continue;
    for (int g = 0; g < x.n; ++g) {
      AlgebraicAut phi{u, g};
      if (!preserves_tensor(color_map_of(phi, x), tensor))
        throw std::logic_error("enumerate_algebraic_auts: phi does not preserve the tensor");
      result.push_back(phi);
    }
  }
  return result;
}

std::vector<std::vector<int>> tensor_preserving_bijections(const CoherentConfiguration& x) {
  IntersectionTensor tensor = intersection_tensor(x);
  const int k = x.colors;
  // colors grouped by valency; bijections permute within groups
  std::vector<int> vals(k);
  for (int c = 0; c < k; ++c) vals[c] = valency(x, c);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < k;) {
    int j = i;
    std::vector<int> grp;
    while (j < k && vals[order[j]] == vals[order[i]]) grp.push_back(order[j++]);
    groups.push_back(std::move(grp));
    i = j;
  }

  std::vector<std::vector<int>> found;
  std::vector<int> map(k, -1);
  std::vector<std::vector<int>> images;
  for (const auto& g : groups) images.push_back(g);  // will be permuted

  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == groups.size()) {
      if (preserves_tensor(map, tensor)) found.push_back(map);
      return;
    }
    auto& img = images[gi];
    std::sort(img.begin(), img.end());
    do {
      for (size_t i = 0; i < img.size(); ++i) map[groups[gi][i]] = img[i];
      rec(gi + 1);
    } while (std::next_permutation(img.begin(), img.end()));
  };
  rec(0);
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<SemilinearMap> is_induced(const AlgebraicAut& phi, const TatraScheme& x) {
  const int n = x.n;
  for (int i = 0; i < x.frobenius.d; ++i) {
    if (x.frobenius.action_on_c[i] != phi.u % n) continue;
    SemilinearMap f = SemilinearMap::diag(x.field.exp(phi.shift), 1, i);
    if (relation_image(f, x) != color_map_of(phi, x))
      throw std::logic_error("is_induced: witness fails verification");
    return f;
  }
  return std::nullopt;
}

std::optional<bool> is_induced_bruteforce(const AlgebraicAut& phi, const TatraScheme& x,
                                          unsigned long long max_order) {
  PermGroup iso = isomorphism_group(x);
  if (iso.order() > max_order) return std::nullopt;
  std::vector<int> target = color_map_of(phi, x);
  // representative pair per color
  std::vector<std::pair<int, int>> rep(x.config.colors, {-1, -1});
  for (int a = 0; a < x.degree(); ++a)
    for (int b = 0; b < x.degree(); ++b)
      if (rep[x.config.color(a, b)].first == -1) rep[x.config.color(a, b)] = {a, b};
  bool found = false;
  iso.for_each_element([&](const Permutation& f) {
    if (found) return;
    for (int c = 0; c < x.config.colors; ++c)
      if (x.config.color(f[rep[c].first], f[rep[c].second]) != target[c]) return;
    found = true;
  });
  return found;
}

InducedRatio induced_ratio(const TatraScheme& x) {
  InducedRatio r;
  auto all = enumerate_algebraic_auts(x);
  r.alg_aut_count = (long long)all.size();
  long long by_criterion = 0;
  for (const auto& phi : all)
    if (is_induced(phi, x)) ++by_criterion;
  unsigned long long aut = automorphism_group(x).order();
  unsigned long long iso = isomorphism_group(x).order();
  if (iso % aut != 0)
    throw std::logic_error("induced_ratio: |Iso| not divisible by |Aut|");
  long long by_quotient = (long long)(iso / aut);
  if (by_criterion != by_quotient)
    throw std::logic_error("induced_ratio: counting route and order-quotient route disagree");
  r.induced_count = by_criterion;
  long long g = std::gcd(r.alg_aut_count, r.induced_count);
  r.ratio_num = r.alg_aut_count / g;
  r.ratio_den = r.induced_count / g;
  return r;
}

std::string autiso_report_json(const TatraScheme& x) {
  InducedRatio r = induced_ratio(x);
  nlohmann::ordered_json j;
  j["q"] = x.q;
  j["n"] = x.n;
  j["rank"] = x.rank();
  j["degree"] = x.degree();
  j["aut_order"] = automorphism_group(x).order();
  j["iso_order"] = isomorphism_group(x).order();
  j["alg_aut_count"] = r.alg_aut_count;
  j["induced_count"] = r.induced_count;
  if (r.ratio_den == 1)
    j["ratio"] = r.ratio_num;
  else
    j["ratio"] = std::to_string(r.ratio_num) + "/" + std::to_string(r.ratio_den);
  j["primitive_root"] = is_primitive_root(x.field.characteristic(), x.n);
  return j.dump(2);
}

}  // namespace tatra
