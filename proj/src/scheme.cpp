#include "tatra/scheme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tatra {

namespace {

// order key: 0 first, then by discrete log
inline long long elem_key(const FiniteField& F, int x) { return x == 0 ? 0 : F.log(x) + 1; }

inline std::pair<long long, long long> point_key(const FiniteField& F, const OmegaPoint& p) {
  return {elem_key(F, p.v1), elem_key(F, p.v2)};
}

}  // namespace

OmegaPoint TatraScheme::canonical(int v1, int v2) const {
  if (v1 == 0 && v2 == 0) throw std::invalid_argument("canonical: zero vector");
  OmegaPoint best{-1, -1};
  std::pair<long long, long long> best_key{0, 0};
  for (int j = 0; j < m; ++j) {
    int x = field.exp(j * n);
    OmegaPoint cand{field.mul(x, v1), field.mul(x, v2)};
    auto key = point_key(field, cand);
    if (best.v1 == -1 || key < best_key) {
      best = cand;
      best_key = key;
    }
  }
  return best;
}

int TatraScheme::point_index(const OmegaPoint& p) const {
  auto key = point_key(field, p);
  auto it = std::lower_bound(points.begin(), points.end(), key,
                             [this](const OmegaPoint& a, const std::pair<long long, long long>& k) {
                               return point_key(field, a) < k;
                             });
  if (it == points.end() || !(*it == p)) return -1;
  return (int)(it - points.begin());
}

std::optional<int> form_value(const TatraScheme& x, const OmegaPoint& a, const OmegaPoint& b) {
  int det = x.field.sub(x.field.mul(a.v1, b.v2), x.field.mul(a.v2, b.v1));
  if (det == 0) return std::nullopt;
  return x.cosets.coset_of(det);
}

TatraScheme build_tatra(int q, int n) {
  // factor q = r^d
  int r = 0;
  for (int p = 2; p <= q; ++p)
    if (q % p == 0) {
      r = p;
      break;
    }
  if (r == 0) throw std::invalid_argument("build_tatra: q must be a prime power >= 2");
  int d = 0, t = q;
  while (t % r == 0) {
    t /= r;
    ++d;
  }
  if (t != 1) throw std::invalid_argument("build_tatra: q is not a prime power");

  FiniteField F(r, d);
  CosetStructure cs = coset_structure(F, n);  // validates admissibility
  FrobeniusData fd = frobenius_data(F, cs);

  TatraScheme x{q, n, cs.m, std::move(F), std::move(cs), std::move(fd), {}, {}};

  // canonical representatives: (0, rho^c) for c < n, and (rho^c, v2) for
  // c < n, v2 in F (rho the primitive element)
  x.points.reserve((size_t)n * (q + 1));
  for (int c = 0; c < n; ++c) x.points.push_back({0, x.field.exp(c)});
  for (int c = 0; c < n; ++c)
    for (int v2 = 0; v2 < q; ++v2) x.points.push_back({x.field.exp(c), v2});
  std::sort(x.points.begin(), x.points.end(), [&x](const OmegaPoint& a, const OmegaPoint& b) {
    return point_key(x.field, a) < point_key(x.field, b);
  });

  const int deg = x.degree();
  x.config.size = deg;
  x.config.colors = 2 * n;
  x.config.matrix.resize((size_t)deg * deg);
  const FiniteField& f = x.field;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < deg; ++i) {
    const OmegaPoint a = x.points[i];
    for (int j = 0; j < deg; ++j) {
      const OmegaPoint b = x.points[j];
      int det = f.sub(f.mul(a.v1, b.v2), f.mul(a.v2, b.v1));
      int color;
      if (det != 0) {
        color = n + x.cosets.coset_of(det);
      } else {
        // same line: b = lambda * a on the first nonzero coordinate
        int lambda = a.v1 != 0 ? f.mul(b.v1, f.inv(a.v1)) : f.mul(b.v2, f.inv(a.v2));
        color = x.cosets.coset_of(lambda);
      }
      x.config.color(i, j) = (uint16_t)color;
    }
  }
  return x;
}

StructureReport verify_structure(const TatraScheme& x) {
  StructureReport rep;
  auto check = [&rep](const std::string& name, bool ok, const std::string& witness = "") {
    rep.checks.push_back({name, ok, ok ? "" : witness});
  };
  const int n = x.n, q = x.q, m = x.m;
  const auto& cc = x.config;

  AxiomReport ax = verify_axioms(cc);
  check("coherent axioms", ax.ok, ax.message);
  check("degree n(q+1)", cc.size == n * (q + 1),
        "degree " + std::to_string(cc.size));
  check("rank 2n", cc.colors == 2 * n, "rank " + std::to_string(cc.colors));

  // (a) valencies
  {
    bool ok = true;
    std::string w;
    for (int g = 0; g < n && ok; ++g) {
      if (valency(cc, x.r_color(g)) != 1) {
        ok = false;
        w = "n_{r_" + std::to_string(g) + "} != 1";
      } else if (valency(cc, x.s_color(g)) != q) {
        ok = false;
        w = "n_{s_" + std::to_string(g) + "} != q";
      }
    }
    check("valencies n_r=1, n_s=q", ok, w);
  }

  // (b) transposes from the matrix
  {
    std::vector<int> transpose(cc.colors, -1);
    for (int a = 0; a < cc.size; ++a)
      for (int b = 0; b < cc.size; ++b) transpose[cc.color(a, b)] = cc.color(b, a);
    bool ok = true;
    std::string w;
    for (int g = 0; g < n && ok; ++g) {
      if (transpose[x.r_color(g)] != x.r_color((n - g) % n)) {
        ok = false;
        w = "r_" + std::to_string(g) + "^* != r_{-" + std::to_string(g) + "}";
      } else if (transpose[x.s_color(g)] != x.s_color(g)) {
        ok = false;
        w = "s_" + std::to_string(g) + "^* != s_" + std::to_string(g);
      }
    }
    check("transposes r_g*=r_{g^-1}, s_g*=s_g", ok, w);
  }

  IntersectionTensor T = intersection_tensor(cc);

  // (c) composition rules via support of the tensor
  {
    bool ok = true;
    std::string w;
    for (int h = 0; h < n && ok; ++h)
      for (int g = 0; g < n && ok; ++g)
        for (int t = 0; t < cc.colors && ok; ++t) {
          bool rr = T.at(x.r_color(h), x.r_color(g), t) != 0;
          if (rr != (t == x.r_color((h + g) % n))) {
            ok = false;
            w = "r_h r_g support at h=" + std::to_string(h) + " g=" + std::to_string(g);
          }
          bool rs = T.at(x.r_color(h), x.s_color(g), t) != 0;
          if (ok && rs != (t == x.s_color(((g - h) % n + n) % n))) {
            ok = false;
            w = "r_h s_g support at h=" + std::to_string(h) + " g=" + std::to_string(g);
          }
          bool sr = T.at(x.s_color(g), x.r_color(h), t) != 0;
          if (ok && sr != (t == x.s_color((g + h) % n))) {
            ok = false;
            w = "s_g r_h support at h=" + std::to_string(h) + " g=" + std::to_string(g);
          }
        }
    check("composition r_h r_g = r_{hg}, r_h s_g = s_{h^-1 g}, s_g r_h = s_{gh}", ok, w);
  }

  // (d) s_h s_g intersection numbers
  {
    bool ok = true;
    std::string w;
    for (int h = 0; h < n && ok; ++h)
      for (int g = 0; g < n && ok; ++g) {
        int hg = ((g - h) % n + n) % n;  // h^{-1} g
        for (int v = 0; v < n && ok; ++v) {
          int expect_r = v == hg ? q : 0;
          if (T.at(x.s_color(h), x.s_color(g), x.r_color(v)) != expect_r) {
            ok = false;
            w = "c_{s_h s_g}^{r_x} at h=" + std::to_string(h) + " g=" + std::to_string(g) +
                " x=" + std::to_string(v);
          }
          if (ok && T.at(x.s_color(h), x.s_color(g), x.s_color(v)) != m) {
            ok = false;
            w = "c_{s_h s_g}^{s_y} at h=" + std::to_string(h) + " g=" + std::to_string(g) +
                " y=" + std::to_string(v);
          }
        }
      }
    check("c_{s_h s_g}^{r_{h^-1 g}} = q, others 0, c_{s_h s_g}^{s_y} = m", ok, w);
  }

  // r_C classes
  std::vector<int> r_colors(n);
  for (int g = 0; g < n; ++g) r_colors[g] = x.r_color(g);
  Parabolic rc = parabolic_closure(cc, r_colors);

  // (e) |alpha s_g  intersect  Gamma| = 1 whenever alpha not in Gamma
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < cc.size && ok; ++a)
      for (int g = 0; g < n && ok; ++g) {
        std::vector<int> hits(rc.classes.size(), 0);
        for (int b = 0; b < cc.size; ++b)
          if (cc.color(a, b) == x.s_color(g)) ++hits[rc.class_of[b]];
        for (size_t cls = 0; cls < rc.classes.size() && ok; ++cls) {
          if ((int)cls == rc.class_of[a]) continue;
          if (hits[cls] != 1) {
            ok = false;
            w = "alpha=" + std::to_string(a) + " g=" + std::to_string(g) +
                " Gamma=" + std::to_string(cls) + " count=" + std::to_string(hits[cls]);
          }
        }
      }
    check("|alpha s_g  n  Gamma| = 1", ok, w);
  }

  // (f) r_C has q+1 classes of size n
  {
    bool ok = (int)rc.classes.size() == q + 1;
    for (const auto& cls : rc.classes)
      if ((int)cls.size() != n) ok = false;
    check("r_C parabolic: q+1 classes of size n", ok,
          std::to_string(rc.classes.size()) + " classes");
  }

  return rep;
}

std::string labels_json(const TatraScheme& x) {
  nlohmann::ordered_json j;
  for (int c = 0; c < x.config.colors; ++c) {
    nlohmann::ordered_json entry;
    entry["kind"] = x.is_r_color(c) ? "r" : "s";
    entry["g"] = x.label_of(c);
    j[std::to_string(c)] = entry;
  }
  return j.dump(2);
}

}  // namespace tatra
