#include "fcat/presheaf.hpp"

#include <algorithm>
#include <functional>

namespace fcat {

std::vector<int> hom_positions(const FinCat& C) {
  std::vector<int> pos(C.num_arrows(), -1);
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = 0; y < C.num_objects(); ++y) {
      const auto& h = C.hom(x, y);
      for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<int>(i);
    }
  return pos;
}

namespace {

FinSet hom_set(const FinCat& C, int x, int y) {
  FinSet s;
  for (int f : C.hom(x, y)) s.elems.push_back(C.arrow_name(f));
  return s;
}

}  // namespace

SetFunctor yoneda(const Cat& A, int a) {
  const FinCat& C = *A;
  if (a < 0 || a >= C.num_objects()) throw Error("UnknownObject", std::to_string(a));
  const auto pos = hom_positions(C);
  SetFunctor F{op_cat(A), {}, {}};
  for (int x = 0; x < C.num_objects(); ++x) F.sets.push_back(hom_set(C, x, a));
  for (int g = 0; g < C.num_arrows(); ++g) {
    std::vector<int> m;
    for (int h : C.hom(C.tgt(g), a)) m.push_back(pos[C.compose(h, g)]);
    F.maps.push_back(std::move(m));
  }
  return F;
}

SetFunctor yoneda(const Cat& A, const Id& a) { return yoneda(A, A->object(a)); }

SetFunctor corepresentable(const Cat& A, int a) {
  const FinCat& C = *A;
  if (a < 0 || a >= C.num_objects()) throw Error("UnknownObject", std::to_string(a));
  const auto pos = hom_positions(C);
  SetFunctor F{A, {}, {}};
  for (int x = 0; x < C.num_objects(); ++x) F.sets.push_back(hom_set(C, a, x));
  for (int g = 0; g < C.num_arrows(); ++g) {
    std::vector<int> m;
    for (int h : C.hom(a, C.src(g))) m.push_back(pos[C.compose(g, h)]);
    F.maps.push_back(std::move(m));
  }
  return F;
}

std::vector<NatFamily> nat_hom(const SetFunctor& F, const SetFunctor& G) {
  if (!same_category(F.shape, G.shape)) throw Error("ShapeMismatch", "nat_hom");
  const FinCat& C = *F.shape;
  const int n = C.num_objects();
  std::vector<std::pair<int, int>> vars;
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < F.sets[x].size(); ++i) vars.emplace_back(x, i);
  std::vector<std::vector<int>> out(n), in(n);
  // preimage[f][j]: elements of F(src f) sent to j by F(f)
  std::vector<std::vector<std::vector<int>>> preimage(C.num_arrows());
  for (int f = 0; f < C.num_arrows(); ++f) {
    if (C.is_identity(f)) continue;
    out[C.src(f)].push_back(f);
    in[C.tgt(f)].push_back(f);
    preimage[f].resize(F.sets[C.tgt(f)].size());
    for (int i = 0; i < F.sets[C.src(f)].size(); ++i) preimage[f][F.maps[f][i]].push_back(i);
  }
  std::vector<NatFamily> result;
  NatFamily cur;
  for (int x = 0; x < n; ++x) cur.comp.emplace_back(F.sets[x].size(), -1);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == vars.size()) {
      result.push_back(cur);
      return;
    }
    auto [x, i] = vars[k];
    for (int v = 0; v < G.sets[x].size(); ++v) {
      cur.comp[x][i] = v;
      bool ok = true;
      for (int f : out[x]) {
        int w = cur.comp[C.tgt(f)][F.maps[f][i]];
        if (w >= 0 && G.maps[f][v] != w) {
          ok = false;
          break;
        }
      }
      for (std::size_t fi = 0; ok && fi < in[x].size(); ++fi) {
        int f = in[x][fi];
        for (int j : preimage[f][i]) {
          int w = cur.comp[C.src(f)][j];
          if (w >= 0 && G.maps[f][w] != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok) go(k + 1);
    }
    cur.comp[x][i] = -1;
  };
  go(0);
  return result;
}

NatFamily yoneda_family(const Cat& A, int a, const SetFunctor& F, int s) {
  NatFamily n;
  for (int x = 0; x < A->num_objects(); ++x) {
    std::vector<int> c;
    for (int h : A->hom(x, a)) c.push_back(F.maps[h][s]);
    n.comp.push_back(std::move(c));
  }
  return n;
}

NatFamily yoneda_on_arrow(const Cat& A, int g) {
  const FinCat& C = *A;
  const auto pos = hom_positions(C);
  NatFamily n;
  for (int x = 0; x < C.num_objects(); ++x) {
    std::vector<int> c;
    for (int h : C.hom(x, C.src(g))) c.push_back(pos[C.compose(g, h)]);
    n.comp.push_back(std::move(c));
  }
  return n;
}

SetFunctor restrict(const FinFunctor& f, const SetFunctor& G) {
  if (!same_category(G.shape, op_cat(f.cod))) throw Error("ShapeMismatch", "restrict");
  return precompose(G, op_functor(f, op_cat(f.dom), G.shape));
}

ExtensionResult extend_with_unit(const FinFunctor& f, const SetFunctor& F) {
  if (!same_category(F.shape, op_cat(f.dom))) throw Error("ShapeMismatch", "extend");
  return lan_set(op_functor(f, F.shape, op_cat(f.cod)), F);
}

SetFunctor extend(const FinFunctor& f, const SetFunctor& F) { return extend_with_unit(f, F).extension; }

Checked<AdjunctionBijection> check_ext_restrict_adjunction(const FinFunctor& f, const SetFunctor& F,
                                                           const SetFunctor& G) {
  const ExtensionResult E = extend_with_unit(f, F);
  const SetFunctor RG = restrict(f, G);
  const FinFunctor opf = op_functor(f, F.shape, G.shape);
  AdjunctionBijection bij{nat_hom(E.extension, G), nat_hom(F, RG), {}};
  const FinCat& B = *f.cod;

  // Mate of β: [(a, h: b → f a, x)] ↦ G(h)(β_a(x)).
  auto transpose = [&](const NatFamily& beta) -> Checked<NatFamily> {
    NatFamily alpha;
    for (int b = 0; b < B.num_objects(); ++b) {
      const Colimit& col = E.colimits[b];
      const CommaCat& cc = E.commas[b];
      std::vector<int> c(col.num_classes(), -1);
      for (int e = 0; e < col.quotient.carrier.size(); ++e) {
        auto [j, x] = col.origin[e];
        int a = cc.projection.obj[j];
        int v = G.maps[cc.arrow[j]][beta.comp[a][x]];
        int k = col.class_number[e];
        if (c[k] >= 0 && c[k] != v)
          return Violation{"BijectionFails", "mate not well defined at " + col.quotient.carrier[e]};
        c[k] = v;
      }
      alpha.comp.push_back(std::move(c));
    }
    return alpha;
  };

  std::vector<int> hit(bij.right.size(), -1);
  for (std::size_t i = 0; i < bij.left.size(); ++i) {
    NatFamily beta = vcompose(whisker(bij.left[i], opf), E.unit);
    int j = index_of(bij.right, beta);
    if (j < 0) return Violation{"BijectionFails", "left#" + std::to_string(i) + " lands outside nat(F, restrict G)"};
    if (hit[j] >= 0)
      return Violation{"BijectionFails", "left#" + std::to_string(hit[j]) + " and left#" + std::to_string(i) +
                                             " have the same image"};
    hit[j] = static_cast<int>(i);
    bij.forward.push_back(j);
  }
  for (std::size_t j = 0; j < bij.right.size(); ++j) {
    auto back = transpose(bij.right[j]);
    if (!back) return back.violation();
    if (auto v = check_nat_family(E.extension, G, back.value()))
      return Violation{"BijectionFails", "mate of right#" + std::to_string(j) + " is not natural: " + v->str()};
    int i = index_of(bij.left, back.value());
    if (i < 0 || hit[j] != i)
      return Violation{"BijectionFails", "right#" + std::to_string(j) + " does not round-trip"};
  }
  return bij;
}

Checked<int> check_yoneda_lemma(const Cat& A, int a, const SetFunctor& F) {
  const auto pos = hom_positions(*A);
  const auto hom = nat_hom(yoneda(A, a), F);
  std::vector<int> eval;
  for (const auto& alpha : hom) eval.push_back(alpha.comp[a][pos[A->identity(a)]]);
  if (!is_bijection(eval, F.sets[a].size())) return Violation{"EvaluationNotBijective", A->object_name(a)};
  for (int s = 0; s < F.sets[a].size(); ++s)
    if (eval[index_of(hom, yoneda_family(A, a, F, s))] != s)
      return Violation{"EvaluationMismatch", A->object_name(a) + "," + F.sets[a][s]};
  return F.sets[a].size();
}

Checked<NatFamily> density_check(const Cat& A, const SetFunctor& F) {
  NatFamily map;
  for (int x = 0; x < A->num_objects(); ++x) {
    const WeightedColimit wc = weighted_colim(A, F, corepresentable(A, x));
    const Colimit& col = wc.colimit;
    std::vector<int> c(col.num_classes(), -1);
    for (int e = 0; e < col.quotient.carrier.size(); ++e) {
      auto [j, gi] = col.origin[e];
      auto [a, s] = wc.el.object[j];
      int g = A->hom(x, a)[gi];
      int v = F.maps[g][s];
      int k = col.class_number[e];
      if (c[k] >= 0 && c[k] != v) return Violation{"NotIso", A->object_name(x) + ": comparison not well defined"};
      c[k] = v;
    }
    if (!is_bijection(c, F.sets[x].size())) return Violation{"NotIso", A->object_name(x)};
    map.comp.push_back(std::move(c));
  }
  return map;
}

std::optional<NatFamily> find_iso(const SetFunctor& F, const SetFunctor& G) {
  if (!same_category(F.shape, G.shape)) throw Error("ShapeMismatch", "find_iso");
  for (std::size_t x = 0; x < F.sets.size(); ++x)
    if (F.sets[x].size() != G.sets[x].size()) return std::nullopt;
  for (auto& a : nat_hom(F, G))
    if (is_iso_family(a, G)) return a;
  return std::nullopt;
}

int index_of(const std::vector<NatFamily>& hom, const NatFamily& a) {
  auto it = std::lower_bound(hom.begin(), hom.end(), a);
  if (it == hom.end() || !(*it == a)) return -1;
  return static_cast<int>(it - hom.begin());
}

// ---------------------------------------------------------- presheaf worlds

int PresheafWorld::arrow_of(int p, int q, const NatFamily& a) const {
  const auto& h = cat->hom(p, q);
  auto it = std::lower_bound(h.begin(), h.end(), a, [&](int e, const NatFamily& v) { return arrows[e] < v; });
  if (it == h.end() || !(arrows[*it] == a)) return -1;
  return *it;
}

FinFunctor PresheafWorld::yoneda_functor() const {
  FinFunctor y{base, cat, representable, {}};
  for (int r : representable)
    if (r < 0) throw Error("MissingRepresentable", "world");
  for (int g = 0; g < base->num_arrows(); ++g)
    y.arr.push_back(arrow_of(representable[base->src(g)], representable[base->tgt(g)], yoneda_on_arrow(base, g)));
  return y;
}

PresheafWorld make_world(const Cat& A, const std::vector<std::pair<Id, SetFunctor>>& presheaves,
                         bool with_representables) {
  PresheafWorld w;
  w.base = A;
  w.representable.assign(A->num_objects(), -1);
  CatTables t;
  if (with_representables)
    for (int a = 0; a < A->num_objects(); ++a) {
      w.representable[a] = static_cast<int>(w.objects.size());
      w.objects.push_back(yoneda(A, a));
      t.objects.push_back("y(" + A->object_name(a) + ")");
    }
  for (const auto& [name, F] : presheaves) {
    if (!same_category(F.shape, op_cat(A))) throw Error("ShapeMismatch", name);
    w.objects.push_back(F);
    t.objects.push_back(name);
  }
  const int n = static_cast<int>(w.objects.size());
  std::vector<int> first(n * n);
  std::vector<int> count(n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      auto hom = nat_hom(w.objects[p], w.objects[q]);
      first[p * n + q] = static_cast<int>(w.arrows.size());
      count[p * n + q] = static_cast<int>(hom.size());
      for (std::size_t k = 0; k < hom.size(); ++k) {
        t.arrows.push_back(t.objects[p] + ">" + t.objects[q] + "#" + std::to_string(k));
        t.src.push_back(p);
        t.tgt.push_back(q);
        w.arrows.push_back(std::move(hom[k]));
      }
    }
  auto find = [&](int p, int q, const NatFamily& a) {
    auto b = w.arrows.begin() + first[p * n + q];
    auto it = std::lower_bound(b, b + count[p * n + q], a);
    return static_cast<int>(it - w.arrows.begin());
  };
  for (int p = 0; p < n; ++p) t.identity.push_back(find(p, p, identity_family(w.objects[p])));
  const int m = static_cast<int>(w.arrows.size());
  t.compose.assign(static_cast<std::size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (t.tgt[f] == t.src[g])
        t.compose[static_cast<std::size_t>(g) * m + f] = find(t.src[f], t.tgt[g], vcompose(w.arrows[g], w.arrows[f]));
  w.cat = FinCat::trusted(std::move(t));
  return w;
}

}  // namespace fcat
