#include "fcat/relmonad.hpp"

#include <algorithm>
#include <random>

#include "fcat/exec.hpp"
#include "fcat/prof.hpp"

namespace fcat {

namespace {

Violation law_fails(const std::string& law, const std::string& sample, const std::string& where) {
  return Violation{"LawFails", law + "," + sample + "," + where};
}

std::vector<std::pair<Id, SetFunctor>> extras_of(const PresheafWorld& w) {
  std::vector<bool> is_rep(w.objects.size(), false);
  for (int r : w.representable)
    if (r >= 0) is_rep[r] = true;
  std::vector<std::pair<Id, SetFunctor>> out;
  for (std::size_t p = 0; p < w.objects.size(); ++p)
    if (!is_rep[p]) out.emplace_back(w.cat->object_name(static_cast<int>(p)), w.objects[p]);
  return out;
}

bool mult_on_representables(const PresheafMonad& M) {
  for (int a = 0; a < M.base()->num_objects(); ++a)
    if (M.mult.obj[a] != M.world.representable[a]) return false;
  return true;
}

// The first object whose component is not a bijection, or -1.
int first_non_bijective(const NatFamily& a, const SetFunctor& cod) {
  for (std::size_t x = 0; x < a.comp.size(); ++x)
    if (!is_bijection(a.comp[x], cod.sets[x].size())) return static_cast<int>(x);
  return -1;
}

// ε: μ(η F) ⇒ F for the world object p, α ↦ α_a(id_a).
NatFamily counit_family(const PresheafMonad& M, int p, const std::vector<int>& posA) {
  const FinCat& A = *M.base();
  const FinCat& C = *M.cat();
  NatFamily e;
  for (int a = 0; a < A.num_objects(); ++a) {
    std::vector<int> c;
    for (int k : C.hom(M.mult.obj[a], p)) c.push_back(M.world.arrows[k].comp[a][posA[A.identity(a)]]);
    e.comp.push_back(std::move(c));
  }
  return e;
}

// θ_p(ξ): the family (a, g) ↦ Ξ(ĝ) ξ from world object p into μ Ξ, or
// nullopt when some ĝ is not an arrow of the world.
std::optional<NatFamily> theta(const PresheafMonad& M, const SetFunctor& xi, int p, int x) {
  const FinCat& A = *M.base();
  const SetFunctor& G = M.world.objects[p];
  NatFamily out;
  for (int a = 0; a < A.num_objects(); ++a) {
    std::vector<int> c;
    for (int g = 0; g < G.sets[a].size(); ++g) {
      const int k = M.world.arrow_of(M.world.representable[a], p, yoneda_family(M.base(), a, G, g));
      if (k < 0) return std::nullopt;
      c.push_back(xi.maps[k][x]);
    }
    out.comp.push_back(std::move(c));
  }
  return out;
}

SetFunctor downset_presheaf(const FinLattice& L, const std::vector<int>& members) {
  const FinCat& P = *L.carrier;
  std::vector<bool> in(P.num_objects(), false);
  for (int l : members) in[l] = true;
  std::vector<FinSet> sets;
  for (int l = 0; l < P.num_objects(); ++l) sets.push_back(in[l] ? FinSet{{"*"}} : FinSet{});
  std::vector<std::vector<int>> maps;
  for (int k = 0; k < P.num_arrows(); ++k) maps.push_back(in[P.tgt(k)] ? std::vector<int>{0} : std::vector<int>{});
  return make_set_functor(op_cat(L.carrier), std::move(sets), std::move(maps));
}

int support_join(const FinLattice& L, const SetFunctor& F) {
  int j = L.bottom;
  for (int l = 0; l < L.size(); ++l)
    if (F.sets[l].size() > 0) j = L.join(j, l);
  return j;
}

}  // namespace

PresheafMonad make_presheaf_monad(const Cat& A, const std::vector<std::pair<Id, SetFunctor>>& extras) {
  PresheafMonad M;
  M.world = make_world(A, extras, true);
  M.unit = M.world.yoneda_functor();
  M.mult = M.unit;
  return M;
}

PresheafMonad sample_monad(const Cat& A, std::uint64_t seed, int extra_count) {
  std::mt19937_64 rng(seed);
  const Cat opA = op_cat(A);
  std::vector<std::pair<Id, SetFunctor>> extras;
  for (int i = 0; i < extra_count; ++i)
    extras.emplace_back("F" + std::to_string(i), corpus::random_set_functor(opA, rng, 2, 1));
  return make_presheaf_monad(A, extras);
}

std::vector<corpus::NamedSetFunctor> nested_samples(const PresheafMonad& M, std::uint64_t seed, int random_count) {
  const Cat& C = M.cat();
  const Cat opC = op_cat(C);
  std::vector<corpus::NamedSetFunctor> out;
  for (int p = 0; p < C->num_objects(); ++p) out.push_back({"y(" + C->object_name(p) + ")", yoneda(C, p)});
  out.push_back({"empty", empty_set_functor(opC)});
  out.push_back({"terminal", constant_set_functor(opC, FinSet{{"pt"}})});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i)
    out.push_back({"rand" + std::to_string(i), corpus::random_set_functor(opC, rng, 2)});
  return out;
}

// ------------------------------------------------------------ unit laws

Checked<LawReport> check_unit_laws(const PresheafMonad& M) {
  const FinCat& A = *M.base();
  const FinCat& C = *M.cat();
  const std::vector<int> posA = hom_positions(A);
  const int n = C.num_objects();
  if (!mult_on_representables(M)) return law_fails("unit-left", "mult", "not on representables");

  auto results = parallel_map<Verdict>(n, [&](int p) -> Verdict {
    const SetFunctor& F = M.world.objects[p];
    const Id& name = C.object_name(p);
    // (i) μ(η F) ≅ F.
    const SetFunctor R = M.multiply(M.embed(p));
    const NatFamily e = counit_family(M, p, posA);
    if (auto v = check_nat_family(R, F, e)) return law_fails("unit-left", name, v->witness);
    if (int a = first_non_bijective(e, F); a >= 0) return law_fails("unit-left", name, A.object_name(a));
    // (ii) F ≅ μ(Lan_y F).
    const ExtensionResult E = extend_with_unit(M.unit, F);
    const SetFunctor R2 = M.multiply(E.extension);
    if (auto v = check_nat_family(F, R2, E.unit)) return law_fails("unit-right", name, v->witness);
    if (int a = first_non_bijective(E.unit, R2); a >= 0) return law_fails("unit-right", name, A.object_name(a));
    return std::nullopt;
  });
  LawReport rep;
  for (int p = 0; p < n; ++p) {
    if (results[p]) return *results[p];
    ++rep.samples;
    rep.elements += 2 * M.world.objects[p].total_size();
  }
  return rep;
}

// ------------------------------------------------------- associativity

NestedTower sample_tower(const Cat& A, std::uint64_t seed) {
  NestedTower t;
  t.inner = sample_monad(A, seed, 1);
  t.outer = sample_monad(t.inner.cat(), seed + 1, 1);
  t.top = nested_samples(t.outer, seed + 2, 1);
  return t;
}

Checked<LawReport> check_assoc_law(const NestedTower& t) {
  const PresheafMonad& in = t.inner;
  const PresheafMonad& out = t.outer;
  if (!same_category(out.base(), in.cat())) throw Error("ShapeMismatch", "tower");
  if (!mult_on_representables(in) || !mult_on_representables(out))
    return law_fails("assoc", "mult", "not on representables");
  const FinCat& A = *in.base();
  const FinCat& C1 = *in.cat();
  const FinCat& C2 = *out.cat();

  // μ_A on the objects of the outer world, extending the inner world by the
  // values that are not already present.
  auto extras = extras_of(in.world);
  std::vector<SetFunctor> known = in.world.objects;
  std::vector<int> mo(C2.num_objects());
  for (int i = 0; i < C2.num_objects(); ++i) {
    SetFunctor R = in.multiply(out.world.objects[i]);
    auto it = std::find(known.begin(), known.end(), R);
    if (it == known.end()) {
      extras.emplace_back("mu(" + C2.object_name(i) + ")", R);
      known.push_back(std::move(R));
      it = known.end() - 1;
    }
    mo[i] = static_cast<int>(it - known.begin());
  }
  const PresheafWorld W = make_world(in.base(), extras, true);

  FinFunctor mult2{in.base(), W.cat, in.mult.obj, {}};
  for (int g = 0; g < A.num_arrows(); ++g)
    mult2.arr.push_back(W.arrow_of(in.mult.obj[A.src(g)], in.mult.obj[A.tgt(g)], in.world.arrows[in.mult.arr[g]]));
  const FinFunctor opm = op_functor(in.mult);
  FinFunctor m{out.cat(), W.cat, mo, {}};
  for (int k = 0; k < C2.num_arrows(); ++k) {
    const int r = W.arrow_of(mo[C2.src(k)], mo[C2.tgt(k)], whisker(out.world.arrows[k], opm));
    if (r < 0) return law_fails("assoc", "mult", C2.arrow_name(k));
    m.arr.push_back(r);
  }
  if (auto v = check_functor(m)) return law_fails("assoc", "mult", v->str());
  if (auto v = check_functor(mult2)) return law_fails("assoc", "mult", v->str());

  // h_a: y a → μ_A(y y a), g ↦ y g.
  const std::vector<int> pos1 = hom_positions(C1);
  std::vector<int> h(A.num_objects());
  for (int a = 0; a < A.num_objects(); ++a) {
    NatFamily fam;
    for (int x = 0; x < A.num_objects(); ++x) {
      std::vector<int> c;
      for (int g : A.hom(x, a)) c.push_back(pos1[in.mult.arr[g]]);
      fam.comp.push_back(std::move(c));
    }
    const int phi = out.mult.obj[in.mult.obj[a]];
    h[a] = W.arrow_of(in.mult.obj[a], mo[phi], fam);
    if (h[a] < 0) return law_fails("assoc", "comparison", A.object_name(a));
  }

  const int n = static_cast<int>(t.top.size());
  auto results = parallel_map<Verdict>(n, [&](int i) -> Verdict {
    const auto& [name, xi] = t.top[i];
    const ExtensionResult E = extend_with_unit(m, xi);
    const SetFunctor L = restrict(mult2, E.extension);
    const SetFunctor R = in.multiply(out.multiply(xi));
    NatFamily fam;
    for (int a = 0; a < A.num_objects(); ++a) {
      const int b = mult2.obj[a];
      const int phi = out.mult.obj[in.mult.obj[a]];
      const int j = E.commas[b].find(phi, h[a]);
      if (j < 0) return law_fails("assoc", name, A.object_name(a));
      std::vector<int> c;
      for (int x = 0; x < R.sets[a].size(); ++x) c.push_back(E.colimits[b].cls(j, x));
      fam.comp.push_back(std::move(c));
    }
    if (auto v = check_nat_family(R, L, fam)) return law_fails("assoc", name, v->witness);
    if (int a = first_non_bijective(fam, L); a >= 0) return law_fails("assoc", name, A.object_name(a));
    return std::nullopt;
  });
  LawReport rep;
  for (int i = 0; i < n; ++i) {
    if (results[i]) return *results[i];
    ++rep.samples;
    rep.elements += in.multiply(out.multiply(t.top[i].functor)).total_size();
  }
  return rep;
}

// ----------------------------------------------------- lax idempotency

SetFunctor hom_into(const PresheafMonad& M, const SetFunctor& P) {
  const FinCat& C = *M.cat();
  std::vector<std::vector<NatFamily>> fams;
  std::vector<FinSet> sets;
  for (int p = 0; p < C.num_objects(); ++p) {
    fams.push_back(nat_hom(M.world.objects[p], P));
    FinSet s;
    for (const auto& a : fams.back()) s.elems.push_back(nat_id(P, a));
    sets.push_back(std::move(s));
  }
  std::vector<std::vector<int>> maps;
  for (int k = 0; k < C.num_arrows(); ++k) {
    std::vector<int> m;
    for (const auto& beta : fams[C.tgt(k)]) m.push_back(index_of(fams[C.src(k)], vcompose(beta, M.world.arrows[k])));
    maps.push_back(std::move(m));
  }
  return make_set_functor(op_cat(M.cat()), std::move(sets), std::move(maps));
}

Checked<LawReport> lax_idempotency_witness(const PresheafMonad& M,
                                           const std::vector<corpus::NamedSetFunctor>& samples) {
  const FinCat& A = *M.base();
  const FinCat& C = *M.cat();
  const std::vector<int> posA = hom_positions(A);
  if (!mult_on_representables(M)) return Violation{"CounitNotIso", "mult not on representables"};
  LawReport rep;

  // Counit, and the zig-zag η ⇒ η μ η ⇒ η at every world object.
  for (int q = 0; q < C.num_objects(); ++q) {
    const SetFunctor& F = M.world.objects[q];
    const Id& name = C.object_name(q);
    const SetFunctor Y = M.embed(q);
    const SetFunctor R = M.multiply(Y);
    const NatFamily e = counit_family(M, q, posA);
    if (check_nat_family(R, F, e) || first_non_bijective(e, F) >= 0) return Violation{"CounitNotIso", name};
    for (int p = 0; p < C.num_objects(); ++p)
      for (int j = 0; j < Y.sets[p].size(); ++j) {
        auto th = theta(M, Y, p, j);
        if (!th) return Violation{"UnitNotNatural", name};
        NatFamily back = vcompose(e, *th);
        if (!(back == M.world.arrows[C.hom(p, q)[j]])) return Violation{"ZigZagFails", name + ",right"};
      }
    rep.elements += F.total_size();
  }

  // Unit θ at every sample, and the zig-zag μ ⇒ μ η μ ⇒ μ.
  for (const auto& [name, xi] : samples) {
    const SetFunctor P = M.multiply(xi);
    const SetFunctor H = hom_into(M, P);
    NatFamily th;
    std::vector<std::vector<NatFamily>> images(C.num_objects());
    for (int p = 0; p < C.num_objects(); ++p) {
      const auto hom = nat_hom(M.world.objects[p], P);
      std::vector<int> c;
      for (int x = 0; x < xi.sets[p].size(); ++x) {
        auto fam = theta(M, xi, p, x);
        const int k = fam ? index_of(hom, *fam) : -1;
        if (k < 0) return Violation{"UnitNotNatural", name};
        c.push_back(k);
        images[p].push_back(std::move(*fam));
      }
      th.comp.push_back(std::move(c));
    }
    if (check_nat_family(xi, H, th)) return Violation{"UnitNotNatural", name};
    for (int a = 0; a < A.num_objects(); ++a) {
      const int ya = M.world.representable[a];
      for (int x = 0; x < P.sets[a].size(); ++x)
        if (images[ya][x].comp[a][posA[A.identity(a)]] != x) return Violation{"ZigZagFails", name + ",left"};
    }
    ++rep.samples;
    rep.elements += xi.total_size();
  }
  return rep;
}

// ------------------------------------------------------------ algebras

std::vector<std::vector<int>> downsets(const FinLattice& L) {
  const int n = L.size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int l = 0; l < n && closed; ++l)
      if (mask >> l & 1u)
        for (int k = 0; k < n; ++k)
          if (L.leq(k, l) && !(mask >> k & 1u)) closed = false;
    if (!closed) continue;
    std::vector<int> members;
    for (int l = 0; l < n; ++l)
      if (mask >> l & 1u) members.push_back(l);
    out.push_back(std::move(members));
  }
  return out;
}

Checked<AlgebraWitness> algebra_check(const FinLattice& L, const PresheafMonad& M,
                                      const std::vector<corpus::NamedSetFunctor>& samples) {
  if (!same_category(M.base(), L.carrier)) throw Error("ShapeMismatch", "algebra_check");
  const FinCat& P = *L.carrier;
  const int n = L.size();
  AlgebraWitness w{L, downsets(L), {}, 0, 0, 0};
  for (const auto& d : w.downsets) {
    int j = L.bottom;
    for (int l : d) j = L.join(j, l);
    w.structure.push_back(j);
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<int> principal(n, -1);
  for (std::size_t i = 0; i < w.downsets.size(); ++i)
    for (int l = 0; l < n; ++l) {
      std::vector<int> down;
      for (int k = 0; k < n; ++k)
        if (L.leq(k, l)) down.push_back(k);
      if (down == w.downsets[i]) principal[l] = static_cast<int>(i);
    }

  // Unit axiom.
  for (int l = 0; l < n; ++l) {
    if (support_join(L, yoneda(L.carrier, l)) != l) return Violation{"LawFails", "unit," + P.object_name(l)};
    ++w.unit_checks;
  }
  // Multiplication axiom on nested samples.
  for (const auto& [name, xi] : samples) {
    const int left = support_join(L, M.multiply(xi));
    int right = L.bottom;
    for (int p = 0; p < M.cat()->num_objects(); ++p)
      if (xi.sets[p].size() > 0) right = L.join(right, support_join(L, M.world.objects[p]));
    if (left != right) return Violation{"LawFails", "mult," + name};
    ++w.mult_checks;
  }
  // a ⊣ ↓ with invertible counit.
  for (std::size_t i = 0; i < w.downsets.size(); ++i)
    for (int l = 0; l < n; ++l)
      if (L.leq(w.structure[i], l) != subset(w.downsets[i], w.downsets[principal[l]]))
        return Violation{"LawFails", "galois," + std::to_string(i) + "," + P.object_name(l)};

  // Every monotone map on down-sets fixing the principal ones.
  const int D = static_cast<int>(w.downsets.size());
  std::vector<int> s(D, -1);
  for (int l = 0; l < n; ++l) s[principal[l]] = l;
  std::vector<int> free;
  for (int i = 0; i < D; ++i)
    if (s[i] < 0) free.push_back(i);
  auto consistent = [&](int i) {
    for (int j = 0; j < D; ++j) {
      if (s[j] < 0 || j == i) continue;
      if (subset(w.downsets[i], w.downsets[j]) && !L.leq(s[i], s[j])) return false;
      if (subset(w.downsets[j], w.downsets[i]) && !L.leq(s[j], s[i])) return false;
    }
    return true;
  };
  for (int i = 0; i < D; ++i)
    if (s[i] >= 0 && !consistent(i)) return Violation{"LawFails", "unit,not monotone"};
  std::vector<int> other;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == free.size()) {
      ++w.alternatives;
      if (s != w.structure && other.empty()) other = s;
      return;
    }
    for (int v = 0; v < n; ++v) {
      s[free[k]] = v;
      if (consistent(free[k])) self(self, k + 1);
    }
    s[free[k]] = -1;
  };
  search(search, 0);
  if (!other.empty()) {
    for (int i = 0; i < D; ++i)
      if (other[i] != w.structure[i]) return Violation{"LawFails", "uniqueness,downset " + std::to_string(i)};
  }
  return w;
}

Checked<AlgebraWitness> algebra_check(const FinLattice& L) {
  std::vector<std::pair<Id, SetFunctor>> extras;
  const auto ds = downsets(L);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    bool principal = false;
    for (int l = 0; l < L.size() && !principal; ++l) {
      std::vector<int> down;
      for (int k = 0; k < L.size(); ++k)
        if (L.leq(k, l)) down.push_back(k);
      principal = down == ds[i];
    }
    if (!principal) extras.emplace_back("D" + std::to_string(i), downset_presheaf(L, ds[i]));
  }
  const PresheafMonad M = make_presheaf_monad(L.carrier, extras);
  return algebra_check(L, M, nested_samples(M, 1, 2));
}

// ------------------------------------------------------------- Kleisli

KleisliCell kleisli_cell(const Profunctor& body) { return KleisliCell{body.dst, body.src, body}; }

KleisliCell kleisli_unit(const Cat& X) { return kleisli_cell(hom_prof(X)); }

int KleisliComposite::cls(int z, int x, int y, int s, int t) const {
  return cells[result.body.cell(z, x)].cls(y, s, t);
}

std::array<int, 3> KleisliComposite::witness(int z, int x, int k) const {
  const WeightedColimit& w = cells[result.body.cell(z, x)];
  const int r = w.colimit.representatives()[k];
  const auto [j, t] = w.colimit.origin[r];
  const auto [y, s] = w.el.object[j];
  return {y, s, t};
}

KleisliComposite kleisli_compose_full(const KleisliCell& g, const KleisliCell& f) {
  if (!same_category(f.dst, g.src)) throw Error("ShapeMismatch", "kleisli_compose");
  const Cat& X = f.src;
  const Cat& Y = f.dst;
  const Cat& Z = g.dst;
  const int nX = X->num_objects();
  KleisliComposite out;
  out.result.src = X;
  out.result.dst = Z;
  Profunctor& B = out.result.body;
  B.src = Z;
  B.dst = X;
  B.body.shape = product_cat(op_cat(Z), X);
  out.cells = parallel_map<WeightedColimit>(Z->num_objects() * nX, [&](int i) {
    return weighted_colim(Y, f.body.column(i % nX), g.body.row(i / nX));
  });
  for (const auto& w : out.cells) B.body.sets.push_back(w.colimit.classes);
  const int mX = X->num_arrows();
  for (int u = 0; u < Z->num_arrows(); ++u)
    for (int v = 0; v < mX; ++v) {
      // (z', x) → (z, x') for u: z → z', v: x → x'.
      const int z = Z->src(u), z2 = Z->tgt(u), x = X->src(v), x2 = X->tgt(v);
      std::vector<int> m;
      for (int k = 0; k < B.at(z2, x).size(); ++k) {
        const auto [y, s, t] = out.witness(z2, x, k);
        const int yid = Y->identity(y);
        m.push_back(out.cls(z, x2, y, f.body.act(yid, v, s), g.body.act(u, yid, t)));
      }
      B.body.maps.push_back(std::move(m));
    }
  return out;
}

KleisliCell kleisli_compose(const KleisliCell& g, const KleisliCell& f) { return kleisli_compose_full(g, f).result; }

namespace {

using WeightedRule = std::function<int(int z, int x, int y, int s, int t)>;

// A family out of a Kleisli composite given on raw elements, checked well
// defined on every member of every class.
Checked<NatFamily> map_out_of_kleisli(const KleisliComposite& K, const WeightedRule& rule) {
  const Profunctor& B = K.result.body;
  const int nX = B.dst->num_objects();
  NatFamily out;
  out.comp.resize(K.cells.size());
  for (std::size_t i = 0; i < K.cells.size(); ++i) {
    const int z = static_cast<int>(i) / nX, x = static_cast<int>(i) % nX;
    const WeightedColimit& w = K.cells[i];
    std::vector<int>& c = out.comp[i];
    c.assign(w.colimit.num_classes(), -1);
    for (std::size_t r = 0; r < w.colimit.origin.size(); ++r) {
      const auto [j, t] = w.colimit.origin[r];
      const auto [y, s] = w.el.object[j];
      const int v = rule(z, x, y, s, t);
      int& slot = c[w.colimit.class_number[r]];
      if (slot < 0) slot = v;
      else if (slot != v)
        return Violation{"NotWellDefined",
                         tuple_id({B.src->object_name(z), B.dst->object_name(x), w.colimit.quotient.carrier[static_cast<int>(r)]})};
    }
  }
  return out;
}

Checked<NatFamily> verified_iso(Checked<NatFamily> fam, const Profunctor& from, const Profunctor& to) {
  if (!fam.ok()) return fam;
  if (auto v = check_prof_iso(from, to, fam.value())) return *v;
  return fam;
}

}  // namespace

Checked<NatFamily> kleisli_vs_coend(const KleisliCell& g, const KleisliCell& f) {
  const KleisliComposite K = kleisli_compose_full(g, f);
  const ProfComposite P = compose_coend_full(f.body, g.body);
  auto fam = verified_iso(map_out_of_kleisli(K, [&](int z, int x, int y, int s, int t) { return P.cls(z, x, y, t, s); }),
                          K.result.body, P.result);
  if (!fam.ok()) return fam;
  // Least raw triple (y, t, s) of each class on both sides.
  const Profunctor& B = K.result.body;
  using Triple = std::array<int, 3>;
  for (int z = 0; z < B.src->num_objects(); ++z)
    for (int x = 0; x < B.dst->num_objects(); ++x) {
      const int i = B.cell(z, x);
      const WeightedColimit& w = K.cells[i];
      std::vector<Triple> least_k(w.colimit.num_classes(), Triple{-1, -1, -1});
      for (std::size_t r = 0; r < w.colimit.origin.size(); ++r) {
        const auto [j, t] = w.colimit.origin[r];
        const auto [y, s] = w.el.object[j];
        Triple& m = least_k[w.colimit.class_number[r]];
        if (m[0] < 0 || Triple{y, t, s} < m) m = {y, t, s};
      }
      std::vector<Triple> least_p(P.result.at(z, x).size(), Triple{-1, -1, -1});
      P.for_each_raw(z, x, [&](int b, int p, int q) {
        Triple& m = least_p[P.cls(z, x, b, p, q)];
        if (m[0] < 0 || Triple{b, p, q} < m) m = {b, p, q};
      });
      for (int k = 0; k < B.at(z, x).size(); ++k)
        if (least_k[k] != least_p[fam.value().comp[i][k]])
          return Violation{"RepresentativeMismatch", tuple_id({B.src->object_name(z), B.dst->object_name(x), B.at(z, x)[k]})};
    }
  return fam;
}

Checked<NatFamily> kleisli_left_unit(const KleisliCell& f) {
  const Cat& Y = f.dst;
  const KleisliComposite K = kleisli_compose_full(kleisli_unit(Y), f);
  return verified_iso(map_out_of_kleisli(K,
                                         [&](int z, int x, int y, int s, int t) {
                                           return f.body.act(Y->hom(z, y)[t], f.src->identity(x), s);
                                         }),
                      K.result.body, f.body);
}

Checked<NatFamily> kleisli_right_unit(const KleisliCell& f) {
  const Cat& X = f.src;
  const KleisliComposite K = kleisli_compose_full(f, kleisli_unit(X));
  return verified_iso(map_out_of_kleisli(K,
                                         [&](int z, int x, int x1, int h, int t) {
                                           return f.body.act(f.dst->identity(z), X->hom(x1, x)[h], t);
                                         }),
                      K.result.body, f.body);
}

Checked<NatFamily> kleisli_associator(const KleisliCell& h, const KleisliCell& g, const KleisliCell& f) {
  const KleisliComposite GF = kleisli_compose_full(g, f);
  const KleisliComposite left = kleisli_compose_full(h, GF.result);
  const KleisliComposite HG = kleisli_compose_full(h, g);
  const KleisliComposite right = kleisli_compose_full(HG.result, f);
  // u@(z, [t@(y,s)]) ↦ [u@(z,t)]@(y,s).
  return verified_iso(map_out_of_kleisli(left,
                                         [&](int w, int x, int z, int c, int u) {
                                           const auto [y, s, t] = GF.witness(z, x, c);
                                           return right.cls(w, x, y, s, HG.cls(w, y, z, t, u));
                                         }),
                      left.result.body, right.result.body);
}

// ---------------------------------------------------------- round trip

bool RoundtripReport::ok() const { return first_failure() == nullptr; }

const StageResult* RoundtripReport::first_failure() const {
  for (const auto& r : results)
    if (r.verdict) return &r;
  return nullptr;
}

namespace {

bool is_identity_on(const FinFunctor& f, const Cat& c) {
  if (!same_category(f.dom, c) || !same_category(f.cod, c)) return false;
  for (int x = 0; x < c->num_objects(); ++x)
    if (f.obj[x] != x) return false;
  for (int k = 0; k < c->num_arrows(); ++k)
    if (f.arr[k] != k) return false;
  return true;
}

// First non-identity endomorphism, as (object, position in hom), or (-1, -1).
std::pair<int, int> first_endo(const FinCat& c) {
  for (int x = 0; x < c.num_objects(); ++x) {
    const auto& h = c.hom(x, x);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (!c.is_identity(h[i])) return {x, static_cast<int>(i)};
  }
  return {-1, -1};
}

struct Rebuilt {
  Profunctor body;
  std::vector<int> chi;
};

// B(f, 1) as the columns restrict(f, y b), χ from identities.
Rebuilt rebuild_nerve(const FinFunctor& f) {
  const FinCat& B = *f.cod;
  std::vector<SetFunctor> cols;
  std::vector<NatFamily> maps;
  const FinFunctor opf = op_functor(f);
  for (int b = 0; b < B.num_objects(); ++b) cols.push_back(restrict(f, yoneda(f.cod, b)));
  for (int v = 0; v < B.num_arrows(); ++v) maps.push_back(whisker(yoneda_on_arrow(f.cod, v), opf));
  Rebuilt r{profunctor_from_columns(f.dom, f.cod, cols, maps), {}};
  const std::vector<int> pos = hom_positions(B);
  for (int a = 0; a < f.dom->num_objects(); ++a) r.chi.push_back(pos[B.identity(f.obj[a])]);
  return r;
}

}  // namespace

RoundtripReport main_theorem_roundtrip(const std::vector<Cat>& cats, RoundtripMutation mutation, std::uint64_t seed) {
  RoundtripReport rep;
  auto add = [&](const char* stage, std::string check, std::string subject, Verdict v, int count) {
    rep.results.push_back({stage, std::move(check), std::move(subject), std::move(v), count});
  };
  auto cat_name = [&](std::size_t i) { return "C" + std::to_string(i); };

  Cat target;
  if (mutation != RoundtripMutation::none) {
    for (const Cat& c : cats)
      if (first_endo(*c).first >= 0) {
        target = c;
        break;
      }
    if (!target) throw Error("NoMutationTarget", "no category with a non-identity endomorphism");
  }
  auto mutated = [&](RoundtripMutation m, const FinFunctor& f) {
    return mutation == m && is_identity_on(f, target);
  };

  struct Named {
    std::string name;
    FinFunctor f;
  };
  std::vector<std::vector<Named>> by_pair(cats.size() * cats.size());
  std::vector<Named> all;
  for (std::size_t i = 0; i < cats.size(); ++i)
    for (std::size_t j = 0; j < cats.size(); ++j) {
      auto fs = all_functors(cats[i], cats[j]);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        Named nf{cat_name(i) + "->" + cat_name(j) + "#" + std::to_string(k), std::move(fs[k])};
        by_pair[i * cats.size() + j].push_back(nf);
        all.push_back(std::move(nf));
      }
    }

  // (a) equipment.
  for (const auto& group : by_pair) {
    int cells = 0;
    Verdict bad;
    for (const auto& f : group)
      for (const auto& g : group) {
        auto r = local_ff_check(f.f, g.f);
        if (!r.ok()) {
          if (!bad) bad = Violation{r.violation().kind, f.name + "," + g.name + ": " + r.violation().witness};
        } else {
          cells += r.value();
        }
      }
    if (!group.empty()) add("a", "locally-fully-faithful", group.front().name, bad, cells);
  }
  for (const auto& f : all) {
    Profunctor L = companion(f.f);
    if (mutated(RoundtripMutation::corrupt_companion, f.f)) {
      const FinCat& c = *f.f.cod;
      const int mB = c.num_arrows();
      for (int u = 0; u < c.num_arrows(); ++u)
        for (int v = 0; v < mB; ++v)
          if (c.src(v) == c.tgt(v)) L.body.maps[L.arrow(u, v)] = L.body.maps[L.arrow(u, c.identity(c.src(v)))];
    }
    auto r = check_companion_adjunction(f.f, L, conjoint(f.f));
    add("a", "companion-adjoint", f.name, r.ok() ? Verdict{} : Verdict{r.violation()}, 1);
  }

  // (b) Yoneda structure rebuilt from the equipment.
  std::vector<Rebuilt> rebuilt;
  for (const auto& f : all) {
    Rebuilt r = rebuild_nerve(f.f);
    if (mutated(RoundtripMutation::corrupt_chi, f.f)) {
      const auto [x, i] = first_endo(*f.f.cod);
      r.chi[x] = i;
    }
    rebuilt.push_back(std::move(r));
  }
  const std::vector<Cat> probes{corpus::one(), corpus::two()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& f = all[i];
    add("b", "ya1-extension", f.name, check_exhibits_extension(f.f, rebuilt[i].body, rebuilt[i].chi), 1);
    auto l = absolute_lifting_check(f.f, rebuilt[i].body, rebuilt[i].chi, probes);
    add("b", "ya2-absolute-lifting", f.name, l.ok() ? Verdict{} : Verdict{l.violation()}, l.ok() ? l.value() : 0);
  }
  for (std::size_t i = 0; i < cats.size(); ++i) {
    Verdict bad;
    int n = 0;
    for (const auto& [name, F] : corpus::presheaves(cats[i], seed, 1, 2)) {
      auto d = density_check(cats[i], F);
      if (!d.ok() && !bad) bad = Violation{d.violation().kind, name + ": " + d.violation().witness};
      ++n;
    }
    add("b", "ya3-density", cat_name(i), bad, n);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    Verdict bad;
    int n = 0;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!same_category(all[i].f.cod, all[j].f.dom)) continue;
      auto v = check_pasting_extension(all[i].f, all[j].f, rebuilt[j].body, rebuilt[j].chi);
      if (v && !bad) bad = Violation{v->kind, all[j].name + ": " + v->witness};
      ++n;
    }
    add("b", "ya4-pasting", all[i].name, bad, n);
  }

  // (c) μ := P*η_A.
  for (std::size_t i = 0; i < cats.size(); ++i) {
    NestedTower t = sample_tower(cats[i], seed);
    if (mutation == RoundtripMutation::corrupt_mu && same_category(cats[i], target)) {
      for (auto* M : {&t.inner}) {
        const FinCat& A = *cats[i];
        for (int g = 0; g < A.num_arrows(); ++g)
          if (A.src(g) == A.tgt(g)) M->mult.arr[g] = M->cat()->identity(M->mult.obj[A.src(g)]);
      }
    }
    auto u = check_unit_laws(t.inner);
    add("c", "unit-laws", cat_name(i), u.ok() ? Verdict{} : Verdict{u.violation()}, u.ok() ? u.value().samples : 0);
    auto a = check_assoc_law(t);
    add("c", "assoc-law", cat_name(i), a.ok() ? Verdict{} : Verdict{a.violation()}, a.ok() ? a.value().samples : 0);
  }
  return rep;
}

}  // namespace fcat
