#include "fcat/isbell.hpp"

#include <map>
#include <random>

#include "fcat/exec.hpp"
#include "fcat/kan.hpp"

namespace fcat {

namespace {

// z(g): z a' ⇒ z a for g: a → a', h ↦ h∘g.
NatFamily corep_on_arrow(const FinCat& C, int g, const std::vector<int>& pos) {
  NatFamily z;
  for (int c = 0; c < C.num_objects(); ++c) {
    std::vector<int> m;
    for (int h : C.hom(C.tgt(g), c)) m.push_back(pos[C.compose(h, g)]);
    z.comp.push_back(std::move(m));
  }
  return z;
}

int find_family(const std::vector<NatFamily>& hom, const NatFamily& a) {
  const int i = index_of(hom, a);
  if (i < 0) throw Error("NotNatural", "isbell family");
  return i;
}

FinSet hom_names(const FinCat& C, int x, int y) {
  FinSet s;
  for (int h : C.hom(x, y)) s.elems.push_back(C.arrow_name(h));
  return s;
}

// Whether `image` (one entry per source element) is a bijection onto
// [0, size), with the first offending source index otherwise.
int first_non_bijective(const std::vector<int>& image, int size) {
  std::vector<int> seen(size, -1);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0 || image[i] >= size || seen[image[i]] >= 0) return static_cast<int>(i);
    seen[image[i]] = static_cast<int>(i);
  }
  return static_cast<int>(image.size()) == size ? -1 : static_cast<int>(image.size());
}

}  // namespace

Copresheaf corep(const Cat& A, int a) { return Copresheaf{corepresentable(A, a)}; }

IsbellO isbell_O(const Cat& A, const SetFunctor& F) {
  const FinCat& C = *A;
  if (!same_category(F.shape, op_cat(A))) throw Error("ShapeMismatch", "isbell_O expects a presheaf");
  IsbellO o;
  o.value.functor.shape = A;
  std::vector<SetFunctor> ys;
  for (int b = 0; b < C.num_objects(); ++b) {
    ys.push_back(yoneda(A, b));
    o.families.push_back(nat_hom(F, ys.back()));
    FinSet s;
    for (const auto& a : o.families.back()) s.elems.push_back(nat_id(ys.back(), a));
    o.value.functor.sets.push_back(std::move(s));
  }
  for (int g = 0; g < C.num_arrows(); ++g) {
    const NatFamily yg = yoneda_on_arrow(A, g);
    std::vector<int> m;
    for (const auto& a : o.families[C.src(g)]) m.push_back(find_family(o.families[C.tgt(g)], vcompose(yg, a)));
    o.value.functor.maps.push_back(std::move(m));
  }
  return o;
}

IsbellSpec isbell_Spec(const Cat& A, const Copresheaf& G) {
  const FinCat& C = *A;
  if (!same_category(G.functor.shape, A)) throw Error("ShapeMismatch", "isbell_Spec expects a copresheaf");
  const auto pos = hom_positions(C);
  IsbellSpec sp;
  sp.value.shape = op_cat(A);
  for (int a = 0; a < C.num_objects(); ++a) {
    const SetFunctor z = corepresentable(A, a);
    sp.families.push_back(nat_hom(G.functor, z));
    FinSet s;
    for (const auto& b : sp.families.back()) s.elems.push_back(nat_id(z, b));
    sp.value.sets.push_back(std::move(s));
  }
  // Presheaf action of g: a → a' sends nat(G, z a') to nat(G, z a).
  for (int g = 0; g < C.num_arrows(); ++g) {
    const NatFamily zg = corep_on_arrow(C, g, pos);
    std::vector<int> m;
    for (const auto& b : sp.families[C.tgt(g)]) m.push_back(find_family(sp.families[C.src(g)], vcompose(zg, b)));
    sp.value.maps.push_back(std::move(m));
  }
  return sp;
}

IsbellUnit isbell_unit(const Cat& A, const SetFunctor& F) {
  const FinCat& C = *A;
  IsbellUnit u;
  u.o = isbell_O(A, F);
  u.spec_o = isbell_Spec(A, u.o.value);
  for (int a = 0; a < C.num_objects(); ++a) {
    std::vector<int> c;
    for (int s = 0; s < F.sets[a].size(); ++s) {
      NatFamily beta;
      for (int b = 0; b < C.num_objects(); ++b) {
        std::vector<int> m;
        for (const auto& alpha : u.o.families[b]) m.push_back(alpha.comp[a][s]);
        beta.comp.push_back(std::move(m));
      }
      c.push_back(find_family(u.spec_o.families[a], beta));
    }
    u.unit.comp.push_back(std::move(c));
  }
  u.invertible = is_iso_family(u.unit, u.spec_o.value);
  return u;
}

IsbellCounit isbell_counit(const Cat& A, const Copresheaf& G) {
  const FinCat& C = *A;
  IsbellCounit e;
  e.spec = isbell_Spec(A, G);
  e.o_spec = isbell_O(A, e.spec.value);
  for (int b = 0; b < C.num_objects(); ++b) {
    std::vector<int> c;
    for (int t = 0; t < G.functor.sets[b].size(); ++t) {
      NatFamily alpha;
      for (int a = 0; a < C.num_objects(); ++a) {
        std::vector<int> m;
        for (const auto& beta : e.spec.families[a]) m.push_back(beta.comp[b][t]);
        alpha.comp.push_back(std::move(m));
      }
      c.push_back(find_family(e.o_spec.families[b], alpha));
    }
    e.counit.comp.push_back(std::move(c));
  }
  e.invertible = is_iso_family(e.counit, e.o_spec.value.functor);
  return e;
}

// ------------------------------------------------- extension routes

Checked<int> check_O_via_extension(const Cat& A, const SetFunctor& F) {
  const FinCat& C = *A;
  const auto pos = hom_positions(C);
  const IsbellO o = isbell_O(A, F);
  const ElementsCat el = elements(A, F);
  const FinCat& E = *el.cat;
  std::vector<Limit> lims;
  std::vector<std::map<std::vector<int>, int>> lookup(C.num_objects());
  std::vector<std::vector<int>> image(C.num_objects());
  int matched = 0;
  for (int b = 0; b < C.num_objects(); ++b) {
    // (a, s) ↦ hom(a, b), contravariant on el(F).
    SetFunctor D{op_cat(el.cat), {}, {}};
    for (auto [a, s] : el.object) D.sets.push_back(hom_names(C, a, b));
    for (int e = 0; e < E.num_arrows(); ++e) {
      const int g = el.projection.arr[e];
      std::vector<int> m;
      for (int h : C.hom(C.tgt(g), b)) m.push_back(pos[C.compose(h, g)]);
      D.maps.push_back(std::move(m));
    }
    lims.push_back(limit_of_diagram(D));
    for (std::size_t i = 0; i < lims[b].families.size(); ++i) lookup[b].emplace(lims[b].families[i], static_cast<int>(i));
    for (const auto& alpha : o.families[b]) {
      std::vector<int> fam;
      for (auto [a, s] : el.object) fam.push_back(alpha.comp[a][s]);
      auto it = lookup[b].find(fam);
      image[b].push_back(it == lookup[b].end() ? -1 : it->second);
    }
    if (first_non_bijective(image[b], lims[b].apex.size()) >= 0) return Violation{"ExtensionMismatch", C.object_name(b)};
    matched += static_cast<int>(image[b].size());
  }
  // Naturality in b: postcomposition on both sides.
  for (int g = 0; g < C.num_arrows(); ++g) {
    const int b = C.src(g), b2 = C.tgt(g);
    for (std::size_t k = 0; k < o.families[b].size(); ++k) {
      std::vector<int> fam;
      for (std::size_t j = 0; j < el.object.size(); ++j) {
        const int a = el.object[j].first;
        fam.push_back(pos[C.compose(g, C.hom(a, b)[lims[b].families[image[b][k]][j]])]);
      }
      if (lookup[b2].at(fam) != image[b2][o.value.functor.maps[g][k]])
        return Violation{"ExtensionMismatch", C.arrow_name(g)};
    }
  }
  return matched;
}

Checked<int> check_Spec_via_extension(const Cat& A, const Copresheaf& G) {
  const FinCat& C = *A;
  const auto pos = hom_positions(C);
  const IsbellSpec sp = isbell_Spec(A, G);
  const ElementsCat el = elements(op_cat(A), G.functor);
  const FinCat& E = *el.cat;
  std::vector<Limit> lims;
  std::vector<std::map<std::vector<int>, int>> lookup(C.num_objects());
  std::vector<std::vector<int>> image(C.num_objects());
  int matched = 0;
  for (int a = 0; a < C.num_objects(); ++a) {
    // (b, t) ↦ hom(a, b); an element arrow over g: b → b' runs (b', G g t) → (b, t).
    SetFunctor D{op_cat(el.cat), {}, {}};
    for (auto [b, t] : el.object) D.sets.push_back(hom_names(C, a, b));
    for (int e = 0; e < E.num_arrows(); ++e) {
      const int g = el.projection.arr[e];
      std::vector<int> m;
      for (int h : C.hom(a, C.src(g))) m.push_back(pos[C.compose(g, h)]);
      D.maps.push_back(std::move(m));
    }
    lims.push_back(limit_of_diagram(D));
    for (std::size_t i = 0; i < lims[a].families.size(); ++i) lookup[a].emplace(lims[a].families[i], static_cast<int>(i));
    for (const auto& beta : sp.families[a]) {
      std::vector<int> fam;
      for (auto [b, t] : el.object) fam.push_back(beta.comp[b][t]);
      auto it = lookup[a].find(fam);
      image[a].push_back(it == lookup[a].end() ? -1 : it->second);
    }
    if (first_non_bijective(image[a], lims[a].apex.size()) >= 0) return Violation{"ExtensionMismatch", C.object_name(a)};
    matched += static_cast<int>(image[a].size());
  }
  // Naturality in a: precomposition with g: a → a' on both sides.
  for (int g = 0; g < C.num_arrows(); ++g) {
    const int a = C.src(g), a2 = C.tgt(g);
    for (std::size_t k = 0; k < sp.families[a2].size(); ++k) {
      std::vector<int> fam;
      for (std::size_t j = 0; j < el.object.size(); ++j) {
        const int b = el.object[j].first;
        fam.push_back(pos[C.compose(C.hom(a2, b)[lims[a2].families[image[a2][k]][j]], g)]);
      }
      if (lookup[a].at(fam) != image[a][sp.value.maps[g][k]]) return Violation{"ExtensionMismatch", C.arrow_name(g)};
    }
  }
  return matched;
}

// ------------------------------------------------------- adjunction

IsbellSamples isbell_samples(const Cat& A, std::uint64_t seed, int random_count) {
  const FinCat& C = *A;
  IsbellSamples s;
  s.presheaves = corpus::presheaves(A, seed, random_count, 2);
  for (int a = 0; a < C.num_objects(); ++a) s.copresheaves.push_back({"z(" + C.object_name(a) + ")", corep(A, a)});
  s.copresheaves.push_back({"empty", Copresheaf{empty_set_functor(A)}});
  s.copresheaves.push_back({"terminal", Copresheaf{constant_set_functor(A, FinSet{{"*"}})}});
  std::mt19937_64 rng(seed ^ 0x15be11ULL);
  for (int i = 0; i < random_count; ++i)
    s.copresheaves.push_back({"rand " + std::to_string(i), Copresheaf{corpus::random_set_functor(A, rng, 2)}});
  return s;
}

Checked<int> isbell_bijection(const Cat& A, const SetFunctor& F, const Copresheaf& G) {
  const FinCat& C = *A;
  const IsbellUnit u = isbell_unit(A, F);
  const IsbellSpec sp = isbell_Spec(A, G);
  const auto left = nat_hom(G.functor, u.o.value.functor);
  const auto right = nat_hom(F, sp.value);
  std::vector<int> image;
  for (std::size_t p = 0; p < left.size(); ++p) {
    const NatFamily& psi = left[p];
    NatFamily phi;
    for (int a = 0; a < C.num_objects(); ++a) {
      std::vector<int> c;
      for (int s = 0; s < F.sets[a].size(); ++s) {
        const NatFamily& beta = u.spec_o.families[a][u.unit.comp[a][s]];
        const int k = index_of(sp.families[a], vcompose(beta, psi));
        if (k < 0) return Violation{"BijectionFails", "not natural at " + C.object_name(a)};
        // Transpose: φ_a(s) evaluated at t ∈ G b equals ψ_b(t) evaluated at s.
        for (int b = 0; b < C.num_objects(); ++b)
          for (int t = 0; t < G.functor.sets[b].size(); ++t)
            if (sp.families[a][k].comp[b][t] != u.o.families[b][psi.comp[b][t]].comp[a][s])
              return Violation{"BijectionFails", "transpose at " + C.object_name(a) + "," + C.object_name(b)};
        c.push_back(k);
      }
      phi.comp.push_back(std::move(c));
    }
    image.push_back(index_of(right, phi));
  }
  const int bad = first_non_bijective(image, static_cast<int>(right.size()));
  if (bad >= 0)
    return Violation{"BijectionFails", std::to_string(left.size()) + " vs " + std::to_string(right.size()) +
                                           " at " + std::to_string(bad)};
  return static_cast<int>(right.size());
}

Checked<IsbellReport> isbell_adjunction_check(const Cat& A, const IsbellSamples& samples) {
  const int nf = static_cast<int>(samples.presheaves.size());
  const int ng = static_cast<int>(samples.copresheaves.size());
  struct Result {
    Verdict verdict;
    int count = 0;
  };
  const auto results = parallel_map<Result>(nf * ng, [&](int i) -> Result {
    const auto& F = samples.presheaves[i / ng];
    const auto& G = samples.copresheaves[i % ng];
    auto r = isbell_bijection(A, F.functor, G.value);
    if (!r.ok()) return {Violation{"BijectionFails", F.name + "," + G.name + ": " + r.violation().witness}, 0};
    return {std::nullopt, r.value()};
  });
  IsbellReport rep;
  for (const auto& r : results) {
    if (r.verdict) return *r.verdict;
    ++rep.pairs;
    rep.elements += r.count;
  }
  return rep;
}

SelfDuality self_duality_check(const Cat& A, const SetFunctor& F) {
  IsbellUnit u = isbell_unit(A, F);
  return SelfDuality{std::move(u.unit), u.invertible};
}

SelfDuality self_duality_check(const Cat& A, const Copresheaf& G) {
  IsbellCounit e = isbell_counit(A, G);
  return SelfDuality{std::move(e.counit), e.invertible};
}

Verdict check_isbell_triangles(const Cat& A, const SetFunctor& F, const Copresheaf& G) {
  const FinCat& C = *A;
  // Spec(ε_G)·η_{Spec G}: k ↦ η(k)·ε_G, expected to return k.
  const IsbellCounit e = isbell_counit(A, G);
  const IsbellUnit us = isbell_unit(A, e.spec.value);
  for (int a = 0; a < C.num_objects(); ++a)
    for (int k = 0; k < e.spec.value.sets[a].size(); ++k) {
      const NatFamily& beta = us.spec_o.families[a][us.unit.comp[a][k]];
      if (index_of(e.spec.families[a], vcompose(beta, e.counit)) != k)
        return Violation{"TriangleFails", "spec," + C.object_name(a)};
    }
  // O(η_F)·ε_{O F}: k ↦ ε(k)·η_F, expected to return k.
  const IsbellUnit u = isbell_unit(A, F);
  const IsbellCounit eo = isbell_counit(A, u.o.value);
  for (int b = 0; b < C.num_objects(); ++b)
    for (int k = 0; k < u.o.value.functor.sets[b].size(); ++k) {
      const NatFamily& alpha = eo.o_spec.families[b][eo.counit.comp[b][k]];
      if (index_of(u.o.families[b], vcompose(alpha, u.unit)) != k)
        return Violation{"TriangleFails", "o," + C.object_name(b)};
    }
  return std::nullopt;
}

bool spec_is_fixed(const Cat& A, const Copresheaf& G) { return isbell_unit(A, isbell_Spec(A, G).value).invertible; }

// ------------------------------------------------------ ambidextrous

std::vector<PairingItem> ambidextrous_pairing_check(const Cat& A, const std::vector<FinFunctor>& functors,
                                                    const std::vector<NamedCopresheaf>& samples) {
  const FinCat& C = *A;
  std::vector<PairingItem> items;
  const Cat opA = op_cat(A);
  for (int a = 0; a < C.num_objects(); ++a) {
    const bool same = corepresentable(A, a) == reshape(yoneda(opA, a), A);
    items.push_back({"z-is-op-y", C.object_name(a),
                     same ? Verdict{} : Verdict{Violation{"Mismatch", C.object_name(a)}}});
  }

  // Every copresheaf is the colimit of hom(b, −) over its elements.
  const auto posA = hom_positions(C);
  for (const auto& G : samples) {
    Verdict v;
    const ElementsCat el = elements(opA, G.value.functor);
    for (int c = 0; c < C.num_objects() && !v; ++c) {
      SetFunctor D{el.cat, {}, {}};
      for (auto [b, t] : el.object) D.sets.push_back(hom_names(C, b, c));
      for (int e = 0; e < el.cat->num_arrows(); ++e) {
        const int g = el.projection.arr[e];
        std::vector<int> m;
        for (int h : C.hom(C.tgt(g), c)) m.push_back(posA[C.compose(h, g)]);
        D.maps.push_back(std::move(m));
      }
      const Colimit L = colimit_of_diagram(D);
      std::vector<int> image(L.num_classes(), -1);
      for (std::size_t r = 0; r < L.origin.size() && !v; ++r) {
        const auto [j, x] = L.origin[r];
        const auto [b, t] = el.object[j];
        const int val = G.value.functor.maps[C.hom(b, c)[x]][t];
        int& slot = image[L.class_number[r]];
        if (slot >= 0 && slot != val) v = Violation{"NotWellDefined", C.object_name(c)};
        slot = val;
      }
      if (!v && first_non_bijective(image, G.value.functor.sets[c].size()) >= 0)
        v = Violation{"NotIso", C.object_name(c)};
    }
    items.push_back({"codense", G.name, v});
  }

  for (std::size_t fi = 0; fi < functors.size(); ++fi) {
    const FinFunctor& f = functors[fi];
    if (!same_category(f.dom, A)) throw Error("ShapeMismatch", "functor out of A expected");
    const FinCat& B = *f.cod;
    const auto posB = hom_positions(B);
    const std::string fname = "f" + std::to_string(fi);

    // Ran_f z at b is hom_B(b, f −): colimit of hom_A(a, c) over (b ↓ f)^op.
    Verdict v;
    for (int b = 0; b < B.num_objects() && !v; ++b) {
      const CommaCat K = coslice(f, b);
      for (int c = 0; c < C.num_objects() && !v; ++c) {
        SetFunctor D{op_cat(K.cat), {}, {}};
        for (int q = 0; q < K.cat->num_objects(); ++q) D.sets.push_back(hom_names(C, K.projection.obj[q], c));
        for (int e = 0; e < K.cat->num_arrows(); ++e) {
          const int k = K.projection.arr[e];
          std::vector<int> m;
          for (int h : C.hom(C.tgt(k), c)) m.push_back(posA[C.compose(h, k)]);
          D.maps.push_back(std::move(m));
        }
        const Colimit L = colimit_of_diagram(D);
        std::vector<int> image(L.num_classes(), -1);
        for (std::size_t r = 0; r < L.origin.size() && !v; ++r) {
          const auto [q, x] = L.origin[r];
          const int m = C.hom(K.projection.obj[q], c)[x];
          const int val = posB[B.compose(f.arr[m], K.arrow[q])];
          int& slot = image[L.class_number[r]];
          if (slot >= 0 && slot != val) v = Violation{"NotWellDefined", B.object_name(b) + "," + C.object_name(c)};
          slot = val;
        }
        if (!v && first_non_bijective(image, static_cast<int>(B.hom(b, f.obj[c]).size())) >= 0)
          v = Violation{"NotIso", B.object_name(b) + "," + C.object_name(c)};
      }
    }
    items.push_back({"ran-exhibited", fname, v});

    // ran_f(G)(b) ≅ nat(N(b), G), N the nerve of op f read covariantly.
    const Nerve N = nerve(op_functor(f));
    for (const auto& G : samples) {
      Verdict w;
      const ExtensionResult E = ran_set(f, G.value.functor);
      for (int b = 0; b < B.num_objects() && !w; ++b) {
        const SetFunctor col = reshape(N.body.column(b), A);
        if (!(col == precompose(corepresentable(f.cod, b), f))) {
          w = Violation{"NerveMismatch", B.object_name(b)};
          break;
        }
        const auto fams = nat_hom(col, G.value.functor);
        std::map<std::vector<int>, int> lookup;
        for (std::size_t i = 0; i < E.limits[b].families.size(); ++i) lookup.emplace(E.limits[b].families[i], static_cast<int>(i));
        const CommaCat& K = E.commas[b];
        std::vector<int> image;
        for (const auto& phi : fams) {
          std::vector<int> fam;
          for (int q = 0; q < K.cat->num_objects(); ++q) fam.push_back(phi.comp[K.projection.obj[q]][posB[K.arrow[q]]]);
          auto it = lookup.find(fam);
          image.push_back(it == lookup.end() ? -1 : it->second);
        }
        if (first_non_bijective(image, E.extension.sets[b].size()) >= 0) w = Violation{"NotIso", B.object_name(b)};
      }
      if (!w) w = check_ran_universal(E, f, G.value.functor, E.extension);
      if (!w) w = check_ran_universal(E, f, G.value.functor, constant_set_functor(f.cod, FinSet{{"*"}}));
      items.push_back({"ran-via-dual-nerve", fname + "," + G.name, w});
    }
  }
  return items;
}

}  // namespace fcat
