#include "fcat/fincore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace fcat {

FinCat::FinCat(CatTables t) : t_(std::move(t)) {
  const int n = num_objects();
  hom_.assign(static_cast<std::size_t>(n) * n, {});
  for (int f = 0; f < num_arrows(); ++f) hom_[t_.src[f] * n + t_.tgt[f]].push_back(f);
  for (int x = 0; x < n; ++x) object_index_.emplace(t_.objects[x], x);
  for (int f = 0; f < num_arrows(); ++f) arrow_index_.emplace(t_.arrows[f], f);
}

Cat FinCat::make(CatTables tables) {
  if (auto v = check_category_laws(tables)) throw Error(v->kind, v->witness);
  return trusted(std::move(tables));
}

Cat FinCat::trusted(CatTables tables) {
  return Cat(new FinCat(std::move(tables)));
}

std::optional<int> FinCat::find_object(const Id& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::find_arrow(const Id& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int FinCat::object(const Id& name) const {
  if (auto x = find_object(name)) return *x;
  throw Error("UnknownObject", name);
}

int FinCat::arrow(const Id& name) const {
  if (auto f = find_arrow(name)) return *f;
  throw Error("UnknownArrow", name);
}

bool same_category(const Cat& a, const Cat& b) {
  return a == b || (a && b && *a == *b);
}

Verdict check_category_laws(const CatTables& t) {
  const int n = static_cast<int>(t.objects.size());
  const int m = static_cast<int>(t.arrows.size());
  auto name = [&](int f) { return t.arrows[f]; };

  if (static_cast<int>(t.src.size()) != m || static_cast<int>(t.tgt.size()) != m ||
      static_cast<int>(t.identity.size()) != n ||
      t.compose.size() != static_cast<std::size_t>(m) * m)
    return Violation{"MalformedTables", "size mismatch"};
  {
    std::set<Id> seen;
    for (const auto& o : t.objects)
      if (!seen.insert(o).second) return Violation{"DuplicateName", o};
    seen.clear();
    for (const auto& a : t.arrows)
      if (!seen.insert(a).second) return Violation{"DuplicateName", a};
  }
  for (int f = 0; f < m; ++f)
    if (t.src[f] < 0 || t.src[f] >= n || t.tgt[f] < 0 || t.tgt[f] >= n)
      return Violation{"UnknownObject", name(f)};
  for (int x = 0; x < n; ++x) {
    int i = t.identity[x];
    if (i < 0 || i >= m || t.src[i] != x || t.tgt[i] != x)
      return Violation{"IdentityLawBroken", t.objects[x]};
  }
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      int h = t.compose[g * m + f];
      bool composable = t.tgt[f] == t.src[g];
      if (!composable && h != -1) return Violation{"NonComposablePair", name(g) + "," + name(f)};
      if (composable && h == -1) return Violation{"TableIncomplete", name(g) + "," + name(f)};
      if (composable && (h < 0 || h >= m || t.src[h] != t.src[f] || t.tgt[h] != t.tgt[g])) {
        if (t.identity[t.src[g]] == g) return Violation{"IdentityLawBroken", name(f)};
        if (t.identity[t.src[f]] == f) return Violation{"IdentityLawBroken", name(g)};
        return Violation{"NonComposablePair", name(g) + "," + name(f)};
      }
    }
  }
  for (int f = 0; f < m; ++f) {
    if (t.compose[t.identity[t.tgt[f]] * m + f] != f || t.compose[f * m + t.identity[t.src[f]]] != f)
      return Violation{"IdentityLawBroken", name(f)};
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int gf = t.compose[g * m + f];
      if (gf < 0) continue;
      for (int h = 0; h < m; ++h) {
        int hg = t.compose[h * m + g];
        if (hg < 0) continue;
        if (t.compose[h * m + gf] != t.compose[hg * m + f])
          return Violation{"AssociativityBroken", name(f) + "," + name(g) + "," + name(h)};
      }
    }
  return std::nullopt;
}

Cat validate_cat(const RawCategory& raw) {
  CatTables t;
  std::map<Id, int> obj, arr;
  for (const auto& o : raw.objects) {
    if (!obj.emplace(o, static_cast<int>(t.objects.size())).second) throw Error("DuplicateName", o);
    t.objects.push_back(o);
  }
  auto object_of = [&](const Id& o) {
    auto it = obj.find(o);
    if (it == obj.end()) throw Error("UnknownObject", o);
    return it->second;
  };
  auto arrow_of = [&](const Id& a) {
    auto it = arr.find(a);
    if (it == arr.end()) throw Error("UnknownArrow", a);
    return it->second;
  };
  for (const auto& a : raw.arrows) {
    if (!arr.emplace(a.name, static_cast<int>(t.arrows.size())).second)
      throw Error("DuplicateName", a.name);
    t.arrows.push_back(a.name);
    t.src.push_back(object_of(a.src));
    t.tgt.push_back(object_of(a.tgt));
  }
  const int m = static_cast<int>(t.arrows.size());
  t.identity.assign(t.objects.size(), -1);
  for (const auto& [o, a] : raw.identities) t.identity[object_of(o)] = arrow_of(a);
  for (std::size_t x = 0; x < t.objects.size(); ++x)
    if (t.identity[x] < 0) throw Error("IdentityLawBroken", t.objects[x]);
  t.compose.assign(static_cast<std::size_t>(m) * m, -1);
  for (const auto& c : raw.compose) {
    int g = arrow_of(c.g), f = arrow_of(c.f), h = arrow_of(c.result);
    if (t.tgt[f] != t.src[g]) throw Error("NonComposablePair", c.g + "," + c.f);
    int& slot = t.compose[g * m + f];
    if (slot != -1 && slot != h) throw Error("NonComposablePair", c.g + "," + c.f);
    slot = h;
  }
  return FinCat::make(std::move(t));
}

Cat validate_with_identities(RawCategory raw) {
  std::map<Id, Id> ident(raw.identities.begin(), raw.identities.end());
  for (const auto& o : raw.objects)
    if (!ident.count(o)) {
      ident[o] = "id_" + o;
      raw.arrows.push_back({"id_" + o, o, o});
      raw.identities.emplace_back(o, "id_" + o);
    }
  std::set<std::pair<Id, Id>> given;
  for (const auto& c : raw.compose) given.emplace(c.g, c.f);
  const auto arrows = raw.arrows;
  for (const auto& a : arrows) {
    auto s = ident.find(a.src), t = ident.find(a.tgt);
    if (s != ident.end() && !given.count({a.name, s->second})) {
      raw.compose.push_back({a.name, s->second, a.name});
      given.emplace(a.name, s->second);
    }
    if (t != ident.end() && !given.count({t->second, a.name})) {
      raw.compose.push_back({t->second, a.name, a.name});
      given.emplace(t->second, a.name);
    }
  }
  return validate_cat(raw);
}

RawCategory to_raw(const FinCat& c) {
  RawCategory r;
  r.objects = c.tables().objects;
  for (int f = 0; f < c.num_arrows(); ++f)
    r.arrows.push_back({c.arrow_name(f), c.object_name(c.src(f)), c.object_name(c.tgt(f))});
  for (int x = 0; x < c.num_objects(); ++x)
    r.identities.emplace_back(c.object_name(x), c.arrow_name(c.identity(x)));
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f)
      if (int h = c.compose(g, f); h >= 0)
        r.compose.push_back({c.arrow_name(g), c.arrow_name(f), c.arrow_name(h)});
  return r;
}

Cat op_cat(const Cat& c) {
  CatTables t = c->tables();
  std::swap(t.src, t.tgt);
  const int m = c->num_arrows();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) t.compose[g * m + f] = c->compose(f, g);
  return FinCat::trusted(std::move(t));
}

Cat product_cat(const Cat& a, const Cat& b) {
  CatTables t;
  const int na = a->num_objects(), nb = b->num_objects();
  const int ma = a->num_arrows(), mb = b->num_arrows();
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) t.objects.push_back("(" + a->object_name(x) + "," + b->object_name(y) + ")");
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g) {
      t.arrows.push_back("(" + a->arrow_name(f) + "," + b->arrow_name(g) + ")");
      t.src.push_back(a->src(f) * nb + b->src(g));
      t.tgt.push_back(a->tgt(f) * nb + b->tgt(g));
    }
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) t.identity.push_back(a->identity(x) * mb + b->identity(y));
  const int m = ma * mb;
  t.compose.assign(static_cast<std::size_t>(m) * m, -1);
  for (int f2 = 0; f2 < ma; ++f2)
    for (int f1 = 0; f1 < ma; ++f1) {
      int f = a->compose(f2, f1);
      if (f < 0) continue;
      for (int g2 = 0; g2 < mb; ++g2)
        for (int g1 = 0; g1 < mb; ++g1) {
          int g = b->compose(g2, g1);
          if (g < 0) continue;
          t.compose[(f2 * mb + g2) * m + (f1 * mb + g1)] = f * mb + g;
        }
    }
  return FinCat::trusted(std::move(t));
}

Cat discrete_cat(const std::vector<Id>& objects) {
  CatTables t;
  t.objects = objects;
  const int n = static_cast<int>(objects.size());
  for (int x = 0; x < n; ++x) {
    t.arrows.push_back("id_" + objects[x]);
    t.src.push_back(x);
    t.tgt.push_back(x);
    t.identity.push_back(x);
  }
  t.compose.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) t.compose[x * n + x] = x;
  return FinCat::make(std::move(t));
}

Cat poset_cat(const std::vector<Id>& objects, const std::vector<std::pair<Id, Id>>& less) {
  const int n = static_cast<int>(objects.size());
  std::map<Id, int> index;
  for (int x = 0; x < n; ++x)
    if (!index.emplace(objects[x], x).second) throw Error("DuplicateName", objects[x]);
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (const auto& [a, b] : less) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error("UnknownObject", a);
    if (ib == index.end()) throw Error("UnknownObject", b);
    leq[ia->second * n + ib->second] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i]) throw Error("NotAPoset", objects[i] + "," + objects[j]);

  CatTables t;
  t.objects = objects;
  std::vector<int> arrow_of(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i * n + j]) {
        arrow_of[i * n + j] = static_cast<int>(t.arrows.size());
        t.arrows.push_back(i == j ? "id_" + objects[i] : objects[i] + "<=" + objects[j]);
        t.src.push_back(i);
        t.tgt.push_back(j);
      }
  for (int i = 0; i < n; ++i) t.identity.push_back(arrow_of[i * n + i]);
  const int m = static_cast<int>(t.arrows.size());
  t.compose.assign(static_cast<std::size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (t.tgt[f] == t.src[g]) t.compose[g * m + f] = arrow_of[t.src[f] * n + t.tgt[g]];
  return FinCat::make(std::move(t));
}

bool is_thin(const FinCat& c) {
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y)
      if (c.hom(x, y).size() > 1) return false;
  return true;
}

bool is_poset(const FinCat& c) {
  if (!is_thin(c)) return false;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = x + 1; y < c.num_objects(); ++y)
      if (!c.hom(x, y).empty() && !c.hom(y, x).empty()) return false;
  return true;
}

// ---------------------------------------------------------------- functors

Verdict check_functor(const FinFunctor& F) {
  const FinCat& A = *F.dom;
  const FinCat& B = *F.cod;
  if (static_cast<int>(F.obj.size()) != A.num_objects() || static_cast<int>(F.arr.size()) != A.num_arrows())
    return Violation{"ShapeMismatch", "functor table size"};
  for (int x = 0; x < A.num_objects(); ++x)
    if (F.obj[x] < 0 || F.obj[x] >= B.num_objects()) return Violation{"UnknownObject", A.object_name(x)};
  for (int f = 0; f < A.num_arrows(); ++f) {
    int g = F.arr[f];
    if (g < 0 || g >= B.num_arrows()) return Violation{"UnknownArrow", A.arrow_name(f)};
    if (B.src(g) != F.obj[A.src(f)] || B.tgt(g) != F.obj[A.tgt(f)])
      return Violation{"FunctorBreaksTyping", A.arrow_name(f)};
  }
  for (int x = 0; x < A.num_objects(); ++x)
    if (F.arr[A.identity(x)] != B.identity(F.obj[x]))
      return Violation{"FunctorBreaksIdentity", A.object_name(x)};
  for (int g = 0; g < A.num_arrows(); ++g)
    for (int f = 0; f < A.num_arrows(); ++f) {
      int h = A.compose(g, f);
      if (h >= 0 && F.arr[h] != B.compose(F.arr[g], F.arr[f]))
        return Violation{"FunctorBreaksComposition", A.arrow_name(g) + "," + A.arrow_name(f)};
    }
  return std::nullopt;
}

FinFunctor make_functor(Cat dom, Cat cod, std::vector<int> obj, std::vector<int> arr) {
  FinFunctor F{std::move(dom), std::move(cod), std::move(obj), std::move(arr)};
  if (auto v = check_functor(F)) throw Error(v->kind, v->witness);
  return F;
}

FinFunctor thin_functor(Cat dom, Cat cod, std::vector<int> obj) {
  if (!is_thin(*cod)) throw Error("NotThin", "codomain");
  if (static_cast<int>(obj.size()) != dom->num_objects()) throw Error("ShapeMismatch", "object map size");
  std::vector<int> arr(dom->num_arrows());
  for (int f = 0; f < dom->num_arrows(); ++f) {
    const auto& h = cod->hom(obj[dom->src(f)], obj[dom->tgt(f)]);
    if (h.empty())
      throw Error("NotMonotone", dom->object_name(dom->src(f)) + "," + dom->object_name(dom->tgt(f)));
    arr[f] = h[0];
  }
  return make_functor(std::move(dom), std::move(cod), std::move(obj), std::move(arr));
}

FinFunctor identity_functor(const Cat& c) {
  std::vector<int> obj(c->num_objects()), arr(c->num_arrows());
  std::iota(obj.begin(), obj.end(), 0);
  std::iota(arr.begin(), arr.end(), 0);
  return FinFunctor{c, c, std::move(obj), std::move(arr)};
}

FinFunctor constant_functor(const Cat& dom, const Cat& cod, int object) {
  return FinFunctor{dom, cod, std::vector<int>(dom->num_objects(), object),
                    std::vector<int>(dom->num_arrows(), cod->identity(object))};
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.cod, g.dom)) throw Error("ShapeMismatch", "functor composition");
  FinFunctor h{f.dom, g.cod, {}, {}};
  for (int x : f.obj) h.obj.push_back(g.obj[x]);
  for (int a : f.arr) h.arr.push_back(g.arr[a]);
  return h;
}

FinFunctor op_functor(const FinFunctor& f, const Cat& op_dom, const Cat& op_cod) {
  return FinFunctor{op_dom, op_cod, f.obj, f.arr};
}

FinFunctor op_functor(const FinFunctor& f) {
  return op_functor(f, op_cat(f.dom), op_cat(f.cod));
}

FinFunctor projection_first(const Cat& a, const Cat& b, const Cat& product) {
  FinFunctor p{product, a, {}, {}};
  for (int x = 0; x < product->num_objects(); ++x) p.obj.push_back(x / b->num_objects());
  for (int f = 0; f < product->num_arrows(); ++f) p.arr.push_back(f / b->num_arrows());
  return p;
}

FinFunctor projection_second(const Cat& a, const Cat& b, const Cat& product) {
  (void)a;
  FinFunctor p{product, b, {}, {}};
  for (int x = 0; x < product->num_objects(); ++x) p.obj.push_back(x % b->num_objects());
  for (int f = 0; f < product->num_arrows(); ++f) p.arr.push_back(f % b->num_arrows());
  return p;
}

std::vector<FinFunctor> all_functors(const Cat& dom, const Cat& cod) {
  const FinCat& A = *dom;
  const FinCat& B = *cod;
  std::vector<FinFunctor> out;
  std::vector<int> obj(A.num_objects(), -1), arr(A.num_arrows(), -1);

  // Arrows are assigned in index order; each assignment is checked against
  // every composite whose factors are already assigned.
  std::function<void(int)> assign_arrow = [&](int f) {
    if (f == A.num_arrows()) {
      out.push_back(FinFunctor{dom, cod, obj, arr});
      return;
    }
    auto candidates = B.hom(obj[A.src(f)], obj[A.tgt(f)]);
    if (A.is_identity(f)) candidates = {B.identity(obj[A.src(f)])};
    for (int g : candidates) {
      arr[f] = g;
      bool ok = true;
      for (int u = 0; u <= f && ok; ++u)
        for (int v = 0; v <= f && ok; ++v) {
          int w = A.compose(u, v);
          if (w < 0 || w > f || (u != f && v != f && w != f)) continue;
          if (B.compose(arr[u], arr[v]) != arr[w]) ok = false;
        }
      if (ok) assign_arrow(f + 1);
    }
    arr[f] = -1;
  };
  std::function<void(int)> assign_object = [&](int x) {
    if (x == A.num_objects()) {
      assign_arrow(0);
      return;
    }
    for (int y = 0; y < B.num_objects(); ++y) {
      obj[x] = y;
      assign_object(x + 1);
    }
  };
  assign_object(0);
  return out;
}

namespace {

struct Degree {
  int loops, out, in;
  auto operator<=>(const Degree&) const = default;
};

std::vector<Degree> degrees(const FinCat& c) {
  std::vector<Degree> d(c.num_objects(), Degree{0, 0, 0});
  for (int f = 0; f < c.num_arrows(); ++f) {
    if (c.src(f) == c.tgt(f)) ++d[c.src(f)].loops;
    ++d[c.src(f)].out;
    ++d[c.tgt(f)].in;
  }
  return d;
}

}  // namespace

std::optional<FinFunctor> find_isomorphism(const Cat& a, const Cat& b) {
  const FinCat& A = *a;
  const FinCat& B = *b;
  if (A.num_objects() != B.num_objects() || A.num_arrows() != B.num_arrows()) return std::nullopt;
  auto da = degrees(A), db = degrees(B);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const int n = A.num_objects();
  std::vector<int> obj(n, -1);
  std::vector<char> used(n, 0);
  std::optional<FinFunctor> found;

  // Once objects are matched, arrows are matched hom-set by hom-set by a
  // second backtracking pass that must respect composition.
  auto match_arrows = [&]() -> std::optional<FinFunctor> {
    std::vector<int> arr(A.num_arrows(), -1);
    std::vector<char> taken(B.num_arrows(), 0);
    std::optional<FinFunctor> result;
    std::function<bool(int)> go = [&](int f) -> bool {
      if (f == A.num_arrows()) {
        result = FinFunctor{a, b, obj, arr};
        return true;
      }
      const auto& cands = B.hom(obj[A.src(f)], obj[A.tgt(f)]);
      for (int g : cands) {
        if (taken[g]) continue;
        if (A.is_identity(f) != B.is_identity(g)) continue;
        arr[f] = g;
        taken[g] = 1;
        bool ok = true;
        for (int u = 0; u <= f && ok; ++u)
          for (int v = 0; v <= f && ok; ++v) {
            int w = A.compose(u, v);
            if (w < 0 || w > f || (u != f && v != f && w != f)) continue;
            if (B.compose(arr[u], arr[v]) != arr[w]) ok = false;
          }
        if (ok && go(f + 1)) return true;
        taken[g] = 0;
        arr[f] = -1;
      }
      return false;
    };
    go(0);
    return result;
  };

  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (A.hom(u, v).size() != B.hom(obj[u], obj[v]).size()) return false;
      found = match_arrows();
      return found.has_value();
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || !(da[x] == db[y])) continue;
      obj[x] = y;
      used[y] = 1;
      if (go(x + 1)) return true;
      used[y] = 0;
    }
    obj[x] = -1;
    return false;
  };
  go(0);
  return found;
}

// -------------------------------------------------- natural transformations

Verdict check_nat(const CatNat& a) {
  const FinCat& A = *a.dom.dom;
  const FinCat& B = *a.dom.cod;
  if (!same_category(a.dom.dom, a.cod.dom) || !same_category(a.dom.cod, a.cod.cod))
    return Violation{"ShapeMismatch", "functors not parallel"};
  if (static_cast<int>(a.comp.size()) != A.num_objects()) return Violation{"ShapeMismatch", "component count"};
  for (int x = 0; x < A.num_objects(); ++x) {
    int c = a.comp[x];
    if (c < 0 || c >= B.num_arrows() || B.src(c) != a.dom.obj[x] || B.tgt(c) != a.cod.obj[x])
      return Violation{"ComponentTyping", A.object_name(x)};
  }
  for (int f = 0; f < A.num_arrows(); ++f) {
    int lhs = B.compose(a.cod.arr[f], a.comp[A.src(f)]);
    int rhs = B.compose(a.comp[A.tgt(f)], a.dom.arr[f]);
    if (lhs != rhs) return Violation{"NaturalityFails", A.arrow_name(f)};
  }
  return std::nullopt;
}

CatNat identity_nat(const FinFunctor& f) {
  CatNat a{f, f, {}};
  for (int x = 0; x < f.dom->num_objects(); ++x) a.comp.push_back(f.cod->identity(f.obj[x]));
  return a;
}

CatNat vertical(const CatNat& beta, const CatNat& alpha) {
  CatNat g{alpha.dom, beta.cod, {}};
  for (std::size_t x = 0; x < alpha.comp.size(); ++x)
    g.comp.push_back(alpha.dom.cod->compose(beta.comp[x], alpha.comp[x]));
  return g;
}

CatNat whisker_left(const FinFunctor& h, const CatNat& alpha) {
  CatNat g{compose(h, alpha.dom), compose(h, alpha.cod), {}};
  for (int c : alpha.comp) g.comp.push_back(h.arr[c]);
  return g;
}

CatNat whisker_right(const CatNat& alpha, const FinFunctor& k) {
  CatNat g{compose(alpha.dom, k), compose(alpha.cod, k), {}};
  for (int x : k.obj) g.comp.push_back(alpha.comp[x]);
  return g;
}

std::vector<CatNat> all_nats(const FinFunctor& f, const FinFunctor& g) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  std::vector<CatNat> out;
  CatNat cur{f, g, std::vector<int>(A.num_objects(), -1)};
  std::function<void(int)> go = [&](int x) {
    if (x == A.num_objects()) {
      out.push_back(cur);
      return;
    }
    for (int c : B.hom(f.obj[x], g.obj[x])) {
      cur.comp[x] = c;
      bool ok = true;
      for (int u = 0; u < A.num_arrows() && ok; ++u) {
        int s = A.src(u), t = A.tgt(u);
        if (s > x || t > x || (s != x && t != x)) continue;
        if (B.compose(g.arr[u], cur.comp[s]) != B.compose(cur.comp[t], f.arr[u])) ok = false;
      }
      if (ok) go(x + 1);
    }
    cur.comp[x] = -1;
  };
  go(0);
  return out;
}

Checked<AdjunctionWitness> check_adjunction(const FinFunctor& f, const FinFunctor& g, const CatNat& unit,
                                            const CatNat& counit) {
  if (!same_category(f.dom, g.cod) || !same_category(f.cod, g.dom)) throw Error("ShapeMismatch", "F: A->B, G: B->A");
  FinFunctor gf = compose(g, f), fg = compose(f, g);
  if (!(unit.dom == identity_functor(f.dom)) || !(unit.cod == gf)) throw Error("ShapeMismatch", "unit: 1 => GF");
  if (!(counit.dom == fg) || !(counit.cod == identity_functor(f.cod))) throw Error("ShapeMismatch", "counit: FG => 1");
  if (auto v = check_nat(unit)) throw Error(v->kind, "unit: " + v->witness);
  if (auto v = check_nat(counit)) throw Error(v->kind, "counit: " + v->witness);
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  for (int a = 0; a < A.num_objects(); ++a) {
    int z = B.compose(counit.comp[f.obj[a]], f.arr[unit.comp[a]]);
    if (z != B.identity(f.obj[a])) return Violation{"TriangleIdentityFails", A.object_name(a)};
  }
  for (int b = 0; b < B.num_objects(); ++b) {
    int z = A.compose(g.arr[counit.comp[b]], unit.comp[g.obj[b]]);
    if (z != A.identity(g.obj[b])) return Violation{"TriangleIdentityFails", B.object_name(b)};
  }
  return AdjunctionWitness{f, g, unit, counit};
}

Checked<AdjunctionWitness> check_thin_adjunction(const FinFunctor& f, const FinFunctor& g) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  FinFunctor gf = compose(g, f), fg = compose(f, g);
  CatNat unit{identity_functor(f.dom), gf, {}}, counit{fg, identity_functor(f.cod), {}};
  for (int a = 0; a < A.num_objects(); ++a) {
    const auto& h = A.hom(a, gf.obj[a]);
    if (h.empty()) return Violation{"NoUnitComponent", A.object_name(a)};
    unit.comp.push_back(h[0]);
  }
  for (int b = 0; b < B.num_objects(); ++b) {
    const auto& h = B.hom(fg.obj[b], b);
    if (h.empty()) return Violation{"NoCounitComponent", B.object_name(b)};
    counit.comp.push_back(h[0]);
  }
  return check_adjunction(f, g, unit, counit);
}

Checked<AdjunctionWitness> find_adjunction(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.dom, g.cod) || !same_category(f.cod, g.dom)) throw Error("ShapeMismatch", "adjunction");
  if (is_thin(*f.dom) && is_thin(*f.cod)) return check_thin_adjunction(f, g);
  const FinFunctor gf = compose(g, f), fg = compose(f, g);
  const auto units = all_nats(identity_functor(f.dom), gf);
  const auto counits = all_nats(fg, identity_functor(f.cod));
  for (const auto& u : units)
    for (const auto& c : counits)
      if (auto r = check_adjunction(f, g, u, c); r.ok()) return r;
  return Violation{"NotAnAdjunction", "no unit and counit satisfy the zig-zags"};
}

// ---------------------------------------------------------------- lattices

int FinLattice::top() const {
  int t = bottom;
  for (int x = 0; x < size(); ++x) t = join(t, x);
  return t;
}

FinLattice lattice_from_poset(const Cat& c) {
  if (!is_poset(*c)) throw Error("NotAPoset", "carrier");
  const int n = c->num_objects();
  FinLattice L{c, std::vector<int>(static_cast<std::size_t>(n) * n, -1), -1};
  auto leq = [&](int a, int b) { return !c->hom(a, b).empty(); };
  for (int x = 0; x < n; ++x) {
    bool least = true;
    for (int y = 0; y < n && least; ++y) least = leq(x, y);
    if (least) L.bottom = x;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int u = 0; u < n; ++u) {
        if (!leq(a, u) || !leq(b, u)) continue;
        bool least = true;
        for (int v = 0; v < n && least; ++v)
          if (leq(a, v) && leq(b, v) && !leq(u, v)) least = false;
        if (least) best = u;
      }
      if (best < 0) throw Error("NoJoin", c->object_name(a) + "," + c->object_name(b));
      L.join_table[a * n + b] = best;
    }
  if (L.bottom < 0) throw Error("NoBottom", n == 0 ? "empty" : "carrier");
  return L;
}

}  // namespace fcat
