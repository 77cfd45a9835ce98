// Acceptance run: one line per property, exit status 1 when any fails.
// Every numeric expectation is recomputed here by a direct method that does
// not go through the library's own construction.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fcat/commands.hpp"
#include "fcat/corpus.hpp"
#include "fcat/dsl.hpp"
#include "fcat/isbell.hpp"
#include "fcat/kan.hpp"
#include "fcat/presheaf.hpp"
#include "fcat/prof.hpp"
#include "fcat/relmonad.hpp"
#include "fcat/suites.hpp"

using namespace fcat;

namespace {

// ------------------------------------------------------------------ oracles

// Natural families F ⇒ G counted by backtracking over elements, rejecting a
// partial assignment as soon as some arrow square with both ends assigned
// fails.
long count_nats(const SetFunctor& F, const SetFunctor& G) {
  const FinCat& C = *F.shape;
  std::vector<std::pair<int, int>> vars;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int i = 0; i < F.sets[x].size(); ++i) vars.emplace_back(x, i);
  std::vector<std::vector<int>> cur(C.num_objects());
  for (int x = 0; x < C.num_objects(); ++x) cur[x].assign(F.sets[x].size(), -1);
  long n = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == vars.size()) {
      ++n;
      return;
    }
    const auto [x, i] = vars[k];
    for (int v = 0; v < G.sets[x].size(); ++v) {
      cur[x][i] = v;
      bool ok = true;
      for (int g = 0; g < C.num_arrows() && ok; ++g) {
        if (C.src(g) == x) {
          const int j = F.maps[g][i];
          const int w = cur[C.tgt(g)][j];
          if (w >= 0 && G.maps[g][v] != w) ok = false;
        }
        if (C.tgt(g) == x)
          for (int s = 0; s < F.sets[C.src(g)].size() && ok; ++s)
            if (F.maps[g][s] == i && cur[C.src(g)][s] >= 0 && G.maps[g][cur[C.src(g)][s]] != v) ok = false;
      }
      if (ok) go(k + 1);
      cur[x][i] = -1;
    }
  };
  go(0);
  return n;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) c += find(i) == i;
    return c;
  }
};

// |colim over el(F) of y| at a: pairs (b, s, h: a → b) glued along the
// arrows of A.
int density_size(const Cat& A, const SetFunctor& F, int a) {
  const FinCat& C = *A;
  std::vector<std::array<int, 3>> items;
  std::map<std::array<int, 3>, int> index;
  for (int b = 0; b < C.num_objects(); ++b)
    for (int s = 0; s < F.sets[b].size(); ++s)
      for (int h : C.hom(a, b)) {
        index[{b, s, h}] = static_cast<int>(items.size());
        items.push_back({b, s, h});
      }
  Dsu d(static_cast<int>(items.size()));
  for (int g = 0; g < C.num_arrows(); ++g) {
    const int b = C.src(g), c = C.tgt(g);
    for (int t = 0; t < F.sets[c].size(); ++t)
      for (int h : C.hom(a, b)) d.unite(index[{b, F.maps[g][t], h}], index[{c, t, C.compose(g, h)}]);
  }
  return d.classes();
}

// |∫^y G(z, y) × F(y, x)| for Kleisli cells stored as profunctors Y ⇸ X and
// Z ⇸ Y.
int coend_size(const Profunctor& G, const Profunctor& F, int z, int x) {
  const FinCat& Y = *F.src;
  std::map<std::array<int, 3>, int> index;
  for (int y = 0; y < Y.num_objects(); ++y)
    for (int p = 0; p < G.at(z, y).size(); ++p)
      for (int q = 0; q < F.at(y, x).size(); ++q) index[{y, p, q}] = static_cast<int>(index.size());
  Dsu d(static_cast<int>(index.size()));
  const int idz = G.src->identity(z), idx = F.dst->identity(x);
  for (int v = 0; v < Y.num_arrows(); ++v) {
    const int y = Y.src(v), y2 = Y.tgt(v);
    for (int p = 0; p < G.at(z, y).size(); ++p)
      for (int q = 0; q < F.at(y2, x).size(); ++q)
        d.unite(index[{y2, G.act(idz, v, p), q}], index[{y, p, F.act(v, idx, q)}]);
  }
  return d.classes();
}

// Right adjoint of a monotone map by the Galois condition: r(m) is the
// greatest l with f(l) ≤ m, when that set has a greatest element.
std::optional<std::vector<int>> galois(const FinCat& L, const FinCat& M, const std::vector<int>& f) {
  auto le = [](const FinCat& P, int a, int b) { return !P.hom(a, b).empty(); };
  std::vector<int> r;
  for (int m = 0; m < M.num_objects(); ++m) {
    int best = -1;
    for (int l = 0; l < L.num_objects(); ++l) {
      if (!le(M, f[l], m)) continue;
      bool greatest = true;
      for (int k = 0; k < L.num_objects(); ++k)
        if (le(M, f[k], m) && !le(L, k, l)) greatest = false;
      if (greatest) best = l;
    }
    if (best < 0) return std::nullopt;
    r.push_back(best);
  }
  return r;
}

std::vector<std::vector<int>> monotone_maps(const FinCat& L, const FinCat& M) {
  const int n = L.num_objects(), m = M.num_objects();
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < m; ++v) {
      cur[k] = v;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        if (!L.hom(j, k).empty() && M.hom(cur[j], v).empty()) ok = false;
        if (!L.hom(k, j).empty() && M.hom(v, cur[j]).empty()) ok = false;
      }
      if (ok) go(k + 1);
    }
  };
  go(0);
  return out;
}

// ------------------------------------------------------------------ harness

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome suite_outcome(const SuiteResult& r) {
  if (const SuiteCheck* f = r.first_failure()) return fail(f->check + " " + f->subject + ": " + f->verdict->str());
  for (const auto& c : r.checks)
    if (c.skipped) return fail("skipped " + c.check + " " + c.subject);
  return {true, std::to_string(r.checks.size()) + " checks"};
}

std::vector<corpus::NamedCat> cats() { return corpus::categories(); }

// ------------------------------------------------------------------ properties

Outcome yoneda_lemma() {
  int triples = 0;
  for (const auto& [name, A] : cats())
    for (const auto& F : corpus::presheaves(A, 1))
      for (int a = 0; a < A->num_objects(); ++a) {
        const long brute = count_nats(yoneda(A, a), F.functor);
        if (brute != F.functor.sets[a].size())
          return fail(name + "/" + F.name + " at " + A->object_name(a) + ": brute " + std::to_string(brute));
        auto r = check_yoneda_lemma(A, a, F.functor);
        if (!r.ok()) return fail(name + "/" + F.name + ": " + r.violation().str());
        ++triples;
      }
  return {true, std::to_string(triples) + " (category, object, presheaf) triples"};
}

Outcome ext_restrict_adjunction() {
  int pairs = 0;
  for (const auto& [fname, f] : corpus::functors()) {
    for (const auto& F : corpus::presheaves(f.dom, 1))
      for (const auto& G : corpus::presheaves(f.cod, 1)) {
        auto r = check_ext_restrict_adjunction(f, F.functor, G.functor);
        if (!r.ok()) return fail(fname + " " + F.name + "," + G.name + ": " + r.violation().str());
        const long left = count_nats(extend(f, F.functor), G.functor);
        const long right = count_nats(F.functor, restrict(f, G.functor));
        if (left != right || left != static_cast<long>(r.value().left.size()))
          return fail(fname + " " + F.name + "," + G.name + ": counts " + std::to_string(left) + " vs " +
                      std::to_string(right));
        ++pairs;
      }
  }
  return {true, std::to_string(pairs) + " functor/sample pairs"};
}

Outcome density() {
  int n = 0;
  for (const auto& [name, A] : cats())
    for (const auto& F : corpus::presheaves(A, 1)) {
      auto r = density_check(A, F.functor);
      if (!r.ok()) return fail(name + "/" + F.name + ": " + r.violation().str());
      for (int a = 0; a < A->num_objects(); ++a)
        if (density_size(A, F.functor, a) != F.functor.sets[a].size())
          return fail(name + "/" + F.name + " at " + A->object_name(a));
      ++n;
    }
  return {true, std::to_string(n) + " presheaves"};
}

Outcome relmonad_laws() {
  const SuiteResult r = relmonad_suite(cats());
  Outcome o = suite_outcome(r);
  if (!o.ok) return o;
  for (const auto& c : r.checks)
    if (c.count <= 0) return fail(c.check + " " + c.subject + " verified nothing");
  return o;
}

Profunctor draw(const Cat& A, const Cat& B, std::mt19937_64& rng) {
  for (int tries = 0;; ++tries) {
    try {
      return corpus::random_profunctor(A, B, rng, 2);
    } catch (const Error& e) {
      if (e.kind() != "NoRandomFunctor" || tries >= 3) throw;
    }
  }
}

Outcome kleisli_matches_coend() {
  std::vector<corpus::NamedCat> small;
  for (const auto& c : cats())
    if (c.cat->num_objects() <= 3) small.push_back(c);
  const SuiteResult r = kleisli_suite(small, 100, 50);
  Outcome o = suite_outcome(r);
  if (!o.ok) return o;
  if (r.checks[0].count < 100 || r.checks[1].count < 50) return fail("too few pairs or triples");
  // Cell sizes against an independent coend on fresh random pairs.
  std::mt19937_64 rng(7);
  int cells = 0;
  for (int i = 0; i < 100; ++i) {
    const Cat& X = small[rng() % small.size()].cat;
    const Cat& Y = small[rng() % small.size()].cat;
    const Cat& Z = small[rng() % small.size()].cat;
    const KleisliCell f = kleisli_cell(draw(Y, X, rng));
    const KleisliCell g = kleisli_cell(draw(Z, Y, rng));
    const KleisliCell gf = kleisli_compose(g, f);
    for (int z = 0; z < Z->num_objects(); ++z)
      for (int x = 0; x < X->num_objects(); ++x, ++cells)
        if (gf.body.at(z, x).size() != coend_size(g.body, f.body, z, x))
          return fail("pair " + std::to_string(i) + " cell size");
  }
  return {true, o.detail + ", " + std::to_string(cells) + " cells sized independently"};
}

Outcome equipment() {
  const SuiteResult r = equipment_suite(cats(), corpus::functors(), corpus::adjunctions());
  Outcome o = suite_outcome(r);
  if (!o.ok) return o;
  for (const auto& [name, f] : corpus::functors()) {
    const Profunctor P = companion(f);
    for (int a = 0; a < f.dom->num_objects(); ++a)
      for (int b = 0; b < f.cod->num_objects(); ++b)
        if (P.at(a, b).size() != static_cast<int>(f.cod->hom(f.obj[a], b).size()))
          return fail("companion " + name + " cell size");
  }
  return o;
}

Outcome main_theorem() {
  const SuiteResult r = main_theorem_suite(cats());
  Outcome o = suite_outcome(r);
  if (!o.ok) return o;
  int caught = 0;
  for (const auto& c : r.checks)
    if (c.check.rfind("mutation ", 0) == 0) caught += !c.note.empty();
  if (caught != 3) return fail(std::to_string(caught) + " of 3 mutations caught");
  return {true, o.detail + ", 3 mutations caught"};
}

Outcome lattice_aft() {
  const auto lats = corpus::lattices_up_to(5);
  long maps = 0, adjoints = 0;
  for (const auto& L : lats)
    for (const auto& M : lats) {
      const auto tables = monotone_maps(*L.carrier, *M.carrier);
      if (tables.size() != all_functors(L.carrier, M.carrier).size()) return fail("monotone map count");
      for (const auto& t : tables) {
        const FinFunctor f = thin_functor(L.carrier, M.carrier, t);
        const auto r = formal_aft(f);
        const auto g = galois(*L.carrier, *M.carrier, t);
        if (r.ok() != g.has_value()) return fail("verdict differs");
        if (g && r.value().right.obj != *g) return fail("adjoint differs");
        ++maps;
        adjoints += g.has_value();
      }
    }
  return {true, std::to_string(lats.size()) + " lattices, " + std::to_string(maps) + " maps, " +
                    std::to_string(adjoints) + " with right adjoint"};
}

Outcome skew() {
  SuiteOptions opt;
  opt.probe_size = 2;
  const SuiteResult r = skew_suite(opt);
  Outcome o = suite_outcome(r);
  if (!o.ok) return o;
  int mutations = 0;
  for (const auto& c : r.checks) mutations += c.check.rfind("mutation ", 0) == 0;
  if (mutations != 4) return fail("expected four mutations");
  return o;
}

Outcome isbell() {
  const SuiteResult r = isbell_suite(cats(), corpus::functors());
  Outcome o = suite_outcome(r);
  if (!o.ok) return o;
  for (const auto& [name, A] : cats())
    for (const auto& F : isbell_samples(A, 1).presheaves) {
      const IsbellO O = isbell_O(A, F.functor);
      for (int b = 0; b < A->num_objects(); ++b)
        if (O.value.functor.sets[b].size() != count_nats(F.functor, yoneda(A, b)))
          return fail(name + "/" + F.name + " O size at " + A->object_name(b));
    }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

Outcome cli_determinism() {
  const std::string root = FCAT_SOURCE_DIR;
  const char* files[] = {"categories", "isbell", "kan", "lattices", "prof", "suites", "yoneda"};
  for (const char* f : files) {
    const std::string path = root + "/corpus/" + f + ".fcat";
    const dsl::DslDocument doc = dsl::parse(slurp(path));
    if (!(dsl::parse_syntax(dsl::print(doc)) == doc)) return fail(std::string(f) + ": round trip");
    if (dsl::print(dsl::parse_syntax(dsl::print(doc))) != dsl::print(doc)) return fail(std::string(f) + ": print");
    const dsl::Environment env = dsl::elaborate(doc);
    const std::string first = cli::render_text(cli::run_all(env));
    const std::string second = cli::render_text(cli::run_all(dsl::elaborate(dsl::parse(slurp(path)))));
    if (first != second) return fail(std::string(f) + ": two runs differ");
    if (first != slurp(root + "/tests/golden/" + f + ".txt")) return fail(std::string(f) + ": golden differs");
  }
  return {true, "7 corpus files"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> props[] = {
      {"yoneda-lemma", yoneda_lemma},
      {"ext-restrict-adjunction", ext_restrict_adjunction},
      {"density", density},
      {"relative-monad-laws", relmonad_laws},
      {"kleisli-equals-coend", kleisli_matches_coend},
      {"equipment", equipment},
      {"main-theorem-roundtrip", main_theorem},
      {"lattice-aft-vs-galois", lattice_aft},
      {"skew-coherence", skew},
      {"isbell", isbell},
      {"cli-determinism", cli_determinism},
  };
  int failed = 0, i = 0;
  for (const auto& [name, run] : props) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("threw ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-4s %2d %-26s %6.2fs  %s\n", o.ok ? "PASS" : "FAIL", ++i, name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d/%d passed\n", i - failed, i);
  return failed ? 1 : 0;
}
