#include "fcat/finset.hpp"

#include <numeric>
#include <set>
#include <unordered_map>

namespace fcat {

int FinSet::index_of(const Id& e) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == e) return i;
  return -1;
}

FinSet make_finset(std::vector<Id> elems) {
  std::set<Id> seen;
  for (const auto& e : elems)
    if (!seen.insert(e).second) throw Error("DuplicateElement", e);
  return FinSet{std::move(elems)};
}

Verdict check_setmap(const SetMap& m) {
  if (static_cast<int>(m.table.size()) != m.dom.size()) return Violation{"NotTotal", "table size"};
  for (int i = 0; i < m.dom.size(); ++i)
    if (m.table[i] < 0 || m.table[i] >= m.cod.size()) return Violation{"ImageOutsideCodomain", m.dom[i]};
  return std::nullopt;
}

bool is_bijection(const std::vector<int>& table, int cod_size) {
  if (static_cast<int>(table.size()) != cod_size) return false;
  std::vector<char> hit(cod_size, 0);
  for (int v : table) {
    if (v < 0 || v >= cod_size || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::string tuple_id(const std::vector<Id>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

std::string tagged_id(const Id& elem, const Id& tag) { return elem + "@" + tag; }

std::string table_id(const std::vector<Id>& images) {
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ',';
    s += images[i];
  }
  return s + "]";
}

std::vector<int> Quotient::representatives() const {
  std::vector<int> reps;
  for (int i = 0; i < carrier.size(); ++i)
    if (class_of[i] == i) reps.push_back(i);
  return reps;
}

int Quotient::num_classes() const { return static_cast<int>(representatives().size()); }

FinSet Quotient::classes() const {
  FinSet s;
  for (int r : representatives()) s.elems.push_back(carrier[r]);
  return s;
}

UnionFind::UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[b] = a;
}

Quotient coequalize_indices(FinSet s, const std::vector<std::pair<int, int>>& pairs) {
  const int n = s.size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  std::vector<int> best(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (best[r] < 0 || s[i] < s[best[r]]) best[r] = i;
  }
  Quotient q{std::move(s), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) q.class_of[i] = best[uf.find(i)];
  return q;
}

Quotient coequalize(const FinSet& s, const std::vector<std::pair<Id, Id>>& pairs) {
  std::unordered_map<Id, int> index;
  for (int i = 0; i < s.size(); ++i) index.emplace(s[i], i);
  std::vector<std::pair<int, int>> ip;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error("UnknownElement", a);
    if (ib == index.end()) throw Error("UnknownElement", b);
    ip.emplace_back(ia->second, ib->second);
  }
  return coequalize_indices(s, ip);
}

std::vector<std::vector<int>> all_functions(int dom_size, int cod_size) {
  std::vector<std::vector<int>> out;
  if (cod_size == 0) {
    if (dom_size == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(dom_size, 0);
  while (true) {
    out.push_back(cur);
    int i = dom_size - 1;
    while (i >= 0 && cur[i] == cod_size - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace fcat
