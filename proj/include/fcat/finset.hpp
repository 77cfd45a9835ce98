#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcat/fincore.hpp"

namespace fcat {

/// A finite set of opaque element ids, in a fixed order.
struct FinSet {
  std::vector<Id> elems;

  int size() const { return static_cast<int>(elems.size()); }
  const Id& operator[](int i) const { return elems[i]; }
  int index_of(const Id& e) const;  // -1 when absent
  bool operator==(const FinSet&) const = default;
};

/// Throws DuplicateElement.
FinSet make_finset(std::vector<Id> elems);

/// Function between finite sets, as an index table.
struct SetMap {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;

  int operator()(int i) const { return table[i]; }
};

Verdict check_setmap(const SetMap& m);
bool is_bijection(const std::vector<int>& table, int cod_size);

/// Canonical encodings for constructed element ids.
std::string tuple_id(const std::vector<Id>& parts);      // "(a,b,c)"
std::string tagged_id(const Id& elem, const Id& tag);    // "x@tag"
std::string table_id(const std::vector<Id>& images);     // "[b,c,a]"

/// Partition of a carrier, each class represented by its least element id
/// (plain lexicographic byte order).
struct Quotient {
  FinSet carrier;
  std::vector<int> class_of;  // carrier index -> carrier index of representative

  /// Representatives in carrier order.
  std::vector<int> representatives() const;
  int num_classes() const;
  /// The quotient as a set of representative ids.
  FinSet classes() const;
};

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  void unite(int a, int b);

 private:
  std::vector<int> parent_;
};

/// Smallest equivalence relation on `s` containing the pairs. Throws
/// UnknownElement.
Quotient coequalize(const FinSet& s, const std::vector<std::pair<Id, Id>>& pairs);
/// Index-level variant used by the colimit machinery.
Quotient coequalize_indices(FinSet s, const std::vector<std::pair<int, int>>& pairs);

/// All functions from a set of `dom_size` elements to one of `cod_size`,
/// in lexicographic order of their tables.
std::vector<std::vector<int>> all_functions(int dom_size, int cod_size);

}  // namespace fcat
