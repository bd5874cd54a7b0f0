#include "ambix/group_table.hpp"

#include <algorithm>

namespace ambix {

int GroupTable::element_order(int a) const {
  int o = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++o;
    if (o > n) throw Error("element_order runaway (bad multiplication)");
  }
  return o;
}

int PermGroupTable::id_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error("element id lookup failed");
  return it->second;
}

PermGroupTable PermGroupTable::build(const PermGroup& G, unsigned long long cap) {
  PermGroupTable t;
  t.elements = G.elements(cap);
  int n = static_cast<int>(t.elements.size());
  t.table.n = n;
  t.index_.reserve(n);
  for (int i = 0; i < n; ++i) t.index_.emplace(t.elements[i], i);
  if (!t.elements[0].is_identity()) throw Error("sorted element list must start at the identity");

  t.table.inv.resize(n);
  for (int i = 0; i < n; ++i) t.table.inv[i] = t.id_of(t.elements[i].inverse());

  for (auto& g : G.generators()) {
    if (g.is_identity()) continue;
    int id = t.id_of(g);
    if (std::find(t.table.gens.begin(), t.table.gens.end(), id) == t.table.gens.end())
      t.table.gens.push_back(id);
  }

  // dense multiplication table up to ~64MB, else permutation arithmetic
  if (static_cast<unsigned long long>(n) * n * 2 <= (64ULL << 20) && n < 65536) {
    auto dense = std::make_shared<std::vector<std::uint16_t>>();
    dense->resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        (*dense)[static_cast<size_t>(a) * n + b] =
            static_cast<std::uint16_t>(t.id_of(t.elements[a] * t.elements[b]));
    t.dense_ = dense;
    int nn = n;
    t.table.mul = [dense, nn](int a, int b) {
      return static_cast<int>((*dense)[static_cast<size_t>(a) * nn + b]);
    };
  } else {
    auto elems = std::make_shared<std::vector<Permutation>>(t.elements);
    auto idx = std::make_shared<std::unordered_map<Permutation, int, PermHash>>(t.index_);
    t.table.mul = [elems, idx](int a, int b) {
      return idx->at((*elems)[a] * (*elems)[b]);
    };
  }

  auto [divs, coords] = G.abelianization_coordinates(t.elements);
  t.table.h1_divisors = std::move(divs);
  t.table.h1_coords = std::move(coords);
  return t;
}

}  // namespace ambix
