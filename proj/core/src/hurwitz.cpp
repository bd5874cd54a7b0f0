#include "ambix/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace ambix {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

TupleSet enumerate_tuples(const PermGroup& G, const std::vector<ConjugacyClass>& equipment,
                          const std::vector<int>& tau, const HurwitzBudget& budget) {
  if (tau.size() != equipment.size())
    throw ValidationError("enumerate_tuples: tau length must match the equipment");
  TupleSet out;
  out.tau = tau;

  // flatten the equipment elements; each entry knows its class
  std::vector<int> cls_of;
  std::unordered_map<Permutation, int, PermHash> elem_id;
  for (size_t c = 0; c < equipment.size(); ++c) {
    if (equipment[c].members.empty()) throw ValidationError("enumerate_tuples: class not materialized");
    for (auto& g : equipment[c].members) {
      out.elements.push_back(g);
      elem_id.emplace(g, static_cast<int>(out.elements.size()) - 1);
      cls_of.push_back(static_cast<int>(c));
    }
  }
  int n = 0;
  for (int t : tau) {
    if (t < 0) throw ValidationError("enumerate_tuples: negative multiplicity");
    n += t;
  }
  if (n == 0) return out;

  long long nodes = 0;
  std::vector<int> remaining = tau;
  std::vector<int> tuple(n, -1);
  std::vector<Permutation> prefix{Permutation(G.degree())};
  // generation depends only on the set of distinct entries
  std::unordered_map<std::vector<int>, bool, VecHash> gen_memo;
  auto generates = [&](const std::vector<int>& t) {
    std::vector<int> key(t);
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = gen_memo.find(key);
    if (it != gen_memo.end()) return it->second;
    std::vector<Permutation> used;
    for (int id : key) used.push_back(out.elements[id]);
    bool ok = PermGroup::from_generators(used, G.degree()).order() == G.order();
    gen_memo.emplace(std::move(key), ok);
    return ok;
  };

  // depth-first over positions; the last entry is forced by the product
  auto rec = [&](auto&& self, int pos) -> void {
    if (++nodes > budget.raw_tuples) throw LimitExceeded("enumerate_tuples: raw tuple budget exceeded");
    if (pos == n - 1) {
      Permutation need = prefix.back().inverse();
      auto it = elem_id.find(need);
      if (it == elem_id.end()) return;
      int id = it->second;
      if (remaining[cls_of[id]] != 1) return;
      tuple[pos] = id;
      if (generates(tuple)) out.tuples.push_back(tuple);
      return;
    }
    for (int id = 0; id < static_cast<int>(out.elements.size()); ++id) {
      if (remaining[cls_of[id]] == 0) continue;
      --remaining[cls_of[id]];
      tuple[pos] = id;
      prefix.push_back(prefix.back() * out.elements[id]);
      self(self, pos + 1);
      prefix.pop_back();
      ++remaining[cls_of[id]];
    }
  };
  rec(rec, 0);
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

OrbitReport braid_orbits(const TupleSet& ts, bool quotient_by_conjugation, const PermGroup* G) {
  OrbitReport rep;
  rep.tau = ts.tau;
  rep.tuple_count = static_cast<long long>(ts.tuples.size());
  if (ts.tuples.empty()) return rep;
  int n = static_cast<int>(ts.tuples[0].size());

  std::unordered_map<Permutation, int, PermHash> elem_id;
  for (int i = 0; i < static_cast<int>(ts.elements.size()); ++i) elem_id.emplace(ts.elements[i], i);

  std::unordered_map<std::vector<int>, int, VecHash> index;
  for (int i = 0; i < static_cast<int>(ts.tuples.size()); ++i) index.emplace(ts.tuples[i], i);

  std::vector<int> parent(ts.tuples.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  auto move_at = [&](const std::vector<int>& t, int i, bool inverse) {
    std::vector<int> u = t;
    const Permutation& a = ts.elements[t[i]];
    const Permutation& b = ts.elements[t[i + 1]];
    if (!inverse) {
      // (a, b) -> (a b a^-1, a)
      Permutation c = a * b * a.inverse();
      auto it = elem_id.find(c);
      if (it == elem_id.end()) throw Error("braid move left the equipment");
      u[i] = it->second;
      u[i + 1] = t[i];
    } else {
      // (a, b) -> (b, b^-1 a b)
      Permutation c = b.inverse() * a * b;
      auto it = elem_id.find(c);
      if (it == elem_id.end()) throw Error("braid move left the equipment");
      u[i] = t[i + 1];
      u[i + 1] = it->second;
    }
    return u;
  };

  for (size_t ti = 0; ti < ts.tuples.size(); ++ti)
    for (int i = 0; i + 1 < n; ++i)
      for (bool inv : {false, true}) {
        auto u = move_at(ts.tuples[ti], i, inv);
        auto it = index.find(u);
        if (it == index.end()) throw Error("braid move left the tuple set");
        unite(static_cast<int>(ti), it->second);
      }

  if (quotient_by_conjugation && G) {
    for (size_t ti = 0; ti < ts.tuples.size(); ++ti)
      for (auto& s : G->generators()) {
        std::vector<int> u(n);
        for (int i = 0; i < n; ++i) {
          Permutation c = ts.elements[ts.tuples[ti][i]].conjugated_by(s);
          auto it = elem_id.find(c);
          if (it == elem_id.end()) throw Error("conjugation left the equipment");
          u[i] = it->second;
        }
        auto it = index.find(u);
        if (it == index.end()) throw Error("conjugation left the tuple set");
        unite(static_cast<int>(ti), it->second);
      }
  }

  std::unordered_set<int> roots;
  for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
  rep.orbit_count = static_cast<long long>(roots.size());
  return rep;
}

std::vector<OrbitReport> stabilization_scan(const PermGroup& G,
                                            const std::vector<ConjugacyClass>& equipment,
                                            const std::vector<int>& tau_base,
                                            const std::vector<int>& schedule, int window,
                                            const HurwitzBudget& budget,
                                            bool quotient_by_conjugation) {
  std::vector<OrbitReport> out;
  for (int factor : schedule) {
    std::vector<int> tau(tau_base.size());
    for (size_t i = 0; i < tau.size(); ++i) tau[i] = tau_base[i] * factor;
    try {
      TupleSet ts = enumerate_tuples(G, equipment, tau, budget);
      if (static_cast<long long>(ts.tuples.size()) > budget.bfs_states)
        throw LimitExceeded("stabilization_scan: orbit state budget exceeded");
      out.push_back(braid_orbits(ts, quotient_by_conjugation, &G));
    } catch (const LimitExceeded&) {
      OrbitReport rep;
      rep.tau = tau;
      rep.budget_exceeded = true;
      out.push_back(rep);
      break;
    }
  }
  // stabilized when the last `window` completed nonempty counts agree;
  // empty types (parity obstructions) do not interrupt the window
  std::vector<int> nonempty;
  for (int i = 0; i < static_cast<int>(out.size()); ++i)
    if (!out[i].budget_exceeded && out[i].tuple_count > 0) nonempty.push_back(i);
  if (static_cast<int>(nonempty.size()) >= window) {
    bool ok = true;
    for (int w = 1; w < window; ++w) {
      int i = nonempty[nonempty.size() - w];
      int j = nonempty[nonempty.size() - w - 1];
      if (out[i].orbit_count != out[j].orbit_count) ok = false;
    }
    if (ok)
      for (int w = 0; w < window; ++w) out[nonempty[nonempty.size() - 1 - w]].stabilized = true;
  }
  return out;
}

}  // namespace ambix
