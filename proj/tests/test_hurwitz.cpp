#include <doctest.h>

#include <random>

#include "ambix/ambix.hpp"
#include "ambix/hurwitz.hpp"

using namespace ambix;

namespace {

std::vector<ConjugacyClass> nonid_classes(const PermGroup& G) {
  std::vector<ConjugacyClass> out;
  for (auto& c : G.conjugacy_classes())
    if (!c.representative.is_identity()) out.push_back(c);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("hurwitz");

TEST_CASE("klein group tuples: multinomial count, single orbit") {
  auto G = make_group("elem_abelian:2^2");
  auto cls = nonid_classes(*G);
  REQUIRE(cls.size() == 3);
  TupleSet ts = enumerate_tuples(*G, cls, {2, 2, 2});
  CHECK(ts.tuples.size() == 90);  // 6!/(2!2!2!), products vanish automatically
  OrbitReport rep = braid_orbits(ts);
  CHECK(rep.orbit_count == 1);
}

TEST_CASE("sym(3) transposition tuples against a brute-force scan") {
  auto G = make_group("sym:3");
  auto cls = nonid_classes(*G);
  ConjugacyClass transpositions;
  for (auto& c : cls)
    if (c.size == 3) transpositions = c;
  REQUIRE(transpositions.members.size() == 3);

  // independent enumeration of all 3^4 candidate tuples
  int expected = 0;
  auto& m = transpositions.members;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          if (!(m[a] * m[b] * m[c] * m[d]).is_identity()) continue;
          if (PermGroup::from_generators({m[a], m[b], m[c], m[d]}, 3).order() == 6) ++expected;
        }
  TupleSet ts = enumerate_tuples(*G, {transpositions}, {4});
  CHECK(static_cast<int>(ts.tuples.size()) == expected);
  CHECK(ts.tuples.size() == 24);
  CHECK(braid_orbits(ts).orbit_count == 1);

  // a single entry can never multiply to the identity
  TupleSet single = enumerate_tuples(*G, {transpositions}, {1});
  CHECK(single.tuples.empty());
}

TEST_CASE("braid moves preserve product, type and generation") {
  auto G = make_group("sym:3");
  auto cls = nonid_classes(*G);
  TupleSet ts = enumerate_tuples(*G, cls, {2, 2});
  REQUIRE(!ts.tuples.empty());
  int n = 4;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    auto t = ts.tuples[rng() % ts.tuples.size()];
    int i = static_cast<int>(rng() % (n - 1));
    // forward move followed by its inverse must return the tuple
    const Permutation &a = ts.elements[t[i]], &b = ts.elements[t[i + 1]];
    Permutation c = a * b * a.inverse();
    // product invariance
    Permutation before(3), after(3);
    for (int j = 0; j < n; ++j) before = before * ts.elements[t[j]];
    auto t2 = t;
    // apply the move by hand
    for (size_t e = 0; e < ts.elements.size(); ++e)
      if (ts.elements[e] == c) t2[i] = static_cast<int>(e);
    t2[i + 1] = t[i];
    for (int j = 0; j < n; ++j) after = after * ts.elements[t2[j]];
    CHECK(before == after);
    // the moved tuple is still in the enumerated set (type + generation)
    CHECK(std::binary_search(ts.tuples.begin(), ts.tuples.end(), t2));
    // inverse move restores
    const Permutation &x = ts.elements[t2[i]], &y = ts.elements[t2[i + 1]];
    Permutation z = y.inverse() * x * y;
    auto t3 = t2;
    t3[i] = t2[i + 1];
    for (size_t e = 0; e < ts.elements.size(); ++e)
      if (ts.elements[e] == z) t3[i + 1] = static_cast<int>(e);
    CHECK(t3 == t);
  }
}

TEST_CASE("budgets bound the enumeration") {
  auto G = make_group("sym:4");
  auto cls = nonid_classes(*G);
  HurwitzBudget tiny;
  tiny.raw_tuples = 50;
  CHECK_THROWS_AS(enumerate_tuples(*G, cls, {2, 2, 2, 2}, tiny), LimitExceeded);
}

TEST_CASE("stabilization scans match the engine's ambiguity index") {
  Config cfg;
  // sym:3 transpositions: stabilizes at 1
  {
    EquippedGroup eg = equipped("sym:3", {"cycles:2"}, cfg);
    auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), {2}, {2, 3, 4});
    REQUIRE(reports.size() == 3);
    CHECK(reports.back().stabilized);
    CHECK(reports.back().orbit_count == 1);
  }
  // abelian groups: always one orbit once tuples exist
  {
    EquippedGroup eg = equipped("elem_abelian:2^2", {"all"}, cfg);
    auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), {1, 1, 1}, {2, 4});
    for (auto& r : reports) {
      REQUIRE(!r.budget_exceeded);
      CHECK(r.orbit_count == 1);
    }
  }
  // quaternion group, classes of i and j: h2 = 1 forces a = 1
  {
    EquippedGroup eg = equipped("quaternion:8", {"cycles:4+4#1", "cycles:4+4#2"}, cfg);
    auto v = ambiguity_index(eg, cfg);
    CHECK(v.a == 1);
    auto reports = stabilization_scan(*eg.group, eg.equipment_classes(), {1, 1}, {2, 3, 4});
    CHECK(reports.back().stabilized);
    CHECK(reports.back().orbit_count == static_cast<long long>(v.a));
  }
}

TEST_CASE("conjugation quotient never increases the count") {
  Config cfg;
  EquippedGroup eg = equipped("sym:3", {"cycles:2"}, cfg);
  TupleSet ts = enumerate_tuples(*eg.group, eg.equipment_classes(), {4});
  auto plain = braid_orbits(ts);
  auto quot = braid_orbits(ts, true, eg.group.get());
  CHECK(quot.orbit_count <= plain.orbit_count);
  CHECK(quot.orbit_count >= 1);
}

TEST_SUITE_END();
