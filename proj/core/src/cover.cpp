#include "ambix/cover.hpp"

#include <algorithm>
#include <unordered_set>

namespace ambix {

namespace {

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> img(a.degree() + b.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + b[i];
  return Permutation(std::move(img));
}

}  // namespace

CentralCover build_cover(GroupPtr cover, const std::vector<Permutation>& kernel_gens, GroupPtr base,
                         std::vector<Permutation> images, std::optional<unsigned long long> known_h2) {
  for (auto& z : kernel_gens) {
    if (!cover->contains(z)) throw ValidationError("build_cover: kernel element outside the cover");
    for (auto& s : cover->generators())
      if (!(z * s == s * z)) throw ValidationError("build_cover: kernel is not central");
  }

  CentralCover c;
  c.cover = cover;
  c.base = base;
  c.quotient = Homomorphism::create(cover, base, std::move(images));
  if (!c.quotient.surjective()) throw ValidationError("build_cover: quotient map is not surjective");

  PermGroup Z = cover->subgroup(kernel_gens);
  for (auto& z : Z.generators())
    if (!c.quotient.eval(z).is_identity())
      throw ValidationError("build_cover: declared kernel does not map to the identity");
  if (Z.order() != c.quotient.kernel_order())
    throw ValidationError("build_cover: kernel mismatch (declared " + std::to_string(Z.order()) +
                          ", actual " + std::to_string(c.quotient.kernel_order()) + ")");
  c.kernel_elements = Z.elements(1 << 20);
  c.kernel_order = Z.order();

  c.derived = cover->derived_subgroup();
  for (auto& z : c.kernel_elements)
    if (c.derived.contains(z)) c.kernel_in_derived.push_back(z);
  c.kernel_in_derived_order = c.kernel_in_derived.size();
  c.is_stem = c.kernel_in_derived_order == c.kernel_order;
  c.known_h2 = known_h2;
  // maximal = stem with the full multiplier in the kernel
  c.is_maximal = c.is_stem && known_h2 && c.kernel_in_derived_order == *known_h2;
  return c;
}

CentralCover trivial_cover(GroupPtr G, std::optional<unsigned long long> known_h2) {
  auto images = G->generators();
  return build_cover(G, {}, G, images, known_h2);
}

Permutation lifted_commutator(const CentralCover& c, const Permutation& g, const Permutation& h) {
  if (!(g * h == h * g)) throw ValidationError("lifted_commutator: elements do not commute");
  Permutation gl = c.quotient.lift(g);
  Permutation hl = c.quotient.lift(h);
  Permutation z = hl.inverse() * gl.inverse() * hl * gl;
  if (!c.quotient.eval(z).is_identity()) throw Error("lifted_commutator left the kernel");
  return z;
}

PermGroup k_subgroup(const CentralCover& c, const std::vector<ConjugacyClass>& o_classes,
                     bool allow_non_maximal) {
  if (!c.is_maximal && !allow_non_maximal)
    throw ValidationError("k_subgroup: cover is not maximal (pass allow_non_maximal to override)");
  std::vector<Permutation> gens;
  PermGroup K = PermGroup::from_generators({}, c.cover->degree());
  for (auto& cls : o_classes) {
    const Permutation& g = cls.representative;
    PermGroup Z = c.base->centralizer(g);
    for (auto& h : Z.elements()) {
      Permutation z = lifted_commutator(c, g, h);
      if (!z.is_identity() && !K.contains(z)) {
        gens.push_back(z);
        K = PermGroup::from_generators(gens, c.cover->degree());
      }
    }
  }
  return K;
}

std::pair<unsigned long long, unsigned long long> ambiguity_from_cover(
    const CentralCover& c, const std::vector<ConjugacyClass>& o_classes) {
  PermGroup K = k_subgroup(c, o_classes);
  unsigned long long k = K.order();
  if (c.kernel_in_derived_order % k != 0) throw Error("ambiguity_from_cover: k does not divide h2");
  return {c.kernel_in_derived_order / k, k};
}

unsigned long long splitting_number(const CentralCover& c, const ConjugacyClass& C) {
  const Permutation& g = C.representative;
  Permutation gl = c.quotient.lift(g);

  // conjugation orbit of the lift under the cover's generators
  std::unordered_set<Permutation, PermHash> orbit;
  std::vector<Permutation> queue{gl};
  orbit.insert(gl);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Permutation cur = queue[qi];
    for (auto& s : c.cover->generators()) {
      Permutation nxt = cur.conjugated_by(s);
      if (orbit.insert(nxt).second) queue.push_back(nxt);
    }
  }

  unsigned long long stab = 0;
  for (auto& z : c.kernel_elements)
    if (orbit.count(z * gl)) ++stab;
  if (stab == 0 || c.kernel_order % stab != 0) throw Error("splitting_number: kernel action inconsistent");
  unsigned long long s = c.kernel_order / stab;

  // the translated classes partition the fibre over C
  if (orbit.size() * s != c.kernel_order * C.size)
    throw Error("splitting_number: fibre size mismatch");

  // independent route via the per-class commutator subgroup (maximal covers)
  if (c.is_maximal) {
    PermGroup KC = k_subgroup(c, {C});
    if (s * KC.order() != c.kernel_in_derived_order)
      throw Error("splitting_number: direct count disagrees with h2 / k_C");
  }
  return s;
}

CentralCover pullback(const CentralCover& c1, const CentralCover& c2,
                      std::optional<unsigned long long> known_h2) {
  if (c1.base->degree() != c2.base->degree() || !(c1.base->generators() == c2.base->generators()))
    throw ValidationError("pullback: covers are over different presentations of the base");

  std::vector<Permutation> gens;
  std::vector<Permutation> images;
  for (auto& s : c1.base->generators()) {
    gens.push_back(direct_sum(c1.quotient.lift(s), c2.quotient.lift(s)));
    images.push_back(s);
  }
  Permutation id1(c1.cover->degree()), id2(c2.cover->degree());
  std::vector<Permutation> kernel_gens;
  PermGroup Z1 = c1.cover->subgroup(c1.kernel_elements);
  PermGroup Z2 = c2.cover->subgroup(c2.kernel_elements);
  for (auto& z : Z1.generators()) {
    gens.push_back(direct_sum(z, id2));
    images.push_back(Permutation(c1.base->degree()));
    kernel_gens.push_back(gens.back());
  }
  for (auto& z : Z2.generators()) {
    gens.push_back(direct_sum(id1, z));
    images.push_back(Permutation(c2.base->degree()));
    kernel_gens.push_back(gens.back());
  }

  auto P = std::make_shared<PermGroup>(
      PermGroup::from_generators(gens, c1.cover->degree() + c2.cover->degree()));
  unsigned long long expect = c1.base->order() * c1.kernel_order * c2.kernel_order;
  if (P->order() != expect)
    throw ValidationError("pullback: product order " + std::to_string(P->order()) + " != expected " +
                          std::to_string(expect));
  return build_cover(P, kernel_gens, c1.base, images, known_h2);
}

CentralCover extension_cover(const CocycleTable& w, GroupPtr base, const PermGroupTable& ids,
                             std::optional<unsigned long long> known_h2) {
  const GroupTable& G = *w.group;
  int n = G.n;
  std::uint32_t m = w.modulus;
  if (!w.satisfies_cocycle_identity(64, 200000))
    throw ValidationError("extension_cover: table violates the cocycle identity");

  long long degree = static_cast<long long>(n) * m;
  auto enc = [&](int a, int g) { return static_cast<int>(g) * static_cast<int>(m) + a; };
  // right multiplication by (b, s): (a, g) -> (a + b + w(g, s), g s)
  auto right_mult = [&](int b, int s) {
    std::vector<int> img(degree);
    for (int g = 0; g < n; ++g)
      for (int a = 0; a < static_cast<int>(m); ++a) {
        int a2 = static_cast<int>((a + b + w.at(g, s)) % m);
        img[enc(a, g)] = enc(a2, G.multiply(g, s));
      }
    return Permutation(std::move(img));
  };

  std::vector<Permutation> gens;
  std::vector<Permutation> images;
  std::vector<Permutation> kernel_gens;
  for (auto& sp : base->generators()) {
    gens.push_back(right_mult(0, ids.id_of(sp)));
    images.push_back(sp);
  }
  gens.push_back(right_mult(1, 0));
  images.push_back(Permutation(base->degree()));
  kernel_gens.push_back(gens.back());

  auto E = std::make_shared<PermGroup>(PermGroup::from_generators(gens, static_cast<int>(degree)));
  if (E->order() != base->order() * m) throw Error("extension_cover: wrong extension order");
  return build_cover(E, kernel_gens, base, images, known_h2);
}

CentralCover stem_cover_from_cocycle(GroupPtr G, int cocycle_cap, unsigned long long element_cap) {
  auto pt = PermGroupTable::build(*G, element_cap);
  auto Gt = std::make_shared<GroupTable>(pt.table);

  // primes of |G|
  std::vector<std::uint32_t> primes;
  {
    unsigned long long t = G->order();
    for (unsigned long long q = 2; q * q <= t; ++q)
      while (t % q == 0) {
        if (primes.empty() || primes.back() != q) primes.push_back(static_cast<std::uint32_t>(q));
        t /= q;
      }
    if (t > 1) primes.push_back(static_cast<std::uint32_t>(t));
  }

  std::optional<CentralCover> acc;
  unsigned long long h2 = 1;
  std::vector<std::pair<std::uint32_t, long long>> parts;  // (p, cyclic part order)
  for (auto p : primes) {
    auto basis = h2_primary(Gt, p, cocycle_cap);
    if (basis.divisors.empty()) continue;
    if (basis.divisors.size() > 1)
      throw ValidationError("stem_cover_from_cocycle: H2 p-part is not cyclic");
    long long d = basis.divisors[0];
    // the carry correction only spans the full Ext excess when the
    // H1 p-exponent divides the working modulus
    for (auto h1d : Gt->h1_divisors) {
      long long pe = 1;
      long long t = h1d;
      while (t % p == 0) {
        t /= p;
        pe *= p;
      }
      if (pe > d) throw ValidationError("stem_cover_from_cocycle: H1 exponent exceeds the H2 part");
    }
    parts.emplace_back(p, d);
    h2 *= static_cast<unsigned long long>(d);
  }

  for (auto& [p, d] : parts) {
    auto small = h2_primary(Gt, p, cocycle_cap, static_cast<std::uint32_t>(d));
    if (small.divisors != std::vector<long long>{d})
      throw Error("stem_cover_from_cocycle: reduced-modulus run disagrees");
    CentralCover e = extension_cover(small.basis[0], G, pt, h2);
    if (!e.is_stem) throw Error("stem_cover_from_cocycle: extension by a full-order class must be stem");
    if (!acc)
      acc = std::move(e);
    else
      acc = pullback(*acc, e, h2);
  }
  if (!acc) acc = trivial_cover(G, h2);
  acc->known_h2 = h2;
  acc->is_maximal = acc->is_stem && acc->kernel_in_derived_order == h2;
  if (!acc->is_maximal) throw Error("stem_cover_from_cocycle: assembled cover is not maximal");
  return std::move(*acc);
}

}  // namespace ambix
