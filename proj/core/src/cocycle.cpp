#include "ambix/cocycle.hpp"

#include <algorithm>
#include <numeric>

namespace ambix {

namespace {

struct BfsDecomposition {
  std::vector<std::pair<int, int>> parent;  // (generator slot, shorter element)
  std::vector<int> order;                   // BFS visit order, starts at identity
};

BfsDecomposition bfs_decompose(const GroupTable& G) {
  BfsDecomposition d;
  d.parent.assign(G.n, {-1, -1});
  std::vector<char> seen(G.n, 0);
  seen[0] = 1;
  d.order.push_back(0);
  for (size_t qi = 0; qi < d.order.size(); ++qi) {
    int x = d.order[qi];
    for (int si = 0; si < static_cast<int>(G.gens.size()); ++si) {
      int y = G.multiply(G.gens[si], x);
      if (!seen[y]) {
        seen[y] = 1;
        d.parent[y] = {si, x};
        d.order.push_back(y);
      }
    }
  }
  if (static_cast<int>(d.order.size()) != G.n)
    throw ValidationError("group table generators do not generate the group");
  return d;
}

// characters of G into Z/m as canonical integer lifts per element
std::vector<std::vector<std::uint32_t>> character_lifts(const GroupTable& G, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> hats;
  for (size_t j = 0; j < G.h1_divisors.size(); ++j) {
    long long gj = std::gcd(G.h1_divisors[j], static_cast<long long>(m));
    if (gj <= 1) continue;
    std::vector<std::uint32_t> hat(G.n);
    for (int g = 0; g < G.n; ++g) {
      long long c = G.h1_coords[g][j] % gj;
      hat[g] = static_cast<std::uint32_t>((m / gj) * c);
    }
    hats.push_back(std::move(hat));
  }
  return hats;
}

std::uint32_t carry_value(const std::vector<std::uint32_t>& hat, std::uint32_t m, int g, int h, int gh) {
  long long t = static_cast<long long>(hat[g]) + hat[h] - hat[gh];
  if (t % m != 0) throw Error("carry construction: lift is not a character");
  long long c = t / m;  // 0 or 1 for canonical lifts
  return static_cast<std::uint32_t>(((c % m) + m) % m);
}

}  // namespace

int character_count(const GroupTable& G, std::uint32_t m) {
  return static_cast<int>(character_lifts(G, m).size());
}

CocycleTable carry_class(GroupTablePtr G, std::uint32_t m, int char_index) {
  auto hats = character_lifts(*G, m);
  CocycleTable w = CocycleTable::zero(G, m);
  const auto& hat = hats.at(char_index);
  for (int g = 1; g < G->n; ++g)
    for (int h = 1; h < G->n; ++h) w.set(g, h, carry_value(hat, m, g, h, G->multiply(g, h)));
  return w;
}

CocycleTable CocycleTable::zero(GroupTablePtr g, std::uint32_t m) {
  CocycleTable w;
  w.group = std::move(g);
  w.modulus = m;
  w.vals.assign(static_cast<size_t>(w.group->n - 1) * (w.group->n - 1), 0);
  return w;
}

bool CocycleTable::satisfies_cocycle_identity(int exhaustive_limit, int samples) const {
  const GroupTable& G = *group;
  auto check = [&](int g, int h, int k) {
    int gh = G.multiply(g, h), hk = G.multiply(h, k);
    std::uint64_t lhs = at(g, h) + at(gh, k);
    std::uint64_t rhs = at(h, k) + at(g, hk);
    return lhs % modulus == rhs % modulus;
  };
  if (G.n <= exhaustive_limit) {
    for (int g = 1; g < G.n; ++g)
      for (int h = 1; h < G.n; ++h)
        for (int k = 1; k < G.n; ++k)
          if (!check(g, h, k)) return false;
    return true;
  }
  std::mt19937_64 rng(0xC0C1C1E5ULL);
  for (int t = 0; t < samples; ++t) {
    int g = 1 + static_cast<int>(rng() % (G.n - 1));
    int h = 1 + static_cast<int>(rng() % (G.n - 1));
    int k = 1 + static_cast<int>(rng() % (G.n - 1));
    if (!check(g, h, k)) return false;
  }
  return true;
}

CohomologyBasis h2_primary(GroupTablePtr Gp, std::uint32_t p, int size_cap, std::uint32_t modulus_override) {
  const GroupTable& G = *Gp;
  int n = G.n;
  if (n > size_cap)
    throw LimitExceeded("cocycle engine: group order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(size_cap) + " (use the cover engine)");

  int vp = 0;
  {
    int t = n;
    while (t % static_cast<int>(p) == 0) {
      t /= static_cast<int>(p);
      ++vp;
    }
  }
  if (vp == 0) throw Error("h2_primary: prime does not divide the group order");

  std::uint32_t m = modulus_override;
  if (m == 0) {
    m = 1;
    for (int i = 0; i < vp; ++i) m *= p;
  }
  PrimePower pp = PrimePower::of(m);
  if (pp.p != p) throw Error("h2_primary: modulus override must be a power of p");

  CohomologyBasis out;
  out.group = Gp;
  out.p = p;
  out.modulus = m;
  if (n == 1) return out;

  auto bfs = bfs_decompose(G);
  int ns = static_cast<int>(G.gens.size());
  int n1 = n - 1;
  int nv = ns * n1;
  auto var = [&](int si, int x) { return si * n1 + (x - 1); };

  // accumulation buffer for sparse row building
  std::vector<long long> buf(nv, 0);
  std::vector<int> touched;
  auto bump = [&](int idx, long long delta) {
    if (buf[idx] == 0) touched.push_back(idx);
    buf[idx] += delta;
  };
  // accumulate sign * w(g, k) expanded down to generator-row variables:
  // w(s*g', k) = w(g', k) + w(s, g'k) - w(s, g')
  auto red_into = [&](int g, int k, long long sign) {
    int cur = g;
    while (cur != 0) {
      auto [si, gp] = bfs.parent[cur];
      int t1 = G.multiply(gp, k);
      if (t1 != 0) bump(var(si, t1), sign);
      if (gp != 0) bump(var(si, gp), -sign);
      cur = gp;
    }
  };
  auto collect = [&]() {
    std::sort(touched.begin(), touched.end());
    SparseVec row;
    for (int idx : touched) {
      long long v = ((buf[idx] % m) + m) % m;
      buf[idx] = 0;
      if (v) row.emplace_back(idx, static_cast<std::uint32_t>(v));
    }
    touched.clear();
    return row;
  };

  // constraints A(s,h,k) = w(s,h) + w(sh,k) - w(h,k) - w(s,hk) = 0; the
  // coboundary coherence identity then forces A(g,h,k) = 0 for all g
  ModHowell rowred(pp);
  for (int si = 0; si < ns; ++si) {
    int s = G.gens[si];
    for (int h = 1; h < n; ++h) {
      int sh = G.multiply(s, h);
      for (int k = 1; k < n; ++k) {
        bump(var(si, h), 1);
        if (sh != 0) red_into(sh, k, 1);
        red_into(h, k, -1);
        int hk = G.multiply(h, k);
        if (hk != 0) bump(var(si, hk), -1);
        SparseVec row = collect();
        if (!row.empty()) rowred.add(std::move(row));
      }
    }
  }

  std::vector<SparseVec> redrows;
  for (int i = 0; i < rowred.row_count(); ++i) redrows.push_back(rowred.row_main(i));
  std::vector<SparseVec> cocycles = right_kernel(redrows, nv, m);

  // denominator: coboundaries of indicator functions plus carry classes
  std::vector<SparseVec> dens;
  for (int u = 1; u < n; ++u) {
    for (int si = 0; si < ns; ++si) {
      bump(var(si, u), 1);  // [x == u]
      int xi = G.multiply(G.inverse(G.gens[si]), u);
      if (xi != 0) bump(var(si, xi), -1);  // [s x == u]
      if (G.gens[si] == u)                 // [s == u]
        for (int x = 1; x < n; ++x) bump(var(si, x), 1);
    }
    dens.push_back(collect());
  }
  auto hats = character_lifts(G, m);
  for (auto& hat : hats) {
    for (int si = 0; si < ns; ++si) {
      int s = G.gens[si];
      for (int x = 1; x < n; ++x) {
        std::uint32_t c = carry_value(hat, m, s, x, G.multiply(s, x));
        if (c) bump(var(si, x), c);
      }
    }
    dens.push_back(collect());
  }

  SubquotientStructure sq = subquotient_structure(cocycles, dens, m);
  out.divisors = sq.divisors;

  // expand each basis class from generator-row values to the full table
  for (size_t bi = 0; bi < sq.divisors.size(); ++bi) {
    SparseVec gen = sq.generator(static_cast<int>(bi));
    std::vector<std::uint32_t> vdense = sparse_to_dense(gen, nv, m);
    CocycleTable w = CocycleTable::zero(Gp, m);
    for (int g : bfs.order) {
      if (g == 0) continue;
      auto [si, gp] = bfs.parent[g];
      for (int h = 1; h < n; ++h) {
        long long val = gp ? w.at(gp, h) : 0;
        int gph = G.multiply(gp, h);
        if (gph != 0) val += vdense[var(si, gph)];
        if (gp != 0) val -= vdense[var(si, gp)];
        w.set(g, h, static_cast<std::uint32_t>(((val % m) + m) % m));
      }
    }
    if (!w.satisfies_cocycle_identity(64, 20000))
      throw Error("h2_primary internal: basis table violates the cocycle identity");
    out.basis.push_back(std::move(w));
  }
  return out;
}

std::vector<long long> h2_divisors(GroupTablePtr G, int size_cap) {
  int n = G->n;
  std::vector<std::uint32_t> primes;
  int t = n;
  for (std::uint32_t q = 2; static_cast<long long>(q) * q <= t; ++q)
    while (t % q == 0) {
      if (primes.empty() || primes.back() != q) primes.push_back(q);
      t /= q;
    }
  if (t > 1) primes.push_back(static_cast<std::uint32_t>(t));

  std::vector<std::vector<long long>> per_prime;
  size_t maxlen = 0;
  for (auto p : primes) {
    auto basis = h2_primary(G, p, size_cap);
    per_prime.push_back(basis.divisors);
    maxlen = std::max(maxlen, basis.divisors.size());
  }
  // align largest-with-largest across primes (divisor chains are ascending)
  std::vector<long long> combined(maxlen, 1);
  for (auto& list : per_prime)
    for (size_t i = 0; i < list.size(); ++i)
      combined[maxlen - list.size() + i] *= list[i];
  return combined;
}

unsigned long long h2_order(GroupTablePtr G, int size_cap) {
  unsigned long long o = 1;
  for (auto d : h2_divisors(std::move(G), size_cap)) o *= static_cast<unsigned long long>(d);
  return o;
}

std::uint32_t pairing(const CocycleTable& w, int g, int h) {
  const GroupTable& G = *w.group;
  if (G.multiply(g, h) != G.multiply(h, g)) throw ValidationError("pairing: elements do not commute");
  long long d = static_cast<long long>(w.at(g, h)) - w.at(h, g);
  return static_cast<std::uint32_t>(((d % w.modulus) + w.modulus) % w.modulus);
}

unsigned long long b_subgroup_order(const std::vector<CohomologyBasis>& bases,
                                    const std::vector<std::vector<int>>& o_classes,
                                    PairScan scan) {
  if (bases.empty()) return 1;
  const GroupTable& G = *bases[0].group;
  int n = G.n;

  std::vector<std::pair<int, int>> pairs;
  for (auto& cls : o_classes) {
    if (cls.empty()) throw ValidationError("b_subgroup_order: empty class");
    if (scan == PairScan::Deduplicated) {
      int g = *std::min_element(cls.begin(), cls.end());
      std::vector<int> zg;
      for (int h = 0; h < n; ++h)
        if (G.multiply(g, h) == G.multiply(h, g)) zg.push_back(h);
      std::vector<char> seen(n, 0);
      for (int h : zg) {
        if (seen[h]) continue;
        // orbit of h under conjugation by the centralizer
        std::vector<int> orbit{h};
        seen[h] = 1;
        for (size_t qi = 0; qi < orbit.size(); ++qi)
          for (int z : zg) {
            int c = G.multiply(G.multiply(G.inverse(z), orbit[qi]), z);
            if (!seen[c]) {
              seen[c] = 1;
              orbit.push_back(c);
            }
          }
        pairs.emplace_back(g, h);
      }
    } else {
      for (int g : cls)
        for (int h = 0; h < n; ++h)
          if (G.multiply(g, h) == G.multiply(h, g)) pairs.emplace_back(g, h);
    }
  }

  unsigned long long total = 1;
  for (auto& basis : bases) {
    if (basis.divisors.empty()) continue;
    PrimePower pp = PrimePower::of(basis.modulus);
    ModHowell span(pp);
    for (size_t i = 0; i < basis.basis.size(); ++i) {
      SparseVec col;
      for (size_t t = 0; t < pairs.size(); ++t) {
        std::uint32_t v = pairing(basis.basis[i], pairs[t].first, pairs[t].second);
        if (v) col.emplace_back(static_cast<int>(t), v);
      }
      span.add(std::move(col));
    }
    total *= basis.order() / span.span_order();
  }
  return total;
}

bool is_trivial_class(const CocycleTable& w) {
  const GroupTable& G = *w.group;
  int n = G.n;
  std::uint32_t m = w.modulus;
  if (n == 1) return true;
  int nb = n - 1;
  auto hats = character_lifts(G, m);
  int nc = static_cast<int>(hats.size());
  int B = nb + nc;

  // unknowns: coefficients on indicator coboundaries and carry classes;
  // equations indexed by table coordinates, added adaptively
  std::vector<std::pair<int, int>> eqs;
  auto eq_coeffs = [&](int g, int h) {
    SparseVec row;
    int gh = G.multiply(g, h);
    std::vector<std::pair<int, long long>> entries;
    entries.emplace_back(g - 1, 1);
    entries.emplace_back(h - 1, 1);
    if (gh != 0) entries.emplace_back(gh - 1, -1);
    std::sort(entries.begin(), entries.end());
    for (size_t i = 0; i < entries.size();) {
      size_t j = i;
      long long acc = 0;
      while (j < entries.size() && entries[j].first == entries[i].first) acc += entries[j++].second;
      acc = ((acc % m) + m) % m;
      if (acc) row.emplace_back(entries[i].first, static_cast<std::uint32_t>(acc));
      i = j;
    }
    for (int c = 0; c < nc; ++c) {
      std::uint32_t v = carry_value(hats[c], m, g, h, gh);
      if (v) row.emplace_back(nb + c, v);
    }
    return row;
  };

  // deterministic seed: a band of rows usually pins the solution at once
  for (int g = 1; g <= std::min(nb, 8); ++g)
    for (int h = 1; h < n; ++h) eqs.emplace_back(g, h);

  std::vector<long long> residual(static_cast<size_t>(nb) * nb);
  while (true) {
    // columns over the equation index space
    std::vector<SparseVec> cols(B);
    SparseVec target;
    for (size_t e = 0; e < eqs.size(); ++e) {
      auto [g, h] = eqs[e];
      for (auto& [j, v] : eq_coeffs(g, h)) cols[j].emplace_back(static_cast<int>(e), v);
      std::uint32_t r = w.at(g, h);
      if (r) target.emplace_back(static_cast<int>(e), r);
    }
    auto sol = membership_solve(target, cols, m);
    if (!sol) return false;

    // verify the candidate over the whole table
    for (int g = 1; g < n; ++g)
      for (int h = 1; h < n; ++h)
        residual[static_cast<size_t>(g - 1) * nb + (h - 1)] = w.at(g, h);
    for (int u = 1; u < n; ++u) {
      long long c = (*sol)[u - 1];
      if (!c) continue;
      for (int h = 1; h < n; ++h) residual[static_cast<size_t>(u - 1) * nb + (h - 1)] -= c;
      for (int g = 1; g < n; ++g) residual[static_cast<size_t>(g - 1) * nb + (u - 1)] -= c;
      for (int g = 1; g < n; ++g) {
        int h = G.multiply(G.inverse(g), u);
        if (h != 0) residual[static_cast<size_t>(g - 1) * nb + (h - 1)] += c;
      }
    }
    for (int c = 0; c < nc; ++c) {
      long long cv = (*sol)[nb + c];
      if (!cv) continue;
      for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h)
          residual[static_cast<size_t>(g - 1) * nb + (h - 1)] -=
              cv * carry_value(hats[c], m, g, h, G.multiply(g, h));
    }
    int bad_g = -1, bad_h = -1;
    for (int g = 1; g < n && bad_g < 0; ++g)
      for (int h = 1; h < n; ++h)
        if (residual[static_cast<size_t>(g - 1) * nb + (h - 1)] % m != 0) {
          bad_g = g;
          bad_h = h;
          break;
        }
    if (bad_g < 0) return true;
    eqs.emplace_back(bad_g, bad_h);
  }
}

CocycleTable inflate(const CocycleTable& wq, GroupTablePtr G, const std::vector<int>& proj) {
  const GroupTable& Q = *wq.group;
  if (static_cast<int>(proj.size()) != G->n) throw ValidationError("inflate: projection size mismatch");
  if (proj[0] != 0) throw ValidationError("inflate: projection must send identity to identity");
  std::vector<char> hit(Q.n, 0);
  for (int v : proj) {
    if (v < 0 || v >= Q.n) throw ValidationError("inflate: projection value out of range");
    hit[v] = 1;
  }
  for (int q = 0; q < Q.n; ++q)
    if (!hit[q]) throw ValidationError("inflate: map is not surjective");

  CocycleTable w = CocycleTable::zero(G, wq.modulus);
  for (int g = 1; g < G->n; ++g)
    for (int h = 1; h < G->n; ++h) w.set(g, h, wq.at(proj[g], proj[h]));
  return w;
}

CocycleTable perturb_class(const CocycleTable& w, std::uint64_t seed) {
  const GroupTable& G = *w.group;
  int n = G.n;
  std::uint32_t m = w.modulus;
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> f(n, 0);
  for (int u = 1; u < n; ++u) f[u] = static_cast<std::uint32_t>(rng() % m);
  auto hats = character_lifts(G, m);
  std::vector<std::uint32_t> cc(hats.size());
  for (auto& c : cc) c = static_cast<std::uint32_t>(rng() % m);

  CocycleTable out = w;
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h) {
      int gh = G.multiply(g, h);
      long long v = out.at(g, h);
      v += f[g] + f[h] - f[gh];
      for (size_t c = 0; c < hats.size(); ++c)
        v += static_cast<long long>(cc[c]) * carry_value(hats[c], m, g, h, gh);
      out.set(g, h, static_cast<std::uint32_t>(((v % m) + m) % m));
    }
  return out;
}

}  // namespace ambix
