#include "ambix/perm_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include "ambix/zmodlin.hpp"

namespace ambix {

PermGroup::PermGroup() = default;

PermGroup PermGroup::from_generators(std::vector<Permutation> gens, int degree,
                                     std::vector<int> forced_base) {
  PermGroup G;
  G.degree_ = degree;
  for (auto& g : gens)
    if (g.degree() != degree) throw ValidationError("generator degree mismatch");
  G.gens_ = std::move(gens);
  G.schreier_sims(forced_base);
  return G;
}

std::vector<int> PermGroup::level_gen_indices(int level) const {
  std::vector<int> out;
  for (int gi = 0; gi < static_cast<int>(sgens_.size()); ++gi) {
    const Permutation& g = sgens_[gi];
    bool ok = true;
    for (int i = 0; i < level; ++i)
      if (g[base_[i]] != base_[i]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(gi);
  }
  return out;
}

void PermGroup::rebuild_orbit(int level) {
  Level& L = levels_[level];
  auto gens = level_gen_indices(level);
  L.orbit.clear();
  L.transversal.assign(degree_, Permutation());
  L.in_orbit.assign(degree_, 0);
  L.orbit.push_back(L.base);
  L.in_orbit[L.base] = 1;
  L.transversal[L.base] = Permutation(degree_);
  for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
    int p = L.orbit[qi];
    for (int si : gens) {
      const Permutation& s = sgens_[si];
      int q = s[p];
      if (!L.in_orbit[q]) {
        L.in_orbit[q] = 1;
        L.orbit.push_back(q);
        L.transversal[q] = L.transversal[p] * s;
      }
    }
  }
}

std::pair<int, Permutation> PermGroup::strip(Permutation g, int from) const {
  for (int i = from; i < static_cast<int>(levels_.size()); ++i) {
    int p = g[base_[i]];
    if (!levels_[i].in_orbit[p]) return {i, std::move(g)};
    g = g * levels_[i].transversal[p].inverse();
  }
  return {static_cast<int>(levels_.size()), std::move(g)};
}

void PermGroup::schreier_sims(const std::vector<int>& forced_base) {
  for (int b : forced_base) {
    if (b < 0 || b >= degree_) throw Error("forced base point out of range");
    base_.push_back(b);
    levels_.emplace_back();
    levels_.back().base = b;
  }

  auto install = [&](const Permutation& g) {
    bool fixes_all = true;
    for (int b : base_)
      if (g[b] != b) {
        fixes_all = false;
        break;
      }
    if (fixes_all) {
      base_.push_back(g.first_moved());
      levels_.emplace_back();
      levels_.back().base = base_.back();
    }
    sgens_.push_back(g);
  };

  for (auto& g : gens_)
    if (!g.is_identity()) install(g);

  if (levels_.empty()) {
    order_ = 1;
    return;
  }

  // verified (orbit point, strong gen index) pairs per level; a successful
  // strip is a membership certificate and stays valid as deeper levels grow
  std::vector<std::unordered_set<long long>> done(levels_.size());

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    rebuild_orbit(i);
    if (done.size() < levels_.size()) done.resize(levels_.size());
    bool complete = true;
    auto gidx = level_gen_indices(i);
    Level& L = levels_[i];
    for (size_t oi = 0; oi < L.orbit.size() && complete; ++oi) {
      int p = L.orbit[oi];
      for (size_t si = 0; si < gidx.size() && complete; ++si) {
        long long key = static_cast<long long>(p) * (1 << 20) + gidx[si];
        if (done[i].count(key)) continue;
        const Permutation& s = sgens_[gidx[si]];
        int q = s[p];
        Permutation sg = L.transversal[p] * s * L.transversal[q].inverse();
        auto [j, resid] = strip(std::move(sg), i + 1);
        if (resid.is_identity()) {
          done[i].insert(key);
          continue;
        }
        complete = false;
        install(resid);
        if (done.size() < levels_.size()) done.resize(levels_.size());
        i = j;
      }
    }
    if (complete) --i;
  }

  order_ = 1;
  for (auto& L : levels_) order_ *= static_cast<unsigned long long>(L.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [lvl, resid] = strip(p, 0);
  return lvl == static_cast<int>(levels_.size()) && resid.is_identity();
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

std::vector<Permutation> PermGroup::stabilizer_generators(int prefix) const {
  std::vector<Permutation> out;
  for (int gi : level_gen_indices(prefix)) out.push_back(sgens_[gi]);
  return out;
}

std::optional<Permutation> PermGroup::element_with_base_images(const std::vector<int>& images,
                                                               int prefix) const {
  if (prefix > static_cast<int>(levels_.size())) return std::nullopt;
  Permutation acc(degree_);
  std::vector<int> targets(images.begin(), images.begin() + prefix);
  for (int i = 0; i < prefix; ++i) {
    int p = targets[i];
    if (p < 0 || p >= degree_ || !levels_[i].in_orbit[p]) return std::nullopt;
    const Permutation& u = levels_[i].transversal[p];
    Permutation uinv = u.inverse();
    for (int j = i + 1; j < prefix; ++j) targets[j] = uinv[targets[j]];
    acc = u * acc;
  }
  return acc;
}

std::vector<Permutation> PermGroup::elements(unsigned long long cap) const {
  if (order_ > cap)
    throw LimitExceeded("element enumeration of group of order " + std::to_string(order_) +
                        " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> out{Permutation(degree_)};
  for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) {
    const Level& L = levels_[i];
    std::vector<Permutation> next;
    next.reserve(out.size() * L.orbit.size());
    for (int p : L.orbit)
      for (auto& h : out) next.push_back(h * L.transversal[p]);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConjugacyClass> PermGroup::conjugacy_classes(unsigned long long cap) const {
  auto elems = elements(cap);
  std::unordered_map<Permutation, int, PermHash> index;
  index.reserve(elems.size());
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);

  std::vector<char> visited(elems.size(), 0);
  std::vector<ConjugacyClass> classes;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    if (visited[i]) continue;
    // elems is sorted, so the first unvisited member is the class minimum
    ConjugacyClass cl;
    cl.representative = elems[i];
    std::vector<int> orbit{i};
    visited[i] = 1;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      const Permutation& x = elems[orbit[qi]];
      for (auto& s : gens_) {
        Permutation y = x.conjugated_by(s);
        int yi = index.at(y);
        if (!visited[yi]) {
          visited[yi] = 1;
          orbit.push_back(yi);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    for (int oi : orbit) cl.members.push_back(elems[oi]);
    cl.size = cl.members.size();
    classes.push_back(std::move(cl));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  return classes;
}

PermGroup PermGroup::subgroup(const std::vector<Permutation>& gens) const {
  std::vector<Permutation> kept;
  for (auto& g : gens) {
    if (!contains(g)) throw ValidationError("subgroup generator outside the group");
    if (!g.is_identity()) kept.push_back(g);
  }
  return from_generators(kept, degree_);
}

PermGroup PermGroup::centralizer(const Permutation& g, unsigned long long cap) const {
  if (!contains(g)) throw ValidationError("centralizer: element outside the group");
  auto elems = elements(cap);
  PermGroup Z = from_generators({}, degree_);
  std::vector<Permutation> zgens;
  for (auto& h : elems) {
    if (!(h * g == g * h)) continue;
    if (!Z.contains(h)) {
      zgens.push_back(h);
      Z = from_generators(zgens, degree_);
    }
  }
  return Z;
}

std::vector<Permutation> PermGroup::center_elements(unsigned long long cap) const {
  auto elems = elements(cap);
  std::vector<Permutation> out;
  for (auto& h : elems) {
    bool central = true;
    for (auto& s : gens_)
      if (!(h * s == s * h)) {
        central = false;
        break;
      }
    if (central) out.push_back(h);
  }
  return out;
}

PermGroup PermGroup::normal_closure(const std::vector<Permutation>& seed) const {
  std::vector<Permutation> hgens;
  for (auto& g : seed)
    if (!g.is_identity()) hgens.push_back(g);
  PermGroup H = from_generators(hgens, degree_);
  for (size_t hi = 0; hi < hgens.size(); ++hi) {
    Permutation h = hgens[hi];
    for (auto& s : gens_) {
      Permutation c = h.conjugated_by(s);
      if (!H.contains(c)) {
        hgens.push_back(std::move(c));
        H = from_generators(hgens, degree_);
      }
    }
  }
  return H;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Permutation> comms;
  PermGroup probe = from_generators({}, degree_);
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = 0; j < gens_.size(); ++j) {
      if (i == j) continue;
      Permutation c = gens_[i].inverse() * gens_[j].inverse() * gens_[i] * gens_[j];
      if (!c.is_identity() && !probe.contains(c)) {
        comms.push_back(c);
        probe = from_generators(comms, degree_);
      }
    }
  return normal_closure(comms);
}

namespace {

// Right-coset action of G on cosets of N (N normal in G, validated by the
// caller when needed). Returns generator images aligned with G.generators().
struct CosetAction {
  std::vector<Permutation> images;
  std::vector<Permutation> reps;
  int index = 0;
};

CosetAction coset_action(const PermGroup& G, const PermGroup& N) {
  CosetAction ca;
  ca.reps.push_back(Permutation(G.degree()));
  auto find = [&](const Permutation& x) -> int {
    for (int i = 0; i < static_cast<int>(ca.reps.size()); ++i)
      if (N.contains(x * ca.reps[i].inverse())) return i;
    return -1;
  };
  for (size_t qi = 0; qi < ca.reps.size(); ++qi)
    for (auto& s : G.generators()) {
      Permutation c = ca.reps[qi] * s;
      if (find(c) < 0) ca.reps.push_back(std::move(c));
    }
  ca.index = static_cast<int>(ca.reps.size());
  for (auto& s : G.generators()) {
    std::vector<int> img(ca.index);
    for (int i = 0; i < ca.index; ++i) img[i] = find(ca.reps[i] * s);
    ca.images.push_back(Permutation(std::move(img)));
  }
  return ca;
}

}  // namespace

std::pair<std::vector<long long>, std::vector<std::vector<long long>>>
PermGroup::abelianization_coordinates(const std::vector<Permutation>& xs) const {
  PermGroup D = derived_subgroup();
  if (D.order() == order_)
    return {{}, std::vector<std::vector<long long>>(xs.size())};

  CosetAction ca = coset_action(*this, D);
  int k = static_cast<int>(ca.images.size());
  int index = ca.index;

  // relation lattice of the abelian quotient from its Cayley graph: the
  // BFS tree plus closing edges generate ker(Z^k -> Q)
  std::vector<Permutation> elems{Permutation(index)};
  std::unordered_map<Permutation, int, PermHash> idx;
  idx.emplace(elems[0], 0);
  std::vector<std::vector<long long>> evec{std::vector<long long>(k, 0)};
  std::vector<std::vector<long long>> relations;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    Permutation cur = elems[qi];
    for (int gi = 0; gi < k; ++gi) {
      Permutation nxt = cur * ca.images[gi];
      auto it = idx.find(nxt);
      if (it == idx.end()) {
        idx.emplace(nxt, static_cast<int>(elems.size()));
        elems.push_back(nxt);
        auto v = evec[qi];
        v[gi] += 1;
        evec.push_back(std::move(v));
      } else {
        auto rel = evec[qi];
        rel[gi] += 1;
        for (int t = 0; t < k; ++t) rel[t] -= evec[it->second][t];
        relations.push_back(std::move(rel));
      }
    }
  }
  for (int gi = 0; gi < k; ++gi) {
    std::vector<long long> rel(k, 0);
    rel[gi] = ca.images[gi].order();
    relations.push_back(std::move(rel));
  }
  auto snf = smith_normal_form(SparseIntMatrix::from_dense(relations));
  int r = k;
  std::vector<long long> all(r, 0);
  for (int i = 0; i < r; ++i)
    all[i] = i < static_cast<int>(snf.divisors.size()) ? snf.divisors[i] : 0;
  for (auto d : all)
    if (d == 0) throw Error("abelianization: quotient not finite");

  std::vector<long long> divisors;
  std::vector<int> positions;
  for (int i = 0; i < r; ++i)
    if (all[i] > 1) {
      divisors.push_back(all[i]);
      positions.push_back(i);
    }

  // image of x in the quotient as a permutation of cosets, then its BFS
  // exponent vector, then coordinates via the SNF column transform
  auto coset_of = [&](const Permutation& x) -> int {
    for (int i = 0; i < index; ++i)
      if (D.contains(x * ca.reps[i].inverse())) return i;
    throw Error("abelianization: coset lookup failed");
  };
  std::vector<std::vector<long long>> coords;
  coords.reserve(xs.size());
  for (auto& x : xs) {
    std::vector<int> img(index);
    for (int i = 0; i < index; ++i) img[i] = coset_of(ca.reps[i] * x);
    Permutation qx(std::move(img));
    auto it = idx.find(qx);
    if (it == idx.end()) throw Error("abelianization: image element not found");
    const auto& v = evec[it->second];
    std::vector<long long> c;
    for (size_t pi = 0; pi < positions.size(); ++pi) {
      __int128 acc = 0;
      for (int j = 0; j < r; ++j) acc += static_cast<__int128>(v[j]) * snf.V[j][positions[pi]];
      long long d = divisors[pi];
      c.push_back(static_cast<long long>(((acc % d) + d) % d));
    }
    coords.push_back(std::move(c));
  }
  return {std::move(divisors), std::move(coords)};
}

std::vector<long long> PermGroup::abelian_invariants() const {
  return abelianization_coordinates({}).first;
}

StructureReport PermGroup::structure_report(unsigned long long cap) const {
  StructureReport r;
  r.order = order_;
  auto zelems = center_elements(cap);
  PermGroup Z = from_generators({}, degree_);
  for (auto& z : zelems)
    if (!z.is_identity() && !Z.contains(z)) {
      r.center.push_back(z);
      std::vector<Permutation> zg = r.center;
      Z = from_generators(zg, degree_);
    }
  r.center_order = Z.order();
  PermGroup D = derived_subgroup();
  r.derived = D.generators();
  r.derived_order = D.order();
  r.abelian_invariants = abelian_invariants();
  return r;
}

// ---------------------------------------------------------------------------
// Homomorphism via the graph subgroup
// ---------------------------------------------------------------------------

namespace {

Permutation block_perm(const Permutation& a, const Permutation& b) {
  std::vector<int> img(a.degree() + b.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + b[i];
  return Permutation(std::move(img));
}

}  // namespace

Homomorphism Homomorphism::create(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> images) {
  if (images.size() != domain->generators().size())
    throw ValidationError("hom_by_images: generator/image count mismatch");
  for (auto& y : images)
    if (!codomain->contains(y)) throw ValidationError("hom_by_images: image outside codomain");

  int nd = domain->degree(), nc = codomain->degree();
  std::vector<Permutation> graph_gens;
  for (size_t i = 0; i < images.size(); ++i)
    graph_gens.push_back(block_perm(domain->generators()[i], images[i]));

  // Forcing a full base of one factor to the front makes the prefix
  // stabilizer have identity part in that factor, which is what the
  // eval/lift walks and the kernel extraction rely on.
  std::vector<int> dom_first = domain->base();
  std::vector<int> cod_first;
  for (int b : codomain->base()) cod_first.push_back(nd + b);

  Homomorphism h;
  h.domain_ = std::move(domain);
  h.codomain_ = std::move(codomain);
  h.images_ = std::move(images);
  h.graph_dom_first_ = PermGroup::from_generators(graph_gens, nd + nc, dom_first);
  if (h.graph_dom_first_.order() != h.domain_->order())
    throw ValidationError("hom_by_images: map is not well-defined (graph order " +
                          std::to_string(h.graph_dom_first_.order()) + " != " +
                          std::to_string(h.domain_->order()) + ")");
  h.graph_cod_first_ = PermGroup::from_generators(graph_gens, nd + nc, cod_first);
  h.dom_base_prefix_ = static_cast<int>(dom_first.size());
  h.cod_base_prefix_ = static_cast<int>(cod_first.size());

  // image subgroup order = |graph| / |kernel x 1|
  unsigned long long stab = 1;
  {
    auto kg = h.graph_cod_first_.stabilizer_generators(h.cod_base_prefix_);
    PermGroup K = PermGroup::from_generators(kg, nd + nc);
    stab = K.order();
  }
  h.image_order_ = h.graph_cod_first_.order() / stab;
  return h;
}

Permutation Homomorphism::eval(const Permutation& x) const {
  if (!domain_->contains(x)) throw ValidationError("hom eval: element outside domain");
  int nd = domain_->degree(), nc = codomain_->degree();
  std::vector<int> targets(dom_base_prefix_);
  for (int i = 0; i < dom_base_prefix_; ++i) targets[i] = x[graph_dom_first_.base()[i]];
  auto g = graph_dom_first_.element_with_base_images(targets, dom_base_prefix_);
  if (!g) throw Error("hom eval: walk failed");
  std::vector<int> img(nc);
  for (int i = 0; i < nc; ++i) img[i] = (*g)[nd + i] - nd;
  return Permutation(std::move(img));
}

Permutation Homomorphism::lift(const Permutation& y) const {
  int nd = domain_->degree();
  std::vector<int> targets(cod_base_prefix_);
  for (int i = 0; i < cod_base_prefix_; ++i)
    targets[i] = nd + y[graph_cod_first_.base()[i] - nd];
  auto g = graph_cod_first_.element_with_base_images(targets, cod_base_prefix_);
  if (!g) throw ValidationError("hom lift: element outside the image");
  std::vector<int> img(nd);
  for (int i = 0; i < nd; ++i) img[i] = (*g)[i];
  return Permutation(std::move(img));
}

std::vector<Permutation> Homomorphism::kernel_generators() const {
  auto kg = graph_cod_first_.stabilizer_generators(cod_base_prefix_);
  int nd = domain_->degree();
  std::vector<Permutation> out;
  for (auto& g : kg) {
    std::vector<int> img(nd);
    for (int i = 0; i < nd; ++i) img[i] = g[i];
    Permutation p(std::move(img));
    if (!p.is_identity()) out.push_back(std::move(p));
  }
  return out;
}

Homomorphism hom_by_images(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> images) {
  return Homomorphism::create(std::move(domain), std::move(codomain), std::move(images));
}

std::pair<GroupPtr, Homomorphism> quotient_by_normal(GroupPtr G, const std::vector<Permutation>& N_gens) {
  PermGroup N = G->subgroup(N_gens);
  for (auto& n : N.generators())
    for (auto& s : G->generators())
      if (!N.contains(n.conjugated_by(s))) throw ValidationError("quotient: subgroup is not normal");
  CosetAction ca = coset_action(*G, N);
  auto Q = std::make_shared<PermGroup>(PermGroup::from_generators(ca.images, ca.index));
  Homomorphism f = Homomorphism::create(G, Q, ca.images);
  return {Q, std::move(f)};
}

std::pair<GroupPtr, Homomorphism> quotient_by_central(GroupPtr G, const std::vector<Permutation>& Z_gens) {
  for (auto& z : Z_gens) {
    if (!G->contains(z)) throw ValidationError("quotient_by_central: element outside the group");
    for (auto& s : G->generators())
      if (!(z * s == s * z)) throw ValidationError("quotient_by_central: subgroup is not central");
  }
  return quotient_by_normal(std::move(G), Z_gens);
}

CGraph c_graph(const PermGroup& G, const std::vector<ConjugacyClass>& O) {
  CGraph cg;
  for (auto& cl : O) {
    if (cl.members.empty()) throw ValidationError("c_graph: classes must be materialized");
    for (auto& g : cl.members) {
      if (g.is_identity()) throw ValidationError("c_graph: identity class is not allowed");
      if (!G.contains(g)) throw ValidationError("c_graph: class member outside the group");
      cg.vertices.push_back(g);
    }
  }
  std::sort(cg.vertices.begin(), cg.vertices.end());
  std::unordered_map<Permutation, int, PermHash> idx;
  for (int i = 0; i < static_cast<int>(cg.vertices.size()); ++i) idx.emplace(cg.vertices[i], i);

  int n = static_cast<int>(cg.vertices.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (int t = 0; t < n; ++t)
    for (int l = 0; l < n; ++l) {
      Permutation h = cg.vertices[t].conjugated_by(cg.vertices[l]);
      auto it = idx.find(h);
      if (it == idx.end()) throw Error("c_graph: conjugate left the equipment (O is not class-closed)");
      cg.edges.push_back({t, it->second, l});
      int a = find(t), b = find(it->second);
      if (a != b) parent[a] = b;
    }

  cg.component.assign(n, -1);
  std::map<int, int> root_id;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto [it, fresh] = root_id.emplace(r, static_cast<int>(root_id.size()));
    cg.component[i] = it->second;
  }
  cg.component_count = static_cast<int>(root_id.size());
  return cg;
}

}  // namespace ambix
