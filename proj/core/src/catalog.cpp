#include "ambix/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ambix/cocycle.hpp"
#include "ambix/fpgroup.hpp"

namespace ambix {

namespace {

GroupPtr wrap(PermGroup g) { return std::make_shared<PermGroup>(std::move(g)); }

Permutation full_cycle(int from, int to, int degree) {
  // cycle (from, from+1, ..., to), 1-based endpoints
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = from; i < to; ++i) img[i - 1] = i;
  img[to - 1] = from - 1;
  return Permutation(std::move(img));
}

GroupPtr make_sym(int d) {
  if (d < 1) throw ValidationError("sym:d requires d >= 1");
  if (d == 1) return wrap(PermGroup::from_generators({}, 1));
  std::vector<Permutation> gens{parse_cycles("(1,2)", d)};
  if (d > 2) gens.push_back(full_cycle(1, d, d));
  auto G = wrap(PermGroup::from_generators(gens, d));
  return G;
}

GroupPtr make_alt(int d) {
  if (d < 3) throw ValidationError("alt:d requires d >= 3");
  std::vector<Permutation> gens{parse_cycles("(1,2,3)", d)};
  if (d > 3) gens.push_back(d % 2 ? full_cycle(1, d, d) : full_cycle(2, d, d));
  auto G = wrap(PermGroup::from_generators(gens, d));
  unsigned long long fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  if (G->order() != fact / 2) throw Error("alt constructor produced wrong order");
  return G;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic:n requires n >= 1");
  if (n == 1) return wrap(PermGroup::from_generators({}, 1));
  return wrap(PermGroup::from_generators({full_cycle(1, n, n)}, n));
}

GroupPtr make_dihedral(int n) {
  if (n < 3) throw ValidationError("dihedral:n requires n >= 3");
  std::vector<int> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = n - 1 - i;
  return wrap(PermGroup::from_generators({full_cycle(1, n, n), Permutation(std::move(refl))}, n));
}

GroupPtr make_quaternion() {
  // regular representation from the unit table of {±1, ±i, ±j, ±k}
  auto mul = [](int a, int b) {
    int sa = a & 1, ua = a >> 1;
    int sb = b & 1, ub = b >> 1;
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return (unit[ua][ub] << 1) | ((sa + sb + sign[ua][ub]) & 1);
  };
  std::vector<int> pi(8), pj(8);
  for (int x = 0; x < 8; ++x) {
    pi[x] = mul(x, 2);
    pj[x] = mul(x, 4);
  }
  return wrap(PermGroup::from_generators({Permutation(pi), Permutation(pj)}, 8));
}

GroupPtr make_elem_abelian(int p, int k) {
  if (k < 1) throw ValidationError("elem_abelian:p^k requires k >= 1");
  std::vector<Permutation> gens;
  int degree = p * k;
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < p; ++j) img[i * p + j] = i * p + (j + 1) % p;
    gens.push_back(Permutation(std::move(img)));
  }
  return wrap(PermGroup::from_generators(gens, degree));
}

GroupPtr make_heisenberg(int p) {
  // unitriangular 3x3 over F_p acting on pairs (u,v), point id u*p+v
  int degree = p * p;
  auto act = [&](auto f) {
    std::vector<int> img(degree);
    for (int u = 0; u < p; ++u)
      for (int v = 0; v < p; ++v) {
        auto [u2, v2] = f(u, v);
        img[u * p + v] = (u2 % p) * p + (v2 % p);
      }
    return Permutation(std::move(img));
  };
  Permutation x = act([&](int u, int v) { return std::pair<int, int>{(u + 1) % p, v}; });
  Permutation y = act([&](int u, int v) { return std::pair<int, int>{u, (v + u) % p}; });
  auto G = wrap(PermGroup::from_generators({x, y}, degree));
  if (G->order() != static_cast<unsigned long long>(p) * p * p)
    throw Error("heisenberg constructor produced wrong order");
  return G;
}

GroupPtr make_perm_list(const std::string& body, int degree_override) {
  // generators separated by top-level commas or semicolons
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == ';') && depth == 0) {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  int degree = degree_override;
  if (degree <= 0) {
    for (auto& s : parts) degree = std::max(degree, parse_cycles(s).degree());
    if (degree <= 0) throw ValidationError("perm:[...] needs at least one non-identity generator");
  }
  std::vector<Permutation> gens;
  for (auto& s : parts) gens.push_back(parse_cycles(s, degree));
  return wrap(PermGroup::from_generators(gens, degree));
}

}  // namespace

// ---------------------------------------------------------------------------
// Saltman groups
// ---------------------------------------------------------------------------

SaltmanGroup::SaltmanGroup(int p) : p_(p) {
  if (p != 2 && p != 3) throw ValidationError("saltman:p supports p in {2,3} (larger p exceeds the size budget)");
}

long long SaltmanGroup::order() const {
  long long o = 1;
  for (int i = 0; i < 9; ++i) o *= p_;
  return o;
}

SaltmanGroup::Elem SaltmanGroup::mul(const Elem& x, const Elem& y) const {
  Elem r;
  for (int i = 0; i < 4; ++i) r.a[i] = (x.a[i] + y.a[i]) % p_;
  // mu(a,b): coordinate (i,j) gains a_i b_j; coordinate (1,2) loses a_3 b_4
  static const int pairs[5][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (int c = 0; c < 5; ++c) {
    int v = x.z[c] + y.z[c] + x.a[pairs[c][0]] * y.a[pairs[c][1]];
    if (c == 0) v -= x.a[2] * y.a[3];
    r.z[c] = ((v % p_) + p_) % p_;
  }
  return r;
}

SaltmanGroup::Elem SaltmanGroup::inv(const Elem& x) const {
  Elem y;
  for (int i = 0; i < 4; ++i) y.a[i] = (p_ - x.a[i]) % p_;
  Elem prod = mul(x, y);  // (0, z + mu(a,-a))
  for (int c = 0; c < 5; ++c) y.z[c] = (p_ - prod.z[c]) % p_;
  Elem check = mul(x, y);
  for (int c = 0; c < 5; ++c)
    if (check.z[c] != 0) throw Error("saltman inverse construction failed");
  return y;
}

SaltmanGroup::Elem SaltmanGroup::generator(int i) const {
  Elem e;
  e.a[i] = 1;
  return e;
}

long long SaltmanGroup::index_of(const Elem& e) const {
  long long idx = 0;
  for (int i = 0; i < 4; ++i) idx = idx * p_ + e.a[i];
  for (int c = 0; c < 5; ++c) idx = idx * p_ + e.z[c];
  return idx;
}

SaltmanGroup::Elem SaltmanGroup::elem_at(long long idx) const {
  Elem e;
  for (int c = 4; c >= 0; --c) {
    e.z[c] = static_cast<int>(idx % p_);
    idx /= p_;
  }
  for (int i = 3; i >= 0; --i) {
    e.a[i] = static_cast<int>(idx % p_);
    idx /= p_;
  }
  return e;
}

std::array<int, 5> SaltmanGroup::commutator_form(const std::array<int, 4>& a,
                                                 const std::array<int, 4>& b) const {
  Elem x, y;
  x.a = a;
  y.a = b;
  Elem c = mul(mul(inv(x), inv(y)), mul(x, y));
  return c.z;
}

GroupTablePtr SaltmanGroup::table() const {
  auto gt = std::make_shared<GroupTable>();
  long long n = order();
  gt->n = static_cast<int>(n);
  SaltmanGroup self = *this;
  gt->mul = [self](int x, int y) {
    return static_cast<int>(self.index_of(self.mul(self.elem_at(x), self.elem_at(y))));
  };
  gt->inv.resize(n);
  for (long long i = 0; i < n; ++i) gt->inv[i] = static_cast<int>(index_of(inv(elem_at(i))));
  for (int i = 0; i < 4; ++i) gt->gens.push_back(static_cast<int>(index_of(generator(i))));
  gt->h1_divisors.assign(4, p_);
  gt->h1_coords.resize(n);
  for (long long i = 0; i < n; ++i) {
    Elem e = elem_at(i);
    gt->h1_coords[i] = {e.a[0], e.a[1], e.a[2], e.a[3]};
  }
  return gt;
}

GroupPtr SaltmanGroup::perm_group() const {
  // five right-coset actions; the c-th one is faithful on the c-th center
  // coordinate, their union is faithful since every nontrivial normal
  // subgroup of a p-group meets the center
  static const int wbasis[5][2] = {{0, 3}, {0, 1}, {0, 1}, {0, 1}, {0, 1}};
  std::vector<std::vector<Elem>> cosets(5);
  auto in_K = [&](int c, const Elem& e) {
    for (int i = 0; i < 4; ++i)
      if (i != wbasis[c][0] && i != wbasis[c][1] && e.a[i] != 0) return false;
    return e.z[c] == 0;
  };
  long long n = order();
  for (int c = 0; c < 5; ++c) {
    auto& reps = cosets[c];
    reps.push_back(identity());
    for (size_t qi = 0; qi < reps.size(); ++qi)
      for (int gi = 0; gi < 4; ++gi) {
        Elem cand = mul(reps[qi], generator(gi));
        bool found = false;
        for (auto& r : reps)
          if (in_K(c, mul(cand, inv(r)))) {
            found = true;
            break;
          }
        if (!found) reps.push_back(cand);
      }
    if (static_cast<long long>(reps.size()) != n / (static_cast<long long>(p_) * p_ * p_ * p_ * p_ * p_))
      throw Error("saltman coset action has wrong index");
  }

  int block = p_ * p_ * p_;
  int degree = 5 * block;
  std::vector<Permutation> gens;
  for (int gi = 0; gi < 4; ++gi) {
    std::vector<int> img(degree);
    for (int c = 0; c < 5; ++c) {
      auto& reps = cosets[c];
      for (int i = 0; i < block; ++i) {
        Elem moved = mul(reps[i], generator(gi));
        int j = -1;
        for (int t = 0; t < block; ++t)
          if (in_K(c, mul(moved, inv(reps[t])))) {
            j = t;
            break;
          }
        if (j < 0) throw Error("saltman coset action lookup failed");
        img[c * block + i] = c * block + j;
      }
    }
    gens.push_back(Permutation(std::move(img)));
  }
  auto G = wrap(PermGroup::from_generators(gens, degree));
  if (G->order() != static_cast<unsigned long long>(n))
    throw Error("saltman permutation representation is not faithful");
  return G;
}

// ---------------------------------------------------------------------------
// GroupSpec parsing
// ---------------------------------------------------------------------------

GroupPtr make_group(const std::string& spec) {
  auto starts = [&](const std::string& p) { return spec.rfind(p, 0) == 0; };
  auto intafter = [&](size_t off) {
    if (off >= spec.size()) throw ValidationError("malformed group spec '" + spec + "'");
    return std::stoi(spec.substr(off));
  };
  try {
    if (starts("sym:")) return make_sym(intafter(4));
    if (starts("alt:")) return make_alt(intafter(4));
    if (starts("cyclic:")) return make_cyclic(intafter(7));
    if (starts("dihedral:")) return make_dihedral(intafter(9));
    if (spec == "quaternion:8") return make_quaternion();
    if (starts("elem_abelian:")) {
      std::string body = spec.substr(13);
      size_t caret = body.find('^');
      int p = std::stoi(body.substr(0, caret));
      int k = caret == std::string::npos ? 1 : std::stoi(body.substr(caret + 1));
      return make_elem_abelian(p, k);
    }
    if (starts("heisenberg:")) return make_heisenberg(intafter(11));
    if (starts("saltman:")) return SaltmanGroup(intafter(8)).perm_group();
    if (starts("perm:")) {
      std::string body = spec.substr(5);
      int degree = 0;
      if (!body.empty() && body[0] != '[') {
        size_t colon = body.find(':');
        if (colon == std::string::npos) throw ValidationError("malformed perm spec");
        degree = std::stoi(body.substr(0, colon));
        body = body.substr(colon + 1);
      }
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ValidationError("perm spec expects [...]");
      return make_perm_list(body.substr(1, body.size() - 2), degree);
    }
    if (starts("fp:")) {
      auto P = parse_presentation(spec.substr(3));
      auto T = todd_coxeter(P, {});
      auto [G, images] = perm_rep(T);
      return wrap(std::move(G));
    }
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed group spec '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw ValidationError("malformed group spec '" + spec + "'");
  }
  throw ValidationError("unknown group spec '" + spec + "'");
}

std::optional<unsigned long long> reference_h2(const std::string& spec) {
  auto starts = [&](const std::string& p) { return spec.rfind(p, 0) == 0; };
  if (starts("sym:")) {
    int d = std::stoi(spec.substr(4));
    return d >= 4 ? 2ULL : 1ULL;
  }
  if (starts("alt:")) {
    int d = std::stoi(spec.substr(4));
    if (d == 6 || d == 7) return 6ULL;
    return d >= 4 ? 2ULL : 1ULL;
  }
  return std::nullopt;
}

SaltmanPipelineResult saltman_b0_pipeline(int p) {
  if (p != 2)
    throw LimitExceeded("saltman pipeline: only p=2 fits the default budget (p=3 needs ~4*10^8 "
                        "table coordinates)");
  SaltmanGroup S(p);
  GroupTablePtr Gt = S.table();
  int n = Gt->n;

  SaltmanPipelineResult out;
  out.inflation_class_count = 1;
  for (int i = 0; i < 6; ++i) out.inflation_class_count *= p;

  static const int pairs6[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  long long trivial = 0, certified = 0;
  for (long long mcode = 0; mcode < out.inflation_class_count; ++mcode) {
    int M[6];
    long long t = mcode;
    for (int i = 0; i < 6; ++i) {
      M[i] = static_cast<int>(t % p);
      t /= p;
    }
    CocycleTable w = CocycleTable::zero(Gt, static_cast<std::uint32_t>(p));
    for (int g = 1; g < n; ++g) {
      auto& ag = Gt->h1_coords[g];
      for (int h = 1; h < n; ++h) {
        auto& bh = Gt->h1_coords[h];
        long long v = 0;
        for (int c = 0; c < 6; ++c) v += M[c] * ag[pairs6[c][0]] * bh[pairs6[c][1]];
        w.set(g, h, static_cast<std::uint32_t>(((v % p) + p) % p));
      }
    }
    if (is_trivial_class(w)) ++trivial;

    // pairing on every commuting pair of the covering group
    bool vanish = true;
    for (int g = 1; g < n && vanish; ++g)
      for (int h = g; h < n && vanish; ++h) {
        if (Gt->multiply(g, h) != Gt->multiply(h, g)) continue;
        if (pairing(w, g, h) != 0) vanish = false;
      }
    if (vanish) ++certified;
  }
  out.inflation_kernel_order = trivial;
  if (certified % std::max(trivial, 1LL) != 0)
    throw Error("saltman pipeline: certified set is not a union of kernel cosets");
  out.b0_lower_bound = trivial ? certified / trivial : 0;
  return out;
}

// ---------------------------------------------------------------------------
// Cycle types and the splitting predicates
// ---------------------------------------------------------------------------

CycleType CycleType::of(const Permutation& p) {
  CycleType t;
  t.lengths = p.cycle_lengths();
  t.degree = p.degree();
  return t;
}

int CycleType::fixed_points() const {
  int moved = 0;
  for (int l : lengths) moved += l;
  return degree - moved;
}

bool CycleType::is_even() const {
  int s = 0;
  for (int l : lengths) s += l - 1;
  return s % 2 == 0;
}

bool CycleType::all_lengths_distinct() const {
  if (fixed_points() >= 2) return false;
  for (size_t i = 0; i + 1 < lengths.size(); ++i)
    if (lengths[i] == lengths[i + 1]) return false;
  if (fixed_points() == 1 && !lengths.empty() && lengths.front() == 1) return false;
  return true;
}

bool CycleType::has_even_length() const {
  for (int l : lengths)
    if (l % 2 == 0) return true;
  return false;
}

std::string CycleType::str() const {
  std::string s;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(lengths[i]);
  }
  return s;
}

bool split_predicate(CoverKind kind, const CycleType& t) {
  if (kind == CoverKind::Sym) {
    if (t.is_even()) return !t.has_even_length();
    return t.all_lengths_distinct();
  }
  // alternating: even permutations only
  if (!t.is_even()) throw ValidationError("alt split predicate applied to an odd cycle type");
  if (!t.has_even_length()) return true;
  return t.all_lengths_distinct();
}

int d67_class_category(const CycleType& t) {
  const auto& l = t.lengths;
  if (l == std::vector<int>{5} || l == std::vector<int>{2, 4} || l == std::vector<int>{7}) return 1;
  if (l == std::vector<int>{3} || l == std::vector<int>{3, 3}) return 2;
  if (l == std::vector<int>{2, 2} || l == std::vector<int>{2, 2, 3}) return 3;
  throw ValidationError("cycle type " + t.str() + " is not a class of alt:6 or alt:7");
}

unsigned long long expected_ambiguity(CoverKind kind, int degree, const std::vector<CycleType>& types) {
  if (types.empty()) throw ValidationError("expected_ambiguity: empty equipment");
  if (kind == CoverKind::Alt && (degree == 6 || degree == 7)) {
    bool has2 = false, has3 = false;
    for (auto& t : types) {
      int c = d67_class_category(t);
      has2 |= (c == 2);
      has3 |= (c == 3);
    }
    if (has2 && has3) return 1;
    if (has2) return 2;
    if (has3) return 3;
    return 6;
  }
  if (degree < 4) return 1;
  for (auto& t : types)
    if (!split_predicate(kind, t)) return 1;
  return 2;
}

}  // namespace ambix
