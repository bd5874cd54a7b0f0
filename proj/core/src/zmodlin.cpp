#include "ambix/zmodlin.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>

namespace ambix {

SparseVec sparse_from_dense(const std::vector<std::uint32_t>& dense, std::uint32_t m) {
  SparseVec v;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i) {
    std::uint32_t a = dense[i] % m;
    if (a) v.emplace_back(i, a);
  }
  return v;
}

std::vector<std::uint32_t> sparse_to_dense(const SparseVec& v, int dim, std::uint32_t m) {
  std::vector<std::uint32_t> d(dim, 0);
  for (auto& [i, a] : v) d.at(i) = a % m;
  return d;
}

void SparseIntMatrix::set(int r, int c, long long v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("SparseIntMatrix::set out of range");
  if (v != 0) entries.emplace_back(r, c, v);
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& d) {
  SparseIntMatrix M(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (d[i][j]) M.entries.emplace_back(i, j, d[i][j]);
  return M;
}

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

Mat identity(int n) {
  Mat I(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw LimitExceeded("smith_normal_form: transform entry exceeds 64 bits");
  return z.get_si();
}

std::vector<std::vector<long long>> to_ll(const Mat& a) {
  std::vector<std::vector<long long>> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(a[i].size());
    for (auto& z : a[i]) r[i].push_back(to_ll(z));
  }
  return r;
}

struct SnfState {
  Mat M, U, V, Vinv;
  int rows, cols;

  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap(M[a], M[b]);
    std::swap(U[a], U[b]);
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (auto& r : M) std::swap(r[a], r[b]);
    for (auto& r : V) std::swap(r[a], r[b]);
    std::swap(Vinv[a], Vinv[b]);
  }
  // row[a] += q * row[b]
  void addmul_row(int a, int b, const mpz_class& q) {
    for (int j = 0; j < cols; ++j) M[a][j] += q * M[b][j];
    for (int j = 0; j < rows; ++j) U[a][j] += q * U[b][j];
  }
  // col[a] += q * col[b]
  void addmul_col(int a, int b, const mpz_class& q) {
    for (int i = 0; i < rows; ++i) M[i][a] += q * M[i][b];
    for (int i = 0; i < cols; ++i) V[i][a] += q * V[i][b];
    // inverse op on Vinv: row[b] -= q * row[a]
    for (int j = 0; j < cols; ++j) Vinv[b][j] -= q * Vinv[a][j];
  }
  void negate_row(int a) {
    for (auto& x : M[a]) x = -x;
    for (auto& x : U[a]) x = -x;
  }
};

}  // namespace

SmithNF smith_normal_form(const SparseIntMatrix& Min) {
  SnfState s;
  s.rows = Min.rows;
  s.cols = Min.cols;
  s.M.assign(s.rows, std::vector<mpz_class>(s.cols, 0));
  for (auto& [r, c, v] : Min.entries) {
    if (r < 0 || r >= s.rows || c < 0 || c >= s.cols) throw Error("smith_normal_form: entry out of range");
    if (s.M[r][c] != 0) throw Error("smith_normal_form: duplicate entry position");
    s.M[r][c] = static_cast<long>(v);
  }
  s.U = identity(s.rows);
  s.V = identity(s.cols);
  s.Vinv = identity(s.cols);

  int t = 0;
  int nmin = std::min(s.rows, s.cols);
  while (t < nmin) {
    // pivot: minimal |entry| in the trailing submatrix, ties by position
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < s.rows; ++i)
      for (int j = t; j < s.cols; ++j)
        if (s.M[i][j] != 0) {
          mpz_class a = abs(s.M[i][j]);
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < s.rows; ++i) {
        while (s.M[i][t] != 0) {
          mpz_class q = s.M[i][t] / s.M[t][t];  // truncated division
          if (q != 0) s.addmul_row(i, t, -q);
          if (s.M[i][t] != 0) {  // remainder strictly smaller: continue gcd
            s.swap_rows(t, i);
            clean = false;
          }
        }
      }
      for (int j = t + 1; j < s.cols; ++j) {
        while (s.M[t][j] != 0) {
          mpz_class q = s.M[t][j] / s.M[t][t];
          if (q != 0) s.addmul_col(j, t, -q);
          if (s.M[t][j] != 0) {
            s.swap_cols(t, j);
            clean = false;
          }
        }
      }
    }

    // divisibility: pivot must divide the rest of the submatrix
    bool restart = false;
    for (int i = t + 1; i < s.rows && !restart; ++i)
      for (int j = t + 1; j < s.cols && !restart; ++j)
        if (s.M[i][j] % s.M[t][t] != 0) {
          s.addmul_row(t, i, 1);
          restart = true;
        }
    if (restart) continue;

    if (s.M[t][t] < 0) s.negate_row(t);
    ++t;
  }

  SmithNF out;
  for (int i = 0; i < nmin; ++i)
    if (s.M[i][i] != 0) out.divisors.push_back(to_ll(s.M[i][i]));
  out.U = to_ll(s.U);
  out.V = to_ll(s.V);
  return out;
}

PrimePower PrimePower::of(std::uint32_t m) {
  if (m < 2) throw Error("modulus must be >= 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = m;
  PrimePower pp;
  pp.p = p;
  pp.m = m;
  pp.k = 0;
  std::uint32_t r = m;
  while (r % p == 0) {
    r /= p;
    ++pp.k;
  }
  if (r != 1) throw Error("modulus " + std::to_string(m) + " is not a prime power");
  return pp;
}

std::uint32_t mod_inverse_unit(std::uint32_t a, std::uint32_t m) {
  long long t0 = 0, t1 = 1, r0 = m, r1 = a % m;
  while (r1 != 0) {
    long long q = r0 / r1;
    t0 -= q * t1;
    std::swap(t0, t1);
    r0 -= q * r1;
    std::swap(r0, r1);
  }
  if (r0 != 1) throw Error("mod_inverse_unit: not a unit");
  long long t = t0 % static_cast<long long>(m);
  if (t < 0) t += m;
  return static_cast<std::uint32_t>(t);
}

ModHowell::ModHowell(PrimePower mod, bool track_aux, bool collect_kernel)
    : mod_(mod), track_aux_(track_aux), collect_kernel_(collect_kernel) {}

int ModHowell::valuation(std::uint32_t a) const {
  int v = 0;
  while (a % mod_.p == 0) {
    a /= mod_.p;
    ++v;
  }
  return v;
}

void sparse_axpy(SparseVec& dst, const SparseVec& src, std::uint32_t c, std::uint32_t mm) {
  if (c == 0 || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  const std::uint64_t m = mm;
  while (i < dst.size() || j < src.size()) {
    if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i >= dst.size() || src[j].first < dst[i].first) {
      std::uint32_t a = static_cast<std::uint32_t>((std::uint64_t(c) * src[j].second) % m);
      if (a) out.emplace_back(src[j].first, a);
      ++j;
    } else {
      std::uint64_t a = (dst[i].second + std::uint64_t(c) * src[j].second) % m;
      if (a) out.emplace_back(dst[i].first, static_cast<std::uint32_t>(a));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void ModHowell::axpy(SparseVec& dst, const SparseVec& src, std::uint32_t c) const {
  sparse_axpy(dst, src, c, mod_.m);
}

bool ModHowell::add(SparseVec v, SparseVec aux) {
  bool grew = false;
  const bool aux_active = track_aux_ || collect_kernel_;
  std::vector<std::pair<SparseVec, SparseVec>> work;
  work.emplace_back(std::move(v), std::move(aux));
  const std::uint32_t m = mod_.m;
  while (!work.empty()) {
    auto [cur, curaux] = std::move(work.back());
    work.pop_back();
    for (auto& [idx, val] : cur) val %= m;
    cur.erase(std::remove_if(cur.begin(), cur.end(), [](auto& e) { return e.second == 0; }), cur.end());

    bool vanished = true;
    while (!cur.empty()) {
      int lead = cur.front().first;
      std::uint32_t a = cur.front().second;
      auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                 [](const Row& r, int c) { return r.lead < c; });
      int va = valuation(a);
      if (it != rows_.end() && it->lead == lead && va >= it->val) {
        // reduce against the existing pivot
        std::uint32_t q = a;
        for (int i = 0; i < it->val; ++i) q /= mod_.p;
        std::uint32_t negq = (m - q % m) % m;
        axpy(cur, it->main, negq);
        if (aux_active) axpy(curaux, it->aux, negq);
        continue;
      }
      // this row becomes a pivot (fresh column, or smaller valuation)
      std::uint32_t unit = a;
      for (int i = 0; i < va; ++i) unit /= mod_.p;
      std::uint32_t ui = mod_inverse_unit(unit, m);
      Row r;
      r.lead = lead;
      r.val = va;
      axpy(r.main, cur, ui);
      if (aux_active) axpy(r.aux, curaux, ui);
      if (it != rows_.end() && it->lead == lead) {
        Row old = std::move(*it);
        *it = std::move(r);
        work.emplace_back(std::move(old.main), std::move(old.aux));
      } else {
        it = rows_.insert(it, std::move(r));
      }
      if (va > 0) {
        std::uint32_t sh = 1;
        for (int i = 0; i < mod_.k - va; ++i) sh *= mod_.p;
        SparseVec sm = {}, sa = {};
        axpy(sm, it->main, sh);
        if (aux_active) axpy(sa, it->aux, sh);
        work.emplace_back(std::move(sm), std::move(sa));
      }
      grew = true;
      vanished = false;
      cur.clear();
    }
    if (vanished && collect_kernel_ && !curaux.empty()) kernel_.push_back(std::move(curaux));
  }
  return grew;
}

std::optional<std::vector<std::pair<int, std::uint32_t>>> ModHowell::express_in_rows(const SparseVec& v) const {
  SparseVec cur;
  const std::uint32_t m = mod_.m;
  for (auto& [i, a] : v)
    if (a % m) cur.emplace_back(i, a % m);
  std::vector<std::pair<int, std::uint32_t>> used;
  while (!cur.empty()) {
    int lead = cur.front().first;
    std::uint32_t a = cur.front().second;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const Row& r, int c) { return r.lead < c; });
    if (it == rows_.end() || it->lead != lead) return std::nullopt;
    int va = valuation(a);
    if (va < it->val) return std::nullopt;
    std::uint32_t q = a;
    for (int i = 0; i < it->val; ++i) q /= mod_.p;
    used.emplace_back(static_cast<int>(it - rows_.begin()), q % m);
    axpy(cur, it->main, (m - q % m) % m);
  }
  return used;
}

bool ModHowell::in_span(const SparseVec& v) const { return express_in_rows(v).has_value(); }

std::optional<SparseVec> ModHowell::express(const SparseVec& v) const {
  auto used = express_in_rows(v);
  if (!used) return std::nullopt;
  SparseVec comb;
  for (auto& [ri, q] : *used) axpy(comb, rows_[ri].aux, q);
  return comb;
}

std::uint32_t ModHowell::row_order(int i) const {
  std::uint32_t o = 1;
  for (int j = 0; j < mod_.k - rows_[i].val; ++j) o *= mod_.p;
  return o;
}

unsigned long long ModHowell::span_order() const {
  unsigned long long o = 1;
  for (int i = 0; i < row_count(); ++i) {
    unsigned long long ro = row_order(i);
    if (o > (~0ULL >> 1) / ro) throw LimitExceeded("span_order overflow");
    o *= ro;
  }
  return o;
}

namespace {

// Smith-style diagonalization over the local ring Z/p^k: returns the
// diagonal p-valuations and the column transform V with its inverse.
// rowspan(A) * V = span of diag(p^v) in the new coordinates.
struct LocalSmith {
  std::vector<int> diag_val;  // per column, valuation in [0, k]
  std::vector<std::vector<std::uint32_t>> V, Vinv;
};

LocalSmith local_smith(std::vector<std::vector<std::uint32_t>> A, PrimePower pp) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  const std::uint64_t m = pp.m;
  auto val = [&](std::uint32_t a) {
    if (a == 0) return pp.k;
    int v = 0;
    while (a % pp.p == 0) {
      a /= pp.p;
      ++v;
    }
    return v;
  };
  LocalSmith out;
  out.diag_val.assign(cols, pp.k);
  out.V.assign(cols, std::vector<std::uint32_t>(cols, 0));
  out.Vinv.assign(cols, std::vector<std::uint32_t>(cols, 0));
  for (int i = 0; i < cols; ++i) out.V[i][i] = out.Vinv[i][i] = 1;

  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1, best = pp.k + 1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        int v = val(A[i][j]);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0 || best >= pp.k) break;  // remaining submatrix is zero
    std::swap(A[pi], A[t]);
    if (pj != t) {
      for (int i = 0; i < rows; ++i) std::swap(A[i][pj], A[i][t]);
      for (int i = 0; i < cols; ++i) std::swap(out.V[i][pj], out.V[i][t]);
      std::swap(out.Vinv[pj], out.Vinv[t]);
    }
    // normalize pivot to exactly p^v
    std::uint32_t unit = A[t][t];
    for (int i = 0; i < best; ++i) unit /= pp.p;
    std::uint32_t ui = mod_inverse_unit(unit, pp.m);
    for (int j = 0; j < cols; ++j) A[t][j] = static_cast<std::uint32_t>(std::uint64_t(A[t][j]) * ui % m);
    // clear the column below; every entry has valuation >= best
    for (int i = t + 1; i < rows; ++i) {
      std::uint32_t a = A[i][t];
      if (!a) continue;
      std::uint32_t q = a;
      for (int v = 0; v < best; ++v) q /= pp.p;
      std::uint64_t negq = (m - q % m) % m;
      for (int j = 0; j < cols; ++j)
        A[i][j] = static_cast<std::uint32_t>((A[i][j] + negq * A[t][j]) % m);
    }
    // clear the row to the right with column operations, mirrored on V
    for (int j = t + 1; j < cols; ++j) {
      std::uint32_t a = A[t][j];
      if (!a) continue;
      std::uint32_t q = a;
      for (int v = 0; v < best; ++v) q /= pp.p;
      std::uint64_t negq = (m - q % m) % m;
      for (int i = 0; i < rows; ++i)
        A[i][j] = static_cast<std::uint32_t>((A[i][j] + negq * A[i][t]) % m);
      for (int i = 0; i < cols; ++i)
        out.V[i][j] = static_cast<std::uint32_t>((out.V[i][j] + negq * out.V[i][t]) % m);
      // inverse column op on Vinv: row t += q * row j
      std::uint64_t qq = q % m;
      for (int i = 0; i < cols; ++i)
        out.Vinv[t][i] = static_cast<std::uint32_t>((out.Vinv[t][i] + qq * out.Vinv[j][i]) % m);
    }
    out.diag_val[t] = best;
    ++t;
  }
  return out;
}

}  // namespace

SubquotientStructure subquotient_structure(const std::vector<SparseVec>& num,
                                           const std::vector<SparseVec>& den,
                                           std::uint32_t m) {
  SubquotientStructure out;
  out.mod = PrimePower::of(m);
  ModHowell H(out.mod);
  for (auto& v : num) H.add(v);
  int r = H.row_count();
  for (int i = 0; i < r; ++i) out.howell_rows.push_back(H.row_main(i));

  // relation matrix over Z/p^k in the Howell-row coordinates: the den
  // expressions plus the true torsion relations. The rows only filter the
  // span (a row with pivot valuation v can carry unit entries further
  // right), so p^(k-v_i) * row_i need not vanish; its expression in the
  // later rows completes the relation.
  std::vector<std::vector<std::uint32_t>> rel;
  for (auto& d : den) {
    auto coeffs = H.express_in_rows(d);
    if (!coeffs) throw ValidationError("subquotient_structure: den vector outside span(num)");
    std::vector<std::uint32_t> row(r, 0);
    for (auto& [ri, q] : *coeffs) row[ri] = q;
    rel.push_back(std::move(row));
  }
  for (int i = 0; i < r; ++i) {
    std::uint32_t ord = static_cast<std::uint32_t>(H.row_order(i) % m);
    std::vector<std::uint32_t> row(r, 0);
    row[i] = ord;
    if (ord) {
      SparseVec scaled;
      sparse_axpy(scaled, H.row_main(i), ord, m);
      auto coeffs = H.express_in_rows(scaled);
      if (!coeffs) throw Error("subquotient_structure: torsion image escaped the span");
      for (auto& [ri, q] : *coeffs) row[ri] = (row[ri] + m - q) % m;
    }
    rel.push_back(std::move(row));
  }

  LocalSmith ls = local_smith(std::move(rel), out.mod);
  out.vmat = std::move(ls.V);
  out.vinv = std::move(ls.Vinv);
  out.diag_val = std::move(ls.diag_val);

  out.order = 1;
  for (int i = 0; i < r; ++i) {
    if (out.diag_val[i] == 0) continue;
    long long d = 1;
    for (int v = 0; v < out.diag_val[i]; ++v) d *= out.mod.p;
    out.divisors.push_back(d);
    out.order *= static_cast<unsigned long long>(d);
  }
  std::sort(out.divisors.begin(), out.divisors.end());
  return out;
}

std::vector<long long> SubquotientStructure::coords(const SparseVec& v) const {
  ModHowell H(mod);
  for (auto& row : howell_rows) H.add(row);
  auto coeffs = H.express_in_rows(v);
  if (!coeffs) throw ValidationError("subquotient coords: vector outside span(num)");
  int r = static_cast<int>(howell_rows.size());
  std::vector<std::uint32_t> x(r, 0);
  for (auto& [ri, q] : *coeffs) x[ri] = q;
  // ordered as `divisors`: ascending valuation, skipping val 0
  std::vector<std::pair<int, int>> order;  // (val, position)
  for (int i = 0; i < r; ++i)
    if (diag_val[i] > 0) order.emplace_back(diag_val[i], i);
  std::sort(order.begin(), order.end());
  std::vector<long long> out;
  for (auto& [dv, pos] : order) {
    std::uint64_t c = 0;
    for (int j = 0; j < r; ++j) c += std::uint64_t(x[j]) * vmat[j][pos] % mod.m;
    long long d = 1;
    for (int v = 0; v < dv; ++v) d *= mod.p;
    out.push_back(static_cast<long long>(c % d));
  }
  return out;
}

SparseVec SubquotientStructure::generator(int idx) const {
  int r = static_cast<int>(howell_rows.size());
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < r; ++i)
    if (diag_val[i] > 0) order.emplace_back(diag_val[i], i);
  std::sort(order.begin(), order.end());
  if (idx < 0 || idx >= static_cast<int>(order.size()))
    throw Error("subquotient generator index out of range");
  int pos = order[idx].second;
  SparseVec g;
  for (int j = 0; j < r; ++j) {
    std::uint32_t c = vinv[pos][j] % mod.m;
    sparse_axpy(g, howell_rows[j], c, mod.m);
  }
  return g;
}

std::optional<std::vector<std::uint32_t>> membership_solve(const SparseVec& target,
                                                           const std::vector<SparseVec>& span,
                                                           std::uint32_t m) {
  PrimePower pp = PrimePower::of(m);
  ModHowell H(pp, /*track_aux=*/true);
  for (int i = 0; i < static_cast<int>(span.size()); ++i) H.add(span[i], {{i, 1}});
  auto comb = H.express(target);
  if (!comb) return std::nullopt;
  std::vector<std::uint32_t> out(span.size(), 0);
  for (auto& [i, c] : *comb) out.at(i) = c;
  return out;
}

std::vector<SparseVec> right_kernel(const std::vector<SparseVec>& rows, int ncols, std::uint32_t m) {
  PrimePower pp = PrimePower::of(m);
  ModHowell rowred(pp);
  for (auto& r : rows) rowred.add(r);
  // columns of the reduced row basis, fed with unit aux seeds; vanished
  // combinations are exactly the right-kernel generators.
  int nr = rowred.row_count();
  std::vector<SparseVec> cols(ncols);
  for (int i = 0; i < nr; ++i)
    for (auto& [c, a] : rowred.row_main(i)) cols.at(c).emplace_back(i, a);
  ModHowell K(pp, /*track_aux=*/true, /*collect_kernel=*/true);
  for (int c = 0; c < ncols; ++c) K.add(std::move(cols[c]), {{c, 1}});
  return K.kernel();
}

}  // namespace ambix
