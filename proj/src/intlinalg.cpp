#include "cechtd/intlinalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cechtd {

void SparseVec::add_term(int i, const ZZ& v) {
  if (v == 0) return;
  e.emplace_back(i, v);
}

const ZZ* SparseVec::at(int i) const {
  auto it = std::lower_bound(e.begin(), e.end(), i,
                             [](const auto& p, int k) { return p.first < k; });
  if (it == e.end() || it->first != i) return nullptr;
  return &it->second;
}

SparseVec SparseVec::unit(int i) {
  SparseVec v;
  v.e.emplace_back(i, 1);
  return v;
}

SparseVec axpy(const SparseVec& x, const ZZ& c, const SparseVec& y) {
  SparseVec r;
  r.e.reserve(x.e.size() + y.e.size());
  auto a = x.e.begin(), b = y.e.begin();
  while (a != x.e.end() || b != y.e.end()) {
    if (b == y.e.end() || (a != x.e.end() && a->first < b->first)) {
      r.e.push_back(*a++);
    } else if (a == x.e.end() || b->first < a->first) {
      ZZ v = c * b->second;
      if (v != 0) r.e.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      ZZ v = a->second + c * b->second;
      if (v != 0) r.e.emplace_back(a->first, std::move(v));
      ++a, ++b;
    }
  }
  return r;
}

SparseVec scaled(const SparseVec& x, const ZZ& c) {
  SparseVec r;
  if (c == 0) return r;
  r.e.reserve(x.e.size());
  for (const auto& [i, v] : x.e) r.e.emplace_back(i, c * v);
  return r;
}

SparseVec vec_add(const SparseVec& x, const SparseVec& y) {
  return axpy(x, 1, y);
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols[i] = SparseVec::unit(i);
  return m;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec acc;
  for (const auto& [c, v] : x.e) acc = axpy(acc, v, cols[c]);
  return acc;
}

long SparseMatrix::nnz() const {
  long t = 0;
  for (const auto& c : cols) t += static_cast<long>(c.e.size());
  return t;
}

std::vector<ZZ> dense_from_sparse(const SparseVec& v, int n) {
  std::vector<ZZ> d(n, 0);
  for (const auto& [i, x] : v.e) d[i] = x;
  return d;
}

SparseVec sparse_from_dense(const std::vector<ZZ>& v) {
  SparseVec s;
  for (int i = 0; i < (int)v.size(); ++i)
    if (v[i] != 0) s.e.emplace_back(i, v[i]);
  return s;
}

namespace {

ZZ floordiv(const ZZ& a, const ZZ& b) {
  ZZ q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Cached per-column pivot candidate.
struct ColInfo {
  bool has = false;
  ZZ absmin;
  int row = -1;
  int nnz = 0;
};

ColInfo scan_col(const SparseVec& c) {
  ColInfo ci;
  ci.nnz = static_cast<int>(c.e.size());
  for (const auto& [r, v] : c.e) {
    ZZ a = abs(v);
    if (!ci.has || a < ci.absmin || (a == ci.absmin && r < ci.row)) {
      ci.has = true;
      ci.absmin = a;
      ci.row = r;
    }
  }
  return ci;
}

}  // namespace

Eliminated eliminate(SparseMatrix M) {
  Eliminated res;
  int n = M.ncols();
  res.V = SparseMatrix::identity(n);
  res.E = std::move(M);
  std::vector<bool> active(n, true);
  std::vector<ColInfo> info(n);
  for (int c = 0; c < n; ++c) info[c] = scan_col(res.E.cols[c]);

  for (;;) {
    int pc = -1;
    for (int c = 0; c < n; ++c) {
      if (!active[c] || !info[c].has) continue;
      if (pc < 0) {
        pc = c;
        continue;
      }
      const ColInfo &a = info[c], &b = info[pc];
      if (a.absmin < b.absmin ||
          (a.absmin == b.absmin &&
           (a.nnz < b.nnz || (a.nnz == b.nnz && a.row < b.row))))
        pc = c;
    }
    if (pc < 0) break;
    int pr = info[pc].row;

    for (int c = 0; c < n; ++c) {
      if (!active[c] || c == pc) continue;
      for (;;) {
        const ZZ* tv = res.E.cols[c].at(pr);
        if (!tv) break;
        const ZZ* pv = res.E.cols[pc].at(pr);
        ZZ q = floordiv(*tv, *pv);
        if (q != 0) {
          ZZ nq = -q;
          res.E.cols[c] = axpy(res.E.cols[c], nq, res.E.cols[pc]);
          res.V.cols[c] = axpy(res.V.cols[c], nq, res.V.cols[pc]);
        }
        if (!res.E.cols[c].at(pr)) {
          info[c] = scan_col(res.E.cols[c]);
          break;
        }
        // Remainder is a smaller pivot; continue the gcd loop there.
        std::swap(res.E.cols[c], res.E.cols[pc]);
        std::swap(res.V.cols[c], res.V.cols[pc]);
      }
    }
    info[pc] = scan_col(res.E.cols[pc]);
    res.pivots.emplace_back(pr, pc);
    active[pc] = false;
  }
  return res;
}

SparseMatrix hnf_canonical(const SparseMatrix& A) {
  std::vector<SparseVec> work;
  for (const auto& c : A.cols)
    if (!c.empty()) work.push_back(c);

  std::vector<SparseVec> out;
  std::vector<int> prow;
  // Deterministic start: sort columns so the reduction order is input-independent.
  std::sort(work.begin(), work.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.e < b.e; });
  for (int r = 0; r < A.rows && !work.empty(); ++r) {
    int carrier = -1;
    for (int c = 0; c < (int)work.size(); ++c) {
      if (work[c].empty() || work[c].e.front().first != r) continue;
      if (carrier < 0) {
        carrier = c;
        continue;
      }
      for (;;) {
        ZZ q = floordiv(work[c].e.front().second, work[carrier].e.front().second);
        if (q != 0) work[c] = axpy(work[c], -q, work[carrier]);
        if (work[c].empty() || work[c].e.front().first != r) break;
        std::swap(work[c], work[carrier]);
      }
    }
    if (carrier >= 0) {
      if (work[carrier].e.front().second < 0)
        work[carrier] = scaled(work[carrier], -1);
      out.push_back(std::move(work[carrier]));
      prow.push_back(r);
      work.erase(work.begin() + carrier);
    }
  }
  // Reduce earlier columns at later pivot rows into [0, pivot).
  for (int j = 1; j < (int)out.size(); ++j) {
    const ZZ& d = out[j].e.front().second;
    for (int i = 0; i < j; ++i) {
      const ZZ* v = out[i].at(prow[j]);
      if (!v) continue;
      ZZ q = floordiv(*v, d);
      if (q != 0) out[i] = axpy(out[i], -q, out[j]);
    }
  }
  SparseMatrix H(A.rows, 0);
  for (auto& c : out) H.append_col(std::move(c));
  return H;
}

SparseMatrix Eliminated::kernel() const {
  SparseMatrix K(V.rows, 0);
  for (int c = 0; c < E.ncols(); ++c)
    if (E.cols[c].empty()) K.append_col(V.cols[c]);
  return hnf_canonical(K);
}

SparseMatrix Eliminated::image() const {
  SparseMatrix I(E.rows, 0);
  for (const auto& [r, c] : pivots) {
    (void)r;
    I.append_col(E.cols[c]);
  }
  return hnf_canonical(I);
}

std::optional<SparseVec> Eliminated::solve(const SparseVec& b) const {
  std::map<int, ZZ> resid;
  for (const auto& [i, v] : b.e) resid[i] = v;
  std::vector<std::pair<int, ZZ>> coeff;  // (col, y)
  for (const auto& [r, c] : pivots) {
    auto it = resid.find(r);
    if (it == resid.end() || it->second == 0) continue;
    const ZZ* pv = E.cols[c].at(r);
    ZZ q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), it->second.get_mpz_t(),
                pv->get_mpz_t());
    if (rem != 0) return std::nullopt;
    for (const auto& [i, v] : E.cols[c].e) {
      resid[i] -= q * v;
      if (resid[i] == 0) resid.erase(i);
    }
    coeff.emplace_back(c, q);
  }
  for (const auto& [i, v] : resid)
    if (v != 0) return std::nullopt;
  SparseVec x;
  for (const auto& [c, y] : coeff) x = axpy(x, y, V.cols[c]);
  // Canonical representative modulo the kernel lattice.
  SparseMatrix K = kernel();
  for (const auto& col : K.cols) {
    int p = col.e.front().first;
    const ZZ& d = col.e.front().second;
    const ZZ* v = x.at(p);
    if (!v) continue;
    ZZ q = floordiv(*v, d);
    if (q != 0) x = axpy(x, -q, col);
  }
  return x;
}

bool Eliminated::solvable_rational(const SparseVec& b) const {
  std::map<int, QQ> resid;
  for (const auto& [i, v] : b.e) resid[i] = QQ(v);
  for (const auto& [r, c] : pivots) {
    auto it = resid.find(r);
    if (it == resid.end() || it->second == 0) continue;
    QQ q = it->second / QQ(*E.cols[c].at(r));
    for (const auto& [i, v] : E.cols[c].e) {
      resid[i] -= q * QQ(v);
      if (resid[i] == 0) resid.erase(i);
    }
  }
  for (const auto& [i, v] : resid)
    if (v != 0) return false;
  return true;
}

std::optional<std::vector<QQ>> Eliminated::solve_rational(
    const std::vector<QQ>& b) const {
  std::map<int, QQ> resid;
  for (int i = 0; i < (int)b.size(); ++i)
    if (b[i] != 0) resid[i] = b[i];
  std::vector<std::pair<int, QQ>> coeff;
  for (const auto& [r, c] : pivots) {
    auto it = resid.find(r);
    if (it == resid.end() || it->second == 0) continue;
    QQ q = it->second / QQ(*E.cols[c].at(r));
    for (const auto& [i, v] : E.cols[c].e) {
      resid[i] -= q * QQ(v);
      if (resid[i] == 0) resid.erase(i);
    }
    coeff.emplace_back(c, q);
  }
  for (const auto& [i, v] : resid)
    if (v != 0) return std::nullopt;
  std::vector<QQ> x(V.rows, QQ(0));
  for (const auto& [c, y] : coeff)
    for (const auto& [i, v] : V.cols[c].e) x[i] += y * QQ(v);
  return x;
}

SparseMatrix kernel_lattice(const SparseMatrix& M) {
  return eliminate(M).kernel();
}

std::optional<std::vector<ZZ>> solve_diophantine(const SparseMatrix& M,
                                                 const std::vector<ZZ>& b) {
  auto r = eliminate(M).solve(sparse_from_dense(b));
  if (!r) return std::nullopt;
  return dense_from_sparse(*r, M.ncols());
}

// ---------------------------------------------------------------------------
// Smith normal form machinery on a dictionary-of-keys matrix with op logs.

namespace {

struct Dok {
  int rows = 0, cols = 0;
  std::vector<std::map<int, ZZ>> R;  // row -> (col -> val)
  std::vector<std::set<int>> C;      // col -> rows with nonzero

  explicit Dok(const SparseMatrix& m) : rows(m.rows), cols(m.ncols()) {
    R.resize(rows);
    C.resize(cols);
    for (int c = 0; c < cols; ++c)
      for (const auto& [r, v] : m.cols[c].e) {
        R[r][c] = v;
        C[c].insert(r);
      }
  }

  ZZ get(int r, int c) const {
    auto it = R[r].find(c);
    return it == R[r].end() ? ZZ(0) : it->second;
  }
  void set(int r, int c, const ZZ& v) {
    if (v == 0) {
      R[r].erase(c);
      C[c].erase(r);
    } else {
      R[r][c] = v;
      C[c].insert(r);
    }
  }
  void row_add(int i, int j, const ZZ& q) {  // row_i += q * row_j
    for (const auto& [c, v] : R[j]) set(i, c, get(i, c) + q * v);
  }
  void col_add(int i, int j, const ZZ& q) {  // col_i += q * col_j
    std::vector<int> rows_j(C[j].begin(), C[j].end());
    for (int r : rows_j) set(r, i, get(r, i) + q * R[r][j]);
  }
  void row_swap(int i, int j) {
    if (i == j) return;
    std::swap(R[i], R[j]);
    for (auto& cs : C) {
      bool hi = cs.count(i), hj = cs.count(j);
      if (hi == hj) continue;
      if (hi) {
        cs.erase(i);
        cs.insert(j);
      } else {
        cs.erase(j);
        cs.insert(i);
      }
    }
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    std::swap(C[i], C[j]);
    for (auto& rm : R) {
      auto ii = rm.find(i), jj = rm.find(j);
      if (ii == rm.end() && jj == rm.end()) continue;
      ZZ vi = ii == rm.end() ? ZZ(0) : ii->second;
      ZZ vj = jj == rm.end() ? ZZ(0) : jj->second;
      if (vj != 0) rm[i] = vj; else rm.erase(i);
      if (vi != 0) rm[j] = vi; else rm.erase(j);
    }
  }
  void row_negate(int i) {
    for (auto& [c, v] : R[i]) v = -v;
  }
};

struct Op {
  int kind;  // 0 add, 1 swap, 2 negate
  int i, j;
  ZZ q;
};

struct SnfLogs {
  std::vector<Op> rowops, colops;
};

// In-place SNF; returns the full diagonal (nonzero entries, chained).
std::vector<ZZ> snf_run(Dok& A, SnfLogs& log) {
  int n = std::min(A.rows, A.cols);

  auto clear_corner = [&](int t) {
    // Pivot already at (t, t), nonzero.
    for (;;) {
      bool swapped = false;
      // Clear column t.
      for (;;) {
        int victim = -1;
        for (int r : A.C[t])
          if (r != t) {
            victim = r;
            break;
          }
        if (victim < 0) break;
        ZZ piv = A.get(t, t);
        ZZ q = floordiv(A.get(victim, t), piv);
        if (q != 0) {
          A.row_add(victim, t, -q);
          log.rowops.push_back({0, victim, t, q});
        }
        if (A.get(victim, t) != 0) {
          A.row_swap(t, victim);
          log.rowops.push_back({1, t, victim, 0});
          swapped = true;
        }
      }
      // Clear row t.
      for (;;) {
        int victim = -1;
        for (const auto& [c, v] : A.R[t])
          if (c != t) {
            victim = c;
            break;
          }
        if (victim < 0) break;
        ZZ piv = A.get(t, t);
        ZZ q = floordiv(A.get(t, victim), piv);
        if (q != 0) {
          A.col_add(victim, t, -q);
          log.colops.push_back({0, victim, t, q});
        }
        if (A.get(t, victim) != 0) {
          A.col_swap(t, victim);
          log.colops.push_back({1, t, victim, 0});
          swapped = true;
        }
      }
      if (!swapped && A.C[t].size() == 1 && A.R[t].size() == 1) break;
    }
  };

  int rank = 0;
  for (int t = 0; t < n; ++t) {
    // Find pivot in the trailing submatrix: min |val|, lex tie-break.
    int br = -1, bc = -1;
    ZZ babs;
    for (int r = t; r < A.rows; ++r)
      for (const auto& [c, v] : A.R[r]) {
        if (c < t) continue;
        ZZ a = abs(v);
        if (br < 0 || a < babs || (a == babs && (r < br || (r == br && c < bc)))) {
          br = r;
          bc = c;
          babs = a;
        }
      }
    if (br < 0) break;
    if (br != t) {
      A.row_swap(t, br);
      log.rowops.push_back({1, t, br, 0});
    }
    if (bc != t) {
      A.col_swap(t, bc);
      log.colops.push_back({1, t, bc, 0});
    }
    clear_corner(t);
    ++rank;
  }

  // Positive diagonal.
  for (int t = 0; t < rank; ++t)
    if (A.get(t, t) < 0) {
      A.row_negate(t);
      log.rowops.push_back({2, t, t, 0});
    }

  // Divisibility chain.
  for (;;) {
    bool fixed = true;
    for (int i = 0; i + 1 < rank; ++i) {
      ZZ di = A.get(i, i), dj = A.get(i + 1, i + 1);
      if (dj % di == 0) continue;
      fixed = false;
      A.col_add(i, i + 1, 1);
      log.colops.push_back({0, i, i + 1, -1});
      clear_corner(i);
      clear_corner(i + 1);
      if (A.get(i, i) < 0) {
        A.row_negate(i);
        log.rowops.push_back({2, i, i, 0});
      }
      if (A.get(i + 1, i + 1) < 0) {
        A.row_negate(i + 1);
        log.rowops.push_back({2, i + 1, i + 1, 0});
      }
    }
    if (fixed) break;
  }

  std::vector<ZZ> diag;
  for (int t = 0; t < rank; ++t) diag.push_back(A.get(t, t));
  return diag;
}

void apply_rowops_forward(const std::vector<Op>& ops, std::vector<ZZ>& x) {
  for (const auto& op : ops) {
    if (op.kind == 0) {
      // logged q is the subtracted quotient: row_i -= q * row_j
      x[op.i] -= op.q * x[op.j];
    } else if (op.kind == 1) {
      std::swap(x[op.i], x[op.j]);
    } else {
      x[op.i] = -x[op.i];
    }
  }
}

void apply_rowops_forward_q(const std::vector<Op>& ops, std::vector<QQ>& x) {
  for (const auto& op : ops) {
    if (op.kind == 0)
      x[op.i] -= QQ(op.q) * x[op.j];
    else if (op.kind == 1)
      std::swap(x[op.i], x[op.j]);
    else
      x[op.i] = -x[op.i];
  }
}

void apply_rowops_inverse(const std::vector<Op>& ops, std::vector<ZZ>& x) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->kind == 0)
      x[it->i] += it->q * x[it->j];
    else if (it->kind == 1)
      std::swap(x[it->i], x[it->j]);
    else
      x[it->i] = -x[it->i];
  }
}

}  // namespace

SmithTriple smith_normal_form(const SparseMatrix& M) {
  Dok A(M);
  SnfLogs log;
  std::vector<ZZ> diag = snf_run(A, log);

  SmithTriple t;
  t.diag = diag;
  t.D = SparseMatrix(M.rows, M.ncols());
  for (int i = 0; i < (int)diag.size(); ++i) {
    SparseVec v;
    v.add_term(i, diag[i]);
    t.D.cols[i] = std::move(v);
  }
  // U: apply the row ops to the identity, column by column.
  t.U = SparseMatrix(M.rows, M.rows);
  for (int c = 0; c < M.rows; ++c) {
    std::vector<ZZ> x(M.rows, 0);
    x[c] = 1;
    apply_rowops_forward(log.rowops, x);
    t.U.cols[c] = sparse_from_dense(x);
  }
  // V: apply column ops to the identity. A column op col_i -= q col_j acts
  // on V the same way; tracking columns of V directly.
  t.V = SparseMatrix(M.ncols(), M.ncols());
  std::vector<std::vector<ZZ>> vcols(M.ncols(), std::vector<ZZ>(M.ncols(), 0));
  for (int i = 0; i < M.ncols(); ++i) vcols[i][i] = 1;
  for (const auto& op : log.colops) {
    if (op.kind == 0) {
      for (int r = 0; r < M.ncols(); ++r) vcols[op.i][r] -= op.q * vcols[op.j][r];
    } else if (op.kind == 1) {
      std::swap(vcols[op.i], vcols[op.j]);
    }
  }
  for (int c = 0; c < M.ncols(); ++c) t.V.cols[c] = sparse_from_dense(vcols[c]);
  return t;
}

// ---------------------------------------------------------------------------
// Subquotient

Subquotient Subquotient::compute(const SparseMatrix& Z, const SparseMatrix& B,
                                 bool rational) {
  Subquotient s;
  s.rational_ = rational;
  s.zdim_ = Z.ncols();
  s.zelim_ = eliminate(Z);
  if (s.zelim_.rank() != Z.ncols())
    throw std::invalid_argument("subquotient: Z columns are not a basis");

  // Express B in Z-coordinates.
  SparseMatrix Y(s.zdim_, 0);
  for (const auto& b : B.cols) {
    if (b.empty()) continue;
    if (!rational) {
      auto w = s.zelim_.solve(b);
      if (!w)
        throw BrokenComplexError(
            "subquotient: relation outside the cycle lattice (d^2 != 0?)", b);
      Y.append_col(*w);
    } else {
      std::vector<QQ> bq(Z.rows, QQ(0));
      for (const auto& [i, v] : b.e) bq[i] = QQ(v);
      auto w = s.zelim_.solve_rational(bq);
      if (!w)
        throw BrokenComplexError("subquotient: relation outside the cycle span",
                                 b);
      ZZ lcm = 1;
      for (const auto& q : *w)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
      SparseVec wc;
      for (int i = 0; i < (int)w->size(); ++i) {
        QQ v = (*w)[i] * QQ(lcm);
        if (v != 0) wc.add_term(i, v.get_num());
      }
      Y.append_col(std::move(wc));
    }
  }

  Dok A(Y);
  SnfLogs log;
  s.diag_ = snf_run(A, log);
  s.rank_ = static_cast<int>(s.diag_.size());
  for (auto& op : log.rowops) s.oplog_.push_back({op.kind, op.i, op.j, op.q});

  s.pres_.free_rank = s.zdim_ - s.rank_;
  // Free generators first.
  std::vector<int> gen_idx;
  for (int i = s.rank_; i < s.zdim_; ++i) gen_idx.push_back(i);
  if (!rational)
    for (int i = 0; i < s.rank_; ++i)
      if (s.diag_[i] >= 2) {
        s.pres_.invariant_factors.push_back(s.diag_[i]);
        gen_idx.push_back(i);
      }
  for (int idx : gen_idx) {
    std::vector<ZZ> w = s.apply_Uinv_unit(idx);
    SparseVec g;
    for (int i = 0; i < s.zdim_; ++i)
      if (w[i] != 0) g = axpy(g, w[i], Z.cols[i]);
    s.pres_.generators.push_back(std::move(g));
  }
  return s;
}

std::vector<ZZ> Subquotient::apply_U(const std::vector<ZZ>& w) const {
  std::vector<ZZ> x = w;
  for (const auto& op : oplog_) {
    if (op.kind == 0)
      x[op.i] -= op.q * x[op.j];
    else if (op.kind == 1)
      std::swap(x[op.i], x[op.j]);
    else
      x[op.i] = -x[op.i];
  }
  return x;
}

std::vector<QQ> Subquotient::apply_U(const std::vector<QQ>& w) const {
  std::vector<QQ> x = w;
  for (const auto& op : oplog_) {
    if (op.kind == 0)
      x[op.i] -= QQ(op.q) * x[op.j];
    else if (op.kind == 1)
      std::swap(x[op.i], x[op.j]);
    else
      x[op.i] = -x[op.i];
  }
  return x;
}

std::vector<ZZ> Subquotient::apply_Uinv_unit(int idx) const {
  std::vector<ZZ> x(zdim_, 0);
  x[idx] = 1;
  for (auto it = oplog_.rbegin(); it != oplog_.rend(); ++it) {
    if (it->kind == 0)
      x[it->i] += it->q * x[it->j];
    else if (it->kind == 1)
      std::swap(x[it->i], x[it->j]);
    else
      x[it->i] = -x[it->i];
  }
  return x;
}

std::optional<std::vector<ZZ>> Subquotient::class_coords(
    const SparseVec& x) const {
  auto w = zelim_.solve(x);
  if (!w) return std::nullopt;
  std::vector<ZZ> t = apply_U(dense_from_sparse(*w, zdim_));
  std::vector<ZZ> coords;
  for (int i = rank_; i < zdim_; ++i) coords.push_back(t[i]);
  if (!rational_)
    for (int i = 0; i < rank_; ++i)
      if (diag_[i] >= 2) {
        ZZ r;
        mpz_fdiv_r(r.get_mpz_t(), t[i].get_mpz_t(), diag_[i].get_mpz_t());
        coords.push_back(r);
      }
  return coords;
}

std::optional<std::vector<QQ>> Subquotient::class_coords_rational(
    const std::vector<QQ>& x) const {
  auto w = zelim_.solve_rational(x);
  if (!w) return std::nullopt;
  std::vector<QQ> t = apply_U(*w);
  std::vector<QQ> coords;
  for (int i = rank_; i < zdim_; ++i) coords.push_back(t[i]);
  return coords;
}

bool Subquotient::is_zero_class(const SparseVec& x) const {
  auto c = class_coords(x);
  if (!c) return false;
  for (const auto& v : *c)
    if (v != 0) return false;
  return true;
}

SparseVec Subquotient::rep_from_coords(const std::vector<ZZ>& coords) const {
  SparseVec x;
  for (int i = 0; i < (int)coords.size() && i < (int)pres_.generators.size(); ++i)
    if (coords[i] != 0) x = axpy(x, coords[i], pres_.generators[i]);
  return x;
}

}  // namespace cechtd
