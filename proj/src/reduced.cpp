#include "cechtd/reduced.hpp"

#include <algorithm>

namespace cechtd {

namespace {

struct Triplets {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, ZZ> m;

  void add(int r, int c, const ZZ& v) {
    if (v == 0) return;
    auto& slot = m[{c, r}];  // keyed by (col, row) for column-major assembly
    slot += v;
  }
  SparseMatrix build() const {
    SparseMatrix M(rows, cols);
    for (const auto& [cr, v] : m) {
      if (v == 0) continue;
      M.cols[cr.first].add_term(cr.second, v);
    }
    return M;
  }
};

ZZ int_value(const mpq_class& q) {
  if (q.get_den() != 1)
    throw std::invalid_argument("expected integer cochain value");
  return q.get_num();
}

// d block: scalar-per-component Cech differential, degree p -> p+1.
void add_cech_d_block(Triplets& T, const OrderedBasis& out, const OrderedBasis& in,
                      int comps, int row_off, int col_off, int sign) {
  int len = in.degree + 1;
  for (int si = 0; si < out.size(); ++si) {
    const Tuple& s = out.tuples[si];
    Tuple t(len);
    for (int i = 0; i <= len; ++i) {
      for (int a = 0, b = 0; a <= len; ++a)
        if (a != i) t[b++] = s[a];
      int ti = in.index_of(t);
      int sg = (i % 2 == 0 ? 1 : -1) * sign;
      for (int c = 0; c < comps; ++c)
        T.add(row_off + si * comps + c, col_off + ti * comps + c, sg);
    }
  }
}

// cup1 with F on the vector slot: vector deg p -> scalar deg p+2.
void add_cup1v_block(Triplets& T, const OrderedBasis& out, const OrderedBasis& in,
                     const Cochain& F, int n, int row_off, int col_off, int sign) {
  int p = in.degree;
  for (int si = 0; si < out.size(); ++si) {
    const Tuple& s = out.tuples[si];
    const auto* fv = F.row({s[p], s[p + 1], s[p + 2]});
    if (!fv) continue;
    Tuple t(s.begin(), s.begin() + p + 1);
    int ti = in.index_of(t);
    for (int l = 0; l < n; ++l)
      T.add(row_off + si, col_off + ti * n + l, ZZ(sign) * int_value((*fv)[l]));
  }
}

// cup1 with F on the matrix slot: upper deg p -> vector deg p+2.
void add_cup1m_block(Triplets& T, const OrderedBasis& out, const OrderedBasis& in,
                     const Cochain& F, int n, int row_off, int col_off, int sign) {
  int p = in.degree;
  int C = n * (n - 1) / 2;
  for (int si = 0; si < out.size(); ++si) {
    const Tuple& s = out.tuples[si];
    const auto* fv = F.row({s[p], s[p + 1], s[p + 2]});
    if (!fv) continue;
    Tuple t(s.begin(), s.begin() + p + 1);
    int ti = in.index_of(t);
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < l; ++i)
        T.add(row_off + si * n + l, col_off + ti * C + upper_index(i, l, n),
              ZZ(sign) * int_value((*fv)[i]));
      for (int j = l + 1; j < n; ++j)
        T.add(row_off + si * n + l, col_off + ti * C + upper_index(l, j, n),
              ZZ(-sign) * int_value((*fv)[j]));
    }
  }
}

// cup2 with C(F): upper deg p -> scalar deg p+3.
void add_cup2_block(Triplets& T, const OrderedBasis& out, const OrderedBasis& in,
                    const Cochain& CF, int n, int row_off, int col_off, int sign) {
  int p = in.degree;
  int C = n * (n - 1) / 2;
  for (int si = 0; si < out.size(); ++si) {
    const Tuple& s = out.tuples[si];
    const auto* bv = CF.row({s[p], s[p + 1], s[p + 2], s[p + 3]});
    if (!bv) continue;
    Tuple t(s.begin(), s.begin() + p + 1);
    int ti = in.index_of(t);
    for (int c = 0; c < C; ++c)
      T.add(row_off + si, col_off + ti * C + c, ZZ(sign) * int_value((*bv)[c]));
  }
}

int pow_sign(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

FlatBasis reduced_flat_basis(const SimplicialComplex& K, int k, int n) {
  FlatBasis fb;
  fb.s0 = Shape::scalar();
  fb.s1 = Shape::vector(n);
  fb.s2 = Shape::upper(n);
  fb.b0 = ordered_basis(K, k);
  fb.b1 = ordered_basis(K, k - 1);
  fb.b2 = ordered_basis(K, k - 2);
  fb.off1 = fb.b0.size();
  fb.off2 = fb.off1 + fb.b1.size() * fb.s1.components();
  fb.total = fb.off2 + fb.b2.size() * fb.s2.components();
  return fb;
}

FlatBasis bar_flat_basis(const SimplicialComplex& K, int k, int n) {
  FlatBasis fb;
  fb.s0 = Shape::scalar();
  fb.s1 = Shape::vector(n);
  fb.s2 = Shape::upper(n);
  fb.b1 = ordered_basis(K, k);
  fb.b2 = ordered_basis(K, k - 1);
  fb.off1 = 0;
  fb.off2 = fb.b1.size() * fb.s1.components();
  fb.total = fb.off2 + fb.b2.size() * fb.s2.components();
  return fb;
}

FlatBasis cech_flat_basis(const SimplicialComplex& K, int k, Shape shape) {
  FlatBasis fb;
  fb.s0 = shape;
  fb.b0 = ordered_basis(K, k);
  fb.off1 = fb.b0.size() * shape.components();
  fb.off2 = fb.off1;
  fb.total = fb.off1;
  return fb;
}

namespace {

void flatten_slot(const Cochain& c, const OrderedBasis& b, int comps, int off,
                  SparseVec& out) {
  for (const auto& [t, vals] : c.entries) {
    int ti = b.index_of(t);
    if (ti < 0) throw std::logic_error("flatten: tuple outside basis");
    for (int i = 0; i < comps; ++i)
      if (vals[i] != 0) out.e.emplace_back(off + ti * comps + i, int_value(vals[i]));
  }
}

void flatten_slot_q(const Cochain& c, const OrderedBasis& b, int comps, int off,
                    std::vector<QQ>& out) {
  for (const auto& [t, vals] : c.entries) {
    int ti = b.index_of(t);
    if (ti < 0) throw std::logic_error("flatten: tuple outside basis");
    for (int i = 0; i < comps; ++i) out[off + ti * comps + i] = vals[i];
  }
}

Cochain unflatten_slot(const SparseVec& v, const OrderedBasis& b, Shape shape,
                       int off, int end, const SimplicialComplex& K, int degree,
                       Ring ring) {
  Cochain c = make_cochain(K, degree, shape, ring);
  int comps = shape.components();
  for (const auto& [i, val] : v.e) {
    if (i < off || i >= end) continue;
    int rel = i - off;
    c.row_mut(b.tuples[rel / comps])[rel % comps] = mpq_class(val);
  }
  c.prune();
  return c;
}

void sort_vec(SparseVec& v) {
  std::sort(v.e.begin(), v.e.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

SparseVec flatten_reduced(const ReducedCochain& x, const FlatBasis& fb) {
  SparseVec v;
  flatten_slot(x.c0, fb.b0, 1, 0, v);
  if (x.k >= 1) flatten_slot(x.c1, fb.b1, fb.s1.components(), fb.off1, v);
  if (x.k >= 2) flatten_slot(x.c2, fb.b2, fb.s2.components(), fb.off2, v);
  sort_vec(v);
  return v;
}

ReducedCochain unflatten_reduced(const SparseVec& v, const FlatBasis& fb,
                                 const SimplicialComplex& K, int n, Ring ring) {
  ReducedCochain x = zero_reduced<mpq_class>(K, fb.b0.degree, n, ring);
  x.c0 = unflatten_slot(v, fb.b0, Shape::scalar(), 0, fb.off1, K, fb.b0.degree, ring);
  if (x.k >= 1)
    x.c1 = unflatten_slot(v, fb.b1, Shape::vector(n), fb.off1, fb.off2, K,
                          fb.b1.degree, ring);
  if (x.k >= 2)
    x.c2 = unflatten_slot(v, fb.b2, Shape::upper(n), fb.off2, fb.total, K,
                          fb.b2.degree, ring);
  return x;
}

SparseVec flatten_bar(const BarCochain& x, const FlatBasis& fb) {
  SparseVec v;
  flatten_slot(x.c1, fb.b1, fb.s1.components(), fb.off1, v);
  if (x.k >= 1) flatten_slot(x.c2, fb.b2, fb.s2.components(), fb.off2, v);
  sort_vec(v);
  return v;
}

BarCochain unflatten_bar(const SparseVec& v, const FlatBasis& fb,
                         const SimplicialComplex& K, int n, Ring ring) {
  BarCochain x = zero_bar<mpq_class>(K, fb.b1.degree, n, ring);
  x.c1 = unflatten_slot(v, fb.b1, Shape::vector(n), fb.off1, fb.off2, K,
                        fb.b1.degree, ring);
  if (x.k >= 1)
    x.c2 = unflatten_slot(v, fb.b2, Shape::upper(n), fb.off2, fb.total, K,
                          fb.b2.degree, ring);
  return x;
}

SparseVec flatten_cochain(const Cochain& x, const FlatBasis& fb) {
  SparseVec v;
  flatten_slot(x, fb.b0, fb.s0.components(), 0, v);
  sort_vec(v);
  return v;
}

Cochain unflatten_cochain(const SparseVec& v, const FlatBasis& fb,
                          const SimplicialComplex& K, Ring ring) {
  return unflatten_slot(v, fb.b0, fb.s0, 0, fb.total, K, fb.b0.degree, ring);
}

std::vector<QQ> flatten_reduced_q(const ReducedCochain& x, const FlatBasis& fb) {
  std::vector<QQ> v(fb.total, QQ(0));
  flatten_slot_q(x.c0, fb.b0, 1, 0, v);
  if (x.k >= 1) flatten_slot_q(x.c1, fb.b1, fb.s1.components(), fb.off1, v);
  if (x.k >= 2) flatten_slot_q(x.c2, fb.b2, fb.s2.components(), fb.off2, v);
  return v;
}

std::vector<QQ> flatten_bar_q(const BarCochain& x, const FlatBasis& fb) {
  std::vector<QQ> v(fb.total, QQ(0));
  flatten_slot_q(x.c1, fb.b1, fb.s1.components(), fb.off1, v);
  if (x.k >= 1) flatten_slot_q(x.c2, fb.b2, fb.s2.components(), fb.off2, v);
  return v;
}

std::vector<QQ> flatten_cochain_q(const Cochain& x, const FlatBasis& fb) {
  std::vector<QQ> v(fb.total, QQ(0));
  flatten_slot_q(x, fb.b0, fb.s0.components(), 0, v);
  return v;
}

// ---------------------------------------------------------------------------
// Tower

Tower::Tower(const SimplicialComplex& K, std::shared_ptr<const EulerCocycle> F,
             Model model, Shape cech_shape, Ring ring)
    : K_(&K), F_(std::move(F)), model_(model), shape_(cech_shape), ring_(ring) {}

Tower Tower::cech(const SimplicialComplex& K, Shape shape, Ring ring) {
  return Tower(K, nullptr, Model::Cech, shape, ring);
}
Tower Tower::reduced(const SimplicialComplex& K,
                     std::shared_ptr<const EulerCocycle> F, Ring ring) {
  return Tower(K, std::move(F), Model::Reduced, Shape::scalar(), ring);
}
Tower Tower::bar(const SimplicialComplex& K,
                 std::shared_ptr<const EulerCocycle> F, Ring ring) {
  return Tower(K, std::move(F), Model::Bar, Shape::scalar(), ring);
}

int Tower::n() const { return F_ ? F_->n() : 0; }

const FlatBasis& Tower::basis(int k) {
  auto it = bases_.find(k);
  if (it != bases_.end()) return it->second;
  FlatBasis fb;
  switch (model_) {
    case Model::Cech: fb = cech_flat_basis(*K_, k, shape_); break;
    case Model::Reduced: fb = reduced_flat_basis(*K_, k, n()); break;
    case Model::Bar: fb = bar_flat_basis(*K_, k, n()); break;
  }
  return bases_.emplace(k, std::move(fb)).first->second;
}

const SparseMatrix& Tower::op_matrix(int k) {
  auto it = mats_.find(k);
  if (it != mats_.end()) return it->second;
  const FlatBasis& in = basis(k);
  const FlatBasis& out = basis(k + 1);
  Triplets T;
  T.rows = out.total;
  T.cols = in.total;
  int nn = n();
  if (model_ == Model::Cech) {
    if (k >= 0)
      add_cech_d_block(T, out.b0, in.b0, shape_.components(), 0, 0, 1);
  } else if (model_ == Model::Reduced) {
    const Cochain& F = F_->cocycle();
    const Cochain& CF = F_->commutator();
    add_cech_d_block(T, out.b0, in.b0, 1, 0, 0, 1);
    if (k >= 1)
      add_cup1v_block(T, out.b0, in.b1, F, nn, 0, in.off1, pow_sign(k + 1));
    if (k >= 2)
      add_cup2_block(T, out.b0, in.b2, CF, nn, 0, in.off2, pow_sign(k + 1));
    if (k >= 1)
      add_cech_d_block(T, out.b1, in.b1, nn, out.off1, in.off1, 1);
    if (k >= 2)
      add_cup1m_block(T, out.b1, in.b2, F, nn, out.off1, in.off2, pow_sign(k));
    if (k >= 2)
      add_cech_d_block(T, out.b2, in.b2, nn * (nn - 1) / 2, out.off2, in.off2, 1);
  } else {
    const Cochain& F = F_->cocycle();
    add_cech_d_block(T, out.b1, in.b1, nn, out.off1, in.off1, 1);
    if (k >= 1)
      add_cup1m_block(T, out.b1, in.b2, F, nn, out.off1, in.off2, pow_sign(k + 1));
    if (k >= 1)
      add_cech_d_block(T, out.b2, in.b2, nn * (nn - 1) / 2, out.off2, in.off2, 1);
  }
  return mats_.emplace(k, T.build()).first->second;
}

const Eliminated& Tower::elim(int k) {
  auto it = elims_.find(k);
  if (it != elims_.end()) return it->second;
  return elims_.emplace(k, eliminate(op_matrix(k))).first->second;
}

const Tower::Group& Tower::group(int k) {
  auto it = groups_.find(k);
  if (it != groups_.end()) return it->second;
  Group g;
  g.k = k;
  SparseMatrix Z = elim(k).kernel();
  SparseMatrix B(basis(k).total, 0);
  if (k >= 1) B = elim(k - 1).image();
  g.boundaries = B;
  g.sq = std::make_shared<Subquotient>(
      Subquotient::compute(Z, B, ring_ == Ring::Q));
  g.pres = g.sq->presentation();
  return groups_.emplace(k, std::move(g)).first->second;
}

std::optional<std::vector<mpq_class>> Tower::class_coords(
    int k, const SparseVec& x_int, const std::vector<QQ>& x_rat) {
  const Group& g = group(k);
  std::vector<mpq_class> out;
  if (ring_ == Ring::Q) {
    auto c = g.sq->class_coords_rational(x_rat);
    if (!c) return std::nullopt;
    for (auto& q : *c) out.push_back(q);
  } else {
    auto c = g.sq->class_coords(x_int);
    if (!c) return std::nullopt;
    for (auto& z : *c) out.push_back(mpq_class(z));
  }
  return out;
}

bool Tower::is_coboundary(int k, const SparseVec& x_int,
                          const std::vector<QQ>& x_rat) {
  if (k < 1) {
    if (ring_ == Ring::Q) {
      for (const auto& q : x_rat)
        if (q != 0) return false;
      return true;
    }
    return x_int.empty();
  }
  if (ring_ == Ring::Q) return elim(k - 1).solve_rational(x_rat).has_value();
  return elim(k - 1).solve(x_int).has_value();
}

// ---------------------------------------------------------------------------
// Induced maps and exactness

InducedMap induced_map(Tower& src, int ks, Tower& dst, int kd,
                       const std::function<SparseVec(const SparseVec&)>& f_int,
                       const std::function<std::vector<QQ>(const std::vector<QQ>&)>& f_rat) {
  InducedMap m;
  const auto& sg = src.group(ks);
  bool rational = src.ring() == Ring::Q;

  auto to_rat = [&](const SparseVec& v, int dim) {
    std::vector<QQ> q(dim, QQ(0));
    for (const auto& [i, z] : v.e) q[i] = QQ(z);
    return q;
  };

  // Generators map to cocycles with coordinates in dst.
  for (const auto& gen : sg.pres.generators) {
    std::optional<std::vector<mpq_class>> coords;
    if (rational) {
      auto img = f_rat(to_rat(gen, src.basis(ks).total));
      coords = dst.class_coords(kd, SparseVec{}, img);
    } else {
      auto img = f_int(gen);
      coords = dst.class_coords(kd, img, {});
    }
    if (!coords) {
      m.welldefined = false;
      m.failure = "generator image is not a cocycle of the target complex";
      return m;
    }
    m.cols.push_back(*coords);
  }

  // Coboundaries map to coboundaries.
  for (const auto& bcol : sg.boundaries.cols) {
    bool ok;
    if (rational) {
      auto img = f_rat(to_rat(bcol, src.basis(ks).total));
      ok = dst.is_coboundary(kd, SparseVec{}, img);
    } else {
      ok = dst.is_coboundary(kd, f_int(bcol), {});
    }
    if (!ok) {
      m.welldefined = false;
      m.failure = "a coboundary maps outside the target coboundary lattice";
      return m;
    }
  }

  // Torsion relations are respected.
  if (!rational) {
    const auto& dg = dst.group(kd);
    long fr = sg.pres.free_rank;
    for (size_t ti = 0; ti < sg.pres.invariant_factors.size(); ++ti) {
      const ZZ& d = sg.pres.invariant_factors[ti];
      const auto& col = m.cols[fr + ti];
      long dfr = dg.pres.free_rank;
      for (long i = 0; i < (long)col.size(); ++i) {
        mpq_class v = mpq_class(d) * col[i];
        if (i < dfr) {
          if (v != 0) {
            m.welldefined = false;
            m.failure = "torsion generator image has infinite order";
            return m;
          }
        } else {
          ZZ num = v.get_num();
          if (num % dg.pres.invariant_factors[i - dfr] != 0) {
            m.welldefined = false;
            m.failure = "torsion relation not respected";
            return m;
          }
        }
      }
    }
  }
  return m;
}

namespace {

// Reduce class coordinates modulo the presentation's relations; true if zero.
bool coords_zero(const std::vector<mpq_class>& c,
                 const AbelianGroupPresentation& pres) {
  long fr = pres.free_rank;
  for (long i = 0; i < (long)c.size(); ++i) {
    if (i < fr) {
      if (c[i] != 0) return false;
    } else {
      mpq_class v = c[i];
      if (v.get_den() != 1) return false;
      if (v.get_num() % pres.invariant_factors[i - fr] != 0) return false;
    }
  }
  return true;
}

SparseMatrix relation_matrix(const AbelianGroupPresentation& pres) {
  long r = pres.generator_count();
  SparseMatrix R((int)r, 0);
  for (size_t i = 0; i < pres.invariant_factors.size(); ++i) {
    SparseVec v;
    v.add_term((int)(pres.free_rank + i), pres.invariant_factors[i]);
    R.append_col(std::move(v));
  }
  return R;
}

// Columns of rational coordinate vectors as one integer matrix (global
// denominator cleared; spans and kernels are unchanged).
SparseMatrix int_matrix_from_cols(const std::vector<std::vector<mpq_class>>& cols,
                                  int rows) {
  ZZ lcm = 1;
  for (const auto& c : cols)
    for (const auto& v : c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  SparseMatrix M(rows, 0);
  for (const auto& c : cols) {
    SparseVec v;
    for (int i = 0; i < (int)c.size(); ++i) {
      mpq_class s = c[i] * mpq_class(lcm);
      if (s != 0) v.add_term(i, s.get_num());
    }
    M.append_col(std::move(v));
  }
  return M;
}

}  // namespace

ExactnessReport verify_exact(const Tower::Group& /*A*/, const Tower::Group& B,
                             const Tower::Group& C, const InducedMap& f,
                             const InducedMap& g, bool rational) {
  ExactnessReport rep;
  long r2 = B.pres.generator_count();

  // Composite g o f = 0 on classes.
  for (const auto& fa : f.cols) {
    std::vector<mpq_class> gc(C.pres.generator_count(), 0);
    for (long j = 0; j < (long)fa.size(); ++j)
      for (long i = 0; i < (long)gc.size(); ++i)
        gc[i] += fa[j] * g.cols[j][i];
    if (!coords_zero(gc, C.pres)) rep.composite_zero = false;
  }
  if (!rep.composite_zero || r2 == 0) return rep;

  // ker(g) as a sublattice of Z^{r2}: project the kernel of [M_g | R_C].
  SparseMatrix Mg = int_matrix_from_cols(g.cols, (int)C.pres.generator_count());
  SparseMatrix stack = Mg;
  if (!rational)
    for (const auto& col : relation_matrix(C.pres).cols) stack.append_col(col);
  stack.rows = (int)C.pres.generator_count();
  SparseMatrix ker = eliminate(stack).kernel();
  SparseMatrix Kx((int)r2, 0);
  for (const auto& col : ker.cols) {
    SparseVec v;
    for (const auto& [i, z] : col.e)
      if (i < r2) v.add_term(i, z);
    Kx.append_col(std::move(v));
  }
  Kx = hnf_canonical(Kx);

  // Denominator: image of f plus B's relations.
  SparseMatrix denom = int_matrix_from_cols(f.cols, (int)r2);
  if (!rational)
    for (const auto& col : relation_matrix(B.pres).cols) denom.append_col(col);
  denom.rows = (int)r2;

  Subquotient h = Subquotient::compute(Kx, denom, rational);
  rep.homology = h.presentation();
  return rep;
}

ExactnessReport verify_exact_cochain_target(
    Tower& btower, int kb, const Tower::Group& /*A*/, const InducedMap& f,
    const std::function<SparseVec(const SparseVec&)>& T_int,
    const std::function<std::vector<QQ>(const std::vector<QQ>&)>& T_rat,
    Tower& target_tower, int k_target) {
  (void)T_rat;
  ExactnessReport rep;
  bool rational = btower.ring() == Ring::Q;
  const auto& B = btower.group(kb);
  long r2 = B.pres.generator_count();
  if (r2 == 0) {
    rep.composite_zero = true;
    return rep;
  }

  // Stack [T(gen_i) | d_target]: kernel projection onto the first r2
  // coordinates is { x : T(sum x_i gen_i) is a coboundary }.
  int target_dim = target_tower.basis(k_target).total;
  SparseMatrix stack(target_dim, 0);
  for (const auto& gen : B.pres.generators) stack.append_col(T_int(gen));
  const SparseMatrix& D = target_tower.op_matrix(k_target - 1);
  for (const auto& col : D.cols) stack.append_col(col);

  SparseMatrix ker = eliminate(stack).kernel();
  SparseMatrix Kx((int)r2, 0);
  for (const auto& col : ker.cols) {
    SparseVec v;
    for (const auto& [i, z] : col.e)
      if (i < r2) v.add_term(i, z);
    Kx.append_col(std::move(v));
  }
  Kx = hnf_canonical(Kx);

  // In the rational setting kill torsion directions of the kernel lattice:
  // spans only.
  SparseMatrix denom = int_matrix_from_cols(f.cols, (int)r2);
  if (!rational)
    for (const auto& col : relation_matrix(B.pres).cols) denom.append_col(col);
  denom.rows = (int)r2;

  // Composite zero: every f column lies in the kernel lattice.
  Eliminated kelim = eliminate(Kx);
  for (const auto& col : denom.cols) {
    bool inside = rational ? kelim.solvable_rational(col)
                           : kelim.solve(col).has_value();
    if (!inside) {
      rep.composite_zero = false;
      return rep;
    }
  }

  Subquotient h = Subquotient::compute(Kx, denom, rational);
  rep.homology = h.presentation();
  return rep;
}

std::optional<std::vector<mpq_class>> bockstein_reduced(
    Tower& int_tower, const EulerCocycle& F, const ReducedCochain& x_qz) {
  // Closedness over Q/Z.
  ReducedCochain x = x_qz;
  x.c0.ring = x.c1.ring = x.c2.ring = Ring::QZ;
  x.c0.prune();
  x.c1.prune();
  x.c2.prune();
  ReducedCochain dqz = apply_DF(x, F);
  if (!dqz.is_zero())
    throw std::domain_error("bockstein: input not closed over Q/Z");

  // Lift to Q (values already in [0,1)) and apply D_F exactly.
  ReducedCochain lift = x;
  lift.c0.ring = lift.c1.ring = lift.c2.ring = Ring::Q;
  ReducedCochain dy = apply_DF(lift, F);
  for (const Cochain* c : {&dy.c0, &dy.c1, &dy.c2})
    for (const auto& [t, vals] : c->entries)
      for (const auto& v : vals)
        if (v.get_den() != 1)
          throw std::logic_error("bockstein: connecting image not integral");
  dy.c0.ring = dy.c1.ring = dy.c2.ring = Ring::Z;
  const FlatBasis& fb = int_tower.basis(dy.k);
  return int_tower.class_coords(dy.k, flatten_reduced(dy, fb), {});
}

}  // namespace cechtd
