#include "doctest.h"

#include <random>

#include "cechtd/intlinalg.hpp"
#include "oracle.hpp"

using namespace cechtd;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<long>>& rows) {
  int R = (int)rows.size();
  int C = R ? (int)rows[0].size() : 0;
  SparseMatrix M(R, C);
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c)
      if (rows[r][c] != 0) M.cols[c].add_term(r, rows[r][c]);
  for (auto& col : M.cols)
    std::sort(col.e.begin(), col.e.end());
  return M;
}

std::vector<std::vector<ZZ>> to_dense(const SparseMatrix& M) {
  std::vector<std::vector<ZZ>> D(M.rows, std::vector<ZZ>(M.ncols(), 0));
  for (int c = 0; c < M.ncols(); ++c)
    for (const auto& [r, v] : M.cols[c].e) D[r][c] = v;
  return D;
}

std::vector<std::vector<ZZ>> mul(const std::vector<std::vector<ZZ>>& A,
                                 const std::vector<std::vector<ZZ>>& B) {
  std::vector<std::vector<ZZ>> C(A.size(), std::vector<ZZ>(B[0].size(), 0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t k = 0; k < B.size(); ++k)
      if (A[i][k] != 0)
        for (size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
  return C;
}

ZZ det(std::vector<std::vector<ZZ>> m) {
  // fraction-free Gaussian elimination (Bareiss)
  int n = (int)m.size();
  if (n == 0) return 1;
  ZZ prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("smith normal form basics") {
  auto I = SparseMatrix::identity(3);
  auto s = smith_normal_form(I);
  CHECK(s.diag == std::vector<ZZ>{1, 1, 1});

  auto M = from_dense({{2, 4}, {6, 8}});
  auto t = smith_normal_form(M);
  CHECK(t.diag == std::vector<ZZ>{2, 4});

  auto Zm = from_dense({{0, 0}, {0, 0}});
  CHECK(smith_normal_form(Zm).diag.empty());
}

TEST_CASE("smith transforms are unimodular and U*M*V = D") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int R = 1 + (int)(rng() % 5), C = 1 + (int)(rng() % 5);
    std::vector<std::vector<long>> rows(R, std::vector<long>(C, 0));
    for (auto& r : rows)
      for (auto& v : r) v = (long)(rng() % 9) - 4;
    auto M = from_dense(rows);
    auto s = smith_normal_form(M);
    auto D = mul(mul(to_dense(s.U), to_dense(M)), to_dense(s.V));
    CHECK(D == to_dense(s.D));
    ZZ du = det(to_dense(s.U)), dv = det(to_dense(s.V));
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (size_t i = 1; i < s.diag.size(); ++i)
      CHECK(s.diag[i] % s.diag[i - 1] == 0);
    // cross-check the diagonal against the independent oracle
    std::vector<std::vector<mpz_class>> md(R, std::vector<mpz_class>(C, 0));
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) md[r][c] = rows[r][c];
    CHECK(oracle::snf_diag(md) == s.diag);
  }
}

TEST_CASE("kernel lattice") {
  auto K1 = kernel_lattice(from_dense({{1, 1}}));
  CHECK(K1.ncols() == 1);
  auto d = to_dense(K1);
  CHECK(d[0][0] * d[1][0] == -1);  // (1,-1) up to sign convention

  // injective map: empty kernel
  CHECK(kernel_lattice(from_dense({{1, 0}, {0, 1}, {3, 5}})).ncols() == 0);

  // 2a = b: saturated kernel basis {(1,2,0),(0,0,1)} in canonical HNF
  auto K2 = kernel_lattice(from_dense({{2, -1, 0}}));
  CHECK(K2.ncols() == 2);
  auto d2 = to_dense(K2);
  CHECK(d2[0][0] == 1);
  CHECK(d2[1][0] == 2);
  CHECK(d2[2][0] == 0);
  CHECK(d2[0][1] == 0);
  CHECK(d2[1][1] == 0);
  CHECK(d2[2][1] == 1);
}

TEST_CASE("diophantine solving") {
  auto M0 = from_dense({{3, 0}, {0, 5}});
  auto x0 = solve_diophantine(M0, {0, 0});
  REQUIRE(x0.has_value());
  CHECK((*x0)[0] == 0);
  CHECK((*x0)[1] == 0);

  CHECK_FALSE(solve_diophantine(from_dense({{2}}), {3}).has_value());
  auto x1 = solve_diophantine(from_dense({{2}}), {4});
  REQUIRE(x1.has_value());
  CHECK((*x1)[0] == 2);

  // larger random consistency: M x = M y is always solvable
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    int R = 2 + (int)(rng() % 4), C = 2 + (int)(rng() % 4);
    std::vector<std::vector<long>> rows(R, std::vector<long>(C, 0));
    for (auto& r : rows)
      for (auto& v : r) v = (long)(rng() % 7) - 3;
    auto M = from_dense(rows);
    std::vector<ZZ> y(C);
    for (auto& v : y) v = (long)(rng() % 5) - 2;
    auto b = M.apply(sparse_from_dense(y));
    auto x = eliminate(M).solve(b);
    REQUIRE(x.has_value());
    auto bx = M.apply(*x);
    CHECK(bx.e == b.e);
  }
}

TEST_CASE("subquotient presentations") {
  // Z = identity(2), B = diag(2,3) -> Z/6
  auto sq = Subquotient::compute(SparseMatrix::identity(2),
                                 from_dense({{2, 0}, {0, 3}}), false);
  CHECK(sq.presentation().free_rank == 0);
  CHECK(sq.presentation().invariant_factors == std::vector<ZZ>{6});

  // B = 0: free of rank 2
  auto sq2 = Subquotient::compute(SparseMatrix::identity(2), SparseMatrix(2, 0),
                                  false);
  CHECK(sq2.presentation().free_rank == 2);
  CHECK(sq2.presentation().invariant_factors.empty());

  // Z = B: trivial
  auto sq3 = Subquotient::compute(SparseMatrix::identity(2),
                                  SparseMatrix::identity(2), false);
  CHECK(sq3.presentation().free_rank == 0);
  CHECK(sq3.presentation().invariant_factors.empty());

  // class coordinates: Z^2/(2e0) has coords (free from e1, torsion from e0)
  auto sq4 = Subquotient::compute(SparseMatrix::identity(2),
                                  from_dense({{2}, {0}}), false);
  CHECK(sq4.presentation().free_rank == 1);
  CHECK(sq4.presentation().invariant_factors == std::vector<ZZ>{2});
  SparseVec e0 = SparseVec::unit(0);
  auto c = sq4.class_coords(e0);
  REQUIRE(c.has_value());
  CHECK((*c).size() == 2);
  // e0 is pure torsion: free coordinate zero, torsion coordinate 1 mod 2
  CHECK((*c)[0] == 0);
  CHECK(((*c)[1] % 2 + 2) % 2 == 1);
  // generator representatives reproduce their own coordinates
  for (size_t g = 0; g < sq4.presentation().generators.size(); ++g) {
    auto cg = sq4.class_coords(sq4.presentation().generators[g]);
    REQUIRE(cg.has_value());
    for (size_t i = 0; i < cg->size(); ++i)
      CHECK((*cg)[i] == (i == g ? 1 : 0));
  }

  // relation outside the lattice triggers the broken-complex error
  CHECK_THROWS_AS(Subquotient::compute(from_dense({{2}, {0}}),
                                       from_dense({{1}, {1}}), false),
                  BrokenComplexError);
}
