#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cechtd {

using ZZ = mpz_class;
using QQ = mpq_class;

/// Sparse integer vector: sorted (index, value) pairs, values nonzero.
struct SparseVec {
  std::vector<std::pair<int, ZZ>> e;

  bool empty() const { return e.empty(); }
  void add_term(int i, const ZZ& v);  // assumes strictly increasing inserts
  const ZZ* at(int i) const;
  static SparseVec unit(int i);
};

SparseVec axpy(const SparseVec& x, const ZZ& c, const SparseVec& y);  // x + c*y
SparseVec scaled(const SparseVec& x, const ZZ& c);
SparseVec vec_add(const SparseVec& x, const SparseVec& y);

/// Sparse integer matrix, column major.
struct SparseMatrix {
  int rows = 0;
  std::vector<SparseVec> cols;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c) {}
  int ncols() const { return static_cast<int>(cols.size()); }
  static SparseMatrix identity(int n);
  SparseVec apply(const SparseVec& x) const;  // M * x
  void append_col(SparseVec v) { cols.push_back(std::move(v)); }
  long nnz() const;
};

/// Column elimination M * V = E with E in column echelon form and V
/// unimodular. Pivot choice: minimal absolute value, then smallest
/// column support, then lexicographic (row, col).
struct Eliminated {
  SparseMatrix E;                         // echelon form of the input
  SparseMatrix V;                         // column transform, M*V = E
  std::vector<std::pair<int, int>> pivots;  // (row, col) in creation order

  int rank() const { return static_cast<int>(pivots.size()); }

  /// HNF-canonical basis of ker(M) over the integers (saturated lattice).
  SparseMatrix kernel() const;
  /// HNF-canonical basis of the column lattice of M.
  SparseMatrix image() const;

  /// Integer solution of M x = b, canonically reduced against the kernel
  /// lattice; nullopt when no integer solution exists.
  std::optional<SparseVec> solve(const SparseVec& b) const;
  /// Rational solution of M x = b, or nullopt when none exists.
  std::optional<std::vector<QQ>> solve_rational(const std::vector<QQ>& b) const;
  bool solvable_rational(const SparseVec& b) const;
};

Eliminated eliminate(SparseMatrix M);

/// Unique column-style Hermite normal form of the column lattice:
/// strictly increasing pivot rows, positive pivots, entries of earlier
/// columns at later pivot rows reduced into [0, pivot).
SparseMatrix hnf_canonical(const SparseMatrix& A);

struct SmithTriple {
  SparseMatrix U, D, V;   // U * M * V = D
  std::vector<ZZ> diag;   // nonzero diagonal entries, divisibility chain
};

/// Smith normal form with unimodular transforms. Deterministic:
/// minimal-absolute-value pivot with lexicographic tie-break.
SmithTriple smith_normal_form(const SparseMatrix& M);

/// free rank + invariant factors (each >= 2, divisibility chain) +
/// generator representatives in ambient coordinates, free generators first.
struct AbelianGroupPresentation {
  long free_rank = 0;
  std::vector<ZZ> invariant_factors;
  std::vector<SparseVec> generators;

  long generator_count() const {
    return free_rank + static_cast<long>(invariant_factors.size());
  }
  bool is_trivial() const { return generator_count() == 0; }
};

class BrokenComplexError : public std::runtime_error {
public:
  BrokenComplexError(const std::string& what, SparseVec witness_)
      : std::runtime_error(what), witness(std::move(witness_)) {}
  SparseVec witness;
};

/// Presentation of span(Z)/span(B) with class-coordinate extraction.
/// Over Q (rational mode) the quotient is by the saturation: torsion empty.
class Subquotient {
public:
  /// Pre: every column of B lies in the lattice (rational: span) of Z.
  /// Violation throws BrokenComplexError with the offending column.
  static Subquotient compute(const SparseMatrix& Z, const SparseMatrix& B,
                             bool rational);

  const AbelianGroupPresentation& presentation() const { return pres_; }
  bool rational() const { return rational_; }

  /// Coordinates of [x]: free coordinates first, then torsion coordinates
  /// reduced into [0, d). nullopt when x is not in the (co)cycle lattice.
  std::optional<std::vector<ZZ>> class_coords(const SparseVec& x) const;
  std::optional<std::vector<QQ>> class_coords_rational(const std::vector<QQ>& x) const;

  bool is_zero_class(const SparseVec& x) const;

  /// Ambient representative of given class coordinates.
  SparseVec rep_from_coords(const std::vector<ZZ>& coords) const;

private:
  AbelianGroupPresentation pres_;
  bool rational_ = false;
  Eliminated zelim_;       // elimination of Z for membership solves
  int zdim_ = 0;           // number of columns of Z
  int rank_ = 0;           // rank of the relation matrix Y
  std::vector<ZZ> diag_;   // full diagonal of SNF(Y), length rank_
  // row-op log of the SNF, for applying U / U^{-1} without materializing
  struct RowOp {
    int kind;  // 0: row i += q*row j, 1: swap rows i,j, 2: negate row i
    int i, j;
    ZZ q;
  };
  std::vector<RowOp> oplog_;
  std::vector<ZZ> apply_U(const std::vector<ZZ>& w) const;
  std::vector<QQ> apply_U(const std::vector<QQ>& w) const;
  std::vector<ZZ> apply_Uinv_unit(int idx) const;
  friend SmithTriple smith_normal_form(const SparseMatrix&);
};

/// Convenience wrappers (the operation surface used elsewhere).
SparseMatrix kernel_lattice(const SparseMatrix& M);
std::optional<std::vector<ZZ>> solve_diophantine(const SparseMatrix& M,
                                                 const std::vector<ZZ>& b);

std::vector<ZZ> dense_from_sparse(const SparseVec& v, int n);
SparseVec sparse_from_dense(const std::vector<ZZ>& v);

}  // namespace cechtd
