#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "cechtd/cochain.hpp"
#include "cechtd/intlinalg.hpp"

namespace cechtd {

/// Element of the dimensionally reduced complex C^k_F: a triple
/// (scalar k-cochain, vector (k-1)-cochain, upper-matrix (k-2)-cochain),
/// lower entries truncated in degrees 0 and 1.
template <class V>
struct ReducedT {
  int k = 0;
  CochainT<V> c0, c1, c2;

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
};

/// Element of the bar complex Cbar^k_F: (vector k-cochain,
/// upper-matrix (k-1)-cochain), the tail of a reduced (k+1)-cochain.
template <class V>
struct BarT {
  int k = 0;
  CochainT<V> c1, c2;

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
};

using ReducedCochain = ReducedT<mpq_class>;
using BarCochain = BarT<mpq_class>;

template <class V>
ReducedT<V> zero_reduced(const SimplicialComplex& K, int k, int n,
                         Ring ring = Ring::Z) {
  ReducedT<V> x;
  x.k = k;
  x.c0 = zero_cochain<V>(K, k, Shape::scalar(), ring);
  x.c1 = zero_cochain<V>(K, k - 1, Shape::vector(n), ring);
  x.c2 = zero_cochain<V>(K, k - 2, Shape::upper(n), ring);
  return x;
}

template <class V>
BarT<V> zero_bar(const SimplicialComplex& K, int k, int n, Ring ring = Ring::Z) {
  BarT<V> x;
  x.k = k;
  x.c1 = zero_cochain<V>(K, k, Shape::vector(n), ring);
  x.c2 = zero_cochain<V>(K, k - 1, Shape::upper(n), ring);
  return x;
}

/// D_F(c0, c1, c2) = (d c0 + (-1)^{k+1} c1 cup1 F + (-1)^{k+1} c2 cup2 C(F),
///                    d c1 + (-1)^k c2 cup1 F,
///                    d c2).
template <class V>
ReducedT<V> apply_DF(const ReducedT<V>& x, const EulerCocycle& F) {
  int k = x.k;
  ReducedT<V> out;
  out.k = k + 1;
  out.c0 = cech_d(x.c0);
  if (k >= 1)
    out.c0 = cochain_add(out.c0,
                         cochain_scale(cup1_vector(x.c1, F.cocycle()), sign_of(k + 1)));
  if (k >= 2)
    out.c0 = cochain_add(out.c0,
                         cochain_scale(cup2(x.c2, F.commutator()), sign_of(k + 1)));
  if (k >= 1)
    out.c1 = cech_d(x.c1);
  else
    out.c1 = zero_cochain<V>(*x.c0.K, k, Shape::vector(F.n()), x.c0.ring);
  if (k >= 2)
    out.c1 = cochain_add(out.c1,
                         cochain_scale(cup1_matrix(x.c2, F.cocycle()), sign_of(k)));
  if (k >= 2)
    out.c2 = cech_d(x.c2);
  else
    out.c2 = zero_cochain<V>(*x.c0.K, k - 1, Shape::upper(F.n()), x.c0.ring);
  return out;
}

/// Dbar_F(c1, c2) = (d c1 + (-1)^{k+1} c2 cup1 F, d c2): the tail of D_F in
/// degree k+1, so the fibre integration below is a chain map.
template <class V>
BarT<V> apply_Dbar(const BarT<V>& x, const EulerCocycle& F) {
  int k = x.k;
  BarT<V> out;
  out.k = k + 1;
  out.c1 = cech_d(x.c1);
  if (k >= 1)
    out.c1 = cochain_add(out.c1,
                         cochain_scale(cup1_matrix(x.c2, F.cocycle()), sign_of(k + 1)));
  if (k >= 1)
    out.c2 = cech_d(x.c2);
  else
    out.c2 = zero_cochain<V>(*x.c1.K, k, Shape::upper(F.n()), x.c1.ring);
  return out;
}

/// pi^*: scalar k-cochain -> (phi, 0, 0).
template <class V>
ReducedT<V> pullback_cochain(const CochainT<V>& phi, int n) {
  ReducedT<V> x = zero_reduced<V>(*phi.K, phi.degree, n, phi.ring);
  x.c0 = phi;
  return x;
}

/// pi_*: drop the first entry, (c0, c1, c2) -> (c1, c2) in bar degree k-1.
template <class V>
BarT<V> pushforward_cochain(const ReducedT<V>& x) {
  BarT<V> y;
  y.k = x.k - 1;
  y.c1 = x.c1;
  y.c2 = x.c2;
  return y;
}

/// The cup-with-F edge map on bar cochains of degree b:
/// (-1)^{b+1} (c1 cup1 F + c2 cup2 C(F)), a scalar (b+2)-cochain.
/// Anti-chain map: d(T y) = -T(Dbar y).
template <class V>
CochainT<V> cup_F_cochain(const BarT<V>& y, const EulerCocycle& F) {
  int b = y.k;
  CochainT<V> out = cup1_vector(y.c1, F.cocycle());
  if (b >= 1) out = cochain_add(out, cup2(y.c2, F.commutator()));
  return cochain_scale(out, sign_of(b + 1));
}

// ---------------------------------------------------------------------------
// Flattened bases and operator matrices (constant-coefficient model).

struct FlatBasis {
  OrderedBasis b0, b1, b2;  // slot bases; degree <0 slots are empty
  Shape s0, s1, s2;
  int off1 = 0, off2 = 0, total = 0;
};

/// Basis of C^k_F: scalar deg k, vector deg k-1, upper deg k-2.
FlatBasis reduced_flat_basis(const SimplicialComplex& K, int k, int n);
/// Basis of Cbar^k_F: vector deg k, upper deg k-1.
FlatBasis bar_flat_basis(const SimplicialComplex& K, int k, int n);
/// Basis of plain Cech cochains of one shape.
FlatBasis cech_flat_basis(const SimplicialComplex& K, int k, Shape shape);

SparseVec flatten_reduced(const ReducedCochain& x, const FlatBasis& fb);
ReducedCochain unflatten_reduced(const SparseVec& v, const FlatBasis& fb,
                                 const SimplicialComplex& K, int n, Ring ring);
SparseVec flatten_bar(const BarCochain& x, const FlatBasis& fb);
BarCochain unflatten_bar(const SparseVec& v, const FlatBasis& fb,
                         const SimplicialComplex& K, int n, Ring ring);
SparseVec flatten_cochain(const Cochain& x, const FlatBasis& fb);
Cochain unflatten_cochain(const SparseVec& v, const FlatBasis& fb,
                          const SimplicialComplex& K, Ring ring);

// Rational flattening (dense) for Q-coefficient classes.
std::vector<QQ> flatten_reduced_q(const ReducedCochain& x, const FlatBasis& fb);
std::vector<QQ> flatten_bar_q(const BarCochain& x, const FlatBasis& fb);
std::vector<QQ> flatten_cochain_q(const Cochain& x, const FlatBasis& fb);

enum class Model { Cech, Reduced, Bar };

/// One cochain complex (Cech with a shape, reduced, or bar) over Z or Q,
/// with cached operator matrices, eliminations and cohomology groups.
class Tower {
public:
  Tower(const SimplicialComplex& K, std::shared_ptr<const EulerCocycle> F,
        Model model, Shape cech_shape, Ring ring);

  static Tower cech(const SimplicialComplex& K, Shape shape, Ring ring);
  static Tower reduced(const SimplicialComplex& K,
                       std::shared_ptr<const EulerCocycle> F, Ring ring);
  static Tower bar(const SimplicialComplex& K,
                   std::shared_ptr<const EulerCocycle> F, Ring ring);

  const SimplicialComplex& complex() const { return *K_; }
  Model model() const { return model_; }
  Ring ring() const { return ring_; }
  int n() const;
  const FlatBasis& basis(int k);
  const SparseMatrix& op_matrix(int k);  // differential C^k -> C^{k+1}
  const Eliminated& elim(int k);

  /// Cohomology group at degree k: ker(op k)/im(op k-1).
  struct Group {
    int k = 0;
    AbelianGroupPresentation pres;
    std::shared_ptr<Subquotient> sq;
    SparseMatrix boundaries;  // HNF basis of the coboundary lattice
  };
  const Group& group(int k);

  /// Class coordinates of a flattened cocycle; nullopt if not closed.
  std::optional<std::vector<mpq_class>> class_coords(int k, const SparseVec& x_int,
                                                     const std::vector<QQ>& x_rat);

  /// Is the flattened cochain a coboundary (degree k object)?
  bool is_coboundary(int k, const SparseVec& x_int, const std::vector<QQ>& x_rat);

private:
  const SimplicialComplex* K_;
  std::shared_ptr<const EulerCocycle> F_;
  Model model_;
  Shape shape_;
  Ring ring_;
  std::map<int, FlatBasis> bases_;
  std::map<int, SparseMatrix> mats_;
  std::map<int, Eliminated> elims_;
  std::map<int, Group> groups_;
};

/// Matrix of the induced map between two computed groups, with the
/// well-definedness certificate.
struct InducedMap {
  bool welldefined = true;
  std::string failure;                      // empty when well defined
  std::vector<std::vector<mpq_class>> cols; // dst coords per src generator
};

/// f maps a flattened src cocycle to a flattened dst cochain (integer mode)
/// or dense rational (rational mode).
InducedMap induced_map(Tower& src, int ks, Tower& dst, int kd,
                       const std::function<SparseVec(const SparseVec&)>& f_int,
                       const std::function<std::vector<QQ>(const std::vector<QQ>&)>& f_rat);

struct ExactnessReport {
  bool composite_zero = true;
  AbelianGroupPresentation homology;
  bool exact() const {
    return composite_zero && homology.free_rank == 0 &&
           homology.invariant_factors.empty();
  }
};

/// Exactness of A -f-> B -g-> C at B, computed in B's generator coordinates.
ExactnessReport verify_exact(const Tower::Group& A, const Tower::Group& B,
                             const Tower::Group& C, const InducedMap& f,
                             const InducedMap& g, bool rational);

/// Exactness at B of A -f-> B -T-> (cochain level target): kernel of the
/// composite "T then mod coboundaries" against the image of f. Used where
/// the target group itself is not materialized.
ExactnessReport verify_exact_cochain_target(
    Tower& btower, int kb, const Tower::Group& A, const InducedMap& f,
    const std::function<SparseVec(const SparseVec&)>& T_int,
    const std::function<std::vector<QQ>(const std::vector<QQ>&)>& T_rat,
    Tower& target_tower, int k_target);

/// Connecting map of 0 -> Z -> Q -> Q/Z -> 0 in the constant model:
/// lift a Q/Z-valued D_F-cocycle to [0,1) rationals, apply D_F, return the
/// integer class. Throws std::domain_error if the input was not closed.
std::optional<std::vector<mpq_class>> bockstein_reduced(
    Tower& int_tower, const EulerCocycle& F, const ReducedCochain& x_qz);

}  // namespace cechtd
