#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cechtd/complex.hpp"

namespace cechtd {

enum class Ring { Z, Q, QZ };

std::string ring_name(Ring r);
Ring ring_from_name(const std::string& s);

/// Coefficient shape: scalar, Z^n-vector, or strictly upper triangular
/// n x n matrix (components indexed by pairs i < j).
struct Shape {
  enum Kind { Scalar, Vector, Upper };
  Kind kind = Scalar;
  int n = 0;

  int components() const {
    switch (kind) {
      case Scalar: return 1;
      case Vector: return n;
      default: return n * (n - 1) / 2;
    }
  }
  bool operator==(const Shape& o) const { return kind == o.kind && n == o.n; }
  static Shape scalar() { return {Scalar, 0}; }
  static Shape vector(int n) { return {Vector, n}; }
  static Shape upper(int n) { return {Upper, n}; }
  std::string to_string() const;
  static Shape parse(const std::string& s);
};

/// Component index of the (i,j) entry, 0 <= i < j < n, lexicographic.
int upper_index(int i, int j, int n);
std::pair<int, int> upper_pair(int idx, int n);

inline mpq_class sign_of(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

// Value-type hooks; the piecewise-polynomial model overloads these.
inline bool value_is_zero(const mpq_class& v) { return v == 0; }
inline void value_reduce_mod1(mpq_class& v) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  v -= mpq_class(f);
}

/// Ordered Cech cochain with values of type V; keys are spanning ordered
/// tuples of length degree+1, absent key = zero.
template <class V>
struct CochainT {
  const SimplicialComplex* K = nullptr;
  int degree = 0;
  Shape shape;
  Ring ring = Ring::Z;
  std::map<Tuple, std::vector<V>> entries;

  bool is_zero() const { return entries.empty(); }

  const std::vector<V>* row(const Tuple& t) const {
    auto it = entries.find(t);
    return it == entries.end() ? nullptr : &it->second;
  }

  std::vector<V>& row_mut(const Tuple& t) {
    auto it = entries.find(t);
    if (it == entries.end())
      it = entries.emplace(t, std::vector<V>(shape.components(), V{})).first;
    return it->second;
  }

  void prune() {
    for (auto it = entries.begin(); it != entries.end();) {
      bool z = true;
      for (auto& v : it->second) {
        if (ring == Ring::QZ) value_reduce_mod1(v);
        if (!value_is_zero(v)) z = false;
      }
      it = z ? entries.erase(it) : std::next(it);
    }
  }
};

using Cochain = CochainT<mpq_class>;

template <class V>
CochainT<V> zero_cochain(const SimplicialComplex& K, int degree, Shape shape,
                         Ring ring = Ring::Z) {
  CochainT<V> c;
  c.K = &K;
  c.degree = degree;
  c.shape = shape;
  c.ring = ring;
  return c;
}

Cochain make_cochain(const SimplicialComplex& K, int degree, Shape shape,
                     Ring ring = Ring::Z);

template <class V>
CochainT<V> cochain_add(const CochainT<V>& a, const CochainT<V>& b) {
  if (a.degree != b.degree || !(a.shape == b.shape))
    throw std::invalid_argument("cochain_add: shape/degree mismatch");
  CochainT<V> r = a;
  for (const auto& [t, vals] : b.entries) {
    auto& rv = r.row_mut(t);
    for (size_t i = 0; i < vals.size(); ++i) rv[i] = rv[i] + vals[i];
  }
  r.prune();
  return r;
}

template <class V>
CochainT<V> cochain_scale(const CochainT<V>& a, const mpq_class& c) {
  CochainT<V> r = a;
  for (auto& [t, vals] : r.entries)
    for (auto& v : vals) v = v * c;
  r.prune();
  return r;
}

template <class V>
CochainT<V> cochain_sub(const CochainT<V>& a, const CochainT<V>& b) {
  return cochain_add(a, cochain_scale(b, mpq_class(-1)));
}

/// Vertices v such that support(s) + v still spans a simplex (v in s allowed).
std::vector<Vertex> extension_vertices(const SimplicialComplex& K,
                                       const Simplex& supp);

/// Ordinary ordered Cech differential:
/// (d phi)_{l0..l_{k+1}} = sum_i (-1)^i phi_{.. without l_i ..}.
template <class V>
CochainT<V> cech_d(const CochainT<V>& phi) {
  CochainT<V> out = phi;
  out.entries.clear();
  out.degree = phi.degree + 1;
  int len = phi.degree + 1;
  for (const auto& [t, vals] : phi.entries) {
    Simplex supp = tuple_support(t);
    for (Vertex v : extension_vertices(*phi.K, supp)) {
      Tuple s(len + 1);
      for (int pos = 0; pos <= len; ++pos) {
        // s = t with v inserted at position pos
        for (int i = 0; i < pos; ++i) s[i] = t[i];
        s[pos] = v;
        for (int i = pos; i < len; ++i) s[i + 1] = t[i];
        auto& rv = out.row_mut(s);
        if (pos % 2 == 0)
          for (size_t i = 0; i < vals.size(); ++i) rv[i] = rv[i] + vals[i];
        else
          for (size_t i = 0; i < vals.size(); ++i) rv[i] = rv[i] - vals[i];
      }
    }
  }
  out.prune();
  return out;
}

namespace detail {

/// Enumerate back-extensions (w_1..w_q) of a tuple with support supp such
/// that supp + {w_1..w_q} spans, invoking fn(extension).
template <class Fn>
void for_back_extensions(const SimplicialComplex& K, const Simplex& supp, int q,
                         Fn&& fn) {
  std::vector<Vertex> w(q);
  Simplex cur = supp;
  // Depth-first with span pruning.
  struct Frame {
    Simplex supp;
    size_t vi;
  };
  std::vector<std::vector<Vertex>> exts(q + 1);
  std::vector<Simplex> supps(q + 1);
  supps[0] = supp;
  exts[0] = extension_vertices(K, supp);
  int depth = 0;
  std::vector<size_t> idx(q + 1, 0);
  if (q == 0) {
    fn(w);
    return;
  }
  while (depth >= 0) {
    if (idx[depth] >= exts[depth].size()) {
      --depth;
      if (depth >= 0) ++idx[depth];
      continue;
    }
    Vertex v = exts[depth][idx[depth]];
    w[depth] = v;
    if (depth + 1 == q) {
      fn(w);
      ++idx[depth];
    } else {
      Simplex ns = supps[depth];
      if (!std::binary_search(ns.begin(), ns.end(), v)) {
        ns.insert(std::upper_bound(ns.begin(), ns.end(), v), v);
      }
      supps[depth + 1] = ns;
      exts[depth + 1] = extension_vertices(K, ns);
      idx[depth + 1] = 0;
      ++depth;
    }
  }
}

}  // namespace detail

enum class CupKind { ScalarScalar, VectorVector, UpperVector, UpperUpper };

/// Front-face/back-face product with a one-index overlap:
/// (phi . X)_{l0..l_{p+q}} = contract(phi_{l0..lp}, X_{lp..l_{p+q}}).
/// X is always a constant-coefficient cochain (the Euler cocycle F, C(F),
/// or an arbitrary test cochain).
template <class V>
CochainT<V> front_cup(const CochainT<V>& phi, const Cochain& X, CupKind kind) {
  int n = phi.shape.n;
  Shape out_shape;
  switch (kind) {
    case CupKind::ScalarScalar: out_shape = Shape::scalar(); break;
    case CupKind::VectorVector: out_shape = Shape::scalar(); break;
    case CupKind::UpperVector: out_shape = Shape::vector(n); break;
    case CupKind::UpperUpper: out_shape = Shape::scalar(); break;
  }
  CochainT<V> out = zero_cochain<V>(*phi.K, phi.degree + X.degree, out_shape,
                                    phi.ring);
  int q = X.degree;
  for (const auto& [t, vals] : phi.entries) {
    Simplex supp = tuple_support(t);
    detail::for_back_extensions(*phi.K, supp, q, [&](const std::vector<Vertex>& w) {
      Tuple xt(q + 1);
      xt[0] = t.back();
      for (int i = 0; i < q; ++i) xt[i + 1] = w[i];
      const auto* xv = X.row(xt);
      if (!xv) return;
      Tuple s = t;
      s.insert(s.end(), w.begin(), w.end());
      auto& rv = out.row_mut(s);
      switch (kind) {
        case CupKind::ScalarScalar:
          rv[0] = rv[0] + vals[0] * (*xv)[0];
          break;
        case CupKind::VectorVector:
          for (int l = 0; l < n; ++l) rv[0] = rv[0] + vals[l] * (*xv)[l];
          break;
        case CupKind::UpperVector:
          for (int l = 0; l < n; ++l) {
            for (int i = 0; i < l; ++i)
              rv[l] = rv[l] + vals[upper_index(i, l, n)] * (*xv)[i];
            for (int j = l + 1; j < n; ++j)
              rv[l] = rv[l] - vals[upper_index(l, j, n)] * (*xv)[j];
          }
          break;
        case CupKind::UpperUpper:
          for (int c = 0; c < phi.shape.components(); ++c)
            rv[0] = rv[0] + vals[c] * (*xv)[c];
          break;
      }
    });
  }
  out.prune();
  return out;
}

/// Plain scalar cup product alpha . beta (front face times back face).
Cochain cup(const Cochain& a, const Cochain& b);
/// (phi cup1 F) for vector-valued phi: degree k-1 -> k+1.
template <class V>
CochainT<V> cup1_vector(const CochainT<V>& phi, const Cochain& F) {
  return front_cup(phi, F, CupKind::VectorVector);
}
/// (phi cup1 F) for upper-matrix phi: degree k-2 -> k.
template <class V>
CochainT<V> cup1_matrix(const CochainT<V>& phi, const Cochain& F) {
  return front_cup(phi, F, CupKind::UpperVector);
}
/// (phi cup2 B) for upper-matrix phi and upper-matrix B: degree k-2 -> k+1
/// when B is a 3-cochain; arbitrary B degree supported.
template <class V>
CochainT<V> cup2(const CochainT<V>& phi, const Cochain& B) {
  return front_cup(phi, B, CupKind::UpperUpper);
}

/// The commutator 3-cochain of a vector-valued 2-cocycle:
/// C(F)_{abcd,ij} = F_{abc,i} F_{acd,j} - F_{bcd,i} F_{abd,j}.
Cochain commutator_cochain(const Cochain& F);

/// Projection onto alternating cochains:
/// (alt phi)_t = 1/(k+1)! sum_sigma sign(sigma) phi_{t o sigma}.
/// Over Z throws std::domain_error unless every output value is integral.
Cochain alternate(const Cochain& phi);

/// True iff phi vanishes on repeated-entry tuples and is sign-equivariant.
bool is_alternating(const Cochain& phi);

/// Vector-valued 2-cocycle fixing the torus bundle; verifies closedness and
/// caches the commutator cochain.
class EulerCocycle {
public:
  EulerCocycle(Cochain F);

  int n() const { return F_.shape.n; }
  const Cochain& cocycle() const { return F_; }
  const Cochain& commutator() const { return CF_; }
  const SimplicialComplex& complex() const { return *F_.K; }

private:
  Cochain F_, CF_;
};

/// Alternating extension of a simplicial cochain given on increasing tuples.
Cochain alternating_extension(const SimplicialComplex& K, int degree,
                              const std::map<Simplex, mpq_class>& simplicial);

/// Assemble a vector(n)-valued cochain out of n scalar cochains.
Cochain vector_from_components(const std::vector<Cochain>& comps);
/// Extract one scalar component.
Cochain component(const Cochain& c, int i);

/// Canonical generator 2-cocycles for the fixtures (alternating):
/// sphere2 -> generator of H^2 = Z, torus7 -> generator of H^2 = Z,
/// rp2_6 -> generator of H^2 = Z/2. Throws for complexes with H^2 = 0.
Cochain fixture_euler_generator(const SimplicialComplex& K,
                                const std::string& fixture_name);

/// Seeded sparse random cochain for property tests; values are small.
Cochain random_cochain(const SimplicialComplex& K, int degree, Shape shape,
                       Ring ring, std::mt19937_64& rng, int target_entries);

bool cochain_equal(const Cochain& a, const Cochain& b);

}  // namespace cechtd
