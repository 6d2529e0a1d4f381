#include "cechtd/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace cechtd {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    default: return "QZ";
  }
}

Ring ring_from_name(const std::string& s) {
  if (s == "Z") return Ring::Z;
  if (s == "Q") return Ring::Q;
  if (s == "QZ" || s == "Q/Z") return Ring::QZ;
  throw std::invalid_argument("unknown ring: " + s);
}

std::string Shape::to_string() const {
  switch (kind) {
    case Scalar: return "scalar";
    case Vector: return "vector(" + std::to_string(n) + ")";
    default: return "upper_matrix(" + std::to_string(n) + ")";
  }
}

Shape Shape::parse(const std::string& s) {
  if (s == "scalar") return scalar();
  auto grab = [&](const std::string& prefix) -> int {
    if (s.rfind(prefix + "(", 0) != 0 || s.back() != ')') return -1;
    return std::stoi(s.substr(prefix.size() + 1,
                              s.size() - prefix.size() - 2));
  };
  int n = grab("vector");
  if (n >= 0) return vector(n);
  n = grab("upper_matrix");
  if (n >= 0) return upper(n);
  throw std::invalid_argument("unknown shape: " + s);
}

int upper_index(int i, int j, int n) {
  // lexicographic over pairs i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> upper_pair(int idx, int n) {
  for (int i = 0; i < n; ++i) {
    int rowlen = n - i - 1;
    if (idx < rowlen) return {i, i + 1 + idx};
    idx -= rowlen;
  }
  throw std::out_of_range("upper_pair");
}

Cochain make_cochain(const SimplicialComplex& K, int degree, Shape shape,
                     Ring ring) {
  return zero_cochain<mpq_class>(K, degree, shape, ring);
}

std::vector<Vertex> extension_vertices(const SimplicialComplex& K,
                                       const Simplex& supp) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < K.vertex_count(); ++v) {
    if (std::binary_search(supp.begin(), supp.end(), v)) {
      out.push_back(v);
      continue;
    }
    Simplex s = supp;
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    if (K.is_simplex(s)) out.push_back(v);
  }
  return out;
}

Cochain cup(const Cochain& a, const Cochain& b) {
  if (a.K != b.K) throw std::invalid_argument("cup: different complexes");
  if (a.shape.kind != Shape::Scalar || b.shape.kind != Shape::Scalar ||
      a.ring != b.ring)
    throw std::invalid_argument("cup: coefficient mismatch");
  return front_cup(a, b, CupKind::ScalarScalar);
}

Cochain commutator_cochain(const Cochain& F) {
  int n = F.shape.n;
  Cochain out = make_cochain(*F.K, 3, Shape::upper(n), F.ring);
  OrderedBasis b3 = ordered_basis(*F.K, 3);
  for (const auto& t : b3.tuples) {
    Tuple abc{t[0], t[1], t[2]}, acd{t[0], t[2], t[3]}, bcd{t[1], t[2], t[3]},
        abd{t[0], t[1], t[3]};
    const auto *v_abc = F.row(abc), *v_acd = F.row(acd), *v_bcd = F.row(bcd),
               *v_abd = F.row(abd);
    std::vector<mpq_class> vals(out.shape.components(), 0);
    bool nz = false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        mpq_class v = 0;
        if (v_abc && v_acd) v += (*v_abc)[i] * (*v_acd)[j];
        if (v_bcd && v_abd) v -= (*v_bcd)[i] * (*v_abd)[j];
        if (v != 0) {
          vals[upper_index(i, j, n)] = v;
          nz = true;
        }
      }
    if (nz) out.entries.emplace(t, std::move(vals));
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

Cochain alternate(const Cochain& phi) {
  int len = phi.degree + 1;
  mpq_class fact = 1;
  for (int i = 2; i <= len; ++i) fact *= i;
  Cochain out = make_cochain(*phi.K, phi.degree, phi.shape, phi.ring);
  std::vector<int> perm(len);
  for (const auto& [t, vals] : phi.entries) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sg = permutation_sign(perm);
      Tuple s(len);
      for (int i = 0; i < len; ++i) s[i] = t[perm[i]];
      auto& rv = out.row_mut(s);
      for (size_t c = 0; c < vals.size(); ++c)
        rv[c] += mpq_class(sg) * vals[c] / fact;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.prune();
  if (phi.ring == Ring::Z)
    for (const auto& [t, vals] : out.entries)
      for (const auto& v : vals)
        if (v.get_den() != 1)
          throw std::domain_error("alternate: values not divisible by (k+1)!");
  return out;
}

bool is_alternating(const Cochain& phi) {
  int len = phi.degree + 1;
  for (const auto& [t, vals] : phi.entries) {
    Simplex supp = tuple_support(t);
    if ((int)supp.size() < len) return false;  // nonzero on a repeated tuple
    Tuple sorted = t;
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return t[a] < t[b]; });
    int sg = permutation_sign(perm);
    std::sort(sorted.begin(), sorted.end());
    const auto* sv = phi.row(sorted);
    if (!sv) return false;
    for (size_t c = 0; c < vals.size(); ++c)
      if (vals[c] != mpq_class(sg) * (*sv)[c]) return false;
  }
  return true;
}

EulerCocycle::EulerCocycle(Cochain F) : F_(std::move(F)) {
  if (F_.shape.kind != Shape::Vector || F_.degree != 2 || F_.ring != Ring::Z)
    throw std::invalid_argument("EulerCocycle: need an integer vector-valued 2-cochain");
  for (const auto& [t, vals] : F_.entries)
    for (const auto& v : vals)
      if (v.get_den() != 1)
        throw std::invalid_argument("EulerCocycle: non-integer value");
  if (!cech_d(F_).is_zero())
    throw std::invalid_argument("EulerCocycle: not a cocycle");
  CF_ = commutator_cochain(F_);
}

Cochain alternating_extension(const SimplicialComplex& K, int degree,
                              const std::map<Simplex, mpq_class>& simplicial) {
  Cochain out = make_cochain(K, degree, Shape::scalar(), Ring::Z);
  int len = degree + 1;
  for (const auto& [s, v] : simplicial) {
    if (v == 0) continue;
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Tuple t(len);
      for (int i = 0; i < len; ++i) t[i] = s[perm[i]];
      out.row_mut(t)[0] = mpq_class(permutation_sign(perm)) * v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.prune();
  return out;
}

namespace {

// Coherent orientation signs for a closed surface's facets: BFS over the
// dual graph, flipping so shared edges get opposite induced orientations.
std::vector<int> coherent_orientation(const SimplicialComplex& K) {
  const auto& facets = K.facets();
  int m = (int)facets.size();
  // boundary coefficient of edge e in the standard orientation of facet f
  auto edge_coeff = [&](const Simplex& f, const Simplex& e) -> int {
    for (int i = 0; i < 3; ++i) {
      Simplex face;
      for (int j = 0; j < 3; ++j)
        if (j != i) face.push_back(f[j]);
      if (face == e) return i % 2 == 0 ? 1 : -1;
    }
    return 0;
  };
  std::vector<int> sign(m, 0);
  sign[0] = 1;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int g = 0; g < m; ++g) {
      if (sign[g] != 0 || g == f) continue;
      Simplex shared;
      std::set_intersection(facets[f].begin(), facets[f].end(),
                            facets[g].begin(), facets[g].end(),
                            std::back_inserter(shared));
      if (shared.size() != 2) continue;
      int cf = edge_coeff(facets[f], shared), cg = edge_coeff(facets[g], shared);
      sign[g] = -sign[f] * cf * cg;
      queue.push_back(g);
    }
  }
  for (int f = 0; f < m; ++f)
    if (sign[f] == 0) throw std::runtime_error("orientation: dual graph not connected");
  return sign;
}

}  // namespace

Cochain vector_from_components(const std::vector<Cochain>& comps) {
  if (comps.empty()) throw std::invalid_argument("vector_from_components: empty");
  int n = (int)comps.size();
  Cochain out = make_cochain(*comps[0].K, comps[0].degree, Shape::vector(n),
                             comps[0].ring);
  for (int i = 0; i < n; ++i) {
    if (comps[i].degree != out.degree || comps[i].shape.kind != Shape::Scalar)
      throw std::invalid_argument("vector_from_components: mismatched parts");
    for (const auto& [t, v] : comps[i].entries) out.row_mut(t)[i] = v[0];
  }
  out.prune();
  return out;
}

Cochain component(const Cochain& c, int i) {
  Cochain out = make_cochain(*c.K, c.degree, Shape::scalar(), c.ring);
  for (const auto& [t, v] : c.entries) out.row_mut(t)[0] = v[i];
  out.prune();
  return out;
}

Cochain fixture_euler_generator(const SimplicialComplex& K,
                                const std::string& fixture_name) {
  if (fixture_name == "sphere2") {
    return alternating_extension(K, 2, {{{1, 2, 3}, 1}});
  }
  if (fixture_name == "torus7") {
    auto sign = coherent_orientation(K);
    return alternating_extension(K, 2, {{K.facets()[0], sign[0]}});
  }
  if (fixture_name == "rp2_6") {
    // dual of one triangle; generates H^2 = Z/2 (odd pairing with the
    // mod-2 fundamental cycle)
    return alternating_extension(K, 2, {{K.facets()[0], 1}});
  }
  throw std::invalid_argument("no canonical Euler generator for " + fixture_name);
}

Cochain random_cochain(const SimplicialComplex& K, int degree, Shape shape,
                       Ring ring, std::mt19937_64& rng, int target_entries) {
  Cochain out = make_cochain(K, degree, shape, ring);
  if (shape.components() == 0 || degree < 0) return out;
  const auto& facets = K.facets();
  std::uniform_int_distribution<int> fpick(0, (int)facets.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int i = 0; i < target_entries; ++i) {
    const Simplex& f = facets[fpick(rng)];
    std::uniform_int_distribution<int> vpick(0, (int)f.size() - 1);
    Tuple t(degree + 1);
    for (int j = 0; j <= degree; ++j) t[j] = f[vpick(rng)];
    auto& rv = out.row_mut(t);
    for (int c = 0; c < shape.components(); ++c) {
      mpq_class v(num(rng), ring == Ring::Z ? 1 : den(rng));
      v.canonicalize();
      rv[c] = v;
    }
  }
  out.prune();
  return out;
}

bool cochain_equal(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || !(a.shape == b.shape)) return false;
  Cochain x = a, y = b;
  x.prune();
  y.prune();
  return x.entries == y.entries;
}

}  // namespace cechtd
