#include "cechtd/complex.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>

namespace cechtd {

Simplex tuple_support(const Tuple& t) {
  Simplex s(t);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

bool contains_all(const Simplex& big, const Simplex& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets) {
  if (facets.empty()) throw std::invalid_argument("empty facet list");
  for (auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    for (Vertex v : f)
      if (v < 0) throw std::invalid_argument("negative vertex index");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Absorb nested facets.
  for (const auto& f : facets) {
    bool nested = false;
    for (const auto& g : facets)
      if (&f != &g && f.size() < g.size() && contains_all(g, f)) {
        nested = true;
        break;
      }
    if (nested)
      std::cerr << "warning: facet absorbed into a larger one\n";
    else
      facets_.push_back(f);
  }

  for (const auto& f : facets_)
    vertex_count_ = std::max(vertex_count_, f.back() + 1);
  std::vector<bool> used(vertex_count_, false);
  for (const auto& f : facets_)
    for (Vertex v : f) used[v] = true;
  for (int v = 0; v < vertex_count_; ++v)
    if (!used[v]) throw std::invalid_argument("vertex index gap: unused vertex");

  // Face closure, one sorted dedup'd list per dimension.
  int d = 0;
  for (const auto& f : facets_) d = std::max<int>(d, (int)f.size() - 1);
  std::vector<std::set<Simplex>> by_dim(d + 1);
  for (const auto& f : facets_) {
    int m = (int)f.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Simplex s;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      by_dim[s.size() - 1].insert(std::move(s));
    }
  }
  simplices_.resize(d + 1);
  for (int k = 0; k <= d; ++k)
    simplices_[k].assign(by_dim[k].begin(), by_dim[k].end());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= (int)simplices_.size()) return empty;
  return simplices_[k];
}

bool SimplicialComplex::is_simplex(const Simplex& s) const {
  if (s.empty()) return false;
  int k = (int)s.size() - 1;
  const auto& list = simplices(k);
  return std::binary_search(list.begin(), list.end(), s);
}

bool SimplicialComplex::spans_simplex(const Tuple& t) const {
  if (t.empty()) return false;
  for (Vertex v : t)
    if (v < 0 || v >= vertex_count_) return false;
  return is_simplex(tuple_support(t));
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dim(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * (long)simplices_[k].size();
  return chi;
}

std::vector<int> SimplicialComplex::facets_containing(const Simplex& s) const {
  std::vector<int> out;
  for (int i = 0; i < (int)facets_.size(); ++i)
    if (contains_all(facets_[i], s)) out.push_back(i);
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"circle3", "sphere2", "torus7",
                                                 "rp2_6", "sphere3"};
  return names;
}

SimplicialComplex fixture(const std::string& name) {
  if (name == "circle3")
    return SimplicialComplex({{0, 1}, {1, 2}, {0, 2}});
  if (name == "sphere2")
    return SimplicialComplex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  if (name == "torus7") {
    // The 7-vertex Moebius torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
    std::vector<Simplex> f;
    for (int i = 0; i < 7; ++i) {
      f.push_back({i, (i + 1) % 7, (i + 3) % 7});
      f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex(std::move(f));
  }
  if (name == "rp2_6") {
    // Minimal projective plane: antipodal quotient of the icosahedron.
    return SimplicialComplex({{0, 1, 4},
                              {0, 1, 5},
                              {0, 2, 3},
                              {0, 2, 5},
                              {0, 3, 4},
                              {1, 2, 3},
                              {1, 2, 4},
                              {1, 3, 5},
                              {2, 4, 5},
                              {3, 4, 5}});
  }
  if (name == "sphere3") {
    std::vector<Simplex> f;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int c = b + 1; c < 5; ++c)
          for (int d = c + 1; d < 5; ++d) f.push_back({a, b, c, d});
    return SimplicialComplex(std::move(f));
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

OrderedBasis ordered_basis(const SimplicialComplex& K, int k) {
  OrderedBasis b;
  b.degree = k;
  if (k < 0) return b;
  int len = k + 1;
  // Tuples partition by exact support, so enumerating per simplex
  // never produces duplicates.
  for (int d = 0; d <= std::min(k, K.dim()); ++d) {
    for (const auto& s : K.simplices(d)) {
      int m = (int)s.size();
      std::vector<int> idx(len, 0);
      for (;;) {
        // Keep only tuples covering all of s.
        unsigned seen = 0;
        for (int i : idx) seen |= 1u << i;
        if (seen == (1u << m) - 1) {
          Tuple t(len);
          for (int i = 0; i < len; ++i) t[i] = s[idx[i]];
          b.tuples.push_back(std::move(t));
        }
        int p = len - 1;
        while (p >= 0 && idx[p] == m - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
      }
    }
  }
  std::sort(b.tuples.begin(), b.tuples.end());
  return b;
}

int OrderedBasis::index_of(const Tuple& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) return -1;
  return static_cast<int>(it - tuples.begin());
}

}  // namespace cechtd
