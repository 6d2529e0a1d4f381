#pragma once

#include <string>
#include <vector>

namespace cechtd {

using Vertex = int;

/// A simplex or facet: strictly increasing vertex indices.
using Simplex = std::vector<Vertex>;

/// An ordered index tuple; repeats allowed. Models a (k+1)-fold
/// intersection of star-cover sets, nonempty iff the support spans
/// a simplex.
using Tuple = std::vector<Vertex>;

/// Sorted set of distinct entries of a tuple.
Simplex tuple_support(const Tuple& t);

/// Finite abstract simplicial complex, immutable after construction.
/// Serves as its own good cover via open vertex stars: the nerve of
/// the star cover of a complex is the complex itself.
class SimplicialComplex {
public:
  /// Normalizes facets (sorts, dedups, absorbs nested facets with a
  /// warning on stderr) and computes the full face closure.
  /// Throws std::invalid_argument on an empty facet list, empty
  /// facets, negative vertices, or unused vertex indices.
  explicit SimplicialComplex(std::vector<Simplex> facets);

  int vertex_count() const { return vertex_count_; }
  int dim() const { return static_cast<int>(simplices_.size()) - 1; }

  const std::vector<Simplex>& facets() const { return facets_; }

  /// All k-simplices in lexicographic order; empty if k out of range.
  const std::vector<Simplex>& simplices(int k) const;

  /// Count of k-simplices.
  int simplex_count(int k) const { return static_cast<int>(simplices(k).size()); }

  bool is_simplex(const Simplex& s) const;

  /// True iff the distinct entries of t span a simplex, i.e. the
  /// corresponding star-cover intersection is nonempty.
  bool spans_simplex(const Tuple& t) const;

  long euler_characteristic() const;

  /// Facet indices (into facets()) whose facet contains every vertex of s.
  std::vector<int> facets_containing(const Simplex& s) const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && facets_ == o.facets_;
  }

private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> simplices_;  // by dimension, lex sorted
};

/// Named standard complexes: circle3, sphere2, torus7, rp2_6, sphere3.
/// Throws std::invalid_argument on unknown names.
SimplicialComplex fixture(const std::string& name);

const std::vector<std::string>& fixture_names();

/// Canonically ordered list of all spanning ordered (k+1)-tuples.
struct OrderedBasis {
  int degree = 0;
  std::vector<Tuple> tuples;  // lex sorted

  int size() const { return static_cast<int>(tuples.size()); }
  /// Index in lex order, or -1 if the tuple does not span.
  int index_of(const Tuple& t) const;
};

OrderedBasis ordered_basis(const SimplicialComplex& K, int k);

}  // namespace cechtd
