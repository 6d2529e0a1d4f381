#include "doctest.h"

#include <stdexcept>

#include "cechtd/complex.hpp"

using namespace cechtd;

TEST_CASE("circle complex from facets") {
  SimplicialComplex K({{0, 1}, {1, 2}, {0, 2}});
  CHECK(K.vertex_count() == 3);
  CHECK(K.simplex_count(0) == 3);
  CHECK(K.simplex_count(1) == 3);
  CHECK(K.dim() == 1);
  CHECK(K == fixture("circle3"));
}

TEST_CASE("tetrahedron boundary") {
  SimplicialComplex K = fixture("sphere2");
  CHECK(K.simplex_count(0) == 4);
  CHECK(K.simplex_count(1) == 6);
  CHECK(K.simplex_count(2) == 4);
  CHECK(K.euler_characteristic() == 2);
  CHECK(K.simplices(3).empty());
  CHECK(K.simplices(2).size() == 4);
}

TEST_CASE("fixture face counts and Euler characteristics") {
  auto t = fixture("torus7");
  CHECK(t.simplex_count(0) == 7);
  CHECK(t.simplex_count(1) == 21);
  CHECK(t.simplex_count(2) == 14);
  CHECK(t.euler_characteristic() == 0);

  auto rp = fixture("rp2_6");
  CHECK(rp.simplex_count(0) == 6);
  CHECK(rp.simplex_count(1) == 15);
  CHECK(rp.simplex_count(2) == 10);
  CHECK(rp.euler_characteristic() == 1);

  auto s3 = fixture("sphere3");
  CHECK(s3.vertex_count() == 5);
  CHECK(s3.euler_characteristic() == 0);

  CHECK(fixture("circle3").euler_characteristic() == 0);
  CHECK_THROWS_AS(fixture("klein"), std::invalid_argument);
}

TEST_CASE("spans_simplex on ordered tuples") {
  auto K = fixture("circle3");
  CHECK(K.spans_simplex({0, 1, 0}));
  CHECK_FALSE(K.spans_simplex({0, 1, 2}));
  auto S = fixture("sphere2");
  CHECK(S.spans_simplex({0, 1, 2, 2}));

  // invariance under permutation and repetition
  CHECK(K.spans_simplex({1, 0}) == K.spans_simplex({0, 1}));
  CHECK(K.spans_simplex({1, 0, 1, 1}) == K.spans_simplex({0, 1}));
}

TEST_CASE("nested facets are absorbed, bad inputs rejected") {
  SimplicialComplex K({{0, 1, 2}, {0, 1}, {2, 3}});
  CHECK(K.facets().size() == 2);
  CHECK(K.vertex_count() == 4);
  CHECK_THROWS_AS(SimplicialComplex({}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex({{0, 2}}), std::invalid_argument);  // vertex 1 unused
}

TEST_CASE("ordered basis enumerates spanning tuples") {
  auto K = fixture("circle3");
  auto b1 = ordered_basis(K, 1);
  // 3 vertices give 3 repeated pairs; 3 edges give 6 ordered pairs
  CHECK(b1.size() == 9);
  CHECK(b1.index_of({0, 1}) >= 0);
  CHECK(b1.index_of({1, 0}) >= 0);
  CHECK(b1.index_of({0, 0}) >= 0);
  CHECK(b1.index_of({2, 2}) >= 0);
  for (int i = 1; i < b1.size(); ++i) CHECK(b1.tuples[i - 1] < b1.tuples[i]);

  auto b2 = ordered_basis(K, 2);
  // per vertex 1, per edge 2^3-2=6 covering tuples
  CHECK(b2.size() == 3 + 3 * 6);
  CHECK(b2.index_of({0, 1, 2}) == -1);
}
