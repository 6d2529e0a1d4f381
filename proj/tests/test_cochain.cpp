#include "doctest.h"

#include "cechtd/cochain.hpp"
#include "oracle.hpp"

using namespace cechtd;

namespace {

Cochain delta0(const SimplicialComplex& K, Vertex v, const mpq_class& val) {
  Cochain c = make_cochain(K, 0, Shape::scalar());
  c.row_mut({v})[0] = val;
  c.prune();
  return c;
}

}  // namespace

TEST_CASE("cech differential on the circle") {
  auto K = fixture("circle3");
  // constants are closed
  Cochain ones = make_cochain(K, 0, Shape::scalar());
  for (Vertex v = 0; v < 3; ++v) ones.row_mut({v})[0] = 1;
  CHECK(cech_d(ones).is_zero());

  Cochain phi = delta0(K, 0, 1);
  Cochain d = cech_d(phi);
  CHECK((*d.row({0, 1}))[0] == -1);
  CHECK(d.row({1, 2}) == nullptr);
  CHECK((*d.row({1, 0}))[0] == 1);
}

TEST_CASE("d o d = 0 on random cochains") {
  std::mt19937_64 rng(2024);
  for (const auto& name : fixture_names()) {
    auto K = fixture(name);
    for (int k = 0; k <= 3; ++k) {
      for (Shape s : {Shape::scalar(), Shape::vector(2), Shape::upper(3)}) {
        Cochain phi = random_cochain(K, k, s, Ring::Z, rng, 8);
        CHECK(cech_d(cech_d(phi)).is_zero());
      }
      Cochain q = random_cochain(K, k, Shape::scalar(), Ring::QZ, rng, 8);
      CHECK(cech_d(cech_d(q)).is_zero());
    }
  }
}

TEST_CASE("cup product basics") {
  auto K = fixture("sphere2");
  Cochain zero2 = make_cochain(K, 2, Shape::scalar());
  std::mt19937_64 rng5(5);
  Cochain a = random_cochain(K, 1, Shape::scalar(), Ring::Z, rng5, 6);
  CHECK(cup(a, zero2).is_zero());

  // degree-0 constants multiply pointwise
  Cochain c2 = make_cochain(K, 0, Shape::scalar());
  Cochain c3 = make_cochain(K, 0, Shape::scalar());
  for (Vertex v = 0; v < 4; ++v) {
    c2.row_mut({v})[0] = 2;
    c3.row_mut({v})[0] = 3;
  }
  Cochain p = cup(c2, c3);
  for (Vertex v = 0; v < 4; ++v) CHECK((*p.row({v}))[0] == 6);

  // Leibniz with closed inputs: d(alpha cup beta) = 0 for closed 2-cocycles
  Cochain g = fixture_euler_generator(K, "sphere2");
  CHECK(cech_d(g).is_zero());
  CHECK(cech_d(cup(g, g)).is_zero());
}

TEST_CASE("cup Leibniz rule on random cochains") {
  std::mt19937_64 rng(77);
  auto K = fixture("sphere2");
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      Cochain a = random_cochain(K, p, Shape::scalar(), Ring::Z, rng, 7);
      Cochain b = random_cochain(K, q, Shape::scalar(), Ring::Z, rng, 7);
      Cochain lhs = cech_d(cup(a, b));
      Cochain rhs = cochain_add(cup(cech_d(a), b),
                                cochain_scale(cup(a, cech_d(b)), sign_of(p)));
      CHECK(cochain_equal(lhs, rhs));
    }
}

TEST_CASE("graded derivation identities for cup1/cup2") {
  std::mt19937_64 rng(31);
  auto K = fixture("sphere2");
  int n = 2;
  for (int k = 1; k <= 3; ++k) {
    // arbitrary (not closed) A and B
    Cochain A = random_cochain(K, 2, Shape::vector(n), Ring::Z, rng, 8);
    Cochain B = random_cochain(K, 3, Shape::upper(n), Ring::Z, rng, 8);
    Cochain phi1 = random_cochain(K, k - 1, Shape::vector(n), Ring::Z, rng, 8);
    Cochain phi2 = random_cochain(K, k - 2 >= 0 ? k - 2 : 0, Shape::upper(n),
                                  Ring::Z, rng, 8);

    Cochain lhs1 = cech_d(cup1_vector(phi1, A));
    Cochain rhs1 = cochain_add(cup1_vector(cech_d(phi1), A),
                               cochain_scale(cup1_vector(phi1, cech_d(A)),
                                             sign_of(phi1.degree)));
    CHECK(cochain_equal(lhs1, rhs1));

    Cochain lhs2 = cech_d(cup1_matrix(phi2, A));
    Cochain rhs2 = cochain_add(cup1_matrix(cech_d(phi2), A),
                               cochain_scale(cup1_matrix(phi2, cech_d(A)),
                                             sign_of(phi2.degree)));
    CHECK(cochain_equal(lhs2, rhs2));

    Cochain lhs3 = cech_d(cup2(phi2, B));
    Cochain rhs3 = cochain_add(cup2(cech_d(phi2), B),
                               cochain_scale(cup2(phi2, cech_d(B)),
                                             sign_of(phi2.degree)));
    CHECK(cochain_equal(lhs3, rhs3));
  }
}

TEST_CASE("commutator cochain identity") {
  auto S = fixture("sphere2");
  Cochain g = fixture_euler_generator(S, "sphere2");

  // F = 0 and F2 = 0 cases
  Cochain Fz = make_cochain(S, 2, Shape::vector(2));
  CHECK(commutator_cochain(Fz).is_zero());
  Cochain Fhalf = make_cochain(S, 2, Shape::vector(2));
  for (const auto& [t, v] : g.entries) Fhalf.row_mut(t)[0] = v[0];
  Fhalf.prune();
  CHECK(commutator_cochain(Fhalf).is_zero());  // F_2 component vanishes

  // dC(F) = F_i cup F_j - F_j cup F_i, both components the generator
  Cochain F = make_cochain(S, 2, Shape::vector(2));
  for (const auto& [t, v] : g.entries) {
    F.row_mut(t)[0] = v[0];
    F.row_mut(t)[1] = v[0];
  }
  EulerCocycle E(F);
  Cochain F1 = make_cochain(S, 2, Shape::scalar());
  Cochain F2 = make_cochain(S, 2, Shape::scalar());
  for (const auto& [t, v] : F.entries) {
    F1.row_mut(t)[0] = v[0];
    F2.row_mut(t)[0] = v[1];
  }
  F1.prune();
  F2.prune();
  Cochain lhs = cech_d(E.commutator());
  Cochain rhs = cochain_sub(cup(F1, F2), cup(F2, F1));
  // compare the (0,1) component of lhs with rhs
  Cochain lhs01 = make_cochain(S, 4, Shape::scalar());
  for (const auto& [t, v] : lhs.entries) lhs01.row_mut(t)[0] = v[0];
  lhs01.prune();
  CHECK(cochain_equal(lhs01, rhs));
}

TEST_CASE("commutator identity for every fixture cocycle, all i<j") {
  std::mt19937_64 rng(4444);
  for (const auto& name : {std::string("sphere2"), std::string("torus7"),
                           std::string("rp2_6")}) {
    auto K = fixture(name);
    Cochain g = fixture_euler_generator(K, name);
    int n = 3;
    Cochain F = make_cochain(K, 2, Shape::vector(n));
    // components: generator, 2*generator, an exact cocycle
    Cochain prim = random_cochain(K, 1, Shape::scalar(), Ring::Z, rng, 6);
    Cochain ex = cech_d(prim);
    for (const auto& [t, v] : g.entries) {
      F.row_mut(t)[0] = v[0];
      F.row_mut(t)[1] = 2 * v[0];
    }
    for (const auto& [t, v] : ex.entries) F.row_mut(t)[2] += v[0];
    F.prune();
    EulerCocycle E(F);
    std::vector<Cochain> comp;
    for (int i = 0; i < n; ++i) {
      Cochain ci = make_cochain(K, 2, Shape::scalar());
      for (const auto& [t, v] : F.entries) ci.row_mut(t)[0] = v[i];
      ci.prune();
      comp.push_back(ci);
    }
    Cochain dC = cech_d(E.commutator());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Cochain want = cochain_sub(cup(comp[i], comp[j]), cup(comp[j], comp[i]));
        Cochain got = make_cochain(K, 4, Shape::scalar());
        for (const auto& [t, v] : dC.entries)
          got.row_mut(t)[0] = v[upper_index(i, j, n)];
        got.prune();
        CHECK(cochain_equal(got, want));
      }
  }
}

TEST_CASE("alternate projection") {
  std::mt19937_64 rng(11);
  auto K = fixture("sphere2");

  // fixes alternating cochains
  Cochain g = fixture_euler_generator(K, "sphere2");
  CHECK(is_alternating(g));
  CHECK(cochain_equal(alternate(g), g));

  // kills degenerate tuples
  Cochain d = make_cochain(K, 1, Shape::scalar());
  d.row_mut({2, 2})[0] = 5;
  CHECK(alternate(d).is_zero());

  // idempotent over Q
  for (int t = 0; t < 5; ++t) {
    Cochain phi = random_cochain(K, 2, Shape::scalar(), Ring::Q, rng, 10);
    Cochain a1 = alternate(phi);
    CHECK(cochain_equal(alternate(a1), a1));
    CHECK(is_alternating(a1));
  }

  // integer divisibility failure reported
  Cochain bad = make_cochain(K, 1, Shape::scalar(), Ring::Z);
  bad.row_mut({0, 1})[0] = 1;
  CHECK_THROWS_AS(alternate(bad), std::domain_error);
}

TEST_CASE("euler cocycle validation") {
  auto K = fixture("sphere2");
  Cochain notclosed = make_cochain(K, 2, Shape::vector(1));
  notclosed.row_mut({0, 1, 2})[0] = 1;  // indicator of one increasing tuple
  CHECK_THROWS_AS((void)EulerCocycle(notclosed), std::invalid_argument);
  CHECK_NOTHROW(
      (void)EulerCocycle(vector_from_components({fixture_euler_generator(K, "sphere2")})));
}
