#include "hallbridge/bridgeland.hpp"

#include <doctest.h>

using namespace hb;

namespace {

Algebra a2() { return Algebra::parse("q = 2\nvertices = 2\narrow a 1 2\n"); }
Algebra a3rad2() {
  return Algebra::parse("q = 2\nvertices = 3\narrow a 1 2\narrow b 2 3\nrelation a b\n");
}

}  // namespace

TEST_CASE("e element of S1 on A2") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  BridgelandSession s(eng);

  BridgelandElement e = e_element(s, A.simple(0));
  REQUIRE(e.terms().size() == 1);
  const auto& [key, coeff] = *e.terms().begin();
  // resolution P2 -> P1: the only syzygy is S2 (odd), so alpha = -(0,1)
  // and beta = 0; reduced complex is C_{S1} itself.
  CHECK(key.alpha == DimVec{0, -1});
  CHECK(key.beta == DimVec{0, 0});
  CHECK(key.red.m1 == DimVec{0, 1});
  CHECK(key.red.m0 == DimVec{1, 0});
  CHECK(coeff == QSqrt::one(2));
}

TEST_CASE("normalize strips acyclic summands with the exact scalar") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  BridgelandSession s(eng);

  Cx C = pi_of_resolution(A, minimal_resolution(A, A.simple(0)));
  Cx K = k_acyclic(A, {1, 0}, false);
  Cx X = cx_direct_sum(A, K, C);
  BridgelandElement n = normalize_term(s, QSqrt::one(2), DimVec{0, 0}, DimVec{0, 0}, X);
  REQUIRE(n.terms().size() == 1);
  const auto& [key, coeff] = *n.terms().begin();
  CHECK(key.alpha == DimVec{1, 1});  // K(A) class of P1
  CHECK(key.beta == DimVec{0, 0});
  CHECK(key.red.m1 == DimVec{0, 1});
  CHECK(key.red.m0 == DimVec{1, 0});
  // relation (2.1): [K_P + M] = v^{-<P, M>} [K_P] * [M]
  EulerData E(A);
  long exp = -E.form({1, 1}, cx_class(C));
  CHECK(coeff == QSqrt::vpow(2, exp));
}

TEST_CASE("K classes commute up to the symmetrized twist") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  BridgelandSession s(eng);

  // [K_alpha] * [K*_beta] and reverse agree: K classes are central up to
  // v powers that cancel in the symmetrized convention
  BridgelandElement ka, kb;
  ka.add_term(BKey{{1, 0}, {0, 0}, s.eng->cxs.classify(zero_cx(A))}, QSqrt::one(2));
  kb.add_term(BKey{{0, 0}, {0, 1}, s.eng->cxs.classify(zero_cx(A))}, QSqrt::one(2));
  BridgelandElement ab = dh2_product(s, ka, kb);
  BridgelandElement ba = dh2_product(s, kb, ka);
  REQUIRE(ab.terms().size() == 1);
  REQUIRE(ba.terms().size() == 1);
  CHECK(ab.terms().begin()->first == ba.terms().begin()->first);
  // the two orders agree up to an integer power of v
  QSqrt ca = ab.terms().begin()->second, cb = ba.terms().begin()->second;
  CHECK_FALSE(ca.is_zero());
  CHECK_FALSE(cb.is_zero());
  bool vpower = false;
  for (long k = -6; k <= 6; ++k)
    if (ca == cb * QSqrt::vpow(2, k)) vpower = true;
  CHECK(vpower);
}

TEST_CASE("psi inverts phi on module classes") {
  for (const char* text : {"q = 2\nvertices = 2\narrow a 1 2\n",
                           "q = 3\nvertices = 2\narrow a 1 2\n"}) {
    Algebra A = Algebra::parse(text);
    Engine eng(A, {1, 1});
    BridgelandSession s(eng);
    ModuleRegistry& reg = eng.mods;
    for (auto& d : {DimVec{0, 0}, DimVec{1, 0}, DimVec{0, 1}, DimVec{1, 1}})
      for (auto& M : reg.classes(d)) {
        HallElement x;
        x.add_term(reg.classify(M), QSqrt::one(A.q()));
        CHECK(psi_map(s, phi_map(s, x)) == x);
      }
  }
}

TEST_CASE("phi is an algebra map on a commuting pair") {
  Algebra A = a2();
  Engine eng(A, {2, 2});
  BridgelandSession s(eng);
  Thm37Report r12 = check_thm37(s, A.simple(0), A.simple(1));
  CHECK(r12.equal);
  CHECK(r12.w0 == 0);
  Thm37Report r21 = check_thm37(s, A.simple(1), A.simple(0));
  CHECK(r21.equal);
  Thm37Report rp = check_thm37(s, A.projective(0), A.simple(1));
  CHECK(rp.equal);
}

TEST_CASE("embedding fails exactly when high ext appears") {
  Algebra A = Algebra::parse(
      "q = 2\nvertices = 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\n"
      "relation a b\nrelation b c\n");
  Engine eng(A, {1, 1, 1, 1});
  BridgelandSession s(eng);
  // Ext^3(S1, S4) = 1: theorem hypothesis violated, products differ
  Thm37Report bad = check_thm37(s, A.simple(0), A.simple(3));
  CHECK(bad.ext_high == std::vector<int>{1});
  CHECK(bad.w0 == 1);
  CHECK_FALSE(bad.equal);
  // adjacent pair has no high ext
  Thm37Report good = check_thm37(s, A.simple(0), A.simple(1));
  for (int d : good.ext_high) CHECK(d == 0);
  CHECK(good.equal);
}

TEST_CASE("hom counting identities") {
  Algebra A = a3rad2();
  Engine eng(A, {1, 1, 1});
  BridgelandSession s(eng);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CountsReport r = check_counts(s, A.simple(i), A.simple(j));
      CHECK(r.pass_a);
      CHECK(r.pass_b);
      CHECK(r.pass_c);
      CHECK(r.pass_d);
      if (r.w0 == 0) CHECK(r.vform_matches);
    }
}

TEST_CASE("serre relations hold in DH2") {
  Algebra A = a2();
  Engine eng(A, {3, 3});
  BridgelandSession s(eng);
  CHECK(serre_sum_dh2(s, 0, 1).is_zero());
  CHECK(serre_sum_dh2(s, 1, 0).is_zero());

  BridgelandElement d0 = dh2_divided_power(s, A.simple(0), 0);
  CHECK(d0 == s.unit());
  BridgelandElement d1 = dh2_divided_power(s, A.simple(0), 1);
  CHECK(d1 == e_element(s, A.simple(0)));
}

TEST_CASE("e element is independent of the resolution") {
  Algebra A = a3rad2();
  Engine eng(A, {1, 1, 1});
  BridgelandSession s(eng);
  const Rep& M = A.simple(1);
  Resolution R = minimal_resolution(A, M);
  BridgelandElement base = e_element(s, M);
  std::vector<std::vector<DimVec>> pad_choices = {
      {{1, 0, 0}, {0, 0, 0}},
      {{0, 1, 0}, {0, 0, 1}},
      {{1, 1, 0}, {1, 0, 1}},
  };
  for (auto& pads : pad_choices) {
    Resolution P = padded_resolution(A, R, pads);
    CHECK(e_element(s, M, P) == base);
  }
}
