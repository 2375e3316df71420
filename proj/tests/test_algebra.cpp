#include "hallbridge/algebra.hpp"

#include <doctest.h>

using namespace hb;

namespace {

const char* kA2 = "q = 2\nvertices = 2\narrow a 1 2\n";
const char* kA3Rad2 =
    "q = 2\nvertices = 3\narrow a 1 2\narrow b 2 3\nrelation a b\n";
const char* kA4Rad2 =
    "q = 2\nvertices = 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\n"
    "relation a b\nrelation b c\n";

}  // namespace

TEST_CASE("A2 path algebra basics") {
  Algebra A = Algebra::parse(kA2);
  CHECK(A.q() == 2);
  CHECK(A.vertices() == 2);
  CHECK(A.dim() == 3);  // e1, e2, a

  const Rep& P1 = A.projective(0);
  CHECK(P1.dim == std::vector<int>{1, 1});
  const Rep& P2 = A.projective(1);
  CHECK(P2.dim == std::vector<int>{0, 1});

  const Rep& S1 = A.simple(0);
  CHECK(S1.dim == std::vector<int>{1, 0});
  CHECK(S1.mat[0].is_zero());
  CHECK(A.simple(1).dim == std::vector<int>{0, 1});

  // the arrow acts as identity on P1
  CHECK(P1.mat[0] == FqMatrix::identity(2, 1));
}

TEST_CASE("monomial relations truncate paths") {
  Algebra A = Algebra::parse(kA3Rad2);
  // paths: e1,e2,e3,a,b but not ab
  CHECK(A.dim() == 5);
  CHECK(A.path_index(0, {0, 1}) == -1);
  CHECK(A.path_index(0, {0}) >= 0);

  CHECK(A.projective(0).dim == std::vector<int>{1, 1, 0});
  CHECK(A.projective(1).dim == std::vector<int>{0, 1, 1});
  CHECK(A.projective(2).dim == std::vector<int>{0, 0, 1});
}

TEST_CASE("A4 rad-square-zero projectives") {
  Algebra A = Algebra::parse(kA4Rad2);
  CHECK(A.dim() == 7);  // 4 trivial + 3 arrows
  CHECK(A.projective(0).dim == std::vector<int>{1, 1, 0, 0});
  CHECK(A.projective(1).dim == std::vector<int>{0, 1, 1, 0});
  CHECK(A.projective(2).dim == std::vector<int>{0, 0, 1, 1});
  CHECK(A.projective(3).dim == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("projective structure maps compose correctly") {
  Algebra A = Algebra::parse(kA4Rad2);
  // rad^2 = 0: composite of consecutive arrow actions vanishes on each P_i
  for (int i = 0; i < 4; ++i) {
    const Rep& P = A.projective(i);
    CHECK((P.mat[1] * P.mat[0]).is_zero());
    CHECK((P.mat[2] * P.mat[1]).is_zero());
  }
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(Algebra::parse("q = 4\nvertices = 1\n"), ParseError);
  CHECK_THROWS_AS(Algebra::parse("q = 2\nvertices = 2\narrow a 1 3\n"), ParseError);
  CHECK_THROWS_AS(
      Algebra::parse("q = 2\nvertices = 2\narrow a 1 2\nrelation a a\n"),
      ParseError);  // non-composable relation
  // a loop with no relation is infinite dimensional
  CHECK_THROWS_AS(Algebra::parse("q = 2\nvertices = 1\narrow a 1 1\n"), ParseError);
  CHECK_THROWS_AS(Algebra::parse("vertices = 2\n"), ParseError);
}

TEST_CASE("loop with nilpotency relation is finite") {
  Algebra A = Algebra::parse("q = 3\nvertices = 1\narrow a 1 1\nrelation a a\n");
  CHECK(A.dim() == 2);  // e1, a
  const Rep& P = A.projective(0);
  CHECK(P.dim == std::vector<int>{2});
  CHECK((P.mat[0] * P.mat[0]).is_zero());
  CHECK_FALSE(P.mat[0].is_zero());
}

TEST_CASE("comments and whitespace tolerated") {
  Algebra A = Algebra::parse("# A2\nq = 2\n\nvertices = 2\narrow a 1 2  # arrow\n");
  CHECK(A.dim() == 3);
}
