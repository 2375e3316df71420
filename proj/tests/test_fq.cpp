#include "hallbridge/fq.hpp"

#include <doctest.h>

#include <random>

using namespace hb;

namespace {

FqMatrix make(unsigned q, int rows, int cols, std::initializer_list<int> vals) {
  FqMatrix m(q, rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, *it++);
  return m;
}

}  // namespace

TEST_CASE("rank and kernel basics") {
  FqMatrix z(2, 2, 2);
  CHECK(z.rank() == 0);
  CHECK(z.kernel_basis().size() == 2);

  FqMatrix id = FqMatrix::identity(2, 3);
  CHECK(id.rank() == 3);
  CHECK(id.kernel_basis().empty());
  FqVec b{1, 0, 1};
  auto sol = id.solve(b);
  REQUIRE(sol);
  CHECK(*sol == b);

  FqMatrix ones = make(2, 2, 2, {1, 1, 1, 1});
  CHECK(ones.rank() == 1);
  auto kb = ones.kernel_basis();
  REQUIRE(kb.size() == 1);
  CHECK(kb[0] == FqVec{1, 1});
  // oracle: enumerate all 4 vectors
  int null_count = 0;
  for (unsigned x0 = 0; x0 < 2; ++x0)
    for (unsigned x1 = 0; x1 < 2; ++x1)
      if ((x0 + x1) % 2 == 0 && (x0 + x1) % 2 == 0) null_count += 1;
  CHECK(null_count == 2);  // q^{dim kernel}
}

TEST_CASE("solution-set size is q^kernel") {
  std::mt19937 rng(4242);
  for (unsigned q : {2u, 3u})
    for (int trial = 0; trial < 60; ++trial) {
      int rows = 1 + int(rng() % 3), cols = 1 + int(rng() % 3);
      if (rows * cols > 8) continue;
      FqMatrix A(q, rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) A.set(r, c, long(rng() % q));
      FqVec b(rows);
      for (auto& x : b) x = rng() % q;
      // exhaustively count solutions
      long count = 0, total = 1;
      for (int c = 0; c < cols; ++c) total *= q;
      for (long code = 0; code < total; ++code) {
        long t = code;
        FqVec x(cols);
        for (int c = 0; c < cols; ++c) {
          x[c] = unsigned(t % q);
          t /= q;
        }
        if (A.apply(x) == b) ++count;
      }
      auto sol = A.solve(b);
      if (sol) {
        long expect = 1;
        for (size_t k = 0; k < A.kernel_basis().size(); ++k) expect *= q;
        CHECK(count == expect);
        CHECK(A.apply(*sol) == b);
      } else {
        CHECK(count == 0);
      }
    }
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937 rng(99);
  for (unsigned q : {2u, 3u})
    for (int trial = 0; trial < 100; ++trial) {
      int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
      FqMatrix A(q, rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) A.set(r, c, long(rng() % q));
      CHECK(A.rank() == A.transpose().rank());
    }
}

TEST_CASE("inverse and products") {
  FqMatrix m = make(3, 2, 2, {1, 2, 1, 1});
  REQUIRE(m.is_invertible());
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(m * *inv == FqMatrix::identity(3, 2));
  CHECK(make(2, 2, 2, {1, 1, 1, 1}).is_invertible() == false);
}

TEST_CASE("dimension mismatch errors") {
  FqMatrix a(2, 2, 3), b(2, 2, 2);
  CHECK_THROWS_AS(a * a, DimensionError);
  CHECK_THROWS_AS(a + b, DimensionError);
  CHECK_THROWS_AS(a.solve(FqVec{1, 1, 1}), DimensionError);
}

TEST_CASE("block linear map assembles L*X*R terms") {
  // out = L X R over F_2 with X a 2x2 unknown
  FqMatrix L = make(2, 2, 2, {1, 1, 0, 1});
  FqMatrix R = make(2, 2, 2, {0, 1, 1, 0});
  BlockLinMap B(2, {{2, 2}}, {{2, 2}});
  B.add(0, 0, L, R, 1);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    FqMatrix X(2, 2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) X.set(r, c, long(rng() % 2));
    FqVec packed = B.pack_in({X});
    FqVec out = B.matrix().apply(packed);
    FqMatrix expect = L * X * R;
    FqVec eo = B.pack_out({expect});
    CHECK(out == eo);
  }
}

TEST_CASE("combo iteration respects cap") {
  int seen = 0;
  bool full = for_each_combo(2, 3, 100, [&](const FqVec& v) {
    REQUIRE(v.size() == 3);
    ++seen;
    return true;
  });
  CHECK(full);
  CHECK(seen == 8);
  CHECK_THROWS_AS(for_each_combo(2, 30, 1 << 20, [](const FqVec&) { return true; }), CapError);
}
