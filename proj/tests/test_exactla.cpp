#include <doctest.h>

#include "dijlat/exactla.hpp"

using namespace dijlat;

namespace {

IntMat diag_of(const SnfResult& s, std::size_t rows, std::size_t cols) {
  IntMat d(rows, cols);
  for (std::size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
  return d;
}

Int det(const IntMat& m) {
  REQUIRE(m.rows() == m.cols());
  // expansion via fraction-free elimination is overkill here; matrices are
  // tiny, use recursive cofactor expansion
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMat sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        sub(i - 1, cc++) = m(i, k);
      }
    }
    Int term = m(0, j) * det(sub);
    acc += (j % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(to_rat(IntMat::identity(2))) == 2);
  IntMat m{{1, 0, 0, 1}, {0, 1, 1, 0}};
  CHECK(rank(m) == 2);
  CHECK(rank(IntMat(3, 4)) == 0);
  // rank agrees with count of nonzero SNF divisors
  IntMat a{{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  CHECK(rank(a) == snf(a).diag.size());
}

TEST_CASE("solve_linear") {
  RatMat id = to_rat(IntMat::identity(2));
  auto x = solve_linear(id, {Rat(3), Rat(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 3);
  CHECK((*x)[1] == 5);

  RatMat wide{{Rat(1), Rat(1)}};
  auto y = solve_linear(wide, {Rat(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == 2);

  RatMat tall{{Rat(1)}, {Rat(1)}};
  CHECK(!solve_linear(tall, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("hnf") {
  // lat{2,3} = Z: stacking 2 and 3 as rows of a one-column matrix
  IntMat m{{2}, {3}};
  auto r = hnf(m);
  CHECK(r.h(0, 0) == 1);
  CHECK(r.h(1, 0) == 0);
  CHECK(mat_mul(r.u, m) == r.h);
  CHECK(abs(det(r.u)) == 1);

  auto id = hnf(IntMat::identity(3));
  CHECK(id.h == IntMat::identity(3));
  CHECK(id.u == IntMat::identity(3));

  IntMat g{{4}, {6}};
  auto rg = hnf(g);
  CHECK(rg.h(0, 0) == 2);
  CHECK(rg.h(1, 0) == 0);

  // idempotence
  IntMat a{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  auto h1 = hnf(a);
  auto h2 = hnf(h1.h);
  CHECK(h2.h == h1.h);
}

TEST_CASE("snf") {
  IntMat d{{2, 0}, {0, 3}};
  auto s = snf(d);
  REQUIRE(s.diag.size() == 2);
  CHECK(s.diag[0] == 1);
  CHECK(s.diag[1] == 6);
  CHECK(mat_mul(mat_mul(s.leftU, d), s.rightV) == diag_of(s, 2, 2));
  CHECK(abs(det(s.leftU)) == 1);
  CHECK(abs(det(s.rightV)) == 1);

  auto si = snf(IntMat::identity(4));
  REQUIRE(si.diag.size() == 4);
  for (auto& v : si.diag) CHECK(v == 1);

  IntMat m{{1, 0, 0, 1}, {0, 1, 1, 0}};
  auto sm = snf(m);
  REQUIRE(sm.diag.size() == 2);
  CHECK(sm.diag[0] == 1);
  CHECK(sm.diag[1] == 1);

  // transform identity + divisibility chain on a messier input
  IntMat a{{6, 10, 15}, {10, 4, 6}, {0, 30, 30}};
  auto sa = snf(a);
  CHECK(mat_mul(mat_mul(sa.leftU, a), sa.rightV) == diag_of(sa, 3, 3));
  for (std::size_t i = 0; i + 1 < sa.diag.size(); ++i) CHECK(sa.diag[i + 1] % sa.diag[i] == 0);
  CHECK(abs(det(sa.leftU)) == 1);
  CHECK(abs(det(sa.rightV)) == 1);
}

TEST_CASE("sublattice_index") {
  IntMat gen{{2}};
  IntMat amb{{1}};
  auto i = sublattice_index(gen, amb);
  REQUIRE(i.has_value());
  CHECK(*i == 2);

  IntMat gen2{{2}, {3}};
  auto i2 = sublattice_index(gen2, amb);
  REQUIRE(i2.has_value());
  CHECK(*i2 == 1);

  IntMat gen3{{1, 0}};
  IntMat amb3{{1, 0}, {0, 1}};
  CHECK(!sublattice_index(gen3, amb3).has_value());

  IntMat outside{{1, 1}};
  IntMat amb4{{2, 0}};
  CHECK_THROWS(sublattice_index(outside, amb4));
}

TEST_CASE("saturate") {
  RatMat s1{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
  auto b1 = saturate(s1);
  CHECK(b1.rows() == 2);
  auto idx = sublattice_index(IntMat::identity(2), b1);
  REQUIRE(idx.has_value());
  CHECK(*idx == 1);

  RatMat s2{{Rat(1), Rat(1)}};
  auto b2 = saturate(s2);
  REQUIRE(b2.rows() == 1);
  CHECK(abs(b2(0, 0)) == 1);
  CHECK(b2(0, 0) == b2(0, 1));

  RatMat s3{{Rat(2), Rat(4)}};
  auto b3 = saturate(s3);
  REQUIRE(b3.rows() == 1);
  CHECK(abs(b3(0, 0)) == 1);
  CHECK(b3(0, 1) == 2 * b3(0, 0));

  // same rational row space, and random integral vectors of the space are
  // integer combinations of the basis
  RatMat s4{{Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(10), Rat(4)}};
  auto b4 = saturate(s4);
  CHECK(b4.rows() == 2);
  CHECK(rank(to_rat(b4)) == 2);
  // 1*(2,4,6)/2 + ... spot: (1,2,3) and (0,5,2) are integral points of the span
  IntMat probes{{1, 2, 3}, {0, 5, 2}};
  auto ix = sublattice_index(probes, b4);
  REQUIRE(ix.has_value());  // probes inside lat(b4), no throw
}
