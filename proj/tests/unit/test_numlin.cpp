#include <doctest.h>

#include <netcx/error.hpp>
#include <netcx/numlin.hpp>
#include <netcx/random.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

#include "../support/oracles.hpp"

using namespace netcx;

namespace {

DenseMatrix gaussian(std::size_t r, std::size_t c, Rng& rng) {
  std::normal_distribution<double> nd;
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = nd(rng);
  return m;
}

// Random matrix of rank exactly `rank` (with probability one).
DenseMatrix low_rank(std::size_t r, std::size_t c, std::size_t rank, Rng& rng) {
  return gaussian(r, rank, rng) * gaussian(rank, c, rng);
}

}  // namespace

TEST_SUITE("numlin") {
  TEST_CASE("numerical_rank examples") {
    CHECK(numerical_rank(DenseMatrix::identity(5)) == 5);
    CHECK(numerical_rank(DenseMatrix(3, 3)) == 0);
    CHECK(numerical_rank(DenseMatrix(0, 0)) == 0);
    CHECK(numerical_rank(DenseMatrix(0, 4)) == 0);
    DenseMatrix u(4, 1, {1, -2, 3, 0.5});
    DenseMatrix v(1, 4, {2, 1, -1, 4});
    CHECK(numerical_rank(u * v) == 1);
  }

  TEST_CASE("non-finite input is rejected") {
    DenseMatrix m(2, 2);
    m(0, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(numerical_rank(m), InputError);
    m(0, 1) = std::nan("");
    CHECK_THROWS_AS(numerical_rank(m), InputError);
    CHECK_THROWS_AS(numerical_rank(DenseMatrix::identity(2), -1.0), InputError);
  }

  TEST_CASE("explicit tolerance") {
    DenseMatrix m = DenseMatrix::diagonal(std::vector<double>{1.0, 1e-3, 1e-9});
    CHECK(numerical_rank(m) == 3);
    CHECK(numerical_rank(m, 1e-6) == 2);
    CHECK(numerical_rank(m, 0.5) == 1);
  }

  TEST_CASE("rank of transpose and of permutations") {
    Rng rng(1);
    for (int it = 0; it < 100; ++it) {
      const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
      const std::size_t k = 1 + rng() % std::min(r, c);
      auto m = low_rank(r, c, k, rng);
      const auto rank = numerical_rank(m);
      CHECK(rank == k);
      CHECK(numerical_rank(m.transposed()) == rank);
      CHECK(testing::elimination_rank(m) == rank);
      // swap two rows and two columns
      DenseMatrix p = m;
      const std::size_t i = rng() % r, j = rng() % r;
      for (std::size_t col = 0; col < c; ++col) std::swap(p(i, col), p(j, col));
      const std::size_t a = rng() % c, b = rng() % c;
      for (std::size_t row = 0; row < r; ++row) std::swap(p(row, a), p(row, b));
      CHECK(numerical_rank(p) == rank);
    }
  }

  TEST_CASE("gaussian square matrices are full rank") {
    Rng rng(2);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(numerical_rank(gaussian(n, n, rng)) == n);
  }

  TEST_CASE("observability_stack examples") {
    auto s = observability_stack(DenseMatrix::identity(2), DenseMatrix(2, 2));
    CHECK(s == DenseMatrix(4, 2, {1, 0, 0, 1, 0, 0, 0, 0}));

    Rng rng(4);
    auto z = observability_stack(DenseMatrix(3, 3), gaussian(3, 3, rng));
    CHECK(z == DenseMatrix(9, 3));

    auto d = observability_stack(DenseMatrix::identity(2),
                                 DenseMatrix::diagonal(std::vector<double>{1.0, 2.0}));
    CHECK(d == DenseMatrix(4, 2, {1, 0, 0, 1, 1, 0, 0, 2}));

    CHECK_THROWS_AS(observability_stack(DenseMatrix(2, 3), DenseMatrix(2, 2)), InputError);
    CHECK_THROWS_AS(observability_stack(DenseMatrix(2, 2), DenseMatrix(3, 3)), InputError);
  }

  TEST_CASE("observability rank is similarity invariant") {
    Rng rng(8);
    for (int it = 0; it < 100; ++it) {
      const std::size_t n = 2 + rng() % 6;
      const std::size_t k = 1 + rng() % n;
      auto c = low_rank(n, n, k, rng);
      // Few distinct diagonal values leave nontrivial unobservable subspaces.
      std::vector<double> diag(n);
      for (auto& x : diag) x = 0.2 * static_cast<double>(rng() % 3) - 0.2;
      auto a = DenseMatrix::diagonal(diag);
      // T = (scaled permutation) * (unit upper-triangular), both with exact inverses.
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      DenseMatrix t(n, n), tinv(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        const double s = 0.5 + static_cast<double>(rng() % 100) / 100.0;
        t(perm[i], i) = s;
        tinv(i, perm[i]) = 1.0 / s;
      }
      DenseMatrix u = DenseMatrix::identity(n), uinv = DenseMatrix::identity(n);
      if (n >= 2) {
        u(0, 1) = 0.7;
        uinv(0, 1) = -0.7;
      }
      const DenseMatrix tt = t * u;
      const DenseMatrix tt_inv = uinv * tinv;
      const auto r1 = numerical_rank(observability_stack(c, a));
      const auto r2 = numerical_rank(observability_stack(c * tt, tt_inv * a * tt));
      CHECK(r1 == r2);
    }
  }

  TEST_CASE("matrix arithmetic") {
    DenseMatrix a(2, 2, {1, 2, 3, 4});
    DenseMatrix b(2, 2, {0, 1, 1, 0});
    CHECK(a * b == DenseMatrix(2, 2, {2, 1, 4, 3}));
    CHECK(a + b == DenseMatrix(2, 2, {1, 3, 4, 4}));
    CHECK(a - a == DenseMatrix(2, 2));
    CHECK(2.0 * b == DenseMatrix(2, 2, {0, 2, 2, 0}));
    CHECK(a.transposed() == DenseMatrix(2, 2, {1, 3, 2, 4}));
    CHECK_THROWS_AS(DenseMatrix(2, 2, std::vector<double>{1.0}), InputError);
    CHECK_THROWS_AS(a * DenseMatrix(3, 1), InputError);
  }
}
