#include <cmath>
#include <doctest.h>
#include <random>

#include "test_util.hpp"
#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"
#include "walkzeta/models.hpp"

using namespace walkzeta;
using wztest::cofactor_determinant;
using wztest::multiset_match_distance;
using wztest::naive_product;
using wztest::random_matrix;

namespace {
const ComplexMatrix kSwap{{0.0, 1.0}, {1.0, 0.0}};
}

TEST_SUITE("linalg") {

TEST_CASE("product: identity is neutral") {
  std::mt19937 rng(11);
  const ComplexMatrix x = random_matrix(rng, 3, 3);
  CHECK(max_abs_diff(ComplexMatrix::identity(3) * x, x) == 0.0);
}

TEST_CASE("product: swap matrix is an involution") {
  CHECK(max_abs_diff(kSwap * kSwap, ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("product matches the naive triple loop") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 3, 3);
    const ComplexMatrix b = random_matrix(rng, 3, 3);
    CHECK(max_abs_diff(a * b, naive_product(a, b)) < 1e-14);
  }
}

TEST_CASE("product: inner dimension mismatch throws") {
  std::mt19937 rng(13);
  CHECK_THROWS_AS(random_matrix(rng, 2, 3) * random_matrix(rng, 2, 3), DimensionError);
}

TEST_CASE("determinant of the identity") {
  CHECK(determinant(ComplexMatrix::identity(4)) == Complex(1.0, 0.0));
}

TEST_CASE("determinant of an upper-triangular matrix is the diagonal product") {
  ComplexMatrix m{{Complex(2.0, 0.0), Complex(0.4, 1.0), Complex(-3.0, 0.2)},
                  {Complex(0.0, 0.0), Complex(0.0, 3.0), Complex(7.0, 0.0)},
                  {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(-1.0, 0.0)}};
  CHECK(std::abs(determinant(m) - Complex(0.0, -6.0)) < 1e-14);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_matrix(rng, 4, 4);
    const Complex oracle = cofactor_determinant(m);
    CHECK(std::abs(determinant(m) - oracle) < 1e-12 * std::abs(oracle));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(15);
  for (std::size_t n : {2u, 3u, 5u, 6u}) {
    const ComplexMatrix a = random_matrix(rng, n, n);
    const ComplexMatrix b = random_matrix(rng, n, n);
    const Complex lhs = determinant(a * b);
    const Complex rhs = determinant(a) * determinant(b);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("row transposition flips the determinant sign") {
  std::mt19937 rng(16);
  const ComplexMatrix m = random_matrix(rng, 4, 4);
  for (const auto& [r1, r2] : std::vector<std::pair<std::size_t, std::size_t>>{
           {0, 1}, {0, 3}, {1, 2}}) {
    ComplexMatrix swapped = m;
    for (std::size_t j = 0; j < 4; ++j) std::swap(swapped(r1, j), swapped(r2, j));
    CHECK(std::abs(determinant(swapped) + determinant(m)) < 1e-12);
  }
}

TEST_CASE("determinant requires a square matrix") {
  std::mt19937 rng(17);
  CHECK_THROWS_AS(determinant(random_matrix(rng, 2, 3)), DimensionError);
}

TEST_CASE("eigenvalues of a diagonal matrix") {
  ComplexMatrix m(3, 3);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 1) = Complex(-1.0, 0.0);
  m(2, 2) = Complex(0.0, 1.0);
  CHECK(multiset_match_distance(eigenvalues(m),
                                {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.0, 1.0)}) <
        1e-14);
}

TEST_CASE("three-state Grover F-type block at zero momentum") {
  // all phases are 1 at zero momentum, so the block is the coin itself
  const WalkModel grover = three_state_qw(std::acos(-1.0 / 3.0), Shift::F);
  CHECK(multiset_match_distance(
            eigenvalues(grover.coin),
            {Complex(-1.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0)}) < 1e-10);
}

TEST_CASE("eigenvalue sum and product match trace and determinant") {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_matrix(rng, 3, 3);
    Complex sum(0.0, 0.0), product(1.0, 0.0);
    for (const Complex& lambda : eigenvalues(m)) {
      sum += lambda;
      product *= lambda;
    }
    CHECK(std::abs(sum - trace(m)) < 1e-10);
    CHECK(std::abs(product - determinant(m)) < 1e-10);
  }
}

TEST_CASE("eigenvalues size cap") {
  CHECK_THROWS_AS(eigenvalues(ComplexMatrix::identity(65)), SizeCapError);
}

TEST_CASE("trace of power: identity and swap") {
  CHECK(trace_of_power(ComplexMatrix::identity(5), 3) == Complex(5.0, 0.0));
  CHECK(std::abs(trace_of_power(kSwap, 2) - Complex(2.0, 0.0)) == 0.0);
  CHECK(std::abs(trace_of_power(kSwap, 3)) == 0.0);
}

TEST_CASE("trace of power matches eigenvalue power sums") {
  std::mt19937 rng(19);
  for (std::size_t n : {3u, 5u, 8u}) {
    const ComplexMatrix m = random_matrix(rng, n, n);
    const std::vector<Complex> lambdas = eigenvalues(m);
    for (int r : {1, 5, 12}) {
      Complex expected(0.0, 0.0);
      for (const Complex& lambda : lambdas) expected += std::pow(lambda, r);
      CHECK(std::abs(trace_of_power(m, r) - expected) < 1e-9 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("traces_of_powers agrees with trace_of_power") {
  std::mt19937 rng(20);
  const ComplexMatrix m = random_matrix(rng, 4, 4);
  const std::vector<Complex> all = traces_of_powers(m, 6);
  for (int r = 1; r <= 6; ++r)
    CHECK(std::abs(all[std::size_t(r - 1)] - trace_of_power(m, r)) < 1e-12);
}

TEST_CASE("kronecker: I2 x swap has the block-diagonal swap structure") {
  const ComplexMatrix out = kronecker(ComplexMatrix::identity(2), kSwap);
  const ComplexMatrix expected{{0.0, 1.0, 0.0, 0.0},
                               {1.0, 0.0, 0.0, 0.0},
                               {0.0, 0.0, 0.0, 1.0},
                               {0.0, 0.0, 1.0, 0.0}};
  CHECK(max_abs_diff(out, expected) == 0.0);
}

TEST_CASE("kronecker: I1 is neutral") {
  std::mt19937 rng(21);
  const ComplexMatrix x = random_matrix(rng, 3, 4);
  CHECK(max_abs_diff(kronecker(ComplexMatrix::identity(1), x), x) == 0.0);
}

TEST_CASE("kronecker mixed-product law") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2, 2);
    const ComplexMatrix b = random_matrix(rng, 2, 2);
    const ComplexMatrix c = random_matrix(rng, 2, 2);
    const ComplexMatrix d = random_matrix(rng, 2, 2);
    CHECK(max_abs_diff(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("hadamard: all-ones is neutral, swap is idempotent") {
  std::mt19937 rng(23);
  const ComplexMatrix x = random_matrix(rng, 3, 3);
  ComplexMatrix ones(3, 3);
  for (auto& z : ones.data()) z = Complex(1.0, 0.0);
  CHECK(max_abs_diff(hadamard(x, ones), x) == 0.0);
  CHECK(max_abs_diff(hadamard(kSwap, kSwap), kSwap) == 0.0);
}

TEST_CASE("hadamard: shape mismatch throws") {
  std::mt19937 rng(24);
  CHECK_THROWS_AS(hadamard(random_matrix(rng, 2, 3), random_matrix(rng, 3, 2)),
                  DimensionError);
}

TEST_CASE("hadamard square of the three-state coin gives the correlated-coin entries") {
  const double eta = 0.8;
  const double c = std::cos(eta), s = std::sin(eta);
  const ComplexMatrix sq = hadamard(three_state_qw(eta, Shift::M).coin,
                                    three_state_qw(eta, Shift::M).coin);
  CHECK(std::abs(sq(0, 0) - (1.0 + c) * (1.0 + c) / 4.0) < 1e-15);
  CHECK(std::abs(sq(0, 1) - s * s / 2.0) < 1e-15);
  CHECK(std::abs(sq(0, 2) - (1.0 - c) * (1.0 - c) / 4.0) < 1e-15);
  CHECK(std::abs(sq(1, 1) - c * c) < 1e-15);
}

TEST_CASE("unitary coins keep eigenvalues on the unit circle") {
  const std::vector<WalkModel> models{
      three_state_qw(std::acos(-1.0 / 3.0), Shift::M),
      three_state_qw(1.3, Shift::F),
      four_state_qw_1d(0.5, Shift::F),
      four_state_qw_2d(0.5, Shift::M),
      generalized_grover_coin(4, 1.0, Shift::F, GroverLattice::OneDimFourState),
      generalized_grover_coin(6, 1.0, Shift::F, GroverLattice::TorusD, 3),
  };
  for (const WalkModel& model : models)
    for (const Complex& lambda : eigenvalues(model.coin))
      CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-10);
}

}  // TEST_SUITE
