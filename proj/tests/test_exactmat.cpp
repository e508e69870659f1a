#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcomp/error.hpp"
#include "weylcomp/exactmat.hpp"

using namespace weylcomp;

TEST_CASE("rationals print and parse exactly") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("mat_mul examples") {
  CHECK(mat_mul(ExactMatrix::identity(2), ExactMatrix::identity(2)) == ExactMatrix::identity(2));
  CHECK(mat_mul(ExactMatrix{{-1, 0}, {0, 1}}, ExactMatrix{{1, 0}, {0, -1}}) ==
        ExactMatrix{{-1, 0}, {0, -1}});
  CHECK_THROWS_AS(mat_mul(ExactMatrix(2, 3), ExactMatrix(2, 3)), Error);
}

TEST_CASE("quaternion generators multiply to an order-4 element") {
  // rho(x) = diag(i, -i), rho(y) = [[0,-1],[1,0]], so rho(xy) = [[0,-i],[-i,0]].
  auto gens = quaternion_generators();
  const GaussianRational xy[] = {{0, 0}, {0, -1}, {0, -1}, {0, 0}};
  ExactMatrix expected = ExactMatrix::realify(2, 2, xy);
  ExactMatrix p = mat_mul(gens[0], gens[1]);
  CHECK(p == expected);
  CHECK(p == oracle::naive_mul(gens[0], gens[1]));
  ExactMatrix p2 = mat_mul(p, p);
  CHECK_FALSE(p2.is_identity());
  CHECK(mat_mul(p2, p2).is_identity());
}

TEST_CASE("mat_inverse examples") {
  CHECK(mat_inverse(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
  CHECK(mat_inverse(ExactMatrix{{0, 1}, {1, 0}}) == ExactMatrix{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(mat_inverse(ExactMatrix{{1, 2}, {2, 4}}), Error);

  std::mt19937 rng(7);
  for (int k = 0; k < 25; ++k) {
    ExactMatrix u = oracle::random_unimodular2(rng);
    // Adjugate oracle: for det 1, inv [[a,b],[c,d]] = [[d,-b],[-c,a]].
    ExactMatrix adj(2, 2);
    adj(0, 0) = u(1, 1);
    adj(0, 1) = -u(0, 1);
    adj(1, 0) = -u(1, 0);
    adj(1, 1) = u(0, 0);
    ExactMatrix inv = mat_inverse(u);
    CHECK(inv == adj);
    CHECK(inv.is_integral());
  }
}

TEST_CASE("mat_rank examples") {
  CHECK(mat_rank(ExactMatrix(3, 3)) == 0);
  CHECK(mat_rank(ExactMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}} - ExactMatrix::identity(3)) == 1);
  CHECK(mat_rank(ExactMatrix{{2, -1}, {-3, 2}}) == 2);
}

TEST_CASE("determinant and det(I - tA) examples") {
  CHECK(determinant(ExactMatrix::identity(2)) == 1);
  CHECK(det_one_minus_t(ExactMatrix::identity(2)) == ExactPoly({1, -2, 1}));
  CHECK(det_one_minus_t(ExactMatrix{{0, -1}, {1, -1}}) == ExactPoly({1, 1, 1}));
  CHECK(determinant(ExactMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("realify rejects nothing and doubles dimensions") {
  const GaussianRational z[] = {{1, 2}};
  ExactMatrix m = ExactMatrix::realify(1, 1, z);
  CHECK(m == ExactMatrix{{1, -2}, {2, 1}});
}

TEST_CASE("polynomial division and gcd") {
  ExactPoly a = ExactPoly::one_minus_t_pow(4);  // (1-t)(1+t)(1+t^2)
  ExactPoly b = ExactPoly::one_minus_t_pow(2);
  PolyDivision d = divide(a, b);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotient == ExactPoly({1, 0, 1}));
  CHECK(gcd(a, ExactPoly::one_minus_t_pow(6)) == gcd(b, b));
  auto s = series_expand(ExactPoly::constant(1), b, 6);
  CHECK(s == std::vector<Rational>{1, 0, 1, 0, 1, 0});
}

TEST_CASE("json round trip") {
  ExactMatrix m(2, 2, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5)});
  auto j = to_json(m);
  CHECK(j.dump() == R"([["1/2","-3"],["0","7/5"]])");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(nlohmann::json::parse("[[1,2],[3,4]]")) == ExactMatrix{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[1,2],[3]]")), Error);
}

TEST_CASE("property: associativity, inverse round trip, multiplicative det, rank-nullity") {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng), m = dim(rng), k = dim(rng), l = dim(rng);
    ExactMatrix a = oracle::random_int_matrix(rng, n, m, -3, 3);
    ExactMatrix b = oracle::random_int_matrix(rng, m, k, -3, 3);
    ExactMatrix c = oracle::random_int_matrix(rng, k, l, -3, 3);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    CHECK(mat_mul(a, b) == oracle::naive_mul(a, b));

    ExactMatrix sq = oracle::random_int_matrix(rng, n, n, -4, 4);
    ExactMatrix sq2 = oracle::random_int_matrix(rng, n, n, -4, 4);
    CHECK(determinant(sq) == oracle::laplace_det(sq));
    CHECK(determinant(mat_mul(sq, sq2)) == determinant(sq) * determinant(sq2));
    if (determinant(sq) != 0) {
      CHECK(mat_mul(sq, mat_inverse(sq)).is_identity());
      CHECK(mat_mul(mat_inverse(sq), sq).is_identity());
    } else {
      CHECK_THROWS_AS(mat_inverse(sq), Error);
    }

    ExactMatrix kb = kernel_basis(a);
    CHECK(mat_rank(a) + kb.cols() == a.cols());
    if (kb.cols() > 0) {
      CHECK(mat_mul(a, kb) == ExactMatrix(a.rows(), kb.cols()));
      CHECK(mat_rank(kb) == kb.cols());
    }
  }
}

TEST_CASE("property: det(I - tA) at t = 1 equals det(I - A)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    ExactMatrix a = oracle::random_int_matrix(rng, n, n, -3, 3);
    ExactPoly p = det_one_minus_t(a);
    Rational at1 = 0;
    for (const auto& c : p.coefficients()) at1 += c;
    CHECK(at1 == oracle::laplace_det(ExactMatrix::identity(n) - a));
    CHECK(p.coeff(n) == oracle::laplace_det(a * Rational(-1)));
  }
}
