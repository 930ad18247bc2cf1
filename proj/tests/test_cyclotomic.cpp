#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heiscurve/cyclotomic.hpp"

using namespace heis;

namespace {

std::vector<long long> coeffs_of(const std::vector<mpz_class>& p) {
  std::vector<long long> out;
  for (const mpz_class& c : p) out.push_back(c.get_si());
  return out;
}

CycScalar random_scalar(std::mt19937& rng, long long n) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<mpq_class> c(cyc_field(n).deg);
  for (auto& q : c) q = mpq_class(d(rng), 1 + std::abs(d(rng)));
  return CycScalar::from_poly(n, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(coeffs_of(cyclotomic_polynomial(1)) == std::vector<long long>{-1, 1});
  CHECK(coeffs_of(cyclotomic_polynomial(4)) ==
        std::vector<long long>{1, 0, 1});
  CHECK(coeffs_of(cyclotomic_polynomial(6)) ==
        std::vector<long long>{1, -1, 1});
  CHECK(coeffs_of(cyclotomic_polynomial(12)) ==
        std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("zeta powers") {
  CHECK(zeta_power(3, 0) == CycScalar(3, 1));
  CHECK(zeta_power(3, 1) + zeta_power(3, 2) == CycScalar(3, -1));
  CHECK(zeta_power(4, 2) == CycScalar(4, -1));
  for (long long n = 1; n <= 12; ++n) {
    CycScalar sum(n);
    for (long long k = 0; k < n; ++k) sum += zeta_power(n, k);
    CHECK(zeta_power(n, n) == CycScalar(n, 1));
    if (n > 1) CHECK(sum.is_zero());
  }
}

TEST_CASE("field inverse") {
  std::mt19937 rng(19);
  for (long long n : {1, 3, 4, 5, 6, 8}) {
    for (int t = 0; t < 20; ++t) {
      CycScalar z = random_scalar(rng, n);
      if (z.is_zero()) continue;
      CHECK(z * z.inverse() == CycScalar(n, 1));
    }
  }
  CHECK_THROWS_AS(CycScalar(5).inverse(), std::domain_error);
}

TEST_CASE("conjugation") {
  for (long long n : {3, 4, 5, 8}) {
    for (long long k = 0; k < n; ++k)
      CHECK(zeta_power(n, k).conj() == zeta_power(n, -k));
    std::mt19937 rng(29);
    for (int t = 0; t < 10; ++t) {
      CycScalar z = random_scalar(rng, n);
      CHECK(z.conj().conj() == z);
      // z * conj(z) is fixed by conjugation
      CycScalar norm = z * z.conj();
      CHECK(norm.conj() == norm);
    }
  }
}

TEST_CASE("exact rank basics") {
  CHECK(exact_rank(ExactMatrix::identity(5, 4)) == 4);
  CHECK(exact_rank(ExactMatrix(5, 3, 6)) == 0);
  // the 3x4 matrix [[n,0,0,1],[0,n,0,1],[0,0,e3,1]] at n = 3
  ExactMatrix m(1, 3, 4);
  m.at(0, 0) = CycScalar(1, 3);
  m.at(1, 1) = CycScalar(1, 3);
  m.at(2, 2) = CycScalar(1, 3);
  m.at(0, 3) = CycScalar(1, 1);
  m.at(1, 3) = CycScalar(1, 1);
  m.at(2, 3) = CycScalar(1, 1);
  CHECK(exact_rank(m) == 3);
}

TEST_CASE("exact rank cross-checked against a prime field") {
  // Probabilistic cross-check: reduce a random integer matrix mod p and
  // compare ranks (agreement is overwhelming for p = 1000003).
  const long long p = 1000003;
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 25; ++t) {
    long long rows = 4 + t % 3, cols = 5 + t % 2;
    ExactMatrix m(1, rows, cols);
    std::vector<std::vector<long long>> fp(rows, std::vector<long long>(cols));
    for (long long r = 0; r < rows; ++r)
      for (long long c = 0; c < cols; ++c) {
        int v = d(rng);
        m.at(r, c) = CycScalar(1, v);
        fp[r][c] = ((v % p) + p) % p;
      }
    // Gaussian elimination mod p.
    auto powmod = [&](long long b, long long e) {
      long long r = 1;
      b %= p;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      return r;
    };
    long long rank = 0;
    for (long long c = 0; c < cols && rank < rows; ++c) {
      long long piv = -1;
      for (long long r = rank; r < rows; ++r)
        if (fp[r][c]) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(fp[rank], fp[piv]);
      long long inv = powmod(fp[rank][c], p - 2);
      for (long long r = rank + 1; r < rows; ++r) {
        long long f = fp[r][c] * inv % p;
        for (long long cc = c; cc < cols; ++cc)
          fp[r][cc] = ((fp[r][cc] - f * fp[rank][cc]) % p + p) % p;
      }
      ++rank;
    }
    CHECK(exact_rank(m) == rank);
  }
}

TEST_CASE("rank over a genuine cyclotomic field") {
  // [[1, z], [z^2, z^3]] has rank 1 over Q(zeta_8).
  ExactMatrix m(8, 2, 2);
  m.at(0, 0) = CycScalar(8, 1);
  m.at(0, 1) = zeta_power(8, 1);
  m.at(1, 0) = zeta_power(8, 2);
  m.at(1, 1) = zeta_power(8, 3);
  CHECK(exact_rank(m) == 1);
  // Perturb one entry: full rank.
  m.at(1, 1) = zeta_power(8, 3) + CycScalar(8, 1);
  CHECK(exact_rank(m) == 2);
}
