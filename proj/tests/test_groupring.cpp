#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heiscurve/groupring.hpp"
#include "heiscurve/intmat.hpp"

using namespace heis;

namespace {

RingElem random_elem(std::mt19937& rng, long long n, int terms) {
  std::uniform_int_distribution<long long> e(0, n - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  RingElem r(n);
  for (int t = 0; t < terms; ++t)
    r.add(HeisElement(n, e(rng), e(rng), e(rng)), c(rng));
  return r;
}

}  // namespace

TEST_CASE("ring multiplication") {
  long long n = 3;
  RingElem one = ring_one(n);
  RingElem a(heis_alpha(n));
  RingElem b(heis_beta(n));
  // (1 + a)(1 + b) = 1 + a + b + b t a
  RingElem prod = ring_mul(one + a, one + b);
  RingElem expect = one + a + b + RingElem(HeisElement(n, 1, 1, 1));
  CHECK(prod == expect);
  std::mt19937 rng(3);
  RingElem r = random_elem(rng, 4, 5);
  CHECK(ring_mul(r, ring_one(4)) == r);
  CHECK_THROWS_AS(ring_mul(RingElem(heis_alpha(3)), RingElem(heis_alpha(4))),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(7);
  for (long long n : {2, 3, 5}) {
    for (int t = 0; t < 15; ++t) {
      RingElem x = random_elem(rng, n, 4);
      RingElem y = random_elem(rng, n, 4);
      RingElem z = random_elem(rng, n, 4);
      CHECK(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)));
      CHECK(ring_mul(x, y + z) == ring_mul(x, y) + ring_mul(x, z));
      CHECK(ring_mul(x + y, z) == ring_mul(x, z) + ring_mul(y, z));
    }
  }
}

TEST_CASE("augmentation") {
  CHECK(augmentation(sigma_elements(5).sigma1) == 5);
  CHECK(augmentation(RingElem(3)) == 0);
  CHECK(augmentation(sigma_elements(4).sigma3star) == 8);
  std::mt19937 rng(11);
  RingElem x = random_elem(rng, 3, 5);
  RingElem y = random_elem(rng, 3, 5);
  CHECK(augmentation(ring_mul(x, y)) == augmentation(x) * augmentation(y));
}

TEST_CASE("sigma elements") {
  // odd case: Sigma3* = Sigma3 with n terms
  SigmaElements s3 = sigma_elements(3);
  CHECK(s3.sigma3star == s3.sigma3);
  CHECK(s3.sigma3star.term_count() == 3);
  CHECK(s3.sigma3star.coeff(heis_identity(3)) == 1);
  CHECK(s3.sigma3star.coeff(HeisElement(3, 1, 1, 1)) == 1);
  // even case: Sigma3' has 2n distinct terms and factors as (1+t^{n/2})Sigma3
  SigmaElements s4 = sigma_elements(4);
  CHECK(s4.sigma3star.term_count() == 8);
  RingElem factor =
      ring_one(4) + RingElem(heis_power(heis_tau(4), 2));
  CHECK(s4.sigma3star == ring_mul(factor, s4.sigma3));

  for (long long n = 2; n <= 8; ++n) {
    SigmaElements s = sigma_elements(n);
    HeisElement ab = compose(heis_alpha(n), heis_beta(n));
    // right multiplication by the generating element fixes each sum
    CHECK(ring_mul(s.sigma1, RingElem(heis_alpha(n))) == s.sigma1);
    CHECK(ring_mul(s.sigma2, RingElem(heis_beta(n))) == s.sigma2);
    for (long long m = 0; m < 2 * n; ++m)
      CHECK(ring_mul(s.sigma3star, RingElem(heis_power(ab, m))) ==
            s.sigma3star);
    if (n % 2 == 0) {
      RingElem tau_half(heis_power(heis_tau(n), n / 2));
      CHECK(ring_mul(s.sigma3star, tau_half) == s.sigma3star);
    }
  }
}

TEST_CASE("sigma1 coset pattern") {
  // Sigma_1 b^j a^i t^k = Sigma_1 b^j t^{k - i j}
  for (long long n : {3, 4, 5}) {
    RingElem s1 = sigma_elements(n).sigma1;
    for (const HeisElement& g : enumerate_elements(n)) {
      RingElem lhs = ring_mul(s1, RingElem(g));
      HeisElement reduced(n, 0, g.j, g.k - g.i * g.j);
      CHECK(lhs == ring_mul(s1, RingElem(reduced)));
    }
  }
}

TEST_CASE("sigma product sweeps the group uniformly") {
  for (long long n = 2; n <= 5; ++n) {
    SigmaElements s = sigma_elements(n);
    RingElem prod = ring_mul(ring_mul(s.sigma1, s.sigma2), s.sigma3star);
    long long mult = n % 2 == 1 ? 1 : 2;
    CHECK(prod == ring_scale(full_group_sum(n), mult));
  }
}

TEST_CASE("left multiplication matrices") {
  long long n = 2;
  CHECK(left_mult_matrix(ring_one(n)).is_identity());
  std::mt19937 rng(13);
  RingElem x = random_elem(rng, n, 3);
  RingElem y = random_elem(rng, n, 3);
  CHECK(left_mult_matrix(ring_mul(x, y)) ==
        left_mult_matrix(x) * left_mult_matrix(y));
}

TEST_CASE("intersection of the flattened summand images has rank one") {
  // The block-diagonal image of (r1, r2, r3) -> (S1 r1, S2 r2, S3* r3)
  // meets the image of r4 -> (r4, a r4, ab r4) in a rank-one lattice.
  for (long long n = 2; n <= 4; ++n) {
    SigmaElements s = sigma_elements(n);
    long long N = n * n * n;
    IntMatrix bu(3 * N, 3 * N);
    auto put = [&](const IntMatrix& b, long long r0, long long c0) {
      for (long long r = 0; r < N; ++r)
        for (long long c = 0; c < N; ++c) bu.at(r0 + r, c0 + c) = b.at(r, c);
    };
    put(left_mult_matrix(s.sigma1), 0, 0);
    put(left_mult_matrix(s.sigma2), N, N);
    put(left_mult_matrix(s.sigma3star), 2 * N, 2 * N);
    IntMatrix bw(3 * N, N);
    IntMatrix ida = left_mult_matrix(RingElem(heis_alpha(n)));
    IntMatrix idab =
        left_mult_matrix(RingElem(compose(heis_alpha(n), heis_beta(n))));
    for (long long r = 0; r < N; ++r) {
      bw.at(r, r) = 1;
      for (long long c = 0; c < N; ++c) {
        bw.at(N + r, c) = ida.at(r, c);
        bw.at(2 * N + r, c) = idab.at(r, c);
      }
    }
    long long ru = int_rank(bu);
    long long rw = int_rank(bw);
    IntMatrix joint(3 * N, 3 * N + N);
    for (long long r = 0; r < 3 * N; ++r) {
      for (long long c = 0; c < 3 * N; ++c) joint.at(r, c) = bu.at(r, c);
      for (long long c = 0; c < N; ++c) joint.at(r, 3 * N + c) = bw.at(r, c);
    }
    long long rj = int_rank(joint);
    long long expected_u = n % 2 == 1 ? 3 * n * n : 5 * n * n / 2;
    CHECK(ru == expected_u);
    CHECK(rw == N);
    CHECK(ru + rw - rj == 1);  // intersection rank
  }
}
