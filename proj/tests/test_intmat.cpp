#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heiscurve/intmat.hpp"

using namespace heis;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, long long rows, long long cols,
                        int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c) m.at(r, c) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on a known matrix") {
  IntMatrix m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithResult s = smith_normal_form(m);
  CHECK(s.rank == 3);
  REQUIRE(s.factors.size() == 3);
  CHECK(s.factors[0] == 2);
  CHECK(s.factors[1] == 6);
  CHECK(s.factors[2] == 12);
}

TEST_CASE("smith factors divide in a chain") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    IntMatrix m = random_matrix(rng, 5, 7, 6);
    SmithResult s = smith_normal_form(m);
    for (size_t k = 1; k < s.factors.size(); ++k)
      CHECK(s.factors[k] % s.factors[k - 1] == 0);
    CHECK(int_rank(m) == s.rank);
  }
}

TEST_CASE("left transform tracks correctly") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    IntMatrix m = random_matrix(rng, 6, 4, 5);
    SmithResult s = smith_normal_form(m, true);
    CHECK((s.U * s.Uinv).is_identity());
    // U * m must have zero rows below the lattice rank after column ops;
    // equivalently the row space of U*m has the same Hermite basis as m.
    IntMatrix um = s.U * m;
    CHECK(hermite_basis(um) == hermite_basis(m));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  IntMatrix m = from_rows({{2, 0}, {0, 3}});
  CHECK(determinant(m) == 6);
  IntMatrix swapped = from_rows({{0, 1}, {1, 0}});
  CHECK(determinant(swapped) == -1);
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    IntMatrix a = random_matrix(rng, 5, 5, 4);
    IntMatrix b = random_matrix(rng, 5, 5, 4);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("rank") {
  CHECK(int_rank(IntMatrix::identity(7)) == 7);
  CHECK(int_rank(IntMatrix(4, 9)) == 0);
  IntMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(int_rank(m) == 2);
}

TEST_CASE("lattice membership via hermite basis") {
  IntMatrix gens = from_rows({{2, 0, 1}, {0, 3, 1}});
  IntMatrix h = hermite_basis(gens);
  CHECK(in_row_lattice(h, {2, 0, 1}));
  CHECK(in_row_lattice(h, {2, 3, 2}));
  CHECK(in_row_lattice(h, {0, 0, 0}));
  CHECK_FALSE(in_row_lattice(h, {1, 0, 0}));
  CHECK_FALSE(in_row_lattice(h, {2, 0, 0}));
  std::mt19937 rng(41);
  for (int t = 0; t < 20; ++t) {
    IntMatrix gens2 = random_matrix(rng, 4, 6, 4);
    IntMatrix h2 = hermite_basis(gens2);
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<mpz_class> v(6, 0);
    for (long long r = 0; r < 4; ++r) {
      int c = d(rng);
      for (long long k = 0; k < 6; ++k) v[k] += c * gens2.at(r, k);
    }
    CHECK(in_row_lattice(h2, v));
  }
}
