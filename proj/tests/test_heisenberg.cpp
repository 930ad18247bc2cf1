#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "heiscurve/heisenberg.hpp"
#include "test_util.hpp"

using namespace heis;

namespace {

// 3x3 upper unitriangular matrix over Z/n (or Z when n = 0), the reference
// model for the composition law.
struct TriMatrix {
  long long n;
  std::array<std::array<long long, 3>, 3> m;
  static TriMatrix id(long long n) {
    return {n, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  }
  TriMatrix mul(const TriMatrix& o) const {
    TriMatrix out{n, {}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        long long s = 0;
        for (int k = 0; k < 3; ++k) s += m[r][k] * o.m[k][c];
        out.m[r][c] = n ? ((s % n) + n) % n : s;
      }
    return out;
  }
  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;
};

TriMatrix to_matrix(const HeisElement& g) {
  // b^j t^k a^i -> [[1, i, k], [0, 1, j], [0, 0, 1]]
  TriMatrix t = TriMatrix::id(g.n);
  t.m[0][1] = g.i;
  t.m[0][2] = g.k;
  t.m[1][2] = g.j;
  return t;
}

}  // namespace

TEST_CASE("composition law matches the matrix model exhaustively") {
  for (long long n : {3, 4}) {
    for (const HeisElement& g : enumerate_elements(n))
      for (const HeisElement& h : enumerate_elements(n))
        CHECK(to_matrix(compose(g, h)) == to_matrix(g).mul(to_matrix(h)));
  }
}

TEST_CASE("compose basics") {
  long long n = 3;
  HeisElement ab = compose(heis_alpha(n), heis_beta(n));
  CHECK(ab == HeisElement(n, 1, 1, 1));  // alpha beta = beta tau alpha
  HeisElement g(n, 2, 1, 0);
  CHECK(compose(g, heis_identity(n)) == g);
  CHECK(compose(heis_tau(n), heis_alpha(n)) ==
        compose(heis_alpha(n), heis_tau(n)));
  CHECK_THROWS_AS(compose(heis_alpha(3), heis_alpha(4)),
                  std::invalid_argument);
}

TEST_CASE("project_word") {
  FreeWord T = commutator(FreeWord::parse("a", 2), FreeWord::parse("b", 2));
  CHECK(project_word(T, 3) == heis_tau(3));
  FreeWord ab = FreeWord::parse("a b", 2);
  CHECK(project_word(power(ab, 4), 4) == heis_power(heis_tau(4), 2));
  CHECK(project_word(power(ab, 3), 3).is_identity());
  CHECK(project_word(power(ab, 5), 5).is_identity());
  std::mt19937 rng(5);
  for (long long n = 2; n <= 8; ++n)
    for (int t = 0; t < 20; ++t) {
      FreeWord u = testutil::random_word(rng, 2, 10);
      FreeWord v = testutil::random_word(rng, 2, 10);
      CHECK(project_word(multiply(u, v), n) ==
            compose(project_word(u, n), project_word(v, n)));
    }
}

TEST_CASE("presentation relations hold") {
  for (long long n = 2; n <= 8; ++n) {
    CHECK(heis_power(heis_alpha(n), n).is_identity());
    CHECK(heis_power(heis_beta(n), n).is_identity());
    CHECK(heis_power(heis_tau(n), n).is_identity());
    for (const HeisElement& g : enumerate_elements(n))
      CHECK(compose(heis_tau(n), g) == compose(g, heis_tau(n)));
  }
}

TEST_CASE("element order") {
  CHECK(element_order(compose(heis_alpha(4), heis_beta(4))) == 8);
  CHECK(element_order(heis_identity(5)) == 1);
  CHECK(element_order(compose(heis_alpha(3), heis_beta(3))) == 3);
  CHECK_THROWS_AS(element_order(HeisElement(0, 1, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_classes(3).size() == 11);
  CHECK(conjugacy_classes(2).size() == 5);
  for (long long n = 2; n <= 8; ++n) {
    auto classes = conjugacy_classes(n);
    long long total = 0;
    for (const auto& c : classes) total += static_cast<long long>(c.size());
    CHECK(total == n * n * n);
    CHECK(static_cast<long long>(classes.size()) ==
          class_count_gcd_formula(n));
    CHECK(static_cast<long long>(classes.size()) ==
          class_count_divisor_formula(n));
    // central elements t^k are singletons
    long long singles = 0;
    for (const auto& c : classes)
      if (c.size() == 1) {
        ++singles;
        CHECK(c[0].i == 0);
        CHECK(c[0].j == 0);
      }
    CHECK(singles == n);
  }
  CHECK_THROWS_AS(conjugacy_classes(9), std::invalid_argument);
}

TEST_CASE("element serialization") {
  HeisElement g(4, 2, 1, 3);
  CHECK(g.str() == "b t^3 a^2 @4");
  CHECK(HeisElement::parse(g.str()) == g);
  CHECK(heis_identity(3).str() == "1 @3");
  CHECK(HeisElement::parse("1 @0").is_identity());
}
