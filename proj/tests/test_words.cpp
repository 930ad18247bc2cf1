#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heiscurve/words.hpp"
#include "test_util.hpp"

using namespace heis;

namespace {
FreeWord w2(const std::string& s) { return FreeWord::parse(s, 2); }
FreeWord w3(const std::string& s) { return FreeWord::parse(s, 3); }
}  // namespace

TEST_CASE("multiply reduces") {
  CHECK(multiply(w2("a b"), w2("b^-1 a^-1")).is_identity());
  CHECK(multiply(w2("a"), w2("a")) == w2("a^2"));
  CHECK(multiply(w2("a b"), w2("b")) == w2("a b^2"));
  CHECK_THROWS_AS(multiply(w2("a"), w3("x1")), std::invalid_argument);
}

TEST_CASE("invert") {
  CHECK(invert(w2("a b")) == w2("b^-1 a^-1"));
  CHECK(invert(FreeWord(2)).is_identity());
  CHECK(invert(w2("a^2 b^-1")) == w2("b a^-2"));
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    FreeWord w = testutil::random_word(rng, 2, 12);
    CHECK(multiply(w, invert(w)).is_identity());
  }
}

TEST_CASE("conjugate and commutator") {
  FreeWord T = commutator(w2("a"), w2("b"));
  CHECK(conjugate(w2("b"), w2("a")) == w2("a b a^-1"));
  CHECK(conjugate(w2("a"), w2("a")) == w2("a"));
  CHECK(conjugate(T, FreeWord(2)) == T);
  CHECK(T == w2("a b a^-1 b^-1"));
  CHECK(commutator(w2("a"), w2("a")).is_identity());
  // [x^2, y] = [x, y]^x * [x, y]
  CHECK(commutator(w2("a^2"), w2("b")) ==
        multiply(conjugate(T, w2("a")), T));
}

TEST_CASE("commutator identities on random words") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    FreeWord x = testutil::random_word(rng, 2, 12);
    FreeWord y = testutil::random_word(rng, 2, 12);
    FreeWord z = testutil::random_word(rng, 2, 12);
    // [xy, z] = [y, z]^x [x, z]
    CHECK(commutator(multiply(x, y), z) ==
          multiply(conjugate(commutator(y, z), x), commutator(x, z)));
    // telescoping [x^j, y] = [x,y]^{x^{j-1}} ... [x,y]^x [x,y]
    for (long long j = 1; j <= 5; ++j) {
      FreeWord lhs = commutator(power(x, j), y);
      FreeWord rhs(2);
      for (long long e = j - 1; e >= 0; --e)
        rhs = multiply(rhs, conjugate(commutator(x, y), power(x, e)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("apply_endomorphism") {
  std::vector<FreeWord> sigma1 = {w2("a b a^-1"), w2("a")};
  CHECK(apply_endomorphism(sigma1, w2("b")) == w2("a"));
  std::vector<FreeWord> id = {w2("a"), w2("b")};
  std::vector<FreeWord> sigma2 = {w2("a"), w2("a^-1 b^-1")};
  CHECK(apply_endomorphism(sigma2, w2("a b")) == w2("b^-1"));
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    FreeWord u = testutil::random_word(rng, 2, 10);
    FreeWord v = testutil::random_word(rng, 2, 10);
    CHECK(apply_endomorphism(id, u) == u);
    CHECK(apply_endomorphism(sigma1, multiply(u, v)) ==
          multiply(apply_endomorphism(sigma1, u),
                   apply_endomorphism(sigma1, v)));
  }
}

TEST_CASE("fox derivative basics") {
  FormalSum d = fox_derivative(w3("x1^3"), 0);
  FormalSum expect(FreeWord(3));
  expect += FormalSum(w3("x1"));
  expect += FormalSum(w3("x1^2"));
  CHECK(d == expect);
  CHECK(fox_derivative(w3("x1 x2 x3"), 1) == FormalSum(w3("x1")));
  CHECK(fox_derivative(w3("x1 x2 x3"), 2) == FormalSum(w3("x1 x2")));
  CHECK_THROWS_AS(fox_derivative(w3("x1"), 5), std::invalid_argument);
}

TEST_CASE("fox derivative product rule") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    FreeWord u = testutil::random_word(rng, 3, 8);
    FreeWord v = testutil::random_word(rng, 3, 8);
    for (int g = 0; g < 3; ++g) {
      FormalSum lhs = fox_derivative(multiply(u, v), g);
      FormalSum rhs = fox_derivative(u, g) + fox_derivative(v, g).premultiplied(u);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("string round trip") {
  CHECK(w2("a^3 b^-1 a").str() == "a^3 b^-1 a");
  CHECK(FreeWord(2).str() == "1");
  CHECK(FreeWord::parse("1", 2).is_identity());
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    FreeWord w = testutil::random_word(rng, 2, 10);
    CHECK(FreeWord::parse(w.str(), 2) == w);
  }
}
