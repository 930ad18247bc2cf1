#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heis {

/// One maximal run of a single generator: gen^exp with exp != 0.
struct Syllable {
  int gen;           // 0-based generator index
  long long exp;     // nonzero
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced word in a free group of rank 2 or 3.
///
/// Rank 2 uses generators (a, b); rank 3 uses (x1, x2, x3).  Adjacent
/// syllables always carry distinct generators and no syllable has exponent
/// zero; the empty syllable list is the identity.
class FreeWord {
public:
  FreeWord() : rank_(2) {}
  explicit FreeWord(int rank) : rank_(rank) { check_rank(rank); }
  FreeWord(int rank, std::vector<Syllable> syllables);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  long long length() const;  // letter count, sum of |exp|

  static FreeWord generator(int rank, int gen, long long exp = 1);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  bool operator<(const FreeWord& o) const;  // rank, then syllable-lex

  std::string str() const;
  static FreeWord parse(const std::string& text, int rank);

private:
  static void check_rank(int rank);
  int rank_;
  std::vector<Syllable> syl_;
};

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& w);
FreeWord power(const FreeWord& w, long long e);
/// y * x * y^{-1}, the exponent notation x^y.
FreeWord conjugate(const FreeWord& x, const FreeWord& y);
/// x * y * x^{-1} * y^{-1}.
FreeWord commutator(const FreeWord& x, const FreeWord& y);

/// Substitutes images[g] for generator g (inverse images for inverses).
/// `images` has one entry per generator of w; all images share one rank.
FreeWord apply_endomorphism(const std::vector<FreeWord>& images,
                            const FreeWord& w);

/// Finite integer combination of reduced words, kept collected (sorted by
/// word, no zero coefficients, no repeated words).
class FormalSum {
public:
  FormalSum() = default;
  explicit FormalSum(const FreeWord& w, long long c = 1);

  const std::vector<std::pair<long long, FreeWord>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  /// Left multiplication by a word: w * (each term).
  FormalSum premultiplied(const FreeWord& w) const;
  FormalSum negated() const;

  std::string str() const;

private:
  void add_term(long long c, const FreeWord& w);
  std::vector<std::pair<long long, FreeWord>> terms_;
};

/// Free differential calculus: d(uv) = du + u dv, dx/dx = 1,
/// dx^{-1}/dx = -x^{-1}.
FormalSum fox_derivative(const FreeWord& w, int gen);

}  // namespace heis
