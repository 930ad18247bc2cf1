#pragma once

#include <string>
#include <vector>

#include "heiscurve/words.hpp"

namespace heis {

/// Element of the Heisenberg group in the normal form b^j t^k a^i, where
/// t = [a, b] is central.  modulus n > 0 gives the finite group H_n (all
/// exponents reduced mod n); modulus 0 gives the integral group H.
struct HeisElement {
  long long n = 0;  // modulus, 0 for the integral group
  long long i = 0;  // exponent of a
  long long j = 0;  // exponent of b
  long long k = 0;  // exponent of t

  HeisElement() = default;
  HeisElement(long long n_, long long i_, long long j_, long long k_);

  bool is_identity() const { return i == 0 && j == 0 && k == 0; }

  friend bool operator==(const HeisElement&, const HeisElement&) = default;
  /// Lexicographic on (j, k, i): the fixed basis enumeration order.
  bool operator<(const HeisElement& o) const;

  std::string str() const;  // "b^j t^k a^i @n"
  static HeisElement parse(const std::string& text);
};

HeisElement heis_identity(long long n);
HeisElement heis_alpha(long long n);
HeisElement heis_beta(long long n);
HeisElement heis_tau(long long n);

/// (b^j1 t^k1 a^i1)(b^j2 t^k2 a^i2) = b^{j1+j2} t^{k1+k2+i1*j2} a^{i1+i2}.
HeisElement compose(const HeisElement& g, const HeisElement& h);
HeisElement inverse(const HeisElement& g);
HeisElement heis_power(const HeisElement& g, long long e);

/// Homomorphic image of a rank-2 word under a -> alpha, b -> beta.
HeisElement project_word(const FreeWord& w, long long n);

/// Image of w under the homomorphism sending generator g to images[g].
HeisElement apply_word(const FreeWord& w, const std::vector<HeisElement>& images);

/// Least m >= 1 with g^m = 1; requires modulus > 0 unless g is trivial.
long long element_order(const HeisElement& g);

/// All n^3 elements in lexicographic (j, k, i) order.
std::vector<HeisElement> enumerate_elements(long long n);
/// Position of g in enumerate_elements(g.n): j*n^2 + k*n + i.
long long element_index(const HeisElement& g);

inline constexpr long long kConjugacyCap = 8;

/// Brute-force partition of H_n into conjugacy classes (n <= cap).
/// Classes are ordered by their least element; members sorted.
std::vector<std::vector<HeisElement>> conjugacy_classes(
    long long n, long long cap = kConjugacyCap);

/// Closed form sum_{j=0}^{n-1} gcd(n,j)^2 for the class count.
long long class_count_gcd_formula(long long n);
/// Closed form sum_{d|n} d^2 phi(n/d).
long long class_count_divisor_formula(long long n);

}  // namespace heis
