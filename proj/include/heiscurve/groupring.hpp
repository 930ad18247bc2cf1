#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "heiscurve/heisenberg.hpp"
#include "heiscurve/intmat.hpp"

namespace heis {

/// Element of the integer group ring Z[H_n] (Z[H] when modulus is 0).
/// Canonical: no zero coefficients, all keys share the modulus.
class RingElem {
public:
  RingElem() : n_(0) {}
  explicit RingElem(long long n) : n_(n) {}
  RingElem(const HeisElement& g, mpz_class coeff = 1);

  long long modulus() const { return n_; }
  const std::map<HeisElement, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long term_count() const { return static_cast<long long>(terms_.size()); }
  mpz_class coeff(const HeisElement& g) const;

  RingElem& add(const HeisElement& g, const mpz_class& c);

  friend bool operator==(const RingElem&, const RingElem&) = default;
  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }

  std::string str() const;

private:
  void check_same(const RingElem& o) const;
  long long n_;
  std::map<HeisElement, mpz_class> terms_;
};

/// Convolution product, the bilinear extension of compose.
RingElem ring_mul(const RingElem& r, const RingElem& s);
RingElem ring_scale(const RingElem& r, const mpz_class& c);

/// Sum of coefficients.
mpz_class augmentation(const RingElem& r);

RingElem ring_one(long long n);
/// 1 + g + ... + g^{m-1}.
RingElem power_sum(const HeisElement& g, long long m);

struct SigmaElements {
  RingElem sigma1;      // 1 + alpha + ... + alpha^{n-1}
  RingElem sigma2;      // 1 + beta + ... + beta^{n-1}
  RingElem sigma3;      // 1 + (alpha beta) + ... + (alpha beta)^{n-1}
  RingElem sigma3star;  // sigma3 for odd n, sigma3prime for even n
};

/// Sigma3star is sigma3 for odd n and sigma3' = (1 + tau^{n/2}) sigma3 for
/// even n.
SigmaElements sigma_elements(long long n);

/// Sum of all n^3 group elements with coefficient 1.
RingElem full_group_sum(long long n);

/// Matrix of left multiplication by r on Z[H_n] in the fixed (j, k, i)
/// basis: entry (u, v) is the coefficient of g_u in r * g_v.
IntMatrix left_mult_matrix(const RingElem& r);

}  // namespace heis
