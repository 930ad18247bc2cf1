#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace heis {

/// Shared data for the field Q(zeta_n): the n-th cyclotomic polynomial and
/// the reductions of zeta^m for 0 <= m < n.  Obtained via cyc_field(n).
struct CycField {
  long long n = 1;
  std::vector<mpz_class> phi;                      // monic, low -> high
  long long deg = 1;                               // = euler phi(n)
  std::vector<std::vector<mpq_class>> zeta_pow;    // zeta^m reduced, m < n
};

const CycField& cyc_field(long long n);

/// Coefficients (low -> high) of the n-th cyclotomic polynomial over Z.
std::vector<mpz_class> cyclotomic_polynomial(long long n);

/// Element of Q(zeta_n) as a rational coefficient vector of length phi(n)
/// reduced mod the n-th cyclotomic polynomial.  Conductor 1 is plain Q.
class CycScalar {
public:
  CycScalar() : n_(1), c_(1) {}
  explicit CycScalar(long long n) : n_(n), c_(cyc_field(n).deg) {}
  CycScalar(long long n, const mpq_class& rational);

  static CycScalar from_poly(long long n, std::vector<mpq_class> coeffs);

  long long conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

  friend bool operator==(const CycScalar&, const CycScalar&) = default;
  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  CycScalar inverse() const;  // throws on zero
  /// Complex conjugation, the automorphism zeta -> zeta^{n-1}.
  CycScalar conj() const;
  CycScalar scaled(const mpq_class& q) const;

  std::string str() const;  // polynomial in z, e.g. "1 - 1/2*z^2"

private:
  void check_same(const CycScalar& o) const;
  long long n_;
  std::vector<mpq_class> c_;
};

/// zeta_n^k as a canonical CycScalar (k reduced mod n).
CycScalar zeta_power(long long n, long long k);

/// Rectangular matrix over Q(zeta_n); conductor 1 is the rational case.
class ExactMatrix {
public:
  ExactMatrix() : n_(1), rows_(0), cols_(0) {}
  ExactMatrix(long long n, long long rows, long long cols)
      : n_(n), rows_(rows), cols_(cols), a_(rows * cols, CycScalar(n)) {}

  long long conductor() const { return n_; }
  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  CycScalar& at(long long r, long long c) { return a_[r * cols_ + c]; }
  const CycScalar& at(long long r, long long c) const {
    return a_[r * cols_ + c];
  }

  static ExactMatrix identity(long long n, long long d);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;

private:
  long long n_, rows_, cols_;
  std::vector<CycScalar> a_;
};

/// Rank over Q(zeta_n), fraction-free (Bareiss) elimination after clearing
/// row denominators.
long long exact_rank(const ExactMatrix& m);

}  // namespace heis
