#pragma once

#include <gmpxx.h>

#include <vector>

namespace heis {

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long long rows, long long cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  mpz_class& at(long long r, long long c) { return a_[r * cols_ + c]; }
  const mpz_class& at(long long r, long long c) const {
    return a_[r * cols_ + c];
  }

  static IntMatrix identity(long long d);
  bool is_identity() const;

  void swap_rows(long long r1, long long r2);
  void swap_cols(long long c1, long long c2);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
};

struct SmithResult {
  std::vector<mpz_class> factors;  // nonzero diagonal, divisibility chain
  long long rank = 0;
  // When requested: U*A*W = D for unimodular U (returned with its inverse);
  // W is discarded.
  IntMatrix U, Uinv;
};

/// Smith normal form.  with_transform tracks the left transform U and its
/// inverse (row operations only touch U).
SmithResult smith_normal_form(IntMatrix m, bool with_transform = false);

/// Rank over Q by integer echelon reduction (gcd pivoting, no fractions).
long long int_rank(IntMatrix m);

/// Determinant of a square matrix, Bareiss fraction-free elimination.
mpz_class determinant(IntMatrix m);

/// Row-style Hermite echelon basis of the row lattice of m (pivots positive,
/// entries above pivots reduced).  Rows of the result generate the same
/// lattice; zero rows are dropped.
IntMatrix hermite_basis(IntMatrix m);

/// Whether v lies in the lattice spanned by the rows of the Hermite basis h.
bool in_row_lattice(const IntMatrix& h, std::vector<mpz_class> v);

}  // namespace heis
