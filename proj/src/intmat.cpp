#include "heiscurve/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace heis {

IntMatrix IntMatrix::identity(long long d) {
  IntMatrix m(d, d);
  for (long long i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long long r = 0; r < rows_; ++r)
    for (long long c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(long long r1, long long r2) {
  if (r1 == r2) return;
  for (long long c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

void IntMatrix::swap_cols(long long c1, long long c2) {
  if (c1 == c2) return;
  for (long long r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (long long r = 0; r < rows_; ++r)
    for (long long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (long long r = 0; r < rows_; ++r)
    for (long long k = 0; k < cols_; ++k) {
      const mpz_class& x = at(r, k);
      if (x == 0) continue;
      for (long long c = 0; c < o.cols_; ++c)
        out.at(r, c) += x * o.at(k, c);
    }
  return out;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
  if (static_cast<long long>(v.size()) != cols_)
    throw std::invalid_argument("IntMatrix::apply: size mismatch");
  std::vector<mpz_class> out(rows_);
  for (long long r = 0; r < rows_; ++r)
    for (long long c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

namespace {

// Smallest nonzero entry of the trailing submatrix starting at (t, t);
// returns false when that submatrix is zero.
bool find_pivot(const IntMatrix& m, long long t, long long& pr, long long& pc) {
  bool found = false;
  mpz_class best;
  for (long long r = t; r < m.rows(); ++r)
    for (long long c = t; c < m.cols(); ++c) {
      const mpz_class& x = m.at(r, c);
      if (x == 0) continue;
      mpz_class ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m, bool with_transform) {
  SmithResult res;
  const long long rows = m.rows(), cols = m.cols();
  if (with_transform) {
    res.U = IntMatrix::identity(rows);
    res.Uinv = IntMatrix::identity(rows);
  }
  // Row op r1 += q*r2 on m; U follows, Uinv absorbs the inverse column op.
  auto row_op = [&](long long r1, long long r2, const mpz_class& q) {
    for (long long c = 0; c < cols; ++c) m.at(r1, c) += q * m.at(r2, c);
    if (with_transform) {
      for (long long c = 0; c < rows; ++c) res.U.at(r1, c) += q * res.U.at(r2, c);
      for (long long r = 0; r < rows; ++r)
        res.Uinv.at(r, r2) -= q * res.Uinv.at(r, r1);
    }
  };
  auto swap_rows = [&](long long r1, long long r2) {
    m.swap_rows(r1, r2);
    if (with_transform) {
      res.U.swap_rows(r1, r2);
      res.Uinv.swap_cols(r1, r2);
    }
  };
  auto negate_row = [&](long long r) {
    for (long long c = 0; c < cols; ++c) m.at(r, c) = -m.at(r, c);
    if (with_transform) {
      for (long long c = 0; c < rows; ++c) res.U.at(r, c) = -res.U.at(r, c);
      for (long long rr = 0; rr < rows; ++rr)
        res.Uinv.at(rr, r) = -res.Uinv.at(rr, r);
    }
  };
  auto col_op = [&](long long c1, long long c2, const mpz_class& q) {
    for (long long r = 0; r < rows; ++r) m.at(r, c1) += q * m.at(r, c2);
  };

  long long t = 0;
  const long long dims = std::min(rows, cols);
  while (t < dims) {
    long long pr, pc;
    if (!find_pivot(m, t, pr, pc)) break;
    swap_rows(t, pr);
    m.swap_cols(t, pc);
    for (;;) {
      // Clear column t.
      bool dirty = false;
      for (long long r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(r, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        row_op(r, t, -q);
        if (m.at(r, t) != 0) {
          swap_rows(t, r);  // remainder is smaller: continue Euclid
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t.
      for (long long c = t + 1; c < cols; ++c) {
        if (m.at(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, c).get_mpz_t(), m.at(t, t).get_mpz_t());
        col_op(c, t, -q);
        if (m.at(t, c) != 0) {
          m.swap_cols(t, c);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (m.at(t, t) < 0) negate_row(t);
    ++t;
  }
  res.rank = t;
  // Enforce the divisibility chain d_1 | d_2 | ... | d_r.
  for (long long i = 0; i < t; ++i)
    for (long long j = i + 1; j < t; ++j) {
      if (m.at(j, j) % m.at(i, i) == 0) continue;
      // Replace (d_i, d_j) by (gcd, lcm): put d_j into row i and run the
      // Euclid cleanup on the 2x2 block at rows/cols {i, j}.
      row_op(i, j, 1);
      for (;;) {
        if (m.at(i, j) == 0 && m.at(j, i) == 0 && m.at(i, i) != 0 &&
            m.at(j, j) % m.at(i, i) == 0)
          break;
        if (m.at(i, i) == 0) swap_rows(i, j);
        if (m.at(i, j) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(i, i).get_mpz_t());
          col_op(j, i, -q);
          if (m.at(i, j) != 0) m.swap_cols(i, j);
        }
        if (m.at(j, i) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), m.at(j, i).get_mpz_t(), m.at(i, i).get_mpz_t());
          row_op(j, i, -q);
          if (m.at(j, i) != 0) swap_rows(i, j);
        }
      }
      if (m.at(i, i) < 0) negate_row(i);
      if (m.at(j, j) < 0) negate_row(j);
    }
  res.factors.reserve(t);
  for (long long i = 0; i < t; ++i) res.factors.push_back(m.at(i, i));
  return res;
}

long long int_rank(IntMatrix m) {
  const long long rows = m.rows(), cols = m.cols();
  long long t = 0;
  while (t < std::min(rows, cols)) {
    long long pr, pc;
    if (!find_pivot(m, t, pr, pc)) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);
    // Euclidean elimination below the pivot keeps entries small.
    for (;;) {
      bool dirty = false;
      for (long long r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(r, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        if (q != 0)
          for (long long c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          m.swap_rows(t, r);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    ++t;
  }
  return t;
}

mpz_class determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const long long d = m.rows();
  mpz_class prev = 1;
  int sign = 1;
  for (long long t = 0; t < d; ++t) {
    long long piv = -1;
    for (long long r = t; r < d; ++r)
      if (m.at(r, t) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != t) {
      m.swap_rows(t, piv);
      sign = -sign;
    }
    for (long long r = t + 1; r < d; ++r) {
      for (long long c = t + 1; c < d; ++c) {
        mpz_class num = m.at(t, t) * m.at(r, c) - m.at(r, t) * m.at(t, c);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(r, c) = q;
      }
      m.at(r, t) = 0;
    }
    prev = m.at(t, t);
  }
  return sign < 0 ? mpz_class(-prev) : prev;
}

IntMatrix hermite_basis(IntMatrix m) {
  const long long rows = m.rows(), cols = m.cols();
  long long r0 = 0;
  for (long long c = 0; c < cols && r0 < rows; ++c) {
    // Euclid on column c among rows >= r0.
    for (;;) {
      long long piv = -1;
      mpz_class best;
      for (long long r = r0; r < rows; ++r) {
        if (m.at(r, c) == 0) continue;
        mpz_class ax = abs(m.at(r, c));
        if (piv < 0 || ax < best) { piv = r; best = ax; }
      }
      if (piv < 0) break;
      m.swap_rows(r0, piv);
      bool done = true;
      for (long long r = r0 + 1; r < rows; ++r) {
        if (m.at(r, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(r, c).get_mpz_t(), m.at(r0, c).get_mpz_t());
        for (long long cc = c; cc < cols; ++cc) m.at(r, cc) -= q * m.at(r0, cc);
        if (m.at(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m.at(r0, c) == 0) continue;
    if (m.at(r0, c) < 0)
      for (long long cc = c; cc < cols; ++cc) m.at(r0, cc) = -m.at(r0, cc);
    // Reduce entries above the pivot.
    for (long long r = 0; r < r0; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(r, c).get_mpz_t(), m.at(r0, c).get_mpz_t());
      if (q != 0)
        for (long long cc = 0; cc < cols; ++cc) m.at(r, cc) -= q * m.at(r0, cc);
    }
    ++r0;
  }
  IntMatrix out(r0, cols);
  for (long long r = 0; r < r0; ++r)
    for (long long c = 0; c < cols; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

bool in_row_lattice(const IntMatrix& h, std::vector<mpz_class> v) {
  if (static_cast<long long>(v.size()) != h.cols())
    throw std::invalid_argument("in_row_lattice: size mismatch");
  long long row = 0;
  for (long long c = 0; c < h.cols(); ++c) {
    if (row < h.rows() && h.at(row, c) != 0) {
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[c].get_mpz_t(),
                  h.at(row, c).get_mpz_t());
      if (r != 0) return false;
      if (q != 0)
        for (long long cc = c; cc < h.cols(); ++cc) v[cc] -= q * h.at(row, cc);
      ++row;
    } else if (v[c] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace heis
