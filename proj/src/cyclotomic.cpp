#include "heiscurve/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace heis {

namespace {

// (x^n - 1) coefficients.
std::vector<mpz_class> xn_minus_1(long long n) {
  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  return p;
}

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num,
                                     const std::vector<mpz_class>& den) {
  long long dn = static_cast<long long>(num.size()) - 1;
  long long dd = static_cast<long long>(den.size()) - 1;
  std::vector<mpz_class> q(dn - dd + 1);
  for (long long k = dn - dd; k >= 0; --k) {
    mpz_class c = num[k + dd];
    q[k] = c;
    if (c == 0) continue;
    for (long long t = 0; t <= dd; ++t) num[k + t] -= c * den[t];
  }
  for (const mpz_class& c : num)
    if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  return q;
}

// Reduce a rational polynomial mod the monic integer polynomial phi.
std::vector<mpq_class> poly_mod(std::vector<mpq_class> p,
                                const std::vector<mpz_class>& phi) {
  long long deg = static_cast<long long>(phi.size()) - 1;
  for (long long k = static_cast<long long>(p.size()) - 1; k >= deg; --k) {
    mpq_class c = p[k];
    if (c == 0) continue;
    for (long long t = 0; t < deg; ++t) p[k - deg + t] -= c * phi[t];
    p[k] = 0;
  }
  p.resize(deg);
  return p;
}

std::map<long long, CycField>& field_cache() {
  static std::map<long long, CycField> cache;
  return cache;
}
std::mutex field_mutex;

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: need n >= 1");
  std::vector<mpz_class> num = xn_minus_1(n);
  for (long long d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divexact(num, cyclotomic_polynomial(d));
  return num;
}

const CycField& cyc_field(long long n) {
  if (n < 1) throw std::invalid_argument("cyc_field: need n >= 1");
  std::lock_guard<std::mutex> lock(field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CycField f;
  f.n = n;
  f.phi = cyclotomic_polynomial(n);
  f.deg = static_cast<long long>(f.phi.size()) - 1;
  f.zeta_pow.resize(n);
  std::vector<mpq_class> cur(f.deg);
  cur[0] = 1;
  for (long long m = 0; m < n; ++m) {
    f.zeta_pow[m] = cur;
    // multiply by x and reduce
    std::vector<mpq_class> next(f.deg + 1);
    for (long long t = 0; t < f.deg; ++t) next[t + 1] = cur[t];
    cur = poly_mod(std::move(next), f.phi);
  }
  return cache.emplace(n, std::move(f)).first->second;
}

CycScalar::CycScalar(long long n, const mpq_class& rational)
    : n_(n), c_(cyc_field(n).deg) {
  c_[0] = rational;
}

CycScalar CycScalar::from_poly(long long n, std::vector<mpq_class> coeffs) {
  const CycField& f = cyc_field(n);
  CycScalar z(n);
  z.c_ = poly_mod(std::move(coeffs), f.phi);
  z.c_.resize(f.deg);
  return z;
}

bool CycScalar::is_zero() const {
  for (const mpq_class& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t t = 1; t < c_.size(); ++t)
    if (c_[t] != 0) return false;
  return true;
}

mpq_class CycScalar::rational_value() const {
  if (!is_rational())
    throw std::logic_error("CycScalar: not a rational value");
  return c_[0];
}

void CycScalar::check_same(const CycScalar& o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("CycScalar: conductor mismatch");
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  check_same(o);
  CycScalar out(n_);
  for (size_t t = 0; t < c_.size(); ++t) out.c_[t] = c_[t] + o.c_[t];
  return out;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  check_same(o);
  CycScalar out(n_);
  for (size_t t = 0; t < c_.size(); ++t) out.c_[t] = c_[t] - o.c_[t];
  return out;
}

CycScalar CycScalar::operator-() const {
  CycScalar out(n_);
  for (size_t t = 0; t < c_.size(); ++t) out.c_[t] = -c_[t];
  return out;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  check_same(o);
  const CycField& f = cyc_field(n_);
  std::vector<mpq_class> prod(2 * f.deg - 1);
  for (long long s = 0; s < f.deg; ++s) {
    if (c_[s] == 0) continue;
    for (long long t = 0; t < f.deg; ++t) {
      if (o.c_[t] == 0) continue;
      prod[s + t] += c_[s] * o.c_[t];
    }
  }
  CycScalar out(n_);
  out.c_ = poly_mod(std::move(prod), f.phi);
  out.c_.resize(f.deg);
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: inverse of zero");
  const CycField& f = cyc_field(n_);
  // Extended Euclid in Q[x]: r0 = phi, r1 = c; track s in c-coefficients.
  std::vector<mpq_class> r0(f.phi.begin(), f.phi.end());
  std::vector<mpq_class> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<mpq_class> s0{}, s1{mpq_class(1)};
  auto deg_of = [](const std::vector<mpq_class>& p) {
    return static_cast<long long>(p.size()) - 1;
  };
  while (deg_of(r1) > 0) {
    // divide r0 by r1
    std::vector<mpq_class> q(deg_of(r0) - deg_of(r1) + 1);
    std::vector<mpq_class> rem = r0;
    for (long long k = deg_of(rem) - deg_of(r1); k >= 0; --k) {
      mpq_class c = rem[k + deg_of(r1)] / r1.back();
      q[k] = c;
      if (c == 0) continue;
      for (long long t = 0; t <= deg_of(r1); ++t) rem[k + t] -= c * r1[t];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s2 = s0 - q*s1
    std::vector<mpq_class> s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), mpq_class(0));
    for (size_t x = 0; x < q.size(); ++x) {
      if (q[x] == 0) continue;
      for (size_t y = 0; y < s1.size(); ++y) s2[x + y] -= q[x] * s1[y];
    }
    while (!s2.empty() && s2.back() == 0) s2.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("CycScalar: phi not squarefree?");
  mpq_class unit = r1[0];
  for (mpq_class& x : s1) x /= unit;
  return from_poly(n_, std::move(s1));
}

CycScalar CycScalar::conj() const {
  const CycField& f = cyc_field(n_);
  CycScalar out(n_);
  for (long long t = 0; t < f.deg; ++t) {
    if (c_[t] == 0) continue;
    long long m = (t * (n_ - 1)) % n_;
    const auto& zp = f.zeta_pow[m];
    for (long long u = 0; u < f.deg; ++u) out.c_[u] += c_[t] * zp[u];
  }
  return out;
}

CycScalar CycScalar::scaled(const mpq_class& q) const {
  CycScalar out(n_);
  for (size_t t = 0; t < c_.size(); ++t) out.c_[t] = c_[t] * q;
  return out;
}

std::string CycScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    mpq_class a = c_[t];
    if (first) {
      if (a < 0) { os << '-'; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (t == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << '*';
      os << 'z';
      if (t > 1) os << '^' << t;
    }
  }
  return os.str();
}

CycScalar zeta_power(long long n, long long k) {
  const CycField& f = cyc_field(n);
  long long m = k % n;
  if (m < 0) m += n;
  return CycScalar::from_poly(n, f.zeta_pow[m]);
}

ExactMatrix ExactMatrix::identity(long long n, long long d) {
  ExactMatrix m(n, d, d);
  for (long long i = 0; i < d; ++i) m.at(i, i) = CycScalar(n, 1);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_ || n_ != o.n_)
    throw std::invalid_argument("ExactMatrix: shape or conductor mismatch");
  ExactMatrix out(n_, rows_, o.cols_);
  for (long long r = 0; r < rows_; ++r)
    for (long long k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (long long c = 0; c < o.cols_; ++c)
        out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || n_ != o.n_)
    throw std::invalid_argument("ExactMatrix: shape or conductor mismatch");
  ExactMatrix out(n_, rows_, cols_);
  for (long long r = 0; r < rows_; ++r)
    for (long long c = 0; c < cols_; ++c) out.at(r, c) = at(r, c) + o.at(r, c);
  return out;
}

namespace {

// Elements of Z[zeta_n] as integer coefficient vectors.
using ZPoly = std::vector<mpz_class>;

bool zp_zero(const ZPoly& p) {
  for (const mpz_class& c : p)
    if (c != 0) return false;
  return true;
}

ZPoly zp_mul(const ZPoly& x, const ZPoly& y, const CycField& f) {
  std::vector<mpz_class> prod(2 * f.deg - 1);
  for (long long s = 0; s < f.deg; ++s) {
    if (x[s] == 0) continue;
    for (long long t = 0; t < f.deg; ++t) {
      if (y[t] == 0) continue;
      prod[s + t] += x[s] * y[t];
    }
  }
  // reduce mod monic phi, staying in Z
  for (long long k = 2 * f.deg - 2; k >= f.deg; --k) {
    mpz_class c = prod[k];
    if (c == 0) continue;
    for (long long t = 0; t < f.deg; ++t) prod[k - f.deg + t] -= c * f.phi[t];
    prod[k] = 0;
  }
  prod.resize(f.deg);
  return prod;
}

// Exact division in Z[zeta_n]: computes num/den in the field and checks
// integrality (guaranteed for Bareiss intermediates).
ZPoly zp_divexact(const ZPoly& num, const ZPoly& den, long long n) {
  std::vector<mpq_class> qc(num.size());
  for (size_t t = 0; t < num.size(); ++t) qc[t] = mpq_class(num[t]);
  std::vector<mpq_class> dc(den.size());
  for (size_t t = 0; t < den.size(); ++t) dc[t] = mpq_class(den[t]);
  CycScalar q = CycScalar::from_poly(n, std::move(qc)) *
                CycScalar::from_poly(n, std::move(dc)).inverse();
  ZPoly out(num.size());
  for (size_t t = 0; t < out.size(); ++t) {
    const mpq_class& v = q.coeffs()[t];
    if (v.get_den() != 1)
      throw std::logic_error("zp_divexact: division not exact");
    out[t] = v.get_num();
  }
  return out;
}

}  // namespace

long long exact_rank(const ExactMatrix& m) {
  const CycField& f = cyc_field(m.conductor());
  const long long rows = m.rows(), cols = m.cols();
  // Clear row denominators into Z[zeta].
  std::vector<std::vector<ZPoly>> a(rows, std::vector<ZPoly>(cols));
  for (long long r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (long long c = 0; c < cols; ++c)
      for (const mpq_class& q : m.at(r, c).coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    for (long long c = 0; c < cols; ++c) {
      ZPoly p(f.deg);
      const auto& qs = m.at(r, c).coeffs();
      for (long long t = 0; t < f.deg; ++t) {
        mpq_class scaled = qs[t] * mpq_class(lcm);
        p[t] = scaled.get_num();  // denominator is 1 by construction
      }
      a[r][c] = std::move(p);
    }
  }
  ZPoly prev(f.deg);
  prev[0] = 1;
  long long rank = 0;
  for (long long t = 0; t < std::min(rows, cols); ++t) {
    long long pr = -1, pc = -1;
    for (long long r = t; r < rows && pr < 0; ++r)
      for (long long c = t; c < cols; ++c)
        if (!zp_zero(a[r][c])) { pr = r; pc = c; break; }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    if (pc != t)
      for (long long r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
    for (long long r = t + 1; r < rows; ++r) {
      for (long long c = t + 1; c < cols; ++c) {
        ZPoly num(f.deg);
        ZPoly x = zp_mul(a[t][t], a[r][c], f);
        ZPoly y = zp_mul(a[r][t], a[t][c], f);
        for (long long u = 0; u < f.deg; ++u) num[u] = x[u] - y[u];
        if (rank == 0)
          a[r][c] = std::move(num);  // prev == 1
        else
          a[r][c] = zp_divexact(num, prev, m.conductor());
      }
      a[r][t] = ZPoly(f.deg);
    }
    prev = a[t][t];
    ++rank;
  }
  return rank;
}

}  // namespace heis
