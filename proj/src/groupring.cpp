#include "heiscurve/groupring.hpp"

#include <sstream>
#include <stdexcept>

namespace heis {

RingElem::RingElem(const HeisElement& g, mpz_class coeff) : n_(g.n) {
  add(g, coeff);
}

mpz_class RingElem::coeff(const HeisElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

RingElem& RingElem::add(const HeisElement& g, const mpz_class& c) {
  if (c == 0) return *this;
  if (g.n != n_ && !terms_.empty())
    throw std::invalid_argument("RingElem: modulus mismatch");
  n_ = g.n;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void RingElem::check_same(const RingElem& o) const {
  if (!terms_.empty() && !o.terms_.empty() && n_ != o.n_)
    throw std::invalid_argument("RingElem: modulus mismatch");
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same(o);
  RingElem out = *this;
  if (out.terms_.empty()) out.n_ = o.n_;
  for (const auto& [g, c] : o.terms_) out.add(g, c);
  return out;
}

RingElem RingElem::operator-(const RingElem& o) const {
  check_same(o);
  RingElem out = *this;
  if (out.terms_.empty()) out.n_ = o.n_;
  for (const auto& [g, c] : o.terms_) out.add(g, -c);
  return out;
}

RingElem RingElem::operator-() const {
  RingElem out(n_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { os << '-'; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a.get_str() << "*";
    os << "(" << g.str() << ")";
  }
  return os.str();
}

RingElem ring_mul(const RingElem& r, const RingElem& s) {
  if (!r.is_zero() && !s.is_zero() && r.modulus() != s.modulus())
    throw std::invalid_argument("ring_mul: modulus mismatch");
  RingElem out(r.modulus());
  for (const auto& [g, c] : r.terms())
    for (const auto& [h, d] : s.terms()) out.add(compose(g, h), c * d);
  return out;
}

RingElem ring_scale(const RingElem& r, const mpz_class& c) {
  RingElem out(r.modulus());
  for (const auto& [g, x] : r.terms()) out.add(g, x * c);
  return out;
}

mpz_class augmentation(const RingElem& r) {
  mpz_class s = 0;
  for (const auto& [g, c] : r.terms()) s += c;
  return s;
}

RingElem ring_one(long long n) { return RingElem(heis_identity(n)); }

RingElem power_sum(const HeisElement& g, long long m) {
  RingElem out(g.n);
  HeisElement acc = heis_identity(g.n);
  for (long long t = 0; t < m; ++t) {
    out.add(acc, 1);
    acc = compose(acc, g);
  }
  return out;
}

SigmaElements sigma_elements(long long n) {
  if (n < 2) throw std::invalid_argument("sigma_elements: need n >= 2");
  SigmaElements s;
  s.sigma1 = power_sum(heis_alpha(n), n);
  s.sigma2 = power_sum(heis_beta(n), n);
  HeisElement ab = compose(heis_alpha(n), heis_beta(n));
  s.sigma3 = power_sum(ab, n);
  s.sigma3star = n % 2 == 1 ? s.sigma3 : power_sum(ab, 2 * n);
  return s;
}

RingElem full_group_sum(long long n) {
  RingElem out(n);
  for (const HeisElement& g : enumerate_elements(n)) out.add(g, 1);
  return out;
}

IntMatrix left_mult_matrix(const RingElem& r) {
  long long n = r.modulus();
  if (n < 1) throw std::invalid_argument("left_mult_matrix: need modulus >= 1");
  long long N = n * n * n;
  IntMatrix m(N, N);
  // column v: coefficients of r * g_v
  std::vector<HeisElement> all = enumerate_elements(n);
  for (long long v = 0; v < N; ++v)
    for (const auto& [g, c] : r.terms())
      m.at(element_index(compose(g, all[v])), v) = c;
  return m;
}

}  // namespace heis
