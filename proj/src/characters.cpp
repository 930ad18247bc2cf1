#include "heiscurve/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace heis {

long long gcd_n(long long n, long long j) { return j == 0 ? n : std::gcd(n, j); }

std::vector<CharLabel> char_labels(long long n) {
  std::vector<CharLabel> out;
  for (long long j = 0; j < n; ++j) {
    long long d = gcd_n(n, j);
    for (long long i = 0; i < d; ++i)
      for (long long s = 0; s < d; ++s) out.push_back({i, j, s});
  }
  return out;
}

long long char_degree(long long n, const CharLabel& l) {
  return n / gcd_n(n, l.j);
}

CycScalar character_value(long long n, const CharLabel& l,
                          const HeisElement& g) {
  if (g.n != n)
    throw std::invalid_argument("character_value: modulus mismatch");
  long long D = char_degree(n, l);  // n / d_j
  if (g.j % D != 0 || g.i % D != 0) return CycScalar(n);
  CycScalar v = zeta_power(n, g.i * l.i + g.j * l.s + g.k * l.j);
  return v.scaled(mpq_class(D));
}

std::vector<CycScalar> character_vector(long long n, const CharLabel& l) {
  std::vector<CycScalar> out;
  out.reserve(n * n * n);
  for (const HeisElement& g : enumerate_elements(n))
    out.push_back(character_value(n, l, g));
  return out;
}

ExactMatrix irrep_matrix(long long n, const CharLabel& l,
                         const HeisElement& g) {
  if (g.n != n)
    throw std::invalid_argument("irrep_matrix: modulus mismatch");
  const long long D = char_degree(n, l);
  ExactMatrix m(n, D, D);
  // g = b^m t^lambda a^mu; column nu maps to row nu' = m + nu mod D with
  // entry zeta^{i*mu + j*(lambda + mu*nu) + s*(m - nu' + nu)}.
  for (long long nu = 0; nu < D; ++nu) {
    long long nup = ((g.j + nu) % D + D) % D;
    long long beta_exp = g.j - nup + nu;  // divisible by D
    long long e = l.i * g.i + l.j * (g.k + g.i * nu) + l.s * beta_exp;
    m.at(nup, nu) = zeta_power(n, e);
  }
  return m;
}

ExactMatrix rho_of_ring(long long n, const CharLabel& l, const RingElem& r) {
  if (!r.is_zero() && r.modulus() != n)
    throw std::invalid_argument("rho_of_ring: modulus mismatch");
  const long long D = char_degree(n, l);
  ExactMatrix out(n, D, D);
  for (const auto& [g, c] : r.terms()) {
    ExactMatrix m = irrep_matrix(n, l, g);
    for (long long rr = 0; rr < D; ++rr)
      for (long long cc = 0; cc < D; ++cc)
        out.at(rr, cc) += m.at(rr, cc).scaled(mpq_class(c));
  }
  return out;
}

CycScalar inner_product(long long n, const std::vector<CycScalar>& f1,
                        const std::vector<CycScalar>& f2) {
  if (f1.size() != f2.size())
    throw std::invalid_argument("inner_product: size mismatch");
  CycScalar sum(n);
  for (size_t t = 0; t < f1.size(); ++t) sum += f1[t] * f2[t].conj();
  return sum.scaled(mpq_class(1, n * n * n));
}

std::vector<CharLabel> sigma_module_decomposition(long long n, int which) {
  if (which < 1 || which > 3)
    throw std::invalid_argument("sigma_module_decomposition: which in 1..3");
  std::vector<CharLabel> out;
  for (const CharLabel& l : char_labels(n)) {
    long long d = gcd_n(n, l.j);
    bool in = false;
    switch (which) {
      case 1: in = l.i == 0; break;
      case 2: in = l.s == 0; break;
      case 3:
        if (n % 2 == 1) {
          in = (l.i + l.s) % d == 0;
        } else if (l.j % 2 == 0) {
          long long jp = (n / d) % 2 == 1 ? 0 : (d - (l.j / 2) % d) % d;
          in = (l.i + l.s) % d == jp;
        }
        break;
    }
    if (in) out.push_back(l);
  }
  return out;
}

std::vector<std::pair<CharLabel, long long>> regular_rep_decomposition(
    long long n) {
  std::vector<std::pair<CharLabel, long long>> out;
  for (const CharLabel& l : char_labels(n))
    out.emplace_back(l, char_degree(n, l));
  return out;
}

}  // namespace heis
