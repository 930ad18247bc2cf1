#include "heiscurve/geometry.hpp"

#include <stdexcept>

#include "heiscurve/heisenberg.hpp"

namespace heis {

long long genus(long long n) {
  if (n < 2) throw std::invalid_argument("genus: need n >= 2");
  long long g = n * n * (n - 3);  // twice the shared term
  if (n % 2 == 0) g += n * n / 2;
  return g / 2 + 1;
}

bool riemann_hurwitz_check(long long n) {
  if (n < 2) throw std::invalid_argument("riemann_hurwitz_check: need n >= 2");
  const long long order = n * n * n;
  const HeisElement monodromy[3] = {
      heis_alpha(n), heis_beta(n),
      compose(heis_alpha(n), heis_beta(n))};
  long long rhs = -2 * order;
  for (const HeisElement& g : monodromy) {
    long long e = element_order(g);
    rhs += (order / e) * (e - 1);  // fiber size times (index - 1)
  }
  return rhs == 2 * genus(n) - 2;
}

CoverProfile cover_profile(long long n) {
  CoverProfile p;
  p.n = n;
  p.ramified = n % 2 == 0;
  p.genus = genus(n);
  const long long order = n * n * n;
  long long m = 0;
  for (const HeisElement& g : {heis_alpha(n), heis_beta(n),
                               compose(heis_alpha(n), heis_beta(n))})
    m += order / element_order(g);
  p.branch_class_count = m;
  p.ram_index_infinity =
      element_order(compose(heis_alpha(n), heis_beta(n)));
  return p;
}

}  // namespace heis
