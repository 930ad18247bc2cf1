#pragma once

#include <vector>

#include "heiscurve/cyclotomic.hpp"
#include "heiscurve/groupring.hpp"
#include "heiscurve/heisenberg.hpp"

namespace heis {

/// Label (i, j, s) of an irreducible character of H_n, with
/// 0 <= j < n and 0 <= i, s < gcd(n, j) (gcd(n, 0) = n).
struct CharLabel {
  long long i = 0, j = 0, s = 0;
  friend bool operator==(const CharLabel&, const CharLabel&) = default;
  friend auto operator<=>(const CharLabel&, const CharLabel&) = default;
};

long long gcd_n(long long n, long long j);  // gcd with gcd(n,0) = n

/// All labels, ordered by (j, i, s).
std::vector<CharLabel> char_labels(long long n);

long long char_degree(long long n, const CharLabel& l);  // n / gcd(n, j)

/// Closed-form character value: (n/d) zeta^{mu*i + m*s + lambda*j} when
/// n/d divides both the beta and alpha exponents of g, else 0.
CycScalar character_value(long long n, const CharLabel& l,
                          const HeisElement& g);

/// Value vector over the fixed (j, k, i) element enumeration.
std::vector<CycScalar> character_vector(long long n, const CharLabel& l);

/// Monomial matrix of the representation induced from the subgroup
/// generated by alpha, tau and beta^{n/d}; coset representatives are the
/// powers of beta in increasing order.
ExactMatrix irrep_matrix(long long n, const CharLabel& l,
                         const HeisElement& g);

/// Linear extension of irrep_matrix to the group ring.
ExactMatrix rho_of_ring(long long n, const CharLabel& l, const RingElem& r);

/// (1/n^3) sum_g f1(g) conj(f2(g)) over value vectors.
CycScalar inner_product(long long n, const std::vector<CycScalar>& f1,
                        const std::vector<CycScalar>& f2);

/// Labels appearing in the module cut out by Sigma_1, Sigma_2 or
/// Sigma_3star (which = 1, 2, 3); each appears with multiplicity one.
std::vector<CharLabel> sigma_module_decomposition(long long n, int which);

/// Every label with multiplicity equal to its degree.
std::vector<std::pair<CharLabel, long long>> regular_rep_decomposition(
    long long n);

}  // namespace heis
