#pragma once

#include <array>
#include <vector>

#include "heiscurve/characters.hpp"
#include "heiscurve/groupring.hpp"
#include "heiscurve/intmat.hpp"

namespace heis {

/// Fox-derivative presentation matrix of the Alexander module: the 3 x 4
/// matrix [[S1,0,0,1],[0,S2,0,a],[0,0,S3*,ab]] over Z[H_n], with relator
/// exponents e1 = e2 = n and e3 = n (odd) or 2n (even).
struct QMatrix {
  long long n = 0;
  long long e1 = 0, e2 = 0, e3 = 0;
  std::array<std::array<RingElem, 4>, 3> entries;
};

/// Closed-form construction, cross-checked entrywise against the
/// Fox-derivative route; throws on disagreement.
QMatrix q_matrix(long long n);
QMatrix q_matrix_closed(long long n);
/// Independent route: Fox derivatives of the relators x1^{e1}, x2^{e2},
/// x3^{e3}, x1 x2 x3 in F_3, projected under x1 -> a, x2 -> b,
/// x3 -> (ab)^{-1}.
QMatrix q_matrix_fox(long long n);

/// Block integer matrix (3n^3 x 4n^3) of left-multiplication operators in
/// the fixed basis.
IntMatrix flatten(const QMatrix& Q);

inline constexpr long long kSnfColumnBudget = 2500;

struct RankZResult {
  long long rank = 0;
  std::vector<mpz_class> factors;
};

/// Smith normal form rank and invariant factors; throws when the column
/// count exceeds the budget.
RankZResult rank_z(const IntMatrix& m, long long max_cols = kSnfColumnBudget);

/// Rank over Q(zeta_n) of the 3d x 4d matrix with each entry r replaced by
/// rho_label(r).
long long block_rank(const QMatrix& Q, const CharLabel& l);

/// Block ranks for all labels in char_labels order; the parallel flag runs
/// the per-label loop with OpenMP when available.
std::vector<long long> block_ranks_all(const QMatrix& Q, bool parallel);

/// The bracket-count z_j(i, s) of appearances across the three Sigma
/// modules (congruences mod 1 always hold).
long long z_function(long long n, long long i, long long j, long long s);

/// Multiplicity of the label in Im(Q) tensor F: degree + z off the trivial
/// label, 3 at it.
long long c_closed_form(long long n, const CharLabel& l);
/// Homology multiplicity: degree - z off the trivial label, 0 at it.
long long h_closed_form(long long n, const CharLabel& l);

/// Homology multiplicities computed two ways (closed form and the
/// exactness oracle 3d - block_rank - d + [trivial]); throws naming the
/// label on disagreement.
std::vector<std::pair<CharLabel, long long>> homology_multiplicities(
    long long n, bool parallel = false);

/// rank_Z of the Alexander module: 3n^3 minus the rank of the flattened Q
/// (computed by SNF within budget, by character blocks beyond it).
long long alexander_rank(long long n);

}  // namespace heis
