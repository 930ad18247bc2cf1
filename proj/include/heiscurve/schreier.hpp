#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heiscurve/heisenberg.hpp"
#include "heiscurve/intmat.hpp"
#include "heiscurve/words.hpp"

namespace heis {

/// Raised when a word handed to the rewriting map is not in the kernel of
/// the projection to H_n; carries the offending image.
class MembershipError : public std::runtime_error {
public:
  MembershipError(const HeisElement& image)
      : std::runtime_error("word is not in the kernel: projects to " +
                           image.str()),
        image_(image) {}
  const HeisElement& image() const { return image_; }

private:
  HeisElement image_;
};

inline constexpr long long kSchreierCap = 6;

/// Coset table, prefix-closed transversal and Schreier generators of the
/// kernel of F_2 -> H_n, built by BFS over the Cayley graph of H_n with the
/// fixed edge order a, b, a^-1, b^-1.
struct SchreierSystem {
  long long n = 0;
  long long states = 0;  // n^3, indexed by element_index
  // state x {a, b, a^-1, b^-1} -> state
  std::vector<std::array<long long, 4>> table;
  std::vector<FreeWord> transversal;  // indexed by state
  std::vector<long long> bfs_order;   // states in discovery order
  std::vector<FreeWord> generators;   // the n^3+1 free generators
  // (state, positive generator) -> generator index, -1 on tree pairs
  std::vector<std::array<long long, 2>> gen_index;

  long long rank() const { return static_cast<long long>(generators.size()); }
};

SchreierSystem build_system(long long n, long long cap = kSchreierCap);

/// Abelianized coordinates of w in the Schreier basis.  Throws
/// MembershipError when w does not project to the identity.
std::vector<long long> rewrite(const SchreierSystem& sys, const FreeWord& w);

/// Signed generator sequence of the full (non-abelian) rewriting; the signed
/// product of generator words in this order is freely equal to w.
std::vector<std::pair<long long, int>> rewrite_letters(const SchreierSystem& sys,
                                                       const FreeWord& w);

/// The explicit free-generator family (a^n)^{b^i T^k}, (b^n)^{a^i T^k},
/// [a,T]^{a^i T^k}, [b,T]^{a^i b^j T^k} with its exact index ranges; n >= 3.
std::vector<FreeWord> paper_basis(long long n);

/// Matrix of the conjugation action of h on the abelianized kernel: column
/// m is rewrite(t_h gamma_m t_h^{-1}).
IntMatrix conjugation_matrix(const SchreierSystem& sys, const HeisElement& h);

struct TwoStepReport {
  long long n = 0;
  std::array<long long, 4> sizes{};  // #A1..#A4
  long long total = 0;
  bool sizes_match = false;       // against n^2, n^2, (n-1)^2, (n-1)^3-(n-1)
  bool all_members = false;       // every element projects to the identity
  std::vector<FreeWord> elements; // A1, A2, A3, A4 concatenated
};

/// Replicates the two-step route: Schreier generators of the kernel inside
/// the Fermat-level free group with transversal {T^k}.
TwoStepReport verify_two_step(long long n, long long cap = kSchreierCap);

/// Rows are the abelianized classes of t w t^{-1} for every transversal
/// word t and w in {a^n, b^n, (ab)^{e3}}, e3 = n or 2n by parity.
IntMatrix gamma_lattice(const SchreierSystem& sys);

struct IntegralHomology {
  long long rank = 0;                // expected 2g
  std::vector<mpz_class> torsion;    // invariant factors > 1, expected empty
  long long lattice_rank = 0;        // rank of the boundary sublattice
};

IntegralHomology homology_integral(const SchreierSystem& sys);

/// Quotient structure of Z^{n^3+1} by the boundary sublattice, with the
/// unimodular change of basis needed to act on H_1 coordinates.
struct HomologyBasis {
  long long N = 0;             // n^3 + 1
  long long lattice_rank = 0;  // r
  long long rank = 0;          // N - r = 2g
  std::vector<mpz_class> torsion;
  IntMatrix U, Uinv;           // U * B ~ diag, columns of B = lattice gens

  /// Image of an abelianized class vector in the free quotient Z^{2g}.
  std::vector<mpz_class> project(const std::vector<long long>& v) const;
};

HomologyBasis homology_basis(const SchreierSystem& sys);

/// Lattice-membership check of the n = 3 congruence
/// [b,T] = -[a,T]^{a T} - [a,T]^{a^2} mod the boundary sublattice.
bool relation_n3(const SchreierSystem& sys);

struct StabilizerRow {
  std::string element;     // family name
  std::string subgroup;    // printed generator family
  bool printed_holds = false;
  bool reflected_holds = false;  // tau exponent i replaced by n - i
};

/// Checks the fixed-element table rows under both tau-index pairings.
std::vector<StabilizerRow> stabilizer_report(const SchreierSystem& sys);

// Shared small words.
FreeWord word_a();
FreeWord word_b();
FreeWord word_T();  // [a, b]
/// a^i b^j T^k as a word (exponents may be negative).
FreeWord conjugator(long long i, long long j, long long k);

}  // namespace heis
