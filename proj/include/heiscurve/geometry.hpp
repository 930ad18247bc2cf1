#pragma once

namespace heis {

/// Genus, ramification and branch bookkeeping of the closed cover.
struct CoverProfile {
  long long n = 0;
  bool ramified = false;             // n even
  long long genus = 0;
  long long branch_class_count = 0;  // m: number of branch points
  long long ram_index_infinity = 0;  // n (odd) or 2n (even)
};

/// n^2(n-3)/2 + 1 for odd n, plus n^2/4 for even n.
long long genus(long long n);

/// Recomputes 2g - 2 from the three fibers, with fiber sizes derived from
/// element orders in H_n, and compares with genus(n).
bool riemann_hurwitz_check(long long n);

CoverProfile cover_profile(long long n);

}  // namespace heis
