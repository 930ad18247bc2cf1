#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heiscurve/groupring.hpp"
#include "heiscurve/intmat.hpp"
#include "heiscurve/schreier.hpp"
#include "heiscurve/words.hpp"

namespace heis {

/// Automorphism of F_2 given by generator images, with verified inverse
/// images.
struct BraidAuto {
  std::string name;
  std::vector<FreeWord> images;      // of a, b
  std::vector<FreeWord> inv_images;  // of a, b under the inverse

  BraidAuto(std::string name_, FreeWord img_a, FreeWord img_b,
            FreeWord inv_a, FreeWord inv_b);

  FreeWord apply(const FreeWord& w) const {
    return apply_endomorphism(images, w);
  }
  FreeWord apply_inverse(const FreeWord& w) const {
    return apply_endomorphism(inv_images, w);
  }
  BraidAuto inverted() const;
};

BraidAuto braid_sigma1();  // a -> a b a^-1, b -> a
BraidAuto braid_sigma2();  // a -> a, b -> a^-1 b^-1
BraidAuto nielsen_a();     // a -> a^-1
BraidAuto nielsen_b();     // b -> b^-1
BraidAuto nielsen_ab();    // a -> a b
BraidAuto nielsen_ba();    // b -> b a

struct CharacteristicResult {
  bool characteristic = false;
  // On failure: the automorphism, the normal generator, and the image.
  std::optional<std::string> witness_auto;
  std::optional<FreeWord> witness_word;   // image of the generator
  std::optional<HeisElement> witness_image;
};

/// Applies each Nielsen generator to each normal generator of the kernel
/// and tests membership by projection.
CharacteristicResult is_characteristic(long long n);

struct ConjugateCoverResult {
  long long order_psi = 0;          // order of the image of ab: 2n
  long long sigma_image_order = 0;  // least m with sigma2^{-1}((ab)^m) in kernel
  bool isomorphic = false;
};

/// Order-based non-isomorphism test of the cover and its sigma_2 conjugate;
/// n must be even.
ConjugateCoverResult conjugate_cover_test(long long n);

/// Abelianized class vector of w, corrected mod the boundary lattice when w
/// projects to the nontrivial element tau^{n/2} reachable in the even case.
std::vector<long long> class_vector_mod_gamma(const SchreierSystem& sys,
                                              const FreeWord& w);

/// Induced matrix on H_1 (columns are images of basis classes).  Verifies
/// that the boundary sublattice is preserved.
IntMatrix homology_action(const SchreierSystem& sys, const HomologyBasis& hb,
                          const BraidAuto& braid);

/// 2x2 matrix over the integral Heisenberg group ring (modulus 0).
struct BurauMatrix {
  std::array<std::array<RingElem, 2>, 2> m;
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

BurauMatrix burau(int generator);  // 1 or 2
BurauMatrix burau_mul(const BurauMatrix& x, const BurauMatrix& y);
/// Whether B1 B2 B1 = B2 B1 B2 as exact group-ring matrix products.
bool burau_braid_relation_holds();

}  // namespace heis
