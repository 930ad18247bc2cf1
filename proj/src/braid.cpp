#include "heiscurve/braid.hpp"

#include <stdexcept>

namespace heis {

BraidAuto::BraidAuto(std::string name_, FreeWord img_a, FreeWord img_b,
                     FreeWord inv_a, FreeWord inv_b)
    : name(std::move(name_)),
      images{std::move(img_a), std::move(img_b)},
      inv_images{std::move(inv_a), std::move(inv_b)} {
  for (int g = 0; g < 2; ++g) {
    FreeWord gen = FreeWord::generator(2, g);
    if (apply(apply_endomorphism(inv_images, gen)) != gen ||
        apply_endomorphism(inv_images, apply(gen)) != gen)
      throw std::invalid_argument("BraidAuto " + name +
                                  ": inverse table does not invert");
  }
}

BraidAuto BraidAuto::inverted() const {
  return BraidAuto(name + "^-1", inv_images[0], inv_images[1], images[0],
                   images[1]);
}

namespace {
FreeWord wp(const std::string& s) { return FreeWord::parse(s, 2); }
}  // namespace

BraidAuto braid_sigma1() {
  return BraidAuto("sigma1", wp("a b a^-1"), wp("a"), wp("b"), wp("b^-1 a b"));
}

BraidAuto braid_sigma2() {
  return BraidAuto("sigma2", wp("a"), wp("a^-1 b^-1"), wp("a"),
                   wp("b^-1 a^-1"));
}

BraidAuto nielsen_a() {
  return BraidAuto("n_a", wp("a^-1"), wp("b"), wp("a^-1"), wp("b"));
}

BraidAuto nielsen_b() {
  return BraidAuto("n_b", wp("a"), wp("b^-1"), wp("a"), wp("b^-1"));
}

BraidAuto nielsen_ab() {
  return BraidAuto("n_ab", wp("a b"), wp("b"), wp("a b^-1"), wp("b"));
}

BraidAuto nielsen_ba() {
  return BraidAuto("n_ba", wp("a"), wp("b a"), wp("a"), wp("b a^-1"));
}

CharacteristicResult is_characteristic(long long n) {
  if (n < 2) throw std::invalid_argument("is_characteristic: need n >= 2");
  CharacteristicResult res;
  const FreeWord T = word_T();
  const FreeWord normal_gens[4] = {power(word_a(), n), power(word_b(), n),
                                   commutator(word_a(), T),
                                   commutator(word_b(), T)};
  for (const BraidAuto& phi :
       {nielsen_a(), nielsen_b(), nielsen_ab(), nielsen_ba()}) {
    for (const FreeWord& w : normal_gens) {
      FreeWord image = phi.apply(w);
      HeisElement img = project_word(image, n);
      if (!img.is_identity()) {
        res.characteristic = false;
        res.witness_auto = phi.name;
        res.witness_word = image;
        res.witness_image = img;
        return res;
      }
    }
  }
  res.characteristic = true;
  return res;
}

ConjugateCoverResult conjugate_cover_test(long long n) {
  if (n % 2 != 0)
    throw std::domain_error("conjugate_cover_test: vacuous for odd n");
  ConjugateCoverResult res;
  const FreeWord ab = multiply(word_a(), word_b());
  res.order_psi = element_order(project_word(ab, n));
  BraidAuto inv = braid_sigma2().inverted();
  for (long long m = 1; m <= 2 * n; ++m) {
    if (project_word(inv.apply(power(ab, m)), n).is_identity()) {
      res.sigma_image_order = m;
      break;
    }
  }
  res.isomorphic = res.order_psi == res.sigma_image_order;
  return res;
}

std::vector<long long> class_vector_mod_gamma(const SchreierSystem& sys,
                                              const FreeWord& w) {
  HeisElement img = project_word(w, sys.n);
  if (img.is_identity()) return rewrite(sys, w);
  const long long n = sys.n;
  if (n % 2 == 0 && img == heis_power(heis_tau(n), n / 2)) {
    // Correct by a boundary word: (ab)^{-n} also projects to tau^{n/2}.
    FreeWord corrected = multiply(w, power(multiply(word_a(), word_b()), -n));
    return rewrite(sys, corrected);
  }
  throw MembershipError(img);
}

IntMatrix homology_action(const SchreierSystem& sys, const HomologyBasis& hb,
                          const BraidAuto& braid) {
  const long long N = hb.N;
  IntMatrix S(N, N);
  for (long long c = 0; c < N; ++c) {
    std::vector<long long> v =
        class_vector_mod_gamma(sys, braid.apply(sys.generators[c]));
    for (long long r = 0; r < N; ++r) S.at(r, c) = v[r];
  }
  IntMatrix C = hb.U * S * hb.Uinv;
  const long long r0 = hb.lattice_rank;
  for (long long r = r0; r < N; ++r)
    for (long long c = 0; c < r0; ++c)
      if (C.at(r, c) != 0)
        throw std::logic_error(
            "homology_action: boundary sublattice is not preserved");
  IntMatrix A(hb.rank, hb.rank);
  for (long long r = 0; r < hb.rank; ++r)
    for (long long c = 0; c < hb.rank; ++c)
      A.at(r, c) = C.at(r0 + r, r0 + c);
  return A;
}

namespace {

RingElem mono(long long i, long long j, long long k, long long coeff = 1) {
  return RingElem(HeisElement(0, i, j, k), coeff);
}

}  // namespace

BurauMatrix burau(int generator) {
  BurauMatrix B;
  for (auto& row : B.m)
    for (auto& e : row) e = RingElem(0);
  if (generator == 1) {
    // [[0, -a t^-1], [-a t^-1, 0]]
    B.m[0][1] = mono(1, 0, -1, -1);
    B.m[1][0] = mono(1, 0, -1, -1);
  } else if (generator == 2) {
    // [[-a^-1 t^-1, -a^-1 b^-1 a^-1 t^-1],
    //  [(1 - a^-1) b^-1 t^-1, (a^-1 b^-1)^2 t^-1]]
    B.m[0][0] = mono(-1, 0, -1, -1);
    HeisElement e01 = compose(
        compose(HeisElement(0, -1, 0, 0), HeisElement(0, 0, -1, 0)),
        compose(HeisElement(0, -1, 0, 0), HeisElement(0, 0, 0, -1)));
    B.m[0][1] = RingElem(e01, -1);
    HeisElement bt = compose(HeisElement(0, 0, -1, 0), HeisElement(0, 0, 0, -1));
    B.m[1][0] = RingElem(bt, 1) - RingElem(compose(HeisElement(0, -1, 0, 0), bt), 1);
    HeisElement ainvbinv =
        compose(HeisElement(0, -1, 0, 0), HeisElement(0, 0, -1, 0));
    HeisElement e11 =
        compose(compose(ainvbinv, ainvbinv), HeisElement(0, 0, 0, -1));
    B.m[1][1] = RingElem(e11, 1);
  } else {
    throw std::invalid_argument("burau: generator must be 1 or 2");
  }
  return B;
}

BurauMatrix burau_mul(const BurauMatrix& x, const BurauMatrix& y) {
  BurauMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      RingElem acc(0);
      for (int k = 0; k < 2; ++k)
        acc += ring_mul(x.m[r][k], y.m[k][c]);
      out.m[r][c] = acc;
    }
  return out;
}

bool burau_braid_relation_holds() {
  BurauMatrix b1 = burau(1), b2 = burau(2);
  return burau_mul(burau_mul(b1, b2), b1) == burau_mul(burau_mul(b2, b1), b2);
}

}  // namespace heis
