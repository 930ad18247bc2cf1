#include "heiscurve/schreier.hpp"

#include <algorithm>
#include <deque>

namespace heis {

FreeWord word_a() { return FreeWord::generator(2, 0); }
FreeWord word_b() { return FreeWord::generator(2, 1); }
FreeWord word_T() { return commutator(word_a(), word_b()); }

FreeWord conjugator(long long i, long long j, long long k) {
  FreeWord w(2);
  w = multiply(w, power(word_a(), i));
  w = multiply(w, power(word_b(), j));
  w = multiply(w, power(word_T(), k));
  return w;
}

SchreierSystem build_system(long long n, long long cap) {
  if (n < 2) throw std::invalid_argument("build_system: need n >= 2");
  if (n > cap) throw std::invalid_argument("build_system: n above cap");
  SchreierSystem sys;
  sys.n = n;
  sys.states = n * n * n;
  sys.table.assign(sys.states, {-1, -1, -1, -1});
  sys.transversal.assign(sys.states, FreeWord(2));
  sys.gen_index.assign(sys.states, {-1, -1});

  const std::vector<HeisElement> elems = enumerate_elements(n);
  // Edge labels 0..3 = a, b, a^-1, b^-1 (fixed BFS order).
  const HeisElement steps[4] = {heis_alpha(n), heis_beta(n),
                                inverse(heis_alpha(n)),
                                inverse(heis_beta(n))};
  const FreeWord letters[4] = {word_a(), word_b(), invert(word_a()),
                               invert(word_b())};

  std::vector<bool> seen(sys.states, false);
  std::deque<long long> queue;
  long long start = element_index(heis_identity(n));
  seen[start] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    long long s = queue.front();
    queue.pop_front();
    sys.bfs_order.push_back(s);
    for (int x = 0; x < 4; ++x) {
      long long s2 = element_index(compose(elems[s], steps[x]));
      sys.table[s][x] = s2;
      if (!seen[s2]) {
        seen[s2] = true;
        sys.transversal[s2] = multiply(sys.transversal[s], letters[x]);
        queue.push_back(s2);
      }
    }
  }

  // Schreier generators gamma(t, x) = t x (tx-bar)^{-1} for positive x,
  // skipping the pairs where the word reduces to the identity.
  for (long long s : sys.bfs_order) {
    for (int x = 0; x < 2; ++x) {
      long long s2 = sys.table[s][x];
      FreeWord gamma = multiply(multiply(sys.transversal[s], letters[x]),
                                invert(sys.transversal[s2]));
      if (gamma.is_identity()) continue;
      sys.gen_index[s][x] = static_cast<long long>(sys.generators.size());
      sys.generators.push_back(gamma);
    }
  }
  return sys;
}

namespace {

template <typename Emit>
void rewrite_walk(const SchreierSystem& sys, const FreeWord& w, Emit emit) {
  long long state = element_index(heis_identity(sys.n));
  const long long start = state;
  for (const Syllable& syl : w.syllables()) {
    long long reps = syl.exp < 0 ? -syl.exp : syl.exp;
    for (long long t = 0; t < reps; ++t) {
      if (syl.exp > 0) {
        long long idx = sys.gen_index[state][syl.gen];
        if (idx >= 0) emit(idx, +1);
        state = sys.table[state][syl.gen];
      } else {
        state = sys.table[state][syl.gen + 2];
        long long idx = sys.gen_index[state][syl.gen];
        if (idx >= 0) emit(idx, -1);
      }
    }
  }
  if (state != start) throw MembershipError(enumerate_elements(sys.n)[state]);
}

}  // namespace

std::vector<long long> rewrite(const SchreierSystem& sys, const FreeWord& w) {
  std::vector<long long> vec(sys.rank(), 0);
  rewrite_walk(sys, w, [&](long long idx, int sign) { vec[idx] += sign; });
  return vec;
}

std::vector<std::pair<long long, int>> rewrite_letters(
    const SchreierSystem& sys, const FreeWord& w) {
  std::vector<std::pair<long long, int>> out;
  rewrite_walk(sys, w, [&](long long idx, int sign) {
    out.emplace_back(idx, sign);
  });
  return out;
}

std::vector<FreeWord> paper_basis(long long n) {
  if (n < 3) throw std::invalid_argument("paper_basis: need n >= 3");
  std::vector<FreeWord> out;
  const FreeWord an = power(word_a(), n);
  const FreeWord bn = power(word_b(), n);
  const FreeWord aT = commutator(word_a(), word_T());
  const FreeWord bT = commutator(word_b(), word_T());
  // (a^n)^{b^i T^k}
  for (long long i = 0; i < n; ++i)
    for (long long k = 0; k < n; ++k)
      out.push_back(conjugate(an, conjugator(0, i, k)));
  // (b^n)^{a^i T^k}
  for (long long i = 0; i < n; ++i)
    for (long long k = 0; k < n; ++k)
      out.push_back(conjugate(bn, conjugator(i, 0, k)));
  // [a,T]^{a^i T^k}, 0 <= i <= n-3 plus the single (i,k) = (n-2, 0)
  for (long long i = 0; i + 3 <= n; ++i)
    for (long long k = 0; k < n; ++k)
      out.push_back(conjugate(aT, conjugator(i, 0, k)));
  out.push_back(conjugate(aT, conjugator(n - 2, 0, 0)));
  // [b,T]^{a^i b^j T^k}, 0 <= i <= n-2, 0 <= j <= n-3
  for (long long i = 0; i + 2 <= n; ++i)
    for (long long j = 0; j + 3 <= n; ++j)
      for (long long k = 0; k < n; ++k)
        out.push_back(conjugate(bT, conjugator(i, j, k)));
  return out;
}

IntMatrix conjugation_matrix(const SchreierSystem& sys, const HeisElement& h) {
  const FreeWord& t = sys.transversal[element_index(h)];
  IntMatrix m(sys.rank(), sys.rank());
  for (long long c = 0; c < sys.rank(); ++c) {
    std::vector<long long> v = rewrite(sys, conjugate(sys.generators[c], t));
    for (long long r = 0; r < sys.rank(); ++r) m.at(r, c) = v[r];
  }
  return m;
}

TwoStepReport verify_two_step(long long n, long long cap) {
  if (n < 2) throw std::invalid_argument("verify_two_step: need n >= 2");
  if (n > cap) throw std::invalid_argument("verify_two_step: n above cap");
  TwoStepReport rep;
  rep.n = n;
  const FreeWord an = power(word_a(), n);
  const FreeWord bn = power(word_b(), n);
  const FreeWord T = word_T();
  std::vector<FreeWord> A1, A2, A3, A4;
  for (long long k = 0; k < n; ++k) {
    FreeWord tk = power(T, k);
    for (long long i = 0; i < n; ++i) {
      A1.push_back(conjugate(conjugate(an, power(word_b(), i)), tk));
      A2.push_back(conjugate(conjugate(bn, power(word_a(), i)), tk));
    }
  }
  for (long long i = 0; i + 2 <= n; ++i)
    for (long long j = 0; j + 2 <= n; ++j) {
      FreeWord Tij = conjugate(T, conjugator(i, j, 0));
      A3.push_back(multiply(power(T, n - 1), Tij));
      if (i == 0 && j == 0) continue;
      for (long long k = 0; k + 2 <= n; ++k)
        A4.push_back(
            multiply(multiply(power(T, k), Tij), power(T, -(k + 1))));
    }
  rep.sizes = {static_cast<long long>(A1.size()),
               static_cast<long long>(A2.size()),
               static_cast<long long>(A3.size()),
               static_cast<long long>(A4.size())};
  rep.total = rep.sizes[0] + rep.sizes[1] + rep.sizes[2] + rep.sizes[3];
  rep.sizes_match = rep.sizes[0] == n * n && rep.sizes[1] == n * n &&
                    rep.sizes[2] == (n - 1) * (n - 1) &&
                    rep.sizes[3] == (n - 1) * (n - 1) * (n - 1) - (n - 1) &&
                    rep.total == n * n * n + 1;
  rep.all_members = true;
  for (auto* set : {&A1, &A2, &A3, &A4})
    for (const FreeWord& w : *set) {
      if (!project_word(w, n).is_identity()) rep.all_members = false;
      rep.elements.push_back(w);
    }
  return rep;
}

IntMatrix gamma_lattice(const SchreierSystem& sys) {
  const long long n = sys.n;
  const long long e3 = n % 2 == 1 ? n : 2 * n;
  const FreeWord bounds[3] = {power(word_a(), n), power(word_b(), n),
                              power(multiply(word_a(), word_b()), e3)};
  IntMatrix m(3 * sys.states, sys.rank());
  long long r = 0;
  for (long long s = 0; s < sys.states; ++s)
    for (const FreeWord& w : bounds) {
      std::vector<long long> v = rewrite(sys, conjugate(w, sys.transversal[s]));
      for (long long c = 0; c < sys.rank(); ++c) m.at(r, c) = v[c];
      ++r;
    }
  return m;
}

IntegralHomology homology_integral(const SchreierSystem& sys) {
  IntegralHomology out;
  SmithResult snf = smith_normal_form(gamma_lattice(sys));
  out.lattice_rank = snf.rank;
  out.rank = sys.rank() - snf.rank;
  for (const mpz_class& d : snf.factors)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

HomologyBasis homology_basis(const SchreierSystem& sys) {
  HomologyBasis hb;
  hb.N = sys.rank();
  // Columns generate the boundary sublattice.
  SmithResult snf = smith_normal_form(gamma_lattice(sys).transposed(), true);
  hb.lattice_rank = snf.rank;
  hb.rank = hb.N - snf.rank;
  for (const mpz_class& d : snf.factors)
    if (d != 1) hb.torsion.push_back(d);
  hb.U = std::move(snf.U);
  hb.Uinv = std::move(snf.Uinv);
  return hb;
}

std::vector<mpz_class> HomologyBasis::project(
    const std::vector<long long>& v) const {
  std::vector<mpz_class> z(v.size());
  for (size_t t = 0; t < v.size(); ++t) z[t] = v[t];
  std::vector<mpz_class> w = U.apply(z);
  return std::vector<mpz_class>(w.begin() + lattice_rank, w.end());
}

bool relation_n3(const SchreierSystem& sys) {
  if (sys.n != 3) throw std::invalid_argument("relation_n3: needs n == 3");
  const FreeWord aT = commutator(word_a(), word_T());
  const FreeWord bT = commutator(word_b(), word_T());
  std::vector<long long> v = rewrite(sys, bT);
  std::vector<long long> u1 = rewrite(sys, conjugate(aT, conjugator(1, 0, 1)));
  std::vector<long long> u2 = rewrite(sys, conjugate(aT, conjugator(2, 0, 0)));
  std::vector<mpz_class> sum(v.size());
  for (size_t t = 0; t < v.size(); ++t) sum[t] = v[t] + u1[t] + u2[t];
  IntMatrix h = hermite_basis(gamma_lattice(sys));
  return in_row_lattice(h, sum);
}

std::vector<StabilizerRow> stabilizer_report(const SchreierSystem& sys) {
  const long long n = sys.n;
  const bool ramified = n % 2 == 0;
  const long long e3 = ramified ? 2 * n : n;
  const FreeWord an = power(word_a(), n);
  const FreeWord bn = power(word_b(), n);
  const FreeWord abn = power(multiply(word_a(), word_b()), e3);

  auto fixed_by = [&](const FreeWord& conj_word, const HeisElement& h) {
    FreeWord x = conj_word;
    std::vector<long long> v = rewrite(sys, x);
    std::vector<long long> vh =
        rewrite(sys, conjugate(x, sys.transversal[element_index(h)]));
    return v == vh;
  };

  auto check_row = [&](const FreeWord& base, bool beta_conj, long long kmax,
                       auto stab_gen) {
    bool printed = true, reflected = true;
    for (long long i = 0; i < n; ++i)
      for (long long k = 0; k < kmax; ++k) {
        FreeWord x = beta_conj ? conjugate(base, conjugator(0, i, k))
                               : conjugate(base, conjugator(i, 0, k));
        if (!fixed_by(x, stab_gen(i))) printed = false;
        if (!fixed_by(x, stab_gen((n - i) % n))) reflected = false;
      }
    return std::make_pair(printed, reflected);
  };

  std::vector<StabilizerRow> rows;
  {
    StabilizerRow r{"(a^n)^{t^k b^i}", "<a t^i>", false, false};
    auto [p, q] = check_row(an, true, n, [&](long long e) {
      return compose(heis_alpha(n), heis_power(heis_tau(n), e));
    });
    r.printed_holds = p;
    r.reflected_holds = q;
    rows.push_back(r);
  }
  {
    StabilizerRow r{"(b^n)^{a^i t^k}", "<b t^{n-i}>", false, false};
    auto [p, q] = check_row(bn, false, n, [&](long long e) {
      return compose(heis_beta(n), heis_power(heis_tau(n), (n - e) % n));
    });
    r.printed_holds = p;
    r.reflected_holds = q;
    rows.push_back(r);
  }
  {
    const char* name = ramified ? "((ab)^{2n})^{a^i t^k}" : "((ab)^n)^{a^i t^k}";
    StabilizerRow r{name, "<ab t^{n-i}>", false, false};
    long long kmax = ramified ? n / 2 : n;
    auto [p, q] = check_row(abn, false, kmax, [&](long long e) {
      return compose(compose(heis_alpha(n), heis_beta(n)),
                     heis_power(heis_tau(n), (n - e) % n));
    });
    r.printed_holds = p;
    r.reflected_holds = q;
    rows.push_back(r);
  }
  if (ramified) {
    StabilizerRow r{"((ab)^{2n})^{a^i t^k}", "<t^{n/2}>", true, true};
    for (long long i = 0; i < n; ++i)
      for (long long k = 0; k < n / 2; ++k) {
        FreeWord x = conjugate(abn, conjugator(i, 0, k));
        if (!fixed_by(x, heis_power(heis_tau(n), n / 2))) {
          r.printed_holds = false;
          r.reflected_holds = false;
        }
      }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace heis
