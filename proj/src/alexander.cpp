#include "heiscurve/alexander.hpp"

#include <sstream>
#include <stdexcept>

#include "heiscurve/words.hpp"

namespace heis {

QMatrix q_matrix_closed(long long n) {
  QMatrix Q;
  Q.n = n;
  Q.e1 = Q.e2 = n;
  Q.e3 = n % 2 == 1 ? n : 2 * n;
  SigmaElements s = sigma_elements(n);
  for (auto& row : Q.entries)
    for (auto& e : row) e = RingElem(n);
  Q.entries[0][0] = s.sigma1;
  Q.entries[1][1] = s.sigma2;
  Q.entries[2][2] = s.sigma3star;
  Q.entries[0][3] = ring_one(n);
  Q.entries[1][3] = RingElem(heis_alpha(n));
  Q.entries[2][3] = RingElem(compose(heis_alpha(n), heis_beta(n)));
  return Q;
}

namespace {

RingElem project_sum(const FormalSum& fs, long long n) {
  const std::vector<HeisElement> images = {
      heis_alpha(n), heis_beta(n),
      inverse(compose(heis_alpha(n), heis_beta(n)))};
  RingElem out(n);
  for (const auto& [c, w] : fs.terms()) out.add(apply_word(w, images), c);
  return out;
}

}  // namespace

QMatrix q_matrix_fox(long long n) {
  QMatrix Q;
  Q.n = n;
  Q.e1 = Q.e2 = n;
  Q.e3 = n % 2 == 1 ? n : 2 * n;
  const FreeWord x1 = FreeWord::generator(3, 0);
  const FreeWord x2 = FreeWord::generator(3, 1);
  const FreeWord x3 = FreeWord::generator(3, 2);
  const FreeWord relators[4] = {power(x1, Q.e1), power(x2, Q.e2),
                                power(x3, Q.e3),
                                multiply(multiply(x1, x2), x3)};
  for (int g = 0; g < 3; ++g)
    for (int r = 0; r < 4; ++r)
      Q.entries[g][r] = project_sum(fox_derivative(relators[r], g), n);
  return Q;
}

QMatrix q_matrix(long long n) {
  if (n < 2) throw std::invalid_argument("q_matrix: need n >= 2");
  QMatrix closed = q_matrix_closed(n);
  QMatrix fox = q_matrix_fox(n);
  for (int g = 0; g < 3; ++g)
    for (int r = 0; r < 4; ++r)
      if (!(closed.entries[g][r] == fox.entries[g][r]))
        throw std::logic_error(
            "q_matrix: closed form and Fox route disagree at entry (" +
            std::to_string(g) + "," + std::to_string(r) + ")");
  return closed;
}

IntMatrix flatten(const QMatrix& Q) {
  const long long N = Q.n * Q.n * Q.n;
  IntMatrix out(3 * N, 4 * N);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 4; ++q) {
      if (Q.entries[p][q].is_zero()) continue;
      IntMatrix block = left_mult_matrix(Q.entries[p][q]);
      for (long long r = 0; r < N; ++r)
        for (long long c = 0; c < N; ++c)
          if (block.at(r, c) != 0) out.at(p * N + r, q * N + c) = block.at(r, c);
    }
  return out;
}

RankZResult rank_z(const IntMatrix& m, long long max_cols) {
  if (m.cols() > max_cols)
    throw std::invalid_argument("rank_z: column count exceeds the SNF budget");
  SmithResult snf = smith_normal_form(m);
  return {snf.rank, std::move(snf.factors)};
}

long long block_rank(const QMatrix& Q, const CharLabel& l) {
  const long long d = char_degree(Q.n, l);
  ExactMatrix m(Q.n, 3 * d, 4 * d);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 4; ++q) {
      if (Q.entries[p][q].is_zero()) continue;
      ExactMatrix block = rho_of_ring(Q.n, l, Q.entries[p][q]);
      for (long long r = 0; r < d; ++r)
        for (long long c = 0; c < d; ++c)
          m.at(p * d + r, q * d + c) = block.at(r, c);
    }
  return exact_rank(m);
}

std::vector<long long> block_ranks_all(const QMatrix& Q, bool parallel) {
  std::vector<CharLabel> labels = char_labels(Q.n);
  std::vector<long long> ranks(labels.size(), 0);
  if (parallel) {
    cyc_field(Q.n);  // warm the shared field cache before fanning out
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(labels.size()); ++t)
      ranks[t] = block_rank(Q, labels[t]);
  } else {
    for (size_t t = 0; t < labels.size(); ++t)
      ranks[t] = block_rank(Q, labels[t]);
  }
  return ranks;
}

long long z_function(long long n, long long i, long long j, long long s) {
  const long long d = gcd_n(n, j);
  long long z = 0;
  if (i == 0 || s == 0) ++z;
  if (i == 0 && s == 0) ++z;
  if (n % 2 == 1) {
    if ((i + s) % d == 0) ++z;
  } else if (j % 2 == 0) {
    long long jp = (n / d) % 2 == 1 ? 0 : (d - (j / 2) % d) % d;
    if ((i + s) % d == jp) ++z;
  }
  return z;
}

long long c_closed_form(long long n, const CharLabel& l) {
  long long d = char_degree(n, l);
  long long z = z_function(n, l.i, l.j, l.s);
  if (l.i == 0 && l.j == 0 && l.s == 0) return d - 1 + z;  // = 3
  return d + z;
}

long long h_closed_form(long long n, const CharLabel& l) {
  if (l.i == 0 && l.j == 0 && l.s == 0) return 0;
  return char_degree(n, l) - z_function(n, l.i, l.j, l.s);
}

std::vector<std::pair<CharLabel, long long>> homology_multiplicities(
    long long n, bool parallel) {
  QMatrix Q = q_matrix(n);
  std::vector<CharLabel> labels = char_labels(n);
  std::vector<long long> ranks = block_ranks_all(Q, parallel);
  std::vector<std::pair<CharLabel, long long>> out;
  out.reserve(labels.size());
  for (size_t t = 0; t < labels.size(); ++t) {
    const CharLabel& l = labels[t];
    long long d = char_degree(n, l);
    bool trivial = l.i == 0 && l.j == 0 && l.s == 0;
    long long oracle = 3 * d - ranks[t] - d + (trivial ? 1 : 0);
    long long closed = h_closed_form(n, l);
    if (oracle != closed) {
      std::ostringstream os;
      os << "homology_multiplicities: oracle " << oracle << " vs closed form "
         << closed << " at label (" << l.i << "," << l.j << "," << l.s << ")";
      throw std::logic_error(os.str());
    }
    out.emplace_back(l, closed);
  }
  return out;
}

long long alexander_rank(long long n) {
  const long long N = n * n * n;
  if (4 * N <= kSnfColumnBudget) {
    return 3 * N - rank_z(flatten(q_matrix(n))).rank;
  }
  // Character-block route: rank Q = sum over labels of degree * block rank.
  QMatrix Q = q_matrix(n);
  std::vector<CharLabel> labels = char_labels(n);
  std::vector<long long> ranks = block_ranks_all(Q, true);
  long long rank = 0;
  for (size_t t = 0; t < labels.size(); ++t)
    rank += char_degree(n, labels[t]) * ranks[t];
  return 3 * N - rank;
}

}  // namespace heis
