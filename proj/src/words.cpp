#include "heiscurve/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace heis {

namespace {

const char* const kRank2Names[] = {"a", "b"};
const char* const kRank3Names[] = {"x1", "x2", "x3"};

const char* gen_name(int rank, int gen) {
  return rank == 2 ? kRank2Names[gen] : kRank3Names[gen];
}

void push_reduced(std::vector<Syllable>& out, int gen, long long exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back({gen, exp});
}

}  // namespace

void FreeWord::check_rank(int rank) {
  if (rank != 2 && rank != 3)
    throw std::invalid_argument("FreeWord: rank must be 2 or 3");
}

FreeWord::FreeWord(int rank, std::vector<Syllable> syllables) : rank_(rank) {
  check_rank(rank);
  for (const Syllable& s : syllables) {
    if (s.gen < 0 || s.gen >= rank)
      throw std::invalid_argument("FreeWord: generator index out of range");
    push_reduced(syl_, s.gen, s.exp);
  }
}

long long FreeWord::length() const {
  long long len = 0;
  for (const Syllable& s : syl_) len += std::llabs(s.exp);
  return len;
}

FreeWord FreeWord::generator(int rank, int gen, long long exp) {
  return FreeWord(rank, {{gen, exp}});
}

bool FreeWord::operator<(const FreeWord& o) const {
  if (rank_ != o.rank_) return rank_ < o.rank_;
  return std::lexicographical_compare(
      syl_.begin(), syl_.end(), o.syl_.begin(), o.syl_.end(),
      [](const Syllable& x, const Syllable& y) {
        if (x.gen != y.gen) return x.gen < y.gen;
        return x.exp < y.exp;
      });
}

std::string FreeWord::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : syl_) {
    if (!first) os << ' ';
    first = false;
    os << gen_name(rank_, s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

FreeWord FreeWord::parse(const std::string& text, int rank) {
  check_rank(rank);
  std::istringstream is(text);
  std::vector<Syllable> syl;
  std::string tok;
  bool any = false;
  while (is >> tok) {
    any = true;
    if (tok == "1") continue;
    std::string name = tok;
    long long exp = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      exp = std::stoll(tok.substr(pos + 1));
    }
    int gen = -1;
    for (int g = 0; g < rank; ++g)
      if (name == gen_name(rank, g)) gen = g;
    if (gen < 0)
      throw std::invalid_argument("FreeWord::parse: unknown generator '" +
                                  name + "'");
    syl.push_back({gen, exp});
  }
  if (!any) throw std::invalid_argument("FreeWord::parse: empty input");
  return FreeWord(rank, std::move(syl));
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("multiply: rank mismatch");
  std::vector<Syllable> out = u.syllables();
  for (const Syllable& s : v.syllables()) push_reduced(out, s.gen, s.exp);
  return FreeWord(u.rank(), std::move(out));
}

FreeWord invert(const FreeWord& w) {
  std::vector<Syllable> out;
  const auto& syl = w.syllables();
  out.reserve(syl.size());
  for (auto it = syl.rbegin(); it != syl.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return FreeWord(w.rank(), std::move(out));
}

FreeWord power(const FreeWord& w, long long e) {
  FreeWord base = e < 0 ? invert(w) : w;
  long long m = e < 0 ? -e : e;
  FreeWord acc(w.rank());
  for (long long t = 0; t < m; ++t) acc = multiply(acc, base);
  return acc;
}

FreeWord conjugate(const FreeWord& x, const FreeWord& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("conjugate: rank mismatch");
  return multiply(multiply(y, x), invert(y));
}

FreeWord commutator(const FreeWord& x, const FreeWord& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("commutator: rank mismatch");
  return multiply(multiply(x, y), multiply(invert(x), invert(y)));
}

FreeWord apply_endomorphism(const std::vector<FreeWord>& images,
                            const FreeWord& w) {
  if (static_cast<int>(images.size()) != w.rank())
    throw std::invalid_argument("apply_endomorphism: image count != rank");
  int img_rank = images.empty() ? 2 : images[0].rank();
  for (const FreeWord& im : images)
    if (im.rank() != img_rank)
      throw std::invalid_argument("apply_endomorphism: mixed image ranks");
  FreeWord acc(img_rank);
  for (const Syllable& s : w.syllables())
    acc = multiply(acc, power(images[s.gen], s.exp));
  return acc;
}

FormalSum::FormalSum(const FreeWord& w, long long c) { add_term(c, w); }

void FormalSum::add_term(long long c, const FreeWord& w) {
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), w,
      [](const auto& t, const FreeWord& x) { return t.second < x; });
  if (it != terms_.end() && it->second == w) {
    it->first += c;
    if (it->first == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {c, w});
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [c, w] : o.terms_) add_term(c, w);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [c, w] : o.terms_) add_term(-c, w);
  return *this;
}

FormalSum FormalSum::premultiplied(const FreeWord& w) const {
  FormalSum out;
  for (const auto& [c, t] : terms_) out.add_term(c, multiply(w, t));
  return out;
}

FormalSum FormalSum::negated() const {
  FormalSum out;
  for (const auto& [c, t] : terms_) out.add_term(-c, t);
  return out;
}

std::string FormalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, w] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long ac = c < 0 ? -c : c;
    if (ac != 1) os << ac << "*";
    os << "(" << w.str() << ")";
  }
  return os.str();
}

FormalSum fox_derivative(const FreeWord& w, int gen) {
  if (gen < 0 || gen >= w.rank())
    throw std::invalid_argument("fox_derivative: invalid generator index");
  FormalSum out;
  FreeWord prefix(w.rank());
  for (const Syllable& s : w.syllables()) {
    if (s.gen == gen) {
      // d(x^e)/dx = 1 + x + ... + x^{e-1}   (e > 0)
      //           = -(x^{-1} + ... + x^e)   (e < 0)
      FormalSum run;
      if (s.exp > 0) {
        for (long long t = 0; t < s.exp; ++t)
          run += FormalSum(FreeWord::generator(w.rank(), gen, t));
      } else {
        for (long long t = 1; t <= -s.exp; ++t)
          run -= FormalSum(FreeWord::generator(w.rank(), gen, -t));
      }
      out += run.premultiplied(prefix);
    }
    prefix = multiply(prefix, FreeWord::generator(w.rank(), s.gen, s.exp));
  }
  return out;
}

}  // namespace heis
