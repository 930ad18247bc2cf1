#include "heiscurve/heisenberg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace heis {

namespace {

long long mod_reduce(long long x, long long n) {
  if (n == 0) return x;
  long long r = x % n;
  return r < 0 ? r + n : r;
}

long long gcdll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

HeisElement::HeisElement(long long n_, long long i_, long long j_, long long k_)
    : n(n_), i(mod_reduce(i_, n_)), j(mod_reduce(j_, n_)), k(mod_reduce(k_, n_)) {
  if (n < 0) throw std::invalid_argument("HeisElement: negative modulus");
}

bool HeisElement::operator<(const HeisElement& o) const {
  return std::tie(j, k, i) < std::tie(o.j, o.k, o.i);
}

std::string HeisElement::str() const {
  std::ostringstream os;
  bool any = false;
  auto part = [&](const char* name, long long e) {
    if (e == 0) return;
    if (any) os << ' ';
    any = true;
    os << name;
    if (e != 1) os << '^' << e;
  };
  part("b", j);
  part("t", k);
  part("a", i);
  if (!any) os << '1';
  os << " @" << n;
  return os.str();
}

HeisElement HeisElement::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  long long n = -1, i = 0, j = 0, k = 0;
  while (is >> tok) {
    if (tok[0] == '@') {
      n = std::stoll(tok.substr(1));
      continue;
    }
    if (tok == "1") continue;
    std::string name = tok;
    long long exp = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      exp = std::stoll(tok.substr(pos + 1));
    }
    if (name == "a") i = exp;
    else if (name == "b") j = exp;
    else if (name == "t") k = exp;
    else throw std::invalid_argument("HeisElement::parse: bad token " + tok);
  }
  if (n < 0) throw std::invalid_argument("HeisElement::parse: missing @n");
  return HeisElement(n, i, j, k);
}

HeisElement heis_identity(long long n) { return HeisElement(n, 0, 0, 0); }
HeisElement heis_alpha(long long n) { return HeisElement(n, 1, 0, 0); }
HeisElement heis_beta(long long n) { return HeisElement(n, 0, 1, 0); }
HeisElement heis_tau(long long n) { return HeisElement(n, 0, 0, 1); }

HeisElement compose(const HeisElement& g, const HeisElement& h) {
  if (g.n != h.n) throw std::invalid_argument("compose: modulus mismatch");
  return HeisElement(g.n, g.i + h.i, g.j + h.j, g.k + h.k + g.i * h.j);
}

HeisElement inverse(const HeisElement& g) {
  // (b^j t^k a^i)^{-1} = b^{-j} t^{i j - k} a^{-i}
  return HeisElement(g.n, -g.i, -g.j, g.i * g.j - g.k);
}

HeisElement heis_power(const HeisElement& g, long long e) {
  HeisElement base = e < 0 ? inverse(g) : g;
  long long m = e < 0 ? -e : e;
  HeisElement acc = heis_identity(g.n);
  for (long long t = 0; t < m; ++t) acc = compose(acc, base);
  return acc;
}

HeisElement project_word(const FreeWord& w, long long n) {
  if (w.rank() != 2) throw std::invalid_argument("project_word: rank must be 2");
  return apply_word(w, {heis_alpha(n), heis_beta(n)});
}

HeisElement apply_word(const FreeWord& w, const std::vector<HeisElement>& images) {
  if (static_cast<int>(images.size()) != w.rank())
    throw std::invalid_argument("apply_word: image count != rank");
  HeisElement acc = heis_identity(images.empty() ? 0 : images[0].n);
  for (const Syllable& s : w.syllables())
    acc = compose(acc, heis_power(images[s.gen], s.exp));
  return acc;
}

long long element_order(const HeisElement& g) {
  if (g.is_identity()) return 1;
  if (g.n == 0)
    throw std::invalid_argument(
        "element_order: nontrivial element of the integral group has "
        "infinite order");
  HeisElement acc = g;
  long long m = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, g);
    ++m;
  }
  return m;
}

std::vector<HeisElement> enumerate_elements(long long n) {
  if (n < 1) throw std::invalid_argument("enumerate_elements: need n >= 1");
  std::vector<HeisElement> out;
  out.reserve(n * n * n);
  for (long long j = 0; j < n; ++j)
    for (long long k = 0; k < n; ++k)
      for (long long i = 0; i < n; ++i) out.push_back(HeisElement(n, i, j, k));
  return out;
}

long long element_index(const HeisElement& g) {
  return g.j * g.n * g.n + g.k * g.n + g.i;
}

std::vector<std::vector<HeisElement>> conjugacy_classes(long long n,
                                                        long long cap) {
  if (n < 2) throw std::invalid_argument("conjugacy_classes: need n >= 2");
  if (n > cap)
    throw std::invalid_argument("conjugacy_classes: n above enumeration cap");
  std::vector<HeisElement> all = enumerate_elements(n);
  std::vector<bool> seen(all.size(), false);
  std::vector<std::vector<HeisElement>> classes;
  for (const HeisElement& g : all) {
    if (seen[element_index(g)]) continue;
    std::vector<HeisElement> cls;
    for (const HeisElement& h : all) {
      HeisElement c = compose(compose(h, g), inverse(h));
      if (!seen[element_index(c)]) {
        seen[element_index(c)] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

long long class_count_gcd_formula(long long n) {
  long long s = 0;
  for (long long j = 0; j < n; ++j) {
    long long d = j == 0 ? n : gcdll(n, j);
    s += d * d;
  }
  return s;
}

long long class_count_divisor_formula(long long n) {
  auto phi = [](long long m) {
    long long r = m;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        r -= r / p;
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) r -= r / m;
    return r;
  };
  long long s = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) s += d * d * phi(n / d);
  return s;
}

}  // namespace heis
