#include "compalg/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace compalg {

LaurentPoly LaurentPoly::constant(std::size_t n, const mpq_class& c) {
  LaurentPoly p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpq_class& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t i, int k) {
  require(i < n, Errc::OutOfRange, "variable index out of range");
  Exponent e(n, 0);
  e[i] = k;
  return monomial(e);
}

mpq_class LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpq_class& c) {
  require(e.size() == n_, Errc::DimensionMismatch, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check_same(const LaurentPoly& rhs) const {
  require(n_ == rhs.n_, Errc::DimensionMismatch,
          "Laurent polynomials in different variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  check_same(rhs);
  LaurentPoly out(n_);
  Exponent e(n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      out.add_term(e, ca * cb);
    }
  *this = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = constant(n_, 1), base = *this;
  while (k) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      vars << (any_var ? "*" : "") << "x" << (i + 1);
      if (e[i] != 1) vars << "^" << e[i];
      any_var = true;
    }
    if (!any_var)
      os << mag.get_str();
    else if (mag == 1)
      os << vars.str();
    else
      os << mag.get_str() << "*" << vars.str();
  }
  return os.str();
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, msg + " at offset " + std::to_string(pos) +
                               " in '" + std::string(s) + "'");
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) error("expected digits");
    return std::string(s.substr(start, pos - start));
  }
  long integer() {
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    std::string d = digits();
    if (d.size() > 9) error("exponent too large");
    long v = std::stol(d);
    return neg ? -v : v;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t n) {
  struct Term {
    mpq_class c;
    std::map<std::size_t, long> powers;
  };
  std::vector<Term> raw;
  Parser p{text};
  std::size_t max_var = 0;
  bool first = true;
  for (;;) {
    p.skip();
    if (p.pos == text.size()) break;
    int sign = 1;
    if (p.peek('+') || p.peek('-')) {
      sign = text[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.error("expected '+' or '-'");
    }
    first = false;
    Term t{mpq_class(sign), {}};
    bool need_factor = true;
    while (need_factor) {
      need_factor = false;
      p.skip();
      if (p.pos < text.size() && text[p.pos] == 'x') {
        ++p.pos;
        std::size_t idx = std::stoul(p.digits());
        if (idx == 0) p.error("variables are numbered from 1");
        long e = 1;
        if (p.peek('^')) {
          ++p.pos;
          e = p.integer();
        }
        t.powers[idx - 1] += e;
        max_var = std::max(max_var, idx);
      } else {
        mpz_class num(p.digits());
        mpz_class den = 1;
        if (p.peek('/')) {
          ++p.pos;
          den = mpz_class(p.digits());
          if (den == 0) p.error("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        t.c *= q;
      }
      if (p.peek('*')) {
        ++p.pos;
        need_factor = true;
      }
    }
    raw.push_back(std::move(t));
  }
  if (first) p.error("empty polynomial");
  if (n == 0) n = max_var;
  require(max_var <= n, Errc::ParseError,
          "variable x" + std::to_string(max_var) + " exceeds n = " + std::to_string(n));
  LaurentPoly out(n);
  for (const auto& t : raw) {
    Exponent e(n, 0);
    for (const auto& [i, k] : t.powers) e[i] = static_cast<int>(k);
    out.add_term(e, t.c);
  }
  return out;
}

}  // namespace compalg
