// Text rendering and parsing of polynomials and rational functions.
#include <cctype>
#include <sstream>

#include "gcalc/polyalg.hpp"

namespace gcalc {

namespace {

std::string var_name(const Label& x, const RenderOptions& opt) {
  return x.empty() ? opt.common_name : "t_" + x;
}

// Monomial clearing every negative exponent of the given polynomials.
Monomial clearing_monomial(std::initializer_list<const LaurentPoly*> ps) {
  Monomial m;
  for (const auto* p : ps) {
    if (p->is_zero()) continue;
    m = Monomial::lcm(m, p->min_monomial().inverse());
  }
  return m;
}

}  // namespace

std::string render(const Monomial& m, const RenderOptions& opt) {
  std::string s;
  for (const auto& [x, e] : m.powers()) {
    if (!s.empty()) s += ' ';
    s += var_name(x, opt);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string render(const LaurentPoly& p, const RenderOptions& opt) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.m.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + " ";
      s += render(t.m, opt);
    }
  }
  return s;
}

std::string render(const RationalFn& f, const RenderOptions& opt) {
  Monomial m = clearing_monomial({&f.num(), &f.den()});
  LaurentPoly n = f.num().shifted(m);
  LaurentPoly d = f.den().shifted(m);
  if (d.is_constant() && d.constant_term() == 1) return render(n, opt);
  return "(" + render(n, opt) + ")/(" + render(d, opt) + ")";
}

std::string render_laurent(const RationalFn& f, const RenderOptions& opt) {
  if (!f.is_laurent()) return render(f, opt);
  return render(f.as_laurent(), opt);
}

// ------------------------------------------------------------------ parser

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RenderOptions& opt) : s_(text), opt_(opt) {}

  RationalFn parse() {
    RationalFn r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << what << " at offset " << pos_ << " in \"" << s_ << "\"";
    throw ExpressionSyntax(os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    unsigned char c = s_[pos_];
    return std::isalnum(c) != 0 || c == '(';
  }

  RationalFn expr() {
    RationalFn acc;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFn term() {
    RationalFn acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        acc /= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  RationalFn factor() {
    RationalFn base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFn primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    unsigned char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(c) != 0) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFn(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(c) != 0) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '_'))
        ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == opt_.common_name) return RationalFn::var(Label());
      if (word.size() > 2 && word[0] == 't' && word[1] == '_') return RationalFn::var(word.substr(2));
      pos_ = start;
      fail("unknown name '" + word + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const RenderOptions& opt_;
  size_t pos_ = 0;
};

}  // namespace

RationalFn parse_rational(std::string_view text, const RenderOptions& opt) {
  return ExprParser(text, opt).parse();
}

}  // namespace gcalc
