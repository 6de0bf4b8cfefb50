// Exact multivariate Laurent polynomials and rational functions over Q.
//
// Variables are keyed by strand labels: the label "7" stands for t_7.  The
// empty label is reserved for the single common variable t that appears once
// all strand variables have been identified.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcalc {

using Label = std::string;

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};
struct SubstitutionPole : Error {
  using Error::Error;
};
struct ExpressionSyntax : Error {
  using Error::Error;
};

// Labels with only digits compare numerically, so t_2 sorts before t_10.
// Digit labels come before the others; the common variable (empty label)
// comes first of all.
bool label_less(std::string_view a, std::string_view b);
bool is_valid_label(std::string_view s);

struct LabelLess {
  bool operator()(std::string_view a, std::string_view b) const { return label_less(a, b); }
};

class Monomial {
 public:
  Monomial() = default;
  static Monomial var(const Label& x, int e = 1);

  int exponent(const Label& x) const;
  bool is_one() const { return pw_.empty(); }
  const std::vector<std::pair<Label, int>>& powers() const { return pw_; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  // Componentwise minimum / maximum of exponents (absent exponents count as 0).
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  // Drop the variable x.
  Monomial without(const Label& x) const;
  bool has_negative() const;

  bool operator==(const Monomial& o) const { return pw_ == o.pw_; }
  bool operator!=(const Monomial& o) const { return pw_ != o.pw_; }

  // Builds from pairs in any order; merges duplicates and drops zeros.
  static Monomial from_pairs(std::vector<std::pair<Label, int>> pairs);

 private:
  std::vector<std::pair<Label, int>> pw_;  // sorted by label_less, no zero exponents
};

// Lexicographic order on exponent vectors with the largest label as the most
// significant variable.  A monomial order on the Laurent group, so it is
// compatible with multiplication.  Returns <0, 0 or >0.
int lex_compare(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

struct Term {
  Monomial m;
  mpq_class c;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& c);
  static LaurentPoly monomial(const Monomial& m, const mpq_class& c = 1);
  static LaurentPoly var(const Label& x, int e = 1) { return monomial(Monomial::var(x, e)); }
  // Terms may be unsorted and repeated.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  // Smallest and largest terms in lex order; the polynomial must be nonzero.
  const Term& lowest() const { return terms_.front(); }
  const Term& leading() const { return terms_.back(); }
  mpq_class constant_term() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly shifted(const Monomial& m) const;  // multiply by a monomial
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::vector<Label> variables() const;
  // Componentwise minimum exponent over all terms.
  Monomial min_monomial() const;
  int degree_in(const Label& x) const;
  int min_degree_in(const Label& x) const;
  // Coefficients with respect to x: degree -> polynomial in the other variables.
  std::map<int, LaurentPoly> coefficients_in(const Label& x) const;
  // Sum of |numerator| sizes, used only as a cheap size heuristic.
  size_t weight() const;

  // Apply a monomial map termwise; fn(label, exponent) returns the image of
  // t_label^exponent.
  template <class Fn>
  LaurentPoly map_monomials(Fn&& fn) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<std::pair<Label, int>> acc;
      for (const auto& [x, e] : t.m.powers()) {
        Monomial img = fn(x, e);
        for (const auto& p : img.powers()) acc.push_back(p);
      }
      out.push_back({Monomial::from_pairs(std::move(acc)), t.c});
    }
    return from_terms(std::move(out));
  }

 private:
  std::vector<Term> terms_;  // sorted by lex_compare, no zero coefficients
};

// Exact division a / b in the Laurent ring, or false when b does not divide a.
bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor up to units of Q[t^{+-1}]: the result has coprime
// integer coefficients, no monomial factor and a positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Same result by primitive pseudo-remainder sequences alone; slow on large
// inputs, kept as the reference for poly_gcd.
LaurentPoly poly_gcd_prs(const LaurentPoly& a, const LaurentPoly& b);

// Scale to coprime integer coefficients with a positive leading coefficient.
LaurentPoly primitive_integer(const LaurentPoly& p);

// What a variable is sent to by substitute().
struct Target {
  enum class Kind { Label, One, Inverse, Common };
  Kind kind = Kind::Label;
  Label label;  // used by Kind::Label

  static Target to(Label l) { return {Kind::Label, std::move(l)}; }
  static Target one() { return {Kind::One, {}}; }
  static Target inverse() { return {Kind::Inverse, {}}; }
  static Target common() { return {Kind::Common, {}}; }
};

using Substitution = std::map<Label, Target, LabelLess>;

LaurentPoly substitute(const LaurentPoly& p, const Substitution& sub);
Monomial substitute(const Monomial& m, const Substitution& sub);

class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFn(const mpq_class& c);
  RationalFn(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  // Raises DivisionByZero when den is zero.
  RationalFn(const LaurentPoly& num, const LaurentPoly& den);
  // For num and den already coprime: only the unit normalization is applied.
  static RationalFn from_coprime(LaurentPoly num, LaurentPoly den);
  static RationalFn var(const Label& x, int e = 1) { return RationalFn(LaurentPoly::var(x, e)); }
  static RationalFn monomial(const Monomial& m) { return RationalFn(LaurentPoly::monomial(m)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.is_monomial(); }
  // The Laurent polynomial itself; the caller must check is_laurent().
  LaurentPoly as_laurent() const;

  RationalFn operator-() const;
  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }
  RationalFn inverse() const;
  RationalFn pow(int k) const;

  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  std::vector<Label> variables() const;

 private:
  struct Canonical {};
  RationalFn(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
RationalFn arith(const RationalFn& a, const RationalFn& b, ArithOp op);

// Raises SubstitutionPole when the denominator vanishes identically.
RationalFn substitute(const RationalFn& f, const Substitution& sub);
// Every variable t_i goes to t_i^{-1}.
RationalFn conjugate(const RationalFn& f);
// Every strand variable goes to the common variable t.
RationalFn identify_all(const RationalFn& f);
// Substitute t -> t^k in the common variable (used for t = s^2).
RationalFn power_common(const RationalFn& f, int k);
bool is_laurent(const RationalFn& f);

// Equality up to multiplication by +-(monomial).
bool doteq(const RationalFn& f, const RationalFn& g);
// Representative of the doteq class: for a Laurent polynomial, divided by
// its lowest monomial with a positive lowest coefficient.
RationalFn doteq_normal(const RationalFn& f);

struct RenderOptions {
  std::string common_name = "t";  // how the common variable prints
};

std::string render(const Monomial& m, const RenderOptions& opt = {});
std::string render(const LaurentPoly& p, const RenderOptions& opt = {});
// "(N)/(D)" with nonnegative exponents, or just "N" when D is 1.
std::string render(const RationalFn& f, const RenderOptions& opt = {});
// Laurent polynomial form with negative exponents allowed ("2 - t_1^-1").
// Falls back to render() for a proper fraction.
std::string render_laurent(const RationalFn& f, const RenderOptions& opt = {});

// Parses the rendering grammar: integers, t_<label>, a bare name for the
// common variable, + - * / ^ (integer exponents), parentheses and implicit
// multiplication by juxtaposition.
RationalFn parse_rational(std::string_view text, const RenderOptions& opt = {});

}  // namespace gcalc
