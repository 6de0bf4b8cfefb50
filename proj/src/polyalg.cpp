// Monomials, Laurent polynomials and canonical rational functions.
#include "gcalc/polyalg.hpp"

#include <algorithm>
#include <cctype>

namespace gcalc {

namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

std::string_view strip_zeros(std::string_view s) {
  size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return s.substr(i);
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  if (a.empty() || b.empty()) return a.empty() && !b.empty();
  bool da = all_digits(a);
  bool db = all_digits(b);
  if (da != db) return da;
  if (da) {
    std::string_view sa = strip_zeros(a);
    std::string_view sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

bool is_valid_label(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char ch) { return std::isalnum(ch) != 0 || ch == '_'; });
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(const Label& x, int e) {
  Monomial m;
  if (e != 0) m.pw_.emplace_back(x, e);
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<Label, int>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& p, const auto& q) { return label_less(p.first, q.first); });
  Monomial m;
  for (auto& p : pairs) {
    if (!m.pw_.empty() && m.pw_.back().first == p.first) {
      m.pw_.back().second += p.second;
      if (m.pw_.back().second == 0) m.pw_.pop_back();
    } else if (p.second != 0) {
      m.pw_.push_back(std::move(p));
    }
  }
  return m;
}

int Monomial::exponent(const Label& x) const {
  auto it = std::lower_bound(pw_.begin(), pw_.end(), x,
                             [](const auto& p, const Label& y) { return label_less(p.first, y); });
  return (it != pw_.end() && it->first == x) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.pw_.empty()) return *this;
  if (pw_.empty()) return o;
  Monomial r;
  r.pw_.reserve(pw_.size() + o.pw_.size());
  size_t i = 0, j = 0;
  while (i < pw_.size() || j < o.pw_.size()) {
    if (j == o.pw_.size() || (i < pw_.size() && label_less(pw_[i].first, o.pw_[j].first))) {
      r.pw_.push_back(pw_[i++]);
    } else if (i == pw_.size() || label_less(o.pw_[j].first, pw_[i].first)) {
      r.pw_.push_back(o.pw_[j++]);
    } else {
      int e = pw_[i].second + o.pw_[j].second;
      if (e != 0) r.pw_.emplace_back(pw_[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& p : r.pw_) p.second = -p.second;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& p : r.pw_) p.second *= k;
  return r;
}

namespace {

template <class Pick>
Monomial combine(const Monomial& a, const Monomial& b, Pick pick) {
  std::vector<std::pair<Label, int>> out;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    if (j == pb.size() || (i < pa.size() && label_less(pa[i].first, pb[j].first))) {
      out.emplace_back(pa[i].first, pick(pa[i].second, 0));
      ++i;
    } else if (i == pa.size() || label_less(pb[j].first, pa[i].first)) {
      out.emplace_back(pb[j].first, pick(0, pb[j].second));
      ++j;
    } else {
      out.emplace_back(pa[i].first, pick(pa[i].second, pb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial::from_pairs(std::move(out));
}

}  // namespace

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

Monomial Monomial::without(const Label& x) const {
  Monomial r;
  for (const auto& p : pw_)
    if (p.first != x) r.pw_.push_back(p);
  return r;
}

bool Monomial::has_negative() const {
  return std::any_of(pw_.begin(), pw_.end(), [](const auto& p) { return p.second < 0; });
}

// The variable with the largest label is the most significant one, so in
// ascending order 1 < t_1 < t_1^2 < t_2 < t_1 t_2.
int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  size_t i = pa.size(), j = pb.size();
  while (i > 0 || j > 0) {
    if (j == 0 || (i > 0 && label_less(pb[j - 1].first, pa[i - 1].first))) {
      return pa[i - 1].second > 0 ? 1 : -1;
    }
    if (i == 0 || label_less(pa[i - 1].first, pb[j - 1].first)) {
      return pb[j - 1].second > 0 ? -1 : 1;
    }
    int ea = pa[i - 1].second;
    int eb = pb[j - 1].second;
    if (ea != eb) return ea < eb ? -1 : 1;
    --i;
    --j;
  }
  return 0;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Monomial(), mpq_class(c)});
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpq_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.m, b.m) < 0; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

mpq_class LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.m.is_one()) return t.c;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return o;
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = (i == terms_.size())     ? 1
            : (j == o.terms_.size()) ? -1
                                     : lex_compare(terms_[i].m, o.terms_[j].m);
    if (c < 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c > 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].c + o.terms_[j].c;
      if (s != 0) r.terms_.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  if (o.terms_.size() == 1) return shifted(o.terms_[0].m).scaled(o.terms_[0].c);
  if (terms_.size() == 1) return o.shifted(terms_[0].m).scaled(terms_[0].c);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.m * b.m, a.c * b.c});
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  if (c == 1) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;  // multiplication by a monomial preserves the order
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

std::vector<Label> LaurentPoly::variables() const {
  std::vector<Label> v;
  for (const auto& t : terms_)
    for (const auto& p : t.m.powers()) v.push_back(p.first);
  std::sort(v.begin(), v.end(), LabelLess());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Monomial LaurentPoly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].m;
  for (size_t i = 1; i < terms_.size(); ++i) m = Monomial::gcd(m, terms_[i].m);
  return m;
}

int LaurentPoly::degree_in(const Label& x) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.m.exponent(x);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int LaurentPoly::min_degree_in(const Label& x) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.m.exponent(x);
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(const Label& x) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.m.exponent(x)].push_back({t.m.without(x), t.c});
  std::map<int, LaurentPoly> out;
  for (auto& [d, ts] : buckets) out.emplace(d, from_terms(std::move(ts)));
  return out;
}

size_t LaurentPoly::weight() const {
  size_t w = 0;
  for (const auto& t : terms_)
    w += mpz_size(t.c.get_num_mpz_t()) + mpz_size(t.c.get_den_mpz_t()) + t.m.powers().size();
  return w;
}

// ---------------------------------------------------------------- Division

namespace {

// Division of polynomials with nonnegative exponents, b without monomial factor.
bool divide_polynomial(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
  const Term& lb = b.leading();
  Monomial lb_inv = lb.m.inverse();
  std::vector<Term> qt;
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Monomial ratio = lr.m * lb_inv;
    if (ratio.has_negative()) return false;
    mpq_class c = lr.c / lb.c;
    qt.push_back({ratio, c});
    r -= b.shifted(ratio).scaled(c);
  }
  q = LaurentPoly::from_terms(std::move(qt));
  return true;
}

}  // namespace

bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
  if (b.is_zero()) throw DivisionByZero("division of a polynomial by zero");
  if (a.is_zero()) {
    quotient = LaurentPoly();
    return true;
  }
  if (b.is_monomial()) {
    quotient = a.shifted(b.lowest().m.inverse()).scaled(1 / b.lowest().c);
    return true;
  }
  Monomial ma = a.min_monomial();
  Monomial mb = b.min_monomial();
  LaurentPoly pa = a.shifted(ma.inverse());
  LaurentPoly pb = b.shifted(mb.inverse());
  LaurentPoly q;
  if (!divide_polynomial(pa, pb, q)) return false;
  quotient = q.shifted(ma * mb.inverse());
  return true;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_divide(a, b, q)) throw Error("inexact polynomial division");
  return q;
}

LaurentPoly primitive_integer(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading().c < 0) scale = -scale;
  return p.scaled(scale);
}

// ------------------------------------------------------------ Substitution

Monomial substitute(const Monomial& m, const Substitution& sub) {
  std::vector<std::pair<Label, int>> acc;
  for (const auto& [x, e] : m.powers()) {
    auto it = sub.find(x);
    if (it == sub.end()) {
      acc.emplace_back(x, e);
      continue;
    }
    switch (it->second.kind) {
      case Target::Kind::Label: acc.emplace_back(it->second.label, e); break;
      case Target::Kind::One: break;
      case Target::Kind::Inverse: acc.emplace_back(x, -e); break;
      case Target::Kind::Common: acc.emplace_back(Label(), e); break;
    }
  }
  return Monomial::from_pairs(std::move(acc));
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& sub) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({substitute(t.m, sub), t.c});
  return LaurentPoly::from_terms(std::move(out));
}

// -------------------------------------------------------------- RationalFn

namespace {

// Put a reduced fraction (num, den coprime up to units) into normal form:
// coprime integer coefficients overall, positive lowest coefficient of the
// denominator and lowest denominator monomial equal to 1.
void normalize_units(LaurentPoly& num, LaurentPoly& den) {
  if (num.is_zero()) {
    den = LaurentPoly(1);
    return;
  }
  mpz_class den_lcm = 1;
  for (const auto* p : {&num, &den})
    for (const auto& t : p->terms())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto* p : {&num, &den})
    for (const auto& t : p->terms()) {
      mpz_class n = t.c.get_num() * (den_lcm / t.c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (den.lowest().c < 0) scale = -scale;
  Monomial shift = den.lowest().m.inverse();
  num = num.scaled(scale).shifted(shift);
  den = den.scaled(scale).shifted(shift);
}

}  // namespace


RationalFn::RationalFn(const mpq_class& c) : num_(c), den_(1) {}

RationalFn::RationalFn(const LaurentPoly& p) : num_(p), den_(1) { normalize_units(num_, den_); }

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  canonicalize();
}


void RationalFn::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial() && !num_.is_monomial()) {
    Monomial mn = num_.min_monomial();
    Monomial md = den_.min_monomial();
    LaurentPoly n = num_.shifted(mn.inverse());
    LaurentPoly d = den_.shifted(md.inverse());
    LaurentPoly q;
    if (try_divide(n, d, q)) {
      n = q;
      d = LaurentPoly(1);
    } else {
      LaurentPoly g = poly_gcd(n, d);
      if (!g.is_constant()) {
        n = divide_exact(n, g);
        d = divide_exact(d, g);
      }
    }
    num_ = n.shifted(mn);
    den_ = d.shifted(md);
  }
  normalize_units(num_, den_);
}

bool RationalFn::is_one() const { return den_.is_constant() && num_ == den_; }

LaurentPoly RationalFn::as_laurent() const {
  if (!is_laurent()) throw Error("not a Laurent polynomial");
  const Term& d = den_.lowest();
  return num_.shifted(d.m.inverse()).scaled(1 / d.c);
}

RationalFn RationalFn::from_coprime(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize_units(num, den);
  return RationalFn(std::move(num), std::move(den), Canonical{});
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Canonical{}); }

RationalFn RationalFn::operator+(const RationalFn& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return RationalFn(num_ + o.num_, den_);
  if (den_.is_monomial() && o.den_.is_monomial()) {
    // Both are Laurent polynomials: no gcd is needed.
    LaurentPoly n = as_laurent() + o.as_laurent();
    if (n.is_zero()) return RationalFn();
    LaurentPoly d(1);
    LaurentPoly num = n;
    normalize_units(num, d);
    return RationalFn(num, d, Canonical{});
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly a = divide_exact(den_, g);
  LaurentPoly b = divide_exact(o.den_, g);
  return RationalFn(num_ * b + o.num_ * a, den_ * b);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
  if (is_zero() || o.is_zero()) return RationalFn();
  // With (a/b)(c/d) and both fractions reduced, cancelling gcd(a,d) and
  // gcd(c,b) leaves a reduced product.
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  auto cancel = [](LaurentPoly& x, LaurentPoly& y) {
    if (x.is_monomial() || y.is_monomial()) return;
    Monomial mx = x.min_monomial(), my = y.min_monomial();
    LaurentPoly px = x.shifted(mx.inverse()), py = y.shifted(my.inverse());
    LaurentPoly g = poly_gcd(px, py);
    if (g.is_constant()) return;
    x = divide_exact(px, g).shifted(mx);
    y = divide_exact(py, g).shifted(my);
  };
  cancel(a, d);
  cancel(c, b);
  LaurentPoly num = a * c;
  LaurentPoly den = b * d;
  normalize_units(num, den);
  return RationalFn(num, den, Canonical{});
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  LaurentPoly num = den_, den = num_;
  normalize_units(num, den);
  return RationalFn(num, den, Canonical{});
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) throw DivisionByZero("division by the zero function");
  return *this * o.inverse();
}

RationalFn RationalFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFn r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::vector<Label> RationalFn::variables() const {
  std::vector<Label> v = num_.variables();
  for (auto& x : den_.variables()) v.push_back(x);
  std::sort(v.begin(), v.end(), LabelLess());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

RationalFn arith(const RationalFn& a, const RationalFn& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

namespace {

// True when the substitution maps the variables of f injectively to
// variables (or their inverses), in which case reduced fractions stay reduced.
bool is_automorphism_on(const std::vector<Label>& vars, const Substitution& sub) {
  std::vector<Label> images;
  for (const auto& x : vars) {
    auto it = sub.find(x);
    if (it == sub.end() || it->second.kind == Target::Kind::Inverse) {
      images.push_back(x);
    } else if (it->second.kind == Target::Kind::Label) {
      images.push_back(it->second.label);
    } else {
      return false;
    }
  }
  std::sort(images.begin(), images.end(), LabelLess());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

}  // namespace

RationalFn substitute(const RationalFn& f, const Substitution& sub) {
  std::vector<Label> vars = f.variables();
  bool touched = std::any_of(vars.begin(), vars.end(), [&](const Label& x) { return sub.count(x) > 0; });
  if (!touched) return f;
  LaurentPoly num = substitute(f.num(), sub);
  LaurentPoly den = substitute(f.den(), sub);
  if (den.is_zero()) throw SubstitutionPole("denominator vanishes after substitution");
  // Still reduced under a variable automorphism; only units change.
  if (is_automorphism_on(vars, sub)) return RationalFn::from_coprime(num, den);
  return RationalFn(num, den);
}

RationalFn conjugate(const RationalFn& f) {
  Substitution sub;
  for (const auto& x : f.variables()) sub[x] = Target::inverse();
  return substitute(f, sub);
}

RationalFn identify_all(const RationalFn& f) {
  Substitution sub;
  for (const auto& x : f.variables()) sub[x] = Target::common();
  return substitute(f, sub);
}

RationalFn power_common(const RationalFn& f, int k) {
  auto scale = [k](const LaurentPoly& p) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
      std::vector<std::pair<Label, int>> pw = t.m.powers();
      for (auto& [x, e] : pw)
        if (x.empty()) e *= k;
      out.push_back({Monomial::from_pairs(std::move(pw)), t.c});
    }
    return LaurentPoly::from_terms(std::move(out));
  };
  return RationalFn(scale(f.num()), scale(f.den()));
}

bool is_laurent(const RationalFn& f) { return f.is_laurent(); }

RationalFn doteq_normal(const RationalFn& f) {
  if (f.is_zero()) return f;
  const Term& low = f.num().lowest();
  LaurentPoly n = f.num().shifted(low.m.inverse());
  if (low.c < 0) n = -n;
  return RationalFn::from_coprime(n, f.den());
}

bool doteq(const RationalFn& f, const RationalFn& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return doteq_normal(f) == doteq_normal(g);
}

}  // namespace gcalc
