// Gamma-calculus operations.
#include "gcalc/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gcalc {

namespace {

bool contains(const std::vector<Label>& v, const Label& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<size_t> indices_of(const GammaElement& z, const std::vector<Label>& ls) {
  std::vector<size_t> r;
  r.reserve(ls.size());
  for (const auto& x : ls) r.push_back(z.require(x));
  return r;
}

void add_rename(Substitution& sub, const Label& from, const Label& to) {
  if (from != to) sub[from] = Target::to(to);
}

// Every variable of omega and of the matrix entries.
std::vector<Label> all_variables(const GammaElement& z) {
  std::set<Label, LabelLess> vs;
  for (const auto& x : z.omega().variables()) vs.insert(x);
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = 0; j < z.size(); ++j)
      for (const auto& x : z.matrix()(i, j).variables()) vs.insert(x);
  return {vs.begin(), vs.end()};
}

Substitution all_to_one(const std::vector<Label>& vars) {
  Substitution sub;
  for (const auto& x : vars) sub[x] = Target::one();
  return sub;
}

}  // namespace

// ------------------------------------------------------------ GammaElement

GammaElement::GammaElement(std::vector<Label> labels, RationalFn omega, RfMatrix matrix)
    : omega_(std::move(omega)) {
  size_t n = labels.size();
  if (matrix.rows() != n || matrix.cols() != n) throw Error("matrix size does not match the label count");
  for (const auto& x : labels)
    if (!is_valid_label(x)) throw Error("invalid label '" + x + "'");
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return label_less(labels[i], labels[j]); });
  for (size_t k = 1; k < n; ++k)
    if (labels[order[k - 1]] == labels[order[k]]) throw DuplicateLabel("duplicate label '" + labels[order[k]] + "'");
  labels_.reserve(n);
  for (size_t i : order) labels_.push_back(labels[i]);
  m_ = matrix.select(order, order);
}

std::optional<size_t> GammaElement::index_of(const Label& x) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), x, LabelLess());
  if (it == labels_.end() || *it != x) return std::nullopt;
  return static_cast<size_t>(it - labels_.begin());
}

size_t GammaElement::require(const Label& x) const {
  auto i = index_of(x);
  if (!i) throw UnknownLabel("unknown label '" + x + "'");
  return *i;
}

const RationalFn& GammaElement::entry(const Label& row, const Label& col) const {
  return m_(require(row), require(col));
}

const Monomial& SigmaElement::at(const Label& x) const {
  auto it = s_.find(x);
  if (it == s_.end()) throw UnknownLabel("unknown label '" + x + "' in sigma");
  return it->second;
}

// -------------------------------------------------------------- operations

GammaElement generator(Sign s, const Label& over, const Label& under) {
  if (over == under) throw EqualLabels("crossing with equal labels '" + over + "'");
  RationalFn t = RationalFn::var(over, s == Sign::Plus ? 1 : -1);
  RfMatrix m(2, 2);
  m(0, 0) = RationalFn(1);
  m(0, 1) = RationalFn(1) - t;
  m(1, 1) = t;
  return GammaElement({over, under}, RationalFn(1), m);
}

GammaElement identity_strand(const GammaElement& z, const Label& x) {
  if (z.has(x)) throw DuplicateLabel("label '" + x + "' already present");
  RfMatrix one(1, 1);
  one(0, 0) = RationalFn(1);
  return disjoint_union(z, GammaElement({x}, RationalFn(1), one));
}

GammaElement disjoint_union(const GammaElement& z1, const GammaElement& z2) {
  for (const auto& x : z2.labels())
    if (z1.has(x)) throw LabelCollision("label '" + x + "' occurs on both sides of a disjoint union");
  size_t n1 = z1.size();
  size_t n = n1 + z2.size();
  std::vector<Label> labels = z1.labels();
  labels.insert(labels.end(), z2.labels().begin(), z2.labels().end());
  RfMatrix m(n, n);
  for (size_t i = 0; i < n1; ++i)
    for (size_t j = 0; j < n1; ++j) m(i, j) = z1.matrix()(i, j);
  for (size_t i = 0; i < z2.size(); ++i)
    for (size_t j = 0; j < z2.size(); ++j) m(n1 + i, n1 + j) = z2.matrix()(i, j);
  return GammaElement(std::move(labels), z1.omega() * z2.omega(), std::move(m));
}

GammaElement substitute(const GammaElement& z, const Substitution& sub) {
  if (sub.empty()) return z;
  return GammaElement(z.labels(), substitute(z.omega(), sub), substitute(z.matrix(), sub));
}

GammaElement identify_all(const GammaElement& z) {
  Substitution sub;
  for (const auto& x : all_variables(z))
    if (!x.empty()) sub[x] = Target::common();
  return substitute(z, sub);
}

GammaElement delete_strand(const GammaElement& z, const Label& x) {
  size_t ix = z.require(x);
  std::vector<size_t> keep;
  std::vector<Label> labels;
  for (size_t i = 0; i < z.size(); ++i)
    if (i != ix) {
      keep.push_back(i);
      labels.push_back(z.labels()[i]);
    }
  Substitution sub{{x, Target::one()}};
  return GammaElement(std::move(labels), substitute(z.omega(), sub), substitute(z.matrix().select(keep, keep), sub));
}

GammaElement rename(const GammaElement& z, const Label& x, const Label& w) {
  z.require(x);
  if (x == w) return z;
  if (z.has(w)) throw DuplicateLabel("label '" + w + "' already present");
  std::vector<Label> labels = z.labels();
  *std::find(labels.begin(), labels.end(), x) = w;
  Substitution sub{{x, Target::to(w)}};
  return GammaElement(std::move(labels), substitute(z.omega(), sub), substitute(z.matrix(), sub));
}

GammaElement stitch(const GammaElement& z, const Label& a, const Label& b, const Label& c) {
  if (a == b) throw SelfStitch("cannot stitch strand '" + a + "' to itself");
  size_t ia = z.require(a);
  size_t ib = z.require(b);
  if (c != a && c != b && z.has(c)) throw LabelCollision("stitch result '" + c + "' collides with a surviving label");
  const RfMatrix& m = z.matrix();
  RationalFn den = RationalFn(1) - m(ib, ia);
  if (den.is_zero()) throw SingularStitch("1 - gamma vanishes when stitching '" + a + "' to '" + b + "'");
  RationalFn inv = den.inverse();

  std::vector<size_t> rest;
  std::vector<Label> labels;
  for (size_t i = 0; i < z.size(); ++i)
    if (i != ia && i != ib) {
      rest.push_back(i);
      labels.push_back(z.labels()[i]);
    }
  labels.push_back(c);
  size_t n = rest.size();
  RfMatrix r(n + 1, n + 1);
  RationalFn alpha_inv = m(ia, ia) * inv;
  RationalFn delta_inv = m(ib, ib) * inv;
  r(n, n) = m(ia, ib) + alpha_inv * m(ib, ib);
  for (size_t j = 0; j < n; ++j) {
    size_t s = rest[j];
    r(n, j) = m(ia, s) + alpha_inv * m(ib, s);
    r(j, n) = m(s, ib) + delta_inv * m(s, ia);
  }
  for (size_t i = 0; i < n; ++i) {
    RationalFn phi_inv = m(rest[i], ia) * inv;
    for (size_t j = 0; j < n; ++j) {
      const RationalFn& xi = m(rest[i], rest[j]);
      r(i, j) = phi_inv.is_zero() ? xi : xi + phi_inv * m(ib, rest[j]);
    }
  }
  Substitution sub;
  add_rename(sub, a, c);
  add_rename(sub, b, c);
  return GammaElement(std::move(labels), substitute(den * z.omega(), sub), substitute(r, sub));
}

namespace {

// Chains of stitched strands described by a StitchSpec.
struct StitchPath {
  Label name;
  Label start;  // its tail is not stitched: in a, not in b
  Label end;    // its head is not stitched: in b, not in a
  std::vector<Label> members;
};

std::vector<StitchPath> resolve_paths(const std::vector<Label>& labels, const StitchSpec& spec) {
  size_t k = spec.a.size();
  if (spec.b.size() != k || spec.c.size() != k) throw SpecMismatch("stitch spec vectors differ in length");
  std::map<Label, size_t> by_a;
  std::set<Label> bs;
  for (size_t i = 0; i < k; ++i) {
    if (spec.a[i] == spec.b[i]) throw SelfStitch("cannot stitch strand '" + spec.a[i] + "' to itself");
    if (!contains(labels, spec.a[i])) throw UnknownLabel("unknown label '" + spec.a[i] + "'");
    if (!contains(labels, spec.b[i])) throw UnknownLabel("unknown label '" + spec.b[i] + "'");
    if (!by_a.emplace(spec.a[i], i).second) throw SpecMismatch("label '" + spec.a[i] + "' repeated in a");
    if (!bs.insert(spec.b[i]).second) throw SpecMismatch("label '" + spec.b[i] + "' repeated in b");
  }
  std::vector<StitchPath> paths;
  size_t used = 0;
  for (const auto& x : labels) {
    if (!by_a.count(x) || bs.count(x)) continue;
    StitchPath p;
    p.start = x;
    p.members.push_back(x);
    Label cur = x;
    for (;;) {
      auto it = by_a.find(cur);
      if (it == by_a.end()) break;
      size_t i = it->second;
      if (p.members.size() == 1) {
        p.name = spec.c[i];
      } else if (spec.c[i] != p.name) {
        throw SpecMismatch("stitches along one strand name it both '" + p.name + "' and '" + spec.c[i] + "'");
      }
      ++used;
      cur = spec.b[i];
      p.members.push_back(cur);
    }
    p.end = cur;
    paths.push_back(std::move(p));
  }
  if (used != k) throw SelfStitch("stitch spec closes a strand into a loop");
  return paths;
}

// Labels of the result and the substitution of path variables to path names.
void check_names(const std::vector<Label>& labels, const std::vector<StitchPath>& paths, const StitchSpec& spec,
                 std::vector<Label>& survivors, Substitution& sub) {
  std::set<Label> stitched(spec.a.begin(), spec.a.end());
  stitched.insert(spec.b.begin(), spec.b.end());
  std::set<Label> taken;
  for (const auto& x : labels)
    if (!stitched.count(x)) {
      survivors.push_back(x);
      taken.insert(x);
    }
  for (const auto& p : paths) {
    if (!is_valid_label(p.name)) throw Error("invalid label '" + p.name + "'");
    if (!taken.insert(p.name).second) throw LabelCollision("stitch result '" + p.name + "' collides with another label");
    for (const auto& x : p.members) add_rename(sub, x, p.name);
  }
}

}  // namespace

GammaElement stitch_bulk(const GammaElement& z, const StitchSpec& spec) {
  if (spec.a.empty() && spec.b.empty() && spec.c.empty()) return z;
  std::vector<StitchPath> paths = resolve_paths(z.labels(), spec);
  std::vector<Label> survivors;
  Substitution sub;
  check_names(z.labels(), paths, spec, survivors, sub);

  std::vector<size_t> ia = indices_of(z, spec.a);
  std::vector<size_t> ib = indices_of(z, spec.b);
  // Rows that are not heads of a stitch and columns that are not tails; each
  // surviving strand owns exactly one of each.
  std::vector<Label> row_labels = survivors;
  std::vector<Label> col_labels = survivors;
  std::vector<Label> names = survivors;
  for (const auto& p : paths) {
    row_labels.push_back(p.start);
    col_labels.push_back(p.end);
    names.push_back(p.name);
  }
  std::vector<size_t> ry = indices_of(z, row_labels);
  std::vector<size_t> rx = indices_of(z, col_labels);

  const RfMatrix& m = z.matrix();
  RfMatrix i_minus_gamma = RfMatrix::identity(ia.size()) - m.select(ib, ia);
  RationalFn d = determinant(i_minus_gamma);
  if (d.is_zero()) throw SingularStitch("det(I - gamma) vanishes in bulk stitch");
  RfMatrix r = m.select(ry, rx) + m.select(ry, ia) * (inverse(i_minus_gamma) * m.select(ib, rx));
  return GammaElement(std::move(names), substitute(z.omega() * d, sub), substitute(r, sub));
}

RationalFn trace(const GammaElement& z, const std::vector<Label>& closed) {
  std::vector<size_t> ic = indices_of(z, closed);
  std::set<size_t> seen(ic.begin(), ic.end());
  if (seen.size() != ic.size()) throw DuplicateLabel("label repeated in trace");
  RfMatrix block = RfMatrix::identity(ic.size()) - z.matrix().select(ic, ic);
  return z.omega() * determinant(block);
}

std::vector<std::string> validate(const GammaElement& z, bool tangle_image) {
  std::vector<std::string> out;
  Substitution one = all_to_one(all_variables(z));
  size_t n = z.size();
  try {
    RfMatrix at_one = substitute(z.matrix(), one);
    if (at_one != RfMatrix::identity(n)) out.push_back("matrix at t_i = 1 is not the identity");
  } catch (const SubstitutionPole&) {
    out.push_back("matrix entry has a pole at t_i = 1");
  }
  RationalFn omega_at_one;
  try {
    omega_at_one = substitute(z.omega(), one);
  } catch (const SubstitutionPole&) {
    out.push_back("omega has a pole at t_i = 1");
  }
  if (!tangle_image) return out;
  for (size_t j = 0; j < n; ++j) {
    RationalFn s;
    for (size_t i = 0; i < n; ++i) s += z.matrix()(i, j);
    if (!s.is_one()) out.push_back("column x_" + z.labels()[j] + " sums to " + render(s) + ", not 1");
  }
  if (!z.omega().is_laurent()) out.push_back("omega is not a Laurent polynomial");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(z.omega() * z.matrix()(i, j)).is_laurent())
        out.push_back("omega * entry (y_" + z.labels()[i] + ", x_" + z.labels()[j] + ") is not Laurent");
  if (!omega_at_one.is_one()) out.push_back("omega at t_i = 1 is " + render(omega_at_one) + ", not 1");
  return out;
}

// ------------------------------------------------------------------- sigma

namespace {

SigmaElement::Map substitute_all(const SigmaElement::Map& m, const Substitution& sub) {
  if (sub.empty()) return m;
  SigmaElement::Map r;
  for (const auto& [x, v] : m) r[x] = substitute(v, sub);
  return r;
}

}  // namespace

SigmaElement sigma_generator(Sign s, const Label& over, const Label& under) {
  if (over == under) throw EqualLabels("crossing with equal labels '" + over + "'");
  return SigmaElement({{over, Monomial()}, {under, Monomial::var(over, s == Sign::Plus ? 1 : -1)}});
}

SigmaElement identity_strand(const SigmaElement& s, const Label& x) {
  if (s.values().count(x)) throw DuplicateLabel("label '" + x + "' already present");
  SigmaElement::Map m = s.values();
  m[x] = Monomial();
  return SigmaElement(std::move(m));
}

SigmaElement disjoint_union(const SigmaElement& s1, const SigmaElement& s2) {
  SigmaElement::Map m = s1.values();
  for (const auto& [x, v] : s2.values())
    if (!m.emplace(x, v).second) throw LabelCollision("label '" + x + "' occurs on both sides of a disjoint union");
  return SigmaElement(std::move(m));
}

SigmaElement delete_strand(const SigmaElement& s, const Label& x) {
  s.at(x);
  SigmaElement::Map m = s.values();
  m.erase(x);
  return SigmaElement(substitute_all(m, {{x, Target::one()}}));
}

SigmaElement rename(const SigmaElement& s, const Label& x, const Label& w) {
  s.at(x);
  if (x == w) return s;
  if (s.values().count(w)) throw DuplicateLabel("label '" + w + "' already present");
  SigmaElement::Map m = s.values();
  m[w] = m[x];
  m.erase(x);
  return SigmaElement(substitute_all(m, {{x, Target::to(w)}}));
}

SigmaElement stitch(const SigmaElement& s, const Label& a, const Label& b, const Label& c) {
  if (a == b) throw SelfStitch("cannot stitch strand '" + a + "' to itself");
  Monomial sc = s.at(a) * s.at(b);
  SigmaElement::Map m = s.values();
  m.erase(a);
  m.erase(b);
  if (m.count(c)) throw LabelCollision("stitch result '" + c + "' collides with a surviving label");
  m[c] = sc;
  Substitution sub;
  add_rename(sub, a, c);
  add_rename(sub, b, c);
  return SigmaElement(substitute_all(m, sub));
}

SigmaElement stitch_bulk(const SigmaElement& s, const StitchSpec& spec) {
  if (spec.a.empty() && spec.b.empty() && spec.c.empty()) return s;
  std::vector<Label> labels;
  for (const auto& [x, v] : s.values()) labels.push_back(x);
  std::vector<StitchPath> paths = resolve_paths(labels, spec);
  std::vector<Label> survivors;
  Substitution sub;
  check_names(labels, paths, spec, survivors, sub);
  SigmaElement::Map m;
  for (const auto& x : survivors) m[x] = s.at(x);
  for (const auto& p : paths) {
    Monomial prod;
    for (const auto& x : p.members) prod = prod * s.at(x);
    m[p.name] = prod;
  }
  return SigmaElement(substitute_all(m, sub));
}

// ------------------------------------------------------------------ paired

Tangle crossing(Sign s, const Label& over, const Label& under) {
  return {generator(s, over, under), sigma_generator(s, over, under)};
}

Tangle identity_strand(const Tangle& t, const Label& x) {
  return {identity_strand(t.gamma, x), identity_strand(t.sigma, x)};
}

Tangle disjoint_union(const Tangle& t1, const Tangle& t2) {
  return {disjoint_union(t1.gamma, t2.gamma), disjoint_union(t1.sigma, t2.sigma)};
}

Tangle delete_strand(const Tangle& t, const Label& x) {
  return {delete_strand(t.gamma, x), delete_strand(t.sigma, x)};
}

Tangle rename(const Tangle& t, const Label& x, const Label& w) {
  return {rename(t.gamma, x, w), rename(t.sigma, x, w)};
}

Tangle stitch(const Tangle& t, const Label& a, const Label& b, const Label& c) {
  return {stitch(t.gamma, a, b, c), stitch(t.sigma, a, b, c)};
}

Tangle stitch_bulk(const Tangle& t, const StitchSpec& spec) {
  return {stitch_bulk(t.gamma, spec), stitch_bulk(t.sigma, spec)};
}

Tangle reverse_orientation(const Tangle& t, const std::vector<Label>& strands) {
  const GammaElement& z = t.gamma;
  std::vector<size_t> ia = indices_of(z, strands);
  std::set<size_t> in_a(ia.begin(), ia.end());
  if (in_a.size() != ia.size()) throw DuplicateLabel("label repeated in reversal");
  if (strands.empty()) return t;
  std::vector<size_t> is;
  for (size_t i = 0; i < z.size(); ++i)
    if (!in_a.count(i)) is.push_back(i);

  const RfMatrix& m = z.matrix();
  RfMatrix alpha = m.select(ia, ia);
  RationalFn det_alpha = determinant(alpha);
  if (det_alpha.is_zero()) throw SingularReversal("the reversed block is singular");
  RfMatrix alpha_inv = inverse(alpha);
  RfMatrix theta = m.select(ia, is);
  RfMatrix phi_alpha_inv = m.select(is, ia) * alpha_inv;
  RfMatrix top_right = alpha_inv * theta;
  RfMatrix bottom_left = -phi_alpha_inv;
  RfMatrix bottom_right = m.select(is, is) - phi_alpha_inv * theta;

  size_t k = ia.size();
  std::vector<Label> labels;
  for (size_t i : ia) labels.push_back(z.labels()[i]);
  for (size_t i : is) labels.push_back(z.labels()[i]);
  RfMatrix r(z.size(), z.size());
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) r(i, j) = alpha_inv(i, j);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < is.size(); ++j) {
      r(i, k + j) = top_right(i, j);
      r(k + j, i) = bottom_left(j, i);
    }
  for (size_t i = 0; i < is.size(); ++i)
    for (size_t j = 0; j < is.size(); ++j) r(k + i, k + j) = bottom_right(i, j);

  Monomial sigma_prod;
  for (const auto& x : strands) sigma_prod = sigma_prod * t.sigma.at(x);
  RationalFn omega = z.omega() * det_alpha * RationalFn::monomial(sigma_prod.inverse());

  Substitution sub;
  for (const auto& x : strands) sub[x] = Target::inverse();
  SigmaElement::Map sm = t.sigma.values();
  for (const auto& x : strands) sm[x] = sm[x].inverse();
  return {GammaElement(std::move(labels), substitute(omega, sub), substitute(r, sub)),
          SigmaElement(substitute_all(sm, sub))};
}

}  // namespace gcalc
