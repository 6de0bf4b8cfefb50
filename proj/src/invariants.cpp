// Alexander polynomials, link normalization and identity checkers.
#include "gcalc/invariants.hpp"

#include <numeric>

#include "json.hpp"

namespace gcalc {

std::string render(const Claim& c) {
  return "claim:   " + c.claim + "\nleft:    " + c.lhs + "\nright:   " + c.rhs + "\nverdict: " +
         (c.holds ? "PASS" : "FAIL") + "\n";
}

std::string dump_structured(const Claim& c) {
  nlohmann::json j;
  j["kind"] = "claim";
  j["claim"] = c.claim;
  j["left"] = c.lhs;
  j["right"] = c.rhs;
  j["verdict"] = c.holds ? "pass" : "fail";
  return j.dump();
}

RenderOptions s_variable() {
  RenderOptions o;
  o.common_name = "s";
  return o;
}

namespace {

std::string render_matrix(const RfMatrix& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) s += "; ";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) s += ", ";
      s += render_laurent(m(i, j));
    }
  }
  return s + "]";
}

RationalFn product_of_sigmas(const SigmaElement& s, const std::vector<Label>& ls) {
  Monomial m;
  for (const auto& x : ls) m = m * s.at(x);
  return RationalFn::monomial(m);
}

Substitution inverting(const std::vector<Label>& ls) {
  Substitution sub;
  for (const auto& x : ls) sub[x] = Target::inverse();
  return sub;
}

// Union-find over labels, used to follow components while closing strands.
class Components {
 public:
  Label find(const Label& x) {
    auto it = parent_.find(x);
    if (it == parent_.end() || it->second == x) return x;
    return it->second = find(it->second);
  }
  void merge_into(const Label& child, const Label& root) { parent_[find(child)] = find(root); }

 private:
  std::map<Label, Label> parent_;
};

}  // namespace

// ------------------------------------------------------------- Alexander

RationalFn alexander_long_knot(const TangleProgram& p) {
  Evaluation e = evaluate(p);
  if (!e.closed.empty()) throw NotALongKnot("a long knot program has no closed components");
  const GammaElement& z = e.tangle.gamma;
  if (z.size() != 1) throw NotALongKnot("program leaves " + std::to_string(z.size()) + " open strands, expected 1");
  if (!z.matrix()(0, 0).is_one()) throw NotALongKnot("matrix part of a long knot is not [1]");
  return identify_all(z.omega());
}

RfMatrix burau_matrix(const BraidWord& w, int n) {
  RfMatrix b = RfMatrix::identity(static_cast<size_t>(n));
  RationalFn t = RationalFn::var(Label());
  RationalFn ti = t.inverse();
  for (const auto& l : w) {
    if (l.index < 1 || l.index > n - 1) throw IndexOutOfRange("generator index out of range");
    size_t i = static_cast<size_t>(l.index - 1);
    RfMatrix g = RfMatrix::identity(static_cast<size_t>(n));
    if (l.sign == Sign::Plus) {
      g(i, i) = RationalFn(1) - t;
      g(i, i + 1) = RationalFn(1);
      g(i + 1, i) = t;
      g(i + 1, i + 1) = RationalFn();
    } else {
      g(i, i) = RationalFn();
      g(i, i + 1) = ti;
      g(i + 1, i) = RationalFn(1);
      g(i + 1, i + 1) = RationalFn(1) - ti;
    }
    b = b * g;
  }
  return b;
}

namespace {

bool is_full_cycle(const BraidWord& w, int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& l : w) {
    if (l.index < 1 || l.index > n - 1) throw IndexOutOfRange("generator index out of range");
    std::swap(perm[static_cast<size_t>(l.index - 1)], perm[static_cast<size_t>(l.index)]);
  }
  int len = 0;
  int x = 0;
  do {
    x = perm[static_cast<size_t>(x)];
    ++len;
  } while (x != 0);
  return len == n;
}

}  // namespace

RationalFn alexander_braid_closure(const BraidWord& w, int n) {
  if (n < 1) throw IndexOutOfRange("a braid needs at least one strand");
  if (!is_full_cycle(w, n)) throw NotAKnotClosure("the closure of this braid has more than one component");
  RfMatrix a = RfMatrix::identity(static_cast<size_t>(n)) - burau_matrix(w, n);
  std::vector<size_t> rest;
  for (size_t i = 1; i < static_cast<size_t>(n); ++i) rest.push_back(i);
  return determinant(a.select(rest, rest));
}

StringLink long_knot_from_braid(const BraidWord& w, int n) {
  if (!is_full_cycle(w, n)) throw NotAKnotClosure("the closure of this braid has more than one component");
  StringLink s = braid_to_program(w, n);
  while (s.width() > 1) s = close_rightmost(s);
  return s;
}

// ------------------------------------------------------------------ links

LinkPresentation link_from_braid(const BraidWord& w, int n) {
  StringLink s = braid_to_program(w, n);
  LinkPresentation l;
  l.program = s.program;
  l.writhe = writhe(w);
  Components comp;
  std::vector<Label> closed;
  for (size_t i = 1; i < s.width(); ++i) {
    Label a = comp.find(s.top[i]);
    Label b = comp.find(s.bottom[i]);
    if (a == b) {
      closed.push_back(a);
      continue;
    }
    Statement st;
    st.kind = Statement::Kind::Stitch;
    st.args = {a, b, a};
    l.program.statements.push_back(st);
    comp.merge_into(b, a);
  }
  if (!closed.empty()) {
    Statement st;
    st.kind = Statement::Kind::Trace;
    st.args = closed;
    l.program.statements.push_back(st);
  }
  return l;
}

RationalFn link_delta(const LinkPresentation& l) {
  Evaluation e = evaluate(l.program);
  size_t open = e.tangle.gamma.size() - e.closed.size();
  if (open != 1) throw MultipleOpenComponents(std::to_string(open) + " open components, expected exactly 1");
  RationalFn omega = identify_all(traced_omega(e));
  return power_common(omega, 2) * RationalFn::var(Label(), -l.writhe);
}

SkeinReport skein_check(const BraidWord& beta, int n) {
  if (n < 2) throw IndexOutOfRange("the skein check needs at least two strands");
  BraidWord plus = beta;
  plus.push_back({n - 1, Sign::Plus});
  BraidWord minus = beta;
  minus.push_back({n - 1, Sign::Minus});
  SkeinReport r;
  r.delta_plus = link_delta(link_from_braid(plus, n));
  r.delta_minus = link_delta(link_from_braid(minus, n));
  r.delta_zero = link_delta(link_from_braid(beta, n));
  RationalFn s = RationalFn::var(Label());
  RationalFn lhs = r.delta_plus - r.delta_minus;
  RationalFn rhs = (s.inverse() - s) * r.delta_zero;
  RenderOptions o = s_variable();
  r.claim = {"Delta(L+) - Delta(L-) = (s^-1 - s) Delta(L0) for beta = " + print_braid_word(beta) + " on " +
                 std::to_string(n) + " strands",
             render_laurent(lhs, o), render_laurent(rhs, o), lhs == rhs};
  return r;
}

// -------------------------------------------------------------- unitarity

RfMatrix unitarity_form(const std::vector<Label>& labels) {
  size_t n = labels.size();
  RfMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    m(i, i) = (RationalFn(1) - RationalFn::var(labels[i])).inverse();
    for (size_t j = 0; j < i; ++j) m(i, j) = RationalFn(1);
  }
  return m;
}

UnitarityReport unitarity_check(const StringLink& s) {
  Evaluation e = evaluate(s.program);
  const GammaElement& z = e.tangle.gamma;
  RfMatrix m = gassner_matrix(s, z);
  RfMatrix lhs = conjugate(m.transpose()) * unitarity_form(s.bottom) * m;
  RfMatrix rhs = unitarity_form(s.top);
  UnitarityReport r;
  r.matrix = {"(M^rho)* Omega M^rho = Omega(rho)", render_matrix(lhs), render_matrix(rhs), lhs == rhs};
  RationalFn d = determinant(m);
  RationalFn conj_omega = conjugate(z.omega());
  RationalFn omega_det = z.omega() * d;
  r.scalar = {"conj(omega) doteq omega det(M^rho)", render_laurent(conj_omega), render_laurent(omega_det),
              doteq(conj_omega, omega_det)};
  RationalFn dd = conjugate(d) * d;
  r.determinant = {"conj(det M^rho) det M^rho = 1", render_laurent(dd), "1", dd.is_one()};
  return r;
}

// ----------------------------------------------------------------- ribbon

NotRibbonWitness::NotRibbonWitness(const RationalFn& scalar_, const GammaElement& closure_)
    : Error("tau closure is not trivial: scalar " + render(scalar_) + ", element " + render_compact(closure_)),
      scalar(scalar_),
      closure(closure_) {}

RibbonCertificate fox_milnor_check(const UpDownTangle& u) {
  Tangle t = evaluate(u.program).tangle;
  const GammaElement& z = t.gamma;
  GammaElement tau = stitch_bulk(z, tau_spec(u.n));
  if (!tau.omega().is_one() || tau.matrix() != RfMatrix::identity(tau.size())) throw NotRibbonWitness(tau.omega(), tau);

  std::vector<Label> odd = odd_labels(u.n);
  std::vector<Label> even = even_labels(u.n);
  // Reversing the even strands leaves omega det(delta) / prod sigma_even with
  // t_even inverted; undo both to read off f.
  Tangle rev_even = reverse_orientation(t, even);
  RationalFn f = substitute(rev_even.gamma.omega(), inverting(even)) * product_of_sigmas(t.sigma, even);
  Tangle rev_odd = reverse_orientation(t, odd);
  RationalFn f_alpha = substitute(rev_odd.gamma.omega(), inverting(odd)) * product_of_sigmas(t.sigma, odd);

  RibbonCertificate c;
  c.n = u.n;
  c.tangle = u;
  c.f = f;
  c.f_alpha = f_alpha;
  // Every label of the kappa closure ends up as t_1 and is then identified
  // with t, so the variables can be identified before stitching.  This keeps
  // the bulk inverse univariate.
  c.delta = identify_all(stitch_bulk(identify_all(z), kappa_spec(u.n)).omega());
  RationalFn conj_f = conjugate(f);
  c.f_routes = {"omega det(alpha) doteq conj(omega det(delta))", render_laurent(f_alpha), render_laurent(conj_f),
                doteq(f_alpha, conj_f)};
  RationalFn ff = identify_all(f * conj_f);
  c.fox_milnor = {"Delta doteq f(t) f(t^-1)", render_laurent(c.delta), render_laurent(ff), doteq(c.delta, ff)};
  return c;
}

KappaDeterminants kappa_determinants(const UpDownTangle& u) {
  GammaElement z = evaluate(u.program).tangle.gamma;
  StitchSpec k = kappa_spec(u.n);
  std::vector<size_t> rows;
  std::vector<size_t> cols;
  for (size_t i = 0; i < k.a.size(); ++i) {
    rows.push_back(z.require(k.b[i]));
    cols.push_back(z.require(k.a[i]));
  }
  KappaDeterminants d;
  d.i_minus_n = determinant(RfMatrix::identity(rows.size()) - z.matrix().select(rows, cols));
  // P has a 1 in (y_i, x_{i+1}); labels are 1..2n in order.
  size_t m = z.size();
  RfMatrix p(m, m);
  for (size_t i = 0; i + 1 < m; ++i) p(z.require(std::to_string(i + 1)), z.require(std::to_string(i + 2))) = RationalFn(1);
  d.p_minus_m = determinant(p - z.matrix());
  return d;
}

}  // namespace gcalc
