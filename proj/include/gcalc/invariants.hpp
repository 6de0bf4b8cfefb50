// Alexander-type invariants computed from Gamma-calculus, and checkers for
// the identities they satisfy.
#pragma once

#include <string>
#include <vector>

#include "gcalc/tangle.hpp"

namespace gcalc {

struct NotALongKnot : Error {
  using Error::Error;
};
struct NotAKnotClosure : Error {
  using Error::Error;
};
struct MultipleOpenComponents : Error {
  using Error::Error;
};

// A single checked identity: what was claimed, both sides, and the outcome.
struct Claim {
  std::string claim;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

std::string render(const Claim& c);
std::string dump_structured(const Claim& c);

// Options for rendering polynomials in the single variable s with t = s^2.
RenderOptions s_variable();

// ----------------------------------------------------------- Alexander

// Omega of a one-strand program with all variables identified to t.
RationalFn alexander_long_knot(const TangleProgram& p);
// det of [I - Burau(beta)] with the first row and column removed, using the
// unreduced Burau matrices directly.
RationalFn alexander_braid_closure(const BraidWord& w, int n);
// Burau matrix of a braid word in the common variable t.
RfMatrix burau_matrix(const BraidWord& w, int n);
// Long knot obtained from a braid by closing rightmost strands until one is left.
StringLink long_knot_from_braid(const BraidWord& w, int n);

// ---------------------------------------------------------------- links

struct LinkPresentation {
  TangleProgram program;  // ends with the trace statements
  int writhe = 0;
};

// Closes every strand of the braid except the first one, which stays open.
LinkPresentation link_from_braid(const BraidWord& w, int n);
// s^{-w} omega_L(s^2), a Laurent polynomial in the common variable (printed as s).
RationalFn link_delta(const LinkPresentation& l);

struct SkeinReport {
  RationalFn delta_plus;
  RationalFn delta_minus;
  RationalFn delta_zero;
  Claim claim;
};
// L+- are the closures of beta sigma_{n-1}^{+-1}, L0 the closure of beta.
SkeinReport skein_check(const BraidWord& beta, int n);

// ----------------------------------------------------------- unitarity

// Lower triangular: (1 - t_{l_i})^{-1} on the diagonal and 1 below it.
RfMatrix unitarity_form(const std::vector<Label>& labels);

struct UnitarityReport {
  Claim matrix;       // (M^rho)* Omega M^rho = Omega(rho)
  Claim scalar;       // conj(omega) doteq omega det(M^rho)
  Claim determinant;  // conj(det M^rho) det M^rho = 1
  bool holds() const { return matrix.holds && scalar.holds && determinant.holds; }
};
UnitarityReport unitarity_check(const StringLink& s);

// -------------------------------------------------------------- ribbon

struct NotRibbonWitness : Error {
  NotRibbonWitness(const RationalFn& scalar, const GammaElement& closure);
  RationalFn scalar;
  GammaElement closure;
};

struct RibbonCertificate {
  int n = 0;
  UpDownTangle tangle;
  RationalFn f;        // omega det(delta), recovered from the reversal of the even strands
  RationalFn f_alpha;  // omega det(alpha), recovered from the reversal of the odd strands
  RationalFn delta;    // scalar of the kappa closure, in t
  Claim f_routes;      // f_alpha doteq conj(f)
  Claim fox_milnor;    // delta doteq f conj(f) at t_i = t
};
RibbonCertificate fox_milnor_check(const UpDownTangle& u);

// Both sides of det(I - N) = det(P - M) for the kappa closure of u.
struct KappaDeterminants {
  RationalFn i_minus_n;
  RationalFn p_minus_m;
};
KappaDeterminants kappa_determinants(const UpDownTangle& u);

}  // namespace gcalc
