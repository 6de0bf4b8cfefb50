// Multivariate gcd.  A modular coprimality test and the heuristic gcd settle
// almost every case; recursive primitive pseudo-remainder sequences are the
// fallback and the reference.
//
// Everything works up to units of Q[t^{+-1}]: monomial factors and rational
// scalars are dropped on entry, so intermediate results are genuine
// polynomials with coprime integer coefficients.
#include <algorithm>
#include <cstdint>
#include <map>

#include "gcalc/polyalg.hpp"

namespace gcalc {

namespace {

LaurentPoly strip(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(p.min_monomial().inverse());
}

LaurentPoly top_coefficient(const LaurentPoly& p, const Label& x, int d) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.m.exponent(x) == d) out.push_back({t.m.without(x), t.c});
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, bool fast);

// Quick coprimality proof modulo a prime.  For each variable x, every other
// variable is sent to a fixed residue; when neither leading coefficient in x
// vanishes there, the images keep their x-degrees, and a common factor of
// positive x-degree would survive as a common factor of the images.  So if
// the images are coprime for every x, the gcd is a constant.  A false answer
// only means "not proved".
namespace modp {

constexpr uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

uint64_t mul(uint64_t a, uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  uint64_t lo = static_cast<uint64_t>(r & kPrime), hi = static_cast<uint64_t>(r >> 61);
  uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}
uint64_t add(uint64_t a, uint64_t b) { return a + b >= kPrime ? a + b - kPrime : a + b; }
uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
uint64_t power(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
uint64_t inv(uint64_t a) { return power(a, kPrime - 2); }

static_assert(sizeof(unsigned long) == 8, "residues are taken with mpz_fdiv_ui");

uint64_t reduce(const mpz_class& z) { return mpz_fdiv_ui(z.get_mpz_t(), kPrime); }

// Residue of a rational, or false when its denominator vanishes mod p.
bool reduce(const mpq_class& q, uint64_t& out) {
  uint64_t d = reduce(q.get_den());
  if (d == 0) return false;
  out = mul(reduce(q.get_num()), inv(d));
  return true;
}

using Poly = std::vector<uint64_t>;  // dense, index = degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in Z/p[x] with the other variables sent to point(label).
bool image(const LaurentPoly& p, const Label& x, const std::map<Label, uint64_t, LabelLess>& point, Poly& out) {
  out.assign(static_cast<size_t>(std::max(p.degree_in(x), 0)) + 1, 0);
  for (const auto& t : p.terms()) {
    uint64_t c;
    if (!reduce(t.c, c)) return false;
    int dx = 0;
    for (const auto& [v, e] : t.m.powers()) {
      if (v == x) {
        dx = e;
        continue;
      }
      c = mul(c, power(point.at(v), static_cast<uint64_t>(e)));
    }
    out[static_cast<size_t>(dx)] = add(out[static_cast<size_t>(dx)], c);
  }
  trim(out);
  return true;
}

size_t gcd_degree(Poly a, Poly b) {
  while (!b.empty()) {
    uint64_t lb = inv(b.back());
    while (a.size() >= b.size()) {
      uint64_t f = mul(a.back(), lb);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(f, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// a and b are polynomials (no negative exponents).
bool coprime(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Label> vars = a.variables();
  for (const auto& v : b.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), LabelLess());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::map<Label, uint64_t, LabelLess> point;
  uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (const auto& v : vars) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    point[v] = (seed >> 4) % (kPrime - 2) + 2;
  }
  for (const auto& x : vars) {
    Poly pa, pb;
    if (!image(a, x, point, pa) || !image(b, x, point, pb)) return false;
    if (static_cast<int>(pa.size()) - 1 != a.degree_in(x) || static_cast<int>(pb.size()) - 1 != b.degree_in(x))
      return false;
    if (gcd_degree(pa, pb) != 0) return false;
  }
  return true;
}

}  // namespace modp

// Heuristic gcd: evaluate one variable at a large integer xi, take the gcd of
// the images recursively, read the result back as a polynomial in base xi and
// keep it if it divides both inputs.  Inputs and the result are polynomials
// over Z, and the result is the gcd over Z (content included).  Returns false
// when the evaluation points run out; the caller then falls back to the PRS.
namespace heuristic {

mpz_class max_norm(const LaurentPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms())
    if (abs(t.c.get_num()) > m) m = abs(t.c.get_num());
  return m;
}

mpz_class content(const LaurentPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
  return g;
}

LaurentPoly evaluate(const LaurentPoly& p, const Label& x, const mpz_class& xi) {
  std::vector<Term> out;
  out.reserve(p.size());
  mpz_class pw;
  for (const auto& t : p.terms()) {
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.m.exponent(x)));
    out.push_back({t.m.without(x), t.c * mpq_class(pw)});
  }
  return LaurentPoly::from_terms(std::move(out));
}

// Symmetric residue in (-xi/2, xi/2].
mpz_class smod(const mpz_class& c, const mpz_class& xi) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

LaurentPoly interpolate(LaurentPoly h, const Label& x, const mpz_class& xi) {
  std::vector<Term> out;
  for (int i = 0; !h.is_zero(); ++i) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      mpz_class r = smod(t.c.get_num(), xi);
      if (r != 0) digit.push_back({t.m, mpq_class(r)});
    }
    LaurentPoly g = LaurentPoly::from_terms(digit);
    for (const auto& t : digit) out.push_back({t.m * Monomial::var(x, i), t.c});
    h = (h - g).scaled(mpq_class(1, 1) / mpq_class(xi));
    if (i > 1000) return LaurentPoly();
  }
  return LaurentPoly::from_terms(std::move(out));
}

bool divides(const LaurentPoly& h, const LaurentPoly& a) {
  LaurentPoly q;
  return try_divide(a, h, q);
}

bool gcd(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& out) {
  std::vector<Label> vars = a.variables();
  for (const auto& v : b.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), LabelLess());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  mpz_class ca = content(a), cb = content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (vars.empty()) {
    out = LaurentPoly(mpq_class(c));
    return true;
  }
  LaurentPoly pa = a.scaled(mpq_class(1) / mpq_class(ca));
  LaurentPoly pb = b.scaled(mpq_class(1) / mpq_class(cb));
  const Label& x = vars.front();
  mpz_class na = max_norm(pa), nb = max_norm(pb);
  mpz_class bound = 2 * (na < nb ? na : nb) + 29;
  mpz_class xi = bound;
  for (int attempt = 0; attempt < 6; ++attempt) {
    LaurentPoly ea = evaluate(pa, x, xi), eb = evaluate(pb, x, xi);
    LaurentPoly h;
    if (!ea.is_zero() && !eb.is_zero() && gcd(ea, eb, h)) {
      LaurentPoly g = interpolate(h, x, xi);
      if (!g.is_zero()) {
        g = g.scaled(mpq_class(1) / mpq_class(content(g)));
        if (divides(g, pa) && divides(g, pb)) {
          out = g.scaled(mpq_class(c));
          return true;
        }
      }
    }
    mpz_class r = sqrt(sqrt(xi));
    xi = xi * 73794 * r / 27011 + 1;
  }
  return false;
}

}  // namespace heuristic

// gcd of g with all coefficients of p with respect to x.  A zero g means
// "start from the first coefficient", which computes the content of p.
LaurentPoly gcd_with_coefficients(const LaurentPoly& p, const Label& x, LaurentPoly g, bool fast) {
  std::vector<LaurentPoly> cs;
  for (auto& [d, c] : p.coefficients_in(x)) cs.push_back(strip(c));
  std::sort(cs.begin(), cs.end(), [](const LaurentPoly& u, const LaurentPoly& v) { return u.size() < v.size(); });
  for (const auto& c : cs) {
    g = g.is_zero() ? primitive_integer(c) : gcd_rec(g, c, fast);
    if (g.is_constant()) return LaurentPoly(1);
  }
  return g;
}

LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, const Label& x) {
  int db = b.degree_in(x);
  LaurentPoly lcb = top_coefficient(b, x, db);
  LaurentPoly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(x);
    if (dr < db) break;
    LaurentPoly lcr = top_coefficient(r, x, dr);
    r = r * lcb - lcr.shifted(Monomial::var(x, dr - db)) * b;
    r = primitive_integer(r);
  }
  return r;
}

LaurentPoly gcd_rec(const LaurentPoly& a0, const LaurentPoly& b0, bool fast) {
  if (a0.is_zero()) return b0.is_zero() ? LaurentPoly() : primitive_integer(strip(b0));
  if (b0.is_zero()) return primitive_integer(strip(a0));
  LaurentPoly a = strip(a0);
  LaurentPoly b = strip(b0);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  if (fast) {
    if (modp::coprime(a, b)) return LaurentPoly(1);
    LaurentPoly h;
    if (heuristic::gcd(primitive_integer(a), primitive_integer(b), h)) return primitive_integer(strip(h));
  }

  std::vector<Label> va = a.variables();
  std::vector<Label> vb = b.variables();
  for (const auto& x : va)
    if (!std::binary_search(vb.begin(), vb.end(), x, LabelLess())) return gcd_with_coefficients(a, x, b, fast);
  for (const auto& x : vb)
    if (!std::binary_search(va.begin(), va.end(), x, LabelLess())) return gcd_with_coefficients(b, x, a, fast);

  LaurentPoly q;
  if (a.size() >= b.size()) {
    if (try_divide(a, b, q)) return primitive_integer(b);
  } else if (try_divide(b, a, q)) {
    return primitive_integer(a);
  }

  Label x = va.front();
  int best = -1;
  for (const auto& v : va) {
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (best < 0 || d < best) {
      best = d;
      x = v;
    }
  }

  LaurentPoly ca = gcd_with_coefficients(a, x, LaurentPoly(), fast);
  LaurentPoly cb = gcd_with_coefficients(b, x, LaurentPoly(), fast);
  LaurentPoly c = gcd_rec(ca, cb, fast);
  LaurentPoly pa = primitive_integer(divide_exact(a, ca));
  LaurentPoly pb = primitive_integer(divide_exact(b, cb));
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);

  LaurentPoly g;
  for (;;) {
    if (pb.degree_in(x) == 0) {
      g = LaurentPoly(1);
      break;
    }
    LaurentPoly r = strip(pseudo_remainder(pa, pb, x));
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(x) == 0) {
      g = LaurentPoly(1);
      break;
    }
    LaurentPoly cr = gcd_with_coefficients(r, x, LaurentPoly(), fast);
    pa = std::move(pb);
    pb = primitive_integer(divide_exact(r, cr));
  }
  return primitive_integer(strip(c * g));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) { return gcd_rec(a, b, true); }

LaurentPoly poly_gcd_prs(const LaurentPoly& a, const LaurentPoly& b) { return gcd_rec(a, b, false); }

}  // namespace gcalc
