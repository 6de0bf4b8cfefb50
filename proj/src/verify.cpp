// Randomized identity suites.  Each case builds its own inputs from a private
// generator, so cases can be spread over threads and still print in order.
#include "gcalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcalc {

size_t SuiteReport::passed() const {
  return static_cast<size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

Sign random_sign(Rng& rng) { return coin(rng) ? Sign::Plus : Sign::Minus; }

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

const char* sign_token(Sign s) { return s == Sign::Plus ? "X+" : "X-"; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

CaseResult compare(const Tangle& lhs, const Tangle& rhs, const std::string& what) {
  if (lhs == rhs) return {0, true, what};
  std::string d = what + ": " + render_compact(lhs.gamma) + " vs " + render_compact(rhs.gamma);
  if (lhs.gamma == rhs.gamma) d += " (sigma parts differ)";
  return {0, false, d};
}

CaseResult check(bool ok, const std::string& what, const std::string& why) { return {0, ok, ok ? what : what + ": " + why}; }

Tangle random_tangle(Rng& rng, const ProgramShape& shape = {}) { return evaluate(random_program(rng, shape)).tangle; }

// --------------------------------------------------------------- relations

// Both sides of a relation are evaluated next to a random tangle, and each of
// their open strands is stitched onto a random strand of it.
CaseResult relation_in_context(Rng& rng, const std::string& name, const std::string& lhs_text,
                               const std::string& rhs_text, bool with_context) {
  Tangle lhs = evaluate(parse_program(lhs_text)).tangle;
  Tangle rhs = evaluate(parse_program(rhs_text)).tangle;
  if (!with_context) return compare(lhs, rhs, name + " on bare generators");
  Tangle ctx = random_tangle(rng);
  lhs = disjoint_union(ctx, lhs);
  rhs = disjoint_union(ctx, rhs);
  std::vector<Label> open = lhs.gamma.labels();
  std::vector<Label> mine;
  std::vector<Label> theirs;
  for (const auto& x : open) (x[0] == 'r' ? mine : theirs).push_back(x);
  std::shuffle(mine.begin(), mine.end(), rng);
  for (const auto& r : mine) {
    const Label x = pick(rng, theirs);
    if (coin(rng)) {
      lhs = stitch(lhs, r, x, x);
      rhs = stitch(rhs, r, x, x);
    } else {
      lhs = stitch(lhs, x, r, x);
      rhs = stitch(rhs, x, r, x);
    }
  }
  return compare(lhs, rhs, name + " inside a random tangle");
}

CaseResult case_r2(Rng& rng, size_t index) {
  Sign s = random_sign(rng);
  std::string lhs = std::string(sign_token(s)) + " r1 r3\n" + sign_token(flip(s)) + " r4 r2\nm r1 r4 r1\nm r3 r2 r3\n";
  return relation_in_context(rng, "R2", lhs, "e r1\ne r3\n", index > 0);
}

CaseResult case_r3(Rng& rng, size_t index) {
  // The second variant is the mirror image of the first.
  bool mirror = coin(rng);
  Sign p = mirror ? Sign::Minus : Sign::Plus;
  Sign n = flip(p);
  auto side = [&](Sign s1, const char* c1, Sign s2, const char* c2, Sign s3, const char* c3) {
    return std::string(sign_token(s1)) + c1 + sign_token(s2) + c2 + sign_token(s3) + c3 +
           "m r1 r6 r1\nm r2 r4 r2\nm r3 r5 r3\n";
  };
  std::string lhs = side(p, " r1 r4\n", p, " r2 r5\n", n, " r6 r3\n");
  std::string rhs = side(n, " r1 r5\n", p, " r4 r3\n", p, " r6 r2\n");
  return relation_in_context(rng, mirror ? "R3 (mirrored)" : "R3", lhs, rhs, index > 0);
}

CaseResult case_oc(Rng& rng, size_t index) {
  Sign s1 = random_sign(rng);
  Sign s2 = random_sign(rng);
  // Strand z passes over y and then x, or over x and then y.
  std::string lhs = std::string(sign_token(s1)) + " r1 r2\n" + sign_token(s2) + " r4 r3\nm r1 r4 r1\n";
  std::string rhs = std::string(sign_token(s2)) + " r1 r3\n" + sign_token(s1) + " r4 r2\nm r1 r4 r1\n";
  return relation_in_context(rng, "OC", lhs, rhs, index > 0);
}

CaseResult case_meta_assoc(Rng& rng, size_t) {
  Tangle z = random_tangle(rng, {2, 4, 3});
  std::vector<Label> ls = z.gamma.labels();
  std::shuffle(ls.begin(), ls.end(), rng);
  const Label &x = ls[0], &y = ls[1], &w = ls[2];
  Tangle lhs = stitch(stitch(z, x, y, "u"), "u", w, "v");
  Tangle rhs = stitch(stitch(z, y, w, "u"), x, "u", "v");
  return compare(lhs, rhs, "meta-associativity on " + x + ", " + y + ", " + w);
}

CaseResult case_identity(Rng& rng, size_t) {
  Tangle z = random_tangle(rng);
  const Label b = pick(rng, z.gamma.labels());
  Tangle with_e = identity_strand(z, "a");
  Tangle renamed = rename(z, b, "c");
  CaseResult r = compare(stitch(with_e, "a", b, "c"), renamed, "left identity on " + b);
  if (!r.pass) return r;
  r = compare(stitch(with_e, b, "a", "c"), renamed, "right identity on " + b);
  if (!r.pass) return r;
  return compare(delete_strand(with_e, "a"), z, "identity then deletion on " + b);
}

// --------------------------------------------------------------- stitching

CaseResult case_stitch_order(Rng& rng, size_t) {
  int k = uniform(rng, 1, 3);
  Tangle z = random_tangle(rng, {k, 4, 2 * k});
  std::vector<Label> ls = z.gamma.labels();
  std::shuffle(ls.begin(), ls.end(), rng);
  StitchSpec spec;
  for (size_t i = 0; i < static_cast<size_t>(k); ++i) {
    spec.a.push_back(ls[2 * i]);
    spec.b.push_back(ls[2 * i + 1]);
    spec.c.push_back(ls[2 * i]);
  }
  Tangle bulk = stitch_bulk(z, spec);
  std::string what = std::to_string(k) + " pair(s)";
  for (int round = 0; round < 2; ++round) {
    std::vector<size_t> order(static_cast<size_t>(k));
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Tangle seq = z;
    for (size_t i : order) seq = stitch(seq, spec.a[i], spec.b[i], spec.c[i]);
    CaseResult r = compare(bulk, seq, "bulk versus sequential stitching of " + what);
    if (!r.pass) return r;
  }
  return {0, true, "bulk equals two sequential orders, " + what};
}

CaseResult case_column_sum(Rng& rng, size_t) {
  GammaElement z = random_tangle(rng).gamma;
  for (size_t j = 0; j < z.size(); ++j) {
    RationalFn s;
    for (size_t i = 0; i < z.size(); ++i) s += z.matrix()(i, j);
    if (!s.is_one()) return check(false, "column sums", "column x_" + z.labels()[j] + " sums to " + render(s));
  }
  return check(true, "column sums of a " + std::to_string(z.size()) + "-strand tangle", "");
}

CaseResult case_polynomiality(Rng& rng, size_t) {
  GammaElement z = random_tangle(rng).gamma;
  const RationalFn& w = z.omega();
  if (!is_laurent(w)) return check(false, "Laurent scalar", "omega = " + render(w));
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = 0; j < z.size(); ++j) {
      RationalFn e = w * z.matrix()(i, j);
      if (!is_laurent(e)) return check(false, "Laurent omega M", "entry " + render(e));
    }
  Substitution ones;
  for (const auto& x : w.variables()) ones[x] = Target::one();
  RationalFn at_one = substitute(w, ones);
  return check(at_one.is_one(), "omega and omega M are Laurent, omega(1) = 1", "omega(1) = " + render(at_one));
}

// ---------------------------------------------------------------- braids

RfMatrix identify_matrix(const RfMatrix& m) {
  return m.map([](const RationalFn& f) { return identify_all(f); });
}

CaseResult case_gassner(Rng& rng, size_t) {
  int n = uniform(rng, 2, 4);
  BraidWord w1 = random_braid(rng, n, 8);
  BraidWord w2 = random_braid(rng, n, 8);
  StringLink s1 = braid_to_program(w1, n);
  StringLink s2 = braid_to_program(w2, n);
  std::string what = "[" + print_braid_word(w1) + "] [" + print_braid_word(w2) + "] on " + std::to_string(n);
  GammaElement z1 = evaluate(s1.program).tangle.gamma;
  GammaElement z2 = evaluate(s2.program).tangle.gamma;
  StringLink s12 = compose(s1, s2);
  GammaElement z12 = evaluate(s12.program).tangle.gamma;
  if (!z1.omega().is_one() || !z12.omega().is_one()) return check(false, what, "braid scalar is not 1");
  RfMatrix m1 = gassner_matrix(s1, z1);
  if (identify_matrix(m1) != burau_matrix(w1, n)) return check(false, what, "Gassner at t_i = t differs from Burau");
  // Strand bottom2[i] of the upper braid continues top1[i].
  Substitution relabel;
  for (size_t i = 0; i < s1.width(); ++i) relabel[s2.bottom[i]] = Target::to(s1.top[i]);
  RfMatrix m2 = substitute(gassner_matrix(s2, z2), relabel);
  bool ok = gassner_matrix(s12, z12) == m1 * m2;
  return check(ok, "product law " + what, "M(b1 b2) != M(b1) M(b2)");
}

CaseResult case_unitarity(Rng& rng, size_t) {
  for (int attempt = 0;; ++attempt) {
    int n = uniform(rng, 1, 4);
    int closures = uniform(rng, 0, std::min(2, n - 1));
    BraidWord w = random_braid(rng, n, 8);
    StringLink s = braid_to_program(w, n);
    try {
      for (int k = 0; k < closures; ++k) s = close_rightmost(s);
    } catch (const NotAStringLink&) {
      if (attempt < 50) continue;  // the closure would leave a loop; draw again
      throw;
    }
    UnitarityReport r = unitarity_check(s);
    std::string what = "[" + print_braid_word(w) + "] on " + std::to_string(n) + " with " + std::to_string(closures) +
                       " closure(s)";
    if (!r.matrix.holds) return check(false, what, "matrix identity fails: " + r.matrix.lhs + " vs " + r.matrix.rhs);
    if (!r.scalar.holds) return check(false, what, "scalar identity fails: " + r.scalar.lhs + " vs " + r.scalar.rhs);
    return check(r.determinant.holds, what, "conj(det) det = " + r.determinant.lhs);
  }
}

CaseResult case_trace(Rng& rng, size_t) {
  Tangle t = random_tangle(rng, {1, 4, 2});
  const GammaElement& z = t.gamma;
  std::vector<Label> ls = z.labels();
  std::shuffle(ls.begin(), ls.end(), rng);
  const Label a = ls[0], b = ls[1];
  std::vector<Label> closed{"c"};
  for (size_t i = 2; i < ls.size(); ++i)
    if (coin(rng)) closed.push_back(ls[i]);
  RationalFn one = trace(stitch(z, a, b, "c"), closed);
  RationalFn other = trace(stitch(z, b, a, "c"), closed);
  std::string what = "closing " + a + " and " + b + " with " + std::to_string(closed.size() - 1) + " more";
  if (one != other) return check(false, what, render(one) + " vs " + render(other));
  RationalFn split = trace(identity_strand(z, "e"), {"e"});
  return check(split.is_zero(), what + ", plus a split trivial circle", "trivial circle gives " + render(split));
}

CaseResult case_skein(Rng& rng, size_t) {
  int n = uniform(rng, 2, 4);
  BraidWord w = random_braid(rng, n, 8);
  if (coin(rng)) w.pop_back();  // also cover shorter words, including the empty one
  SkeinReport r = skein_check(w, n);
  return check(r.claim.holds, r.claim.claim, r.claim.lhs + " vs " + r.claim.rhs);
}

CaseResult case_fox_milnor(Rng& rng, size_t) {
  int n = uniform(rng, 1, 3);
  BraidWord w = random_braid(rng, n, 5);
  StringLink s = braid_to_program(w, n);
  if (!s.is_pure()) s = compose(s, sorting_braid(s));
  RibbonCertificate c = fox_milnor_check(double_link(s));
  std::string what = "double of [" + print_braid_word(w) + "] on " + std::to_string(n);
  if (!c.f_routes.holds) return check(false, what, "f routes disagree: " + c.f_routes.lhs + " vs " + c.f_routes.rhs);
  return check(c.fox_milnor.holds, what, "Delta = " + c.fox_milnor.lhs + ", f conj(f) = " + c.fox_milnor.rhs);
}

CaseResult case_reversal(Rng& rng, size_t) {
  Tangle t = random_tangle(rng, {1, 3, 2});
  std::vector<Label> ls = t.gamma.labels();
  std::shuffle(ls.begin(), ls.end(), rng);
  size_t k = static_cast<size_t>(uniform(rng, 1, static_cast<int>(ls.size())));
  std::vector<Label> some(ls.begin(), ls.begin() + static_cast<long>(k));
  CaseResult r = compare(reverse_orientation(reverse_orientation(t, some), some), t,
                         "reversal twice on " + std::to_string(k) + " strand(s)");
  if (!r.pass) return r;
  const Label a = ls[0], b = ls[1];
  Tangle lhs = reverse_orientation(stitch(t, a, b, "c"), {"c"});
  Tangle rhs = stitch(reverse_orientation(t, {a, b}), b, a, "c");
  return compare(lhs, rhs, "involution, and stitch then reverse on " + a + ", " + b);
}

using CaseFn = std::function<CaseResult(Rng&, size_t)>;

const std::map<std::string, CaseFn>& registry() {
  static const std::map<std::string, CaseFn> r = {
      {"r2", case_r2},
      {"r3", case_r3},
      {"oc", case_oc},
      {"meta-assoc", case_meta_assoc},
      {"identity", case_identity},
      {"stitch-order", case_stitch_order},
      {"column-sum", case_column_sum},
      {"polynomiality", case_polynomiality},
      {"gassner", case_gassner},
      {"unitarity", case_unitarity},
      {"trace", case_trace},
      {"skein", case_skein},
      {"fox-milnor", case_fox_milnor},
      {"reversal", case_reversal},
  };
  return r;
}

CaseResult run_case(const CaseFn& fn, uint64_t seed, size_t i) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(i),
                    static_cast<uint32_t>(static_cast<uint64_t>(i) >> 32)};
  Rng rng(seq);
  CaseResult r;
  try {
    r = fn(rng, i);
  } catch (const std::exception& e) {
    r = {0, false, std::string("error: ") + e.what()};
  }
  r.index = i;
  return r;
}

}  // namespace

TangleProgram random_program(Rng& rng, const ProgramShape& shape) {
  int k = uniform(rng, shape.min_crossings, std::max(shape.min_crossings, shape.max_crossings));
  k = std::max(k, (shape.min_open + 1) / 2);
  std::vector<Label> fresh;
  for (int i = 1; i <= 2 * k; ++i) fresh.push_back(std::to_string(i));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  TangleProgram p;
  for (int i = 0; i < k; ++i) {
    Statement st;
    st.kind = Statement::Kind::Crossing;
    st.sign = random_sign(rng);
    st.args = {fresh[2 * static_cast<size_t>(i)], fresh[2 * static_cast<size_t>(i) + 1]};
    p.statements.push_back(st);
  }
  std::vector<Label> live = fresh;
  while (static_cast<int>(live.size()) > std::max(shape.min_open, 1) && uniform(rng, 0, 9) < 7) {
    std::shuffle(live.begin(), live.end(), rng);
    Statement st;
    st.kind = Statement::Kind::Stitch;
    st.args = {live[0], live[1], live[0]};
    p.statements.push_back(st);
    live.erase(live.begin() + 1);
  }
  return p;
}

BraidWord random_braid(Rng& rng, int n, int max_len) {
  BraidWord w;
  if (n < 2) return w;
  int len = uniform(rng, 1, max_len);
  for (int i = 0; i < len; ++i) w.push_back({uniform(rng, 1, n - 1), random_sign(rng)});
  return w;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, uint64_t seed, size_t cases, Execution mode) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + name + "'");
  const CaseFn& fn = it->second;
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.cases.resize(cases);
  const long count = static_cast<long>(cases);
  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) rep.cases[static_cast<size_t>(i)] = run_case(fn, seed, static_cast<size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) rep.cases[static_cast<size_t>(i)] = run_case(fn, seed, static_cast<size_t>(i));
  }
  return rep;
}

}  // namespace gcalc
