// Tangle programs, braids, string links and up-down tangles.
#include <random>

#include "doctest.h"
#include "gcalc/verify.hpp"

using namespace gcalc;

namespace {

RationalFn P(const std::string& s) { return parse_rational(s); }

RfMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  RfMatrix m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (const char* e : r) m(i, j++) = P(e);
    ++i;
  }
  return m;
}

const char* kTangleDemo =
    "X+ 7 2\nX- 10 6\nX- 5 11\nX- 3 12\nX+ 4 8\nX+ 9 1\n"
    "m 1 4 1\nm 2 5 2\nm 2 6 2\nm 2 7 2\nm 3 8 3\nm 3 9 3\nm 3 10 3\nm 3 11 3\nm 3 12 3\n";

}  // namespace

TEST_CASE("parsing") {
  TangleProgram l = parse_program("X- 1 3\nX+ 4 2\nm 1 2 1\nm 1 3 1\nm 1 4 1");
  REQUIRE(l.statements.size() == 5);
  CHECK(l.statements[0].kind == Statement::Kind::Crossing);
  CHECK(l.statements[0].sign == Sign::Minus);
  CHECK(l.statements[0].args == std::vector<Label>{"1", "3"});
  CHECK(l.statements[4].args == std::vector<Label>{"1", "4", "1"});
  CHECK(evaluate(l).tangle.gamma.omega() == P("2 - t_1^-1"));

  CHECK(parse_program("").statements.empty());
  CHECK(evaluate(parse_program("")).tangle.gamma.size() == 0);
  CHECK(parse_program("# comment only\n\n  \r\n").statements.empty());
  CHECK(parse_program("X+ 1 2\r\nm 1 2 1\r\n") == parse_program("X+ 1 2\nm 1 2 1 # trailing"));

  CHECK_THROWS_AS(parse_program("m 1 1 1"), SelfStitchError);
  CHECK_THROWS_AS(parse_program("X+ 1 2\nm 1 3 1"), UnknownLabelReference);
  CHECK_THROWS_AS(parse_program("X+ 1 2\nX- 2 3"), SyntaxError);
  CHECK_THROWS_AS(parse_program("Y 1 2"), SyntaxError);
  CHECK_THROWS_AS(parse_program("X+ 1"), SyntaxError);
  CHECK_THROWS_AS(parse_program("e a-b"), SyntaxError);
  CHECK_THROWS_AS(parse_program("e 1\ntr 1\ne 2"), SyntaxError);
  try {
    parse_program("X+ 1 2\n  m 1 9 1\n");
    FAIL("expected an error");
  } catch (const ProgramError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 7);
  }
}

TEST_CASE("print and parse round trip on random programs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    TangleProgram p = random_program(rng);
    CHECK(parse_program(print_program(p)) == p);
  }
  TangleProgram q = parse_program("e a\ne b\nren a c\nrev c b\ndel b\ntr c\n");
  CHECK(parse_program(print_program(q)) == q);
}

TEST_CASE("example tangle with three strands") {
  Evaluation e = evaluate(parse_program(kTangleDemo));
  const GammaElement& z = e.tangle.gamma;
  CHECK(z.labels() == std::vector<Label>{"1", "2", "3"});
  CHECK(z.omega() == P("((t_2 - 1)/t_3 + 1) (t_3 - t_1 (t_3 - 1))"));
  const char* d = "((t_2 + t_3 - 1) (t_3 t_1 - t_1 - t_3))";
  auto over = [&](const std::string& n) { return P("(" + n + ")/" + d); };
  CHECK(z.entry("1", "1") == P("-t_3/(t_3 t_1 - t_1 - t_3)"));
  CHECK(z.entry("1", "2") == over("(t_1 - 1) (t_3 - 1) t_3"));
  CHECK(z.entry("1", "3") == over("-(t_1 - 1) (t_3 t_2 - t_2 - 2 t_3 + 1)"));
  CHECK(z.entry("2", "1").is_zero());
  CHECK(z.entry("2", "2") == P("t_2/(t_2 + t_3 - 1)"));
  CHECK(z.entry("2", "3") == P("(t_2 - 1)/(t_2 + t_3 - 1)"));
  CHECK(z.entry("3", "1") == P("t_1 (t_3 - 1)/(t_3 t_1 - t_1 - t_3)"));
  CHECK(z.entry("3", "2") == over("-t_1 (t_3 - 1)"));
  CHECK(z.entry("3", "3") ==
        over("t_1 t_3^2 - t_3^2 - 3 t_1 t_3 + t_1 t_2 t_3 - t_2 t_3 + 2 t_3 + t_1 - t_1 t_2 + t_2 - 1"));

  RfMatrix laurent = M({
      {"-1 + t_2 + t_3", "-1 + t_1 + t_3 - t_1 t_3",
       "t_2 t_1 - t_2 t_1/t_3 + t_1/t_3 - 2 t_1 - t_2 + t_2/t_3 - 1/t_3 + 2"},
      {"0", "-t_1 t_2 + t_1 t_2/t_3 + t_2", "-t_2 t_1 + t_2 t_1/t_3 - t_1/t_3 + t_1 + t_2 - 1"},
      {"-t_2 t_1 - t_3 t_1 + t_2 t_1/t_3 - t_1/t_3 + 2 t_1", "t_1 - t_1/t_3",
       "-t_2 t_1 - t_3 t_1 + t_2 t_1/t_3 - t_1/t_3 + 3 t_1 + t_2 + t_3 - t_2/t_3 + 1/t_3 - 2"},
  });
  CHECK(z.matrix().scaled(z.omega()) == laurent);
  CHECK(validate(z, true).empty());

  const SigmaElement& s = e.tangle.sigma;
  CHECK(s.at("1") == Monomial::var("3"));
  CHECK(s.at("2") == Monomial::from_pairs({{"2", 1}, {"3", -1}}));
  CHECK(s.at("3") == Monomial::from_pairs({{"1", 1}, {"2", -1}, {"3", -1}}));
}

TEST_CASE("relations on bare generators") {
  const char* r3_left = "X+ 1 4\nX+ 2 5\nX- 6 3\nm 1 6 1\nm 2 4 2\nm 3 5 3\n";
  const char* r3_right = "X- 1 5\nX+ 4 3\nX+ 6 2\nm 1 6 1\nm 2 4 2\nm 3 5 3\n";
  GammaElement l = evaluate(parse_program(r3_left)).tangle.gamma;
  GammaElement r = evaluate(parse_program(r3_right)).tangle.gamma;
  CHECK(l == r);
  CHECK(l.omega().is_one());
  CHECK(l.matrix() == M({{"1", "1 - t_1", "t_2 - t_2/t_1"}, {"0", "t_1", "1 - t_2"}, {"0", "0", "t_2/t_1"}}));

  GammaElement r2 = evaluate(parse_program("X+ 1 3\nX- 4 2\nm 1 4 1\nm 3 2 3\n")).tangle.gamma;
  CHECK(r2 == evaluate(parse_program("e 1\ne 3\n")).tangle.gamma);

  for (const char* s1 : {"X+", "X-"})
    for (const char* s2 : {"X+", "X-"}) {
      std::string a = std::string(s1) + " 1 2\n" + s2 + " 4 3\nm 1 4 1\n";
      std::string b = std::string(s2) + " 1 3\n" + s1 + " 4 2\nm 1 4 1\n";
      CHECK(evaluate(parse_program(a)).tangle == evaluate(parse_program(b)).tangle);
    }

  // R1 does not hold.
  GammaElement kink = evaluate(parse_program("X- 1 2\nm 2 1 1\n")).tangle.gamma;
  CHECK(kink.omega() == P("t_1^-1"));
}

TEST_CASE("commuting statements can be reordered") {
  const char* a = "X+ 1 2\nX- 3 4\nm 1 2 1\nm 3 4 3\n";
  const char* b = "X- 3 4\nm 3 4 3\nX+ 1 2\nm 1 2 1\n";
  CHECK(evaluate(parse_program(a)).tangle == evaluate(parse_program(b)).tangle);
}

TEST_CASE("braids and the Gassner matrix") {
  StringLink e = braid_to_program({}, 3);
  GammaElement z = evaluate(e.program).tangle.gamma;
  CHECK(z.omega().is_one());
  CHECK(z.matrix() == RfMatrix::identity(3));
  CHECK(gassner_matrix(e) == RfMatrix::identity(3));

  StringLink s1 = braid_to_program(parse_braid_word("1"), 2);
  CHECK(s1.top == std::vector<Label>{"2", "1"});
  CHECK(gassner_matrix(s1) == M({{"1 - t_1", "1"}, {"t_1", "0"}}));

  StringLink s = braid_to_program(parse_braid_word("1 -2"), 3);
  CHECK(gassner_matrix(s) == M({{"1 - t_1", "0", "t_3^-1"}, {"t_1", "0", "0"}, {"0", "1", "1 - t_3^-1"}}));

  CHECK_THROWS_AS(braid_to_program(parse_braid_word("3"), 3), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid_word("1 x"), SyntaxError);
  CHECK(print_braid_word(parse_braid_word("1 -2, 3")) == "1 -2 3");
  CHECK(writhe(parse_braid_word("1 -2 1 1")) == 2);
}

TEST_CASE("composition") {
  StringLink a = braid_to_program(parse_braid_word("1"), 2);
  StringLink b = braid_to_program(parse_braid_word("-1"), 2);
  StringLink ab = compose(a, b);
  CHECK(ab.is_pure());
  GammaElement z = evaluate(ab.program).tangle.gamma;
  CHECK(z.omega().is_one());
  CHECK(z.matrix() == RfMatrix::identity(2));

  StringLink s = braid_to_program(parse_braid_word("1 -2 1"), 3);
  StringLink si = compose(s, braid_to_program({}, 3));
  CHECK(evaluate(si.program).tangle.gamma == evaluate(s.program).tangle.gamma);
  CHECK(si.top == s.top);
  CHECK_THROWS_AS(compose(s, a), ArityMismatch);

  StringLink pure = compose(s, sorting_braid(s));
  CHECK(pure.is_pure());
}

TEST_CASE("closures of up-down tangles") {
  UpDownTangle trivial{parse_program("e 1\ne 2\ne 3\ne 4\n"), 2};
  GammaElement tau = tau_closure(trivial);
  CHECK(tau == evaluate(parse_program("e 1\ne 3\n")).tangle.gamma);
  GammaElement kappa = kappa_closure(trivial);
  CHECK(kappa.size() == 1);
  CHECK(kappa.omega().is_one());

  for (const char* w : {"", "1 1", "1 -1 1 1 1"}) {
    StringLink s = braid_to_program(parse_braid_word(w), 2);
    if (!s.is_pure()) s = compose(s, sorting_braid(s));
    UpDownTangle u = double_link(s);
    CHECK(u.n == 2);
    GammaElement t = tau_closure(u);
    CHECK(t.omega().is_one());
    CHECK(t.matrix() == RfMatrix::identity(2));
    KappaDeterminants d = kappa_determinants(u);
    CHECK(d.i_minus_n == d.p_minus_m);
  }
  CHECK_THROWS_AS(double_link(braid_to_program(parse_braid_word("1"), 2)), NotAStringLink);
}

TEST_CASE("kappa determinant identity on a non-trivial tangle") {
  // Not tau-trivial, but the identity for the kappa closure still holds.
  UpDownTangle u{braid_to_program(parse_braid_word("2 2 1 1"), 4).program, 2};
  u.program.statements.push_back(parse_program("e 2\ne 4\nrev 2 4").statements[2]);
  KappaDeterminants d = kappa_determinants(u);
  CHECK(d.i_minus_n == d.p_minus_m);
  // The closure merges every strand variable into t_1.
  RationalFn before = identify_all(evaluate(u.program).tangle.gamma.omega() * d.i_minus_n);
  CHECK(before == identify_all(kappa_closure(u).omega()));
  CHECK(before == P("(1 - t + t^2)/t^3"));
}
