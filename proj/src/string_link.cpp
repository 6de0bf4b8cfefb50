// Braids, string links and up-down tangles expressed as tangle programs.
#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "gcalc/tangle.hpp"

namespace gcalc {

namespace {

Statement make(Statement::Kind k, std::vector<Label> args, Sign s = Sign::Plus) {
  Statement st;
  st.kind = k;
  st.sign = s;
  st.args = std::move(args);
  return st;
}

Statement cross(Sign s, const Label& over, const Label& under) {
  return make(Statement::Kind::Crossing, {over, under}, s);
}

Statement stitch_st(const Label& a, const Label& b, const Label& c) {
  return make(Statement::Kind::Stitch, {a, b, c});
}

bool is_number(const Label& x) {
  return !x.empty() && x.size() < 10 && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Largest numeric label mentioned anywhere in the link.
long max_numeric_label(const StringLink& s) {
  long m = 0;
  auto see = [&](const Label& x) {
    if (is_number(x)) m = std::max(m, std::stol(x));
  };
  for (const auto& st : s.program.statements)
    for (const auto& a : st.args) see(a);
  for (const auto& x : s.bottom) see(x);
  for (const auto& x : s.top) see(x);
  return m;
}

void check_open(const StringLink& s) {
  for (const auto& st : s.program.statements)
    if (st.kind == Statement::Kind::Trace) throw NotAStringLink("string link programs cannot contain traces");
}

}  // namespace

BraidWord parse_braid_word(std::string_view text) {
  BraidWord w;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    bool neg = tok[0] == '-';
    std::string digits = tok.substr(tok[0] == '-' || tok[0] == '+' ? 1 : 0);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SyntaxError("bad braid letter '" + tok + "'", 1, 1);
    w.push_back({std::stoi(digits), neg ? Sign::Minus : Sign::Plus});
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  return w;
}

std::string print_braid_word(const BraidWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    if (l.sign == Sign::Minus) s += '-';
    s += std::to_string(l.index);
  }
  return s;
}

int writhe(const BraidWord& w) {
  int r = 0;
  for (const auto& l : w) r += l.sign == Sign::Plus ? 1 : -1;
  return r;
}

StringLink braid_to_program(const BraidWord& word, int n) {
  if (n < 1) throw IndexOutOfRange("a braid needs at least one strand");
  StringLink s;
  for (int k = 1; k <= n; ++k) s.bottom.push_back(std::to_string(k));
  std::vector<Label> pos = s.bottom;
  std::set<Label> used;
  const Label tmp_over = std::to_string(n + 1);
  const Label tmp_under = std::to_string(n + 2);
  for (const auto& l : word) {
    if (l.index < 1 || l.index > n - 1)
      throw IndexOutOfRange("generator sigma_" + std::to_string(l.index) + " on " + std::to_string(n) + " strands");
    const Label& left = pos[l.index - 1];
    const Label& right = pos[l.index];
    // sigma_i^+ has the left strand on top, sigma_i^- the right one.
    Label over = l.sign == Sign::Plus ? left : right;
    Label under = l.sign == Sign::Plus ? right : left;
    Label lo = used.count(over) ? tmp_over : over;
    Label lu = used.count(under) ? tmp_under : under;
    s.program.statements.push_back(cross(l.sign, lo, lu));
    if (lo != over) s.program.statements.push_back(stitch_st(over, lo, over));
    if (lu != under) s.program.statements.push_back(stitch_st(under, lu, under));
    used.insert(over);
    used.insert(under);
    std::swap(pos[l.index - 1], pos[l.index]);
  }
  for (const auto& x : s.bottom)
    if (!used.count(x)) s.program.statements.push_back(make(Statement::Kind::Identity, {x}));
  s.top = pos;
  return s;
}

StringLink compose(const StringLink& s1, const StringLink& s2) {
  if (s1.width() != s2.width())
    throw ArityMismatch("cannot stack a " + std::to_string(s1.width()) + "-strand link on a " +
                        std::to_string(s2.width()) + "-strand link");
  check_open(s1);
  check_open(s2);
  long next = std::max(max_numeric_label(s1), 0L) + 1;
  std::map<Label, Label> fresh;
  auto rename_label = [&](const Label& x) {
    auto it = fresh.find(x);
    if (it != fresh.end()) return it->second;
    return fresh[x] = std::to_string(next++);
  };
  StringLink r;
  r.program = s1.program;
  r.bottom = s1.bottom;
  for (const auto& x : s2.bottom) rename_label(x);
  for (auto st : s2.program.statements) {
    for (auto& a : st.args) a = rename_label(a);
    r.program.statements.push_back(std::move(st));
  }
  std::map<Label, Label> joined;  // s2 strand -> s1 strand it continues
  for (size_t i = 0; i < s1.width(); ++i) {
    r.program.statements.push_back(stitch_st(s1.top[i], fresh.at(s2.bottom[i]), s1.top[i]));
    joined[s2.bottom[i]] = s1.top[i];
  }
  for (const auto& x : s2.top) r.top.push_back(joined.at(x));
  return r;
}

RfMatrix gassner_matrix(const StringLink& s, const GammaElement& z) {
  size_t n = s.width();
  RfMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = z.entry(s.bottom[i], s.top[j]);
  return m;
}

RfMatrix gassner_matrix(const StringLink& s) { return gassner_matrix(s, evaluate(s.program).tangle.gamma); }

StringLink close_rightmost(const StringLink& s) {
  size_t n = s.width();
  if (n < 2) throw NotAStringLink("closing the last strand of a one-strand link");
  const Label a = s.top[n - 1];
  const Label b = s.bottom[n - 1];
  if (a == b) throw NotAStringLink("the rightmost strand would close into a loop");
  StringLink r;
  r.program = s.program;
  r.program.statements.push_back(stitch_st(a, b, a));
  r.bottom.assign(s.bottom.begin(), s.bottom.end() - 1);
  for (size_t j = 0; j + 1 < n; ++j) r.top.push_back(s.top[j] == b ? a : s.top[j]);
  return r;
}

StringLink sorting_braid(const StringLink& s) {
  size_t n = s.width();
  // After stacking, top position j carries s.top[target[j] - 1]; we want s.bottom[j].
  std::vector<int> target(n);
  for (size_t j = 0; j < n; ++j) {
    auto it = std::find(s.top.begin(), s.top.end(), s.bottom[j]);
    if (it == s.top.end()) throw NotAStringLink("top is not a permutation of bottom");
    target[j] = static_cast<int>(it - s.top.begin()) + 1;
  }
  std::vector<int> cur(n);
  for (size_t j = 0; j < n; ++j) cur[j] = static_cast<int>(j) + 1;
  BraidWord w;
  for (size_t j = 0; j < n; ++j) {
    size_t p = static_cast<size_t>(std::find(cur.begin(), cur.end(), target[j]) - cur.begin());
    for (size_t q = p; q > j; --q) {
      w.push_back({static_cast<int>(q), Sign::Plus});
      std::swap(cur[q - 1], cur[q]);
    }
  }
  return braid_to_program(w, static_cast<int>(n));
}

// ------------------------------------------------------------- up-down

std::vector<Label> odd_labels(int n) {
  std::vector<Label> r;
  for (int k = 1; k <= n; ++k) r.push_back(std::to_string(2 * k - 1));
  return r;
}

std::vector<Label> even_labels(int n) {
  std::vector<Label> r;
  for (int k = 1; k <= n; ++k) r.push_back(std::to_string(2 * k));
  return r;
}

StitchSpec tau_spec(int n) { return {odd_labels(n), even_labels(n), odd_labels(n)}; }

StitchSpec kappa_spec(int n) {
  StitchSpec s;
  for (int i = 1; i < 2 * n; ++i) {
    s.a.push_back(std::to_string(i + 1));
    s.b.push_back(std::to_string(i));
    s.c.push_back("1");
  }
  return s;
}

GammaElement tau_closure(const UpDownTangle& u) { return stitch_bulk(evaluate(u.program).tangle.gamma, tau_spec(u.n)); }

GammaElement kappa_closure(const UpDownTangle& u) {
  return stitch_bulk(evaluate(u.program).tangle.gamma, kappa_spec(u.n));
}

// Doubling scheme.  Every label x is replaced by a pair (x1, x2) of parallel
// strands, x2 on the right of x1 when looking along the strand.  A crossing
// with a over b becomes four crossings of the same sign: each copy of b runs
// under both copies of a, meeting a2 first when the crossing is positive (b
// arrives from the right of a) and a1 first when it is negative.  The order
// of the two under-crossings along a copy of a does not matter, since
// overcrossings commute.  Stitches and identities are copied to both layers,
// and at the end the second layer is reversed.
UpDownTangle double_link(const StringLink& s) {
  check_open(s);
  if (!s.is_pure()) throw NotAStringLink("only pure string links can be doubled");
  int n = static_cast<int>(s.width());
  std::map<Label, std::pair<Label, Label>> pair_of;
  for (int k = 0; k < n; ++k) pair_of[s.bottom[k]] = {std::to_string(2 * k + 1), std::to_string(2 * k + 2)};
  long next = 2L * n + 1;
  auto pair = [&](const Label& x) {
    auto it = pair_of.find(x);
    if (it != pair_of.end()) return it->second;
    std::pair<Label, Label> p{std::to_string(next), std::to_string(next + 1)};
    next += 2;
    return pair_of[x] = p;
  };
  for (const auto& st : s.program.statements)
    for (const auto& a : st.args) pair(a);
  const Label ta1 = std::to_string(next), ta2 = std::to_string(next + 1);
  const Label tb1 = std::to_string(next + 2), tb2 = std::to_string(next + 3);

  UpDownTangle u;
  u.n = n;
  auto& out = u.program.statements;
  for (const auto& st : s.program.statements) {
    switch (st.kind) {
      case Statement::Kind::Crossing: {
        auto [a1, a2] = pair(st.args[0]);
        auto [b1, b2] = pair(st.args[1]);
        Sign sg = st.sign;
        const Label& first = sg == Sign::Plus ? a2 : a1;
        const Label& second = sg == Sign::Plus ? a1 : a2;
        const Label& first_t = sg == Sign::Plus ? ta2 : ta1;
        const Label& second_t = sg == Sign::Plus ? ta1 : ta2;
        out.push_back(cross(sg, first, b1));
        out.push_back(cross(sg, second, tb1));
        out.push_back(stitch_st(b1, tb1, b1));
        out.push_back(cross(sg, first_t, b2));
        out.push_back(cross(sg, second_t, tb2));
        out.push_back(stitch_st(b2, tb2, b2));
        out.push_back(stitch_st(a1, ta1, a1));
        out.push_back(stitch_st(a2, ta2, a2));
        break;
      }
      case Statement::Kind::Identity: {
        auto [x1, x2] = pair(st.args[0]);
        out.push_back(make(Statement::Kind::Identity, {x1}));
        out.push_back(make(Statement::Kind::Identity, {x2}));
        break;
      }
      case Statement::Kind::Stitch: {
        auto [a1, a2] = pair(st.args[0]);
        auto [b1, b2] = pair(st.args[1]);
        auto [c1, c2] = pair(st.args[2]);
        out.push_back(stitch_st(a1, b1, c1));
        out.push_back(stitch_st(a2, b2, c2));
        break;
      }
      default: throw NotAStringLink("doubling supports crossings, identities and stitches only");
    }
  }
  out.push_back(make(Statement::Kind::Reverse, even_labels(n)));
  return u;
}

}  // namespace gcalc
