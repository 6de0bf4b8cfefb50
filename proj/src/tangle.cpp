// Tangle program parsing, printing and evaluation.
#include "gcalc/tangle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gcalc {

ProgramError::ProgramError(const std::string& what, int line_, int column_)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

// Tracks the labels alive after each statement while parsing.
class LabelChecker {
 public:
  void fresh(const Token& t, int line) {
    check_valid(t, line);
    if (live_.count(t.text)) throw SyntaxError("label '" + t.text + "' is already in use", line, t.column);
  }
  void known(const Token& t, int line) {
    check_valid(t, line);
    if (!live_.count(t.text)) throw UnknownLabelReference("unknown label '" + t.text + "'", line, t.column);
  }
  void add(const std::string& x) { live_.insert(x); }
  void remove(const std::string& x) { live_.erase(x); }

 private:
  static void check_valid(const Token& t, int line) {
    if (!is_valid_label(t.text)) throw SyntaxError("invalid label '" + t.text + "'", line, t.column);
  }
  std::set<std::string> live_;
};

void require_args(const std::vector<Token>& tok, size_t min, size_t max, int line) {
  size_t n = tok.size() - 1;
  if (n < min || n > max) {
    std::string want = min == max ? std::to_string(min) : "at least " + std::to_string(min);
    throw SyntaxError("'" + tok[0].text + "' expects " + want + " label(s), got " + std::to_string(n), line,
                      tok[0].column);
  }
}

void require_distinct(const std::vector<Token>& tok, int line) {
  std::set<std::string> seen;
  for (size_t i = 1; i < tok.size(); ++i)
    if (!seen.insert(tok[i].text).second) throw SyntaxError("label '" + tok[i].text + "' repeated", line, tok[i].column);
}

}  // namespace

TangleProgram parse_program(std::string_view text) {
  TangleProgram p;
  LabelChecker labels;
  bool tracing = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    Statement s;
    s.line = line_no;
    s.column = tok[0].column;
    const std::string& op = tok[0].text;
    if (tracing && op != "tr") throw SyntaxError("only 'tr' may follow a trace", line_no, tok[0].column);
    if (op == "X+" || op == "X-") {
      require_args(tok, 2, 2, line_no);
      s.kind = Statement::Kind::Crossing;
      s.sign = op == "X+" ? Sign::Plus : Sign::Minus;
      labels.fresh(tok[1], line_no);
      labels.fresh(tok[2], line_no);
      if (tok[1].text == tok[2].text) throw SyntaxError("crossing with equal labels", line_no, tok[2].column);
      labels.add(tok[1].text);
      labels.add(tok[2].text);
    } else if (op == "e") {
      require_args(tok, 1, 1, line_no);
      s.kind = Statement::Kind::Identity;
      labels.fresh(tok[1], line_no);
      labels.add(tok[1].text);
    } else if (op == "m") {
      require_args(tok, 3, 3, line_no);
      s.kind = Statement::Kind::Stitch;
      if (tok[1].text == tok[2].text)
        throw SelfStitchError("cannot stitch '" + tok[1].text + "' to itself", line_no, tok[2].column);
      labels.known(tok[1], line_no);
      labels.known(tok[2], line_no);
      labels.remove(tok[1].text);
      labels.remove(tok[2].text);
      labels.fresh(tok[3], line_no);
      labels.add(tok[3].text);
    } else if (op == "del") {
      require_args(tok, 1, 1, line_no);
      s.kind = Statement::Kind::Delete;
      labels.known(tok[1], line_no);
      labels.remove(tok[1].text);
    } else if (op == "ren") {
      require_args(tok, 2, 2, line_no);
      s.kind = Statement::Kind::Rename;
      labels.known(tok[1], line_no);
      labels.remove(tok[1].text);
      labels.fresh(tok[2], line_no);
      labels.add(tok[2].text);
    } else if (op == "rev" || op == "tr") {
      require_args(tok, 1, static_cast<size_t>(-1), line_no);
      s.kind = op == "rev" ? Statement::Kind::Reverse : Statement::Kind::Trace;
      for (size_t i = 1; i < tok.size(); ++i) labels.known(tok[i], line_no);
      require_distinct(tok, line_no);
      if (op == "tr") {
        tracing = true;
        for (size_t i = 1; i < tok.size(); ++i) labels.remove(tok[i].text);
      }
    } else {
      throw SyntaxError("unknown statement '" + op + "'", line_no, tok[0].column);
    }
    for (size_t i = 1; i < tok.size(); ++i) s.args.push_back(tok[i].text);
    p.statements.push_back(std::move(s));
  }
  return p;
}

std::string print_program(const TangleProgram& p) {
  std::string out;
  for (const auto& s : p.statements) {
    switch (s.kind) {
      case Statement::Kind::Crossing: out += s.sign == Sign::Plus ? "X+" : "X-"; break;
      case Statement::Kind::Identity: out += "e"; break;
      case Statement::Kind::Stitch: out += "m"; break;
      case Statement::Kind::Delete: out += "del"; break;
      case Statement::Kind::Rename: out += "ren"; break;
      case Statement::Kind::Reverse: out += "rev"; break;
      case Statement::Kind::Trace: out += "tr"; break;
    }
    for (const auto& a : s.args) out += " " + a;
    out += "\n";
  }
  return out;
}

Evaluation evaluate(const TangleProgram& p) {
  Evaluation e;
  for (const auto& s : p.statements) {
    const auto& a = s.args;
    switch (s.kind) {
      case Statement::Kind::Crossing:
        e.tangle = disjoint_union(e.tangle, crossing(s.sign, a[0], a[1]));
        break;
      case Statement::Kind::Identity: e.tangle = identity_strand(e.tangle, a[0]); break;
      case Statement::Kind::Stitch: e.tangle = stitch(e.tangle, a[0], a[1], a[2]); break;
      case Statement::Kind::Delete: e.tangle = delete_strand(e.tangle, a[0]); break;
      case Statement::Kind::Rename: e.tangle = rename(e.tangle, a[0], a[1]); break;
      case Statement::Kind::Reverse: e.tangle = reverse_orientation(e.tangle, a); break;
      case Statement::Kind::Trace: e.closed.insert(e.closed.end(), a.begin(), a.end()); break;
    }
  }
  return e;
}

RationalFn traced_omega(const Evaluation& e) { return trace(e.tangle.gamma, e.closed); }

int writhe(const TangleProgram& p) {
  int w = 0;
  for (const auto& s : p.statements)
    if (s.kind == Statement::Kind::Crossing) w += s.sign == Sign::Plus ? 1 : -1;
  return w;
}

}  // namespace gcalc
