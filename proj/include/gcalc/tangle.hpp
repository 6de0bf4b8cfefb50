// Tangle programs: a small line-oriented language for words in the
// generators and meta-monoid operations, plus braid and string-link helpers.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcalc/gamma.hpp"

namespace gcalc {

// Errors raised while reading a program; they carry a 1-based position.
struct ProgramError : Error {
  ProgramError(const std::string& what, int line, int column);
  int line;
  int column;
};
struct SyntaxError : ProgramError {
  using ProgramError::ProgramError;
};
struct UnknownLabelReference : ProgramError {
  using ProgramError::ProgramError;
};
struct SelfStitchError : ProgramError {
  using ProgramError::ProgramError;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct NotAStringLink : Error {
  using Error::Error;
};

struct Statement {
  enum class Kind { Crossing, Identity, Stitch, Delete, Rename, Reverse, Trace };
  Kind kind = Kind::Identity;
  Sign sign = Sign::Plus;   // Crossing only
  std::vector<Label> args;  // Crossing: over, under; Stitch: a, b, c; Rename: from, to
  int line = 0;
  int column = 0;

  bool operator==(const Statement& o) const { return kind == o.kind && sign == o.sign && args == o.args; }
};

struct TangleProgram {
  std::vector<Statement> statements;
  bool operator==(const TangleProgram& o) const { return statements == o.statements; }
};

// Grammar, one statement per line, '#' starts a comment:
//   X+ a b | X- a b      crossing with a over b
//   e a                  new identity strand
//   m a b c              stitch head of a to tail of b, call it c
//   del a | ren a b      delete, rename
//   rev a [b ...]        reverse orientation
//   tr a [b ...]         close components (only at the end of a program)
TangleProgram parse_program(std::string_view text);
std::string print_program(const TangleProgram& p);

// Statements up to the first trace, folded through the engine, and the
// labels closed by the trailing trace statements.
struct Evaluation {
  Tangle tangle;
  std::vector<Label> closed;
};
Evaluation evaluate(const TangleProgram& p);
// Scalar with the closed labels traced out; omega itself when there are none.
RationalFn traced_omega(const Evaluation& e);

// --------------------------------------------------------------- braids

struct BraidLetter {
  int index = 1;  // sigma_index, 1-based
  Sign sign = Sign::Plus;
  bool operator==(const BraidLetter& o) const { return index == o.index && sign == o.sign; }
};
using BraidWord = std::vector<BraidLetter>;

// "1 -2 1 -2" is sigma_1 sigma_2^-1 sigma_1 sigma_2^-1.
BraidWord parse_braid_word(std::string_view text);
std::string print_braid_word(const BraidWord& w);
// Sum of the letter signs.
int writhe(const BraidWord& w);
int writhe(const TangleProgram& p);

// A string link: the strand that starts at bottom position i carries the
// label bottom[i]; top[j] is the label of the strand ending at top position j.
struct StringLink {
  TangleProgram program;
  std::vector<Label> bottom;
  std::vector<Label> top;
  size_t width() const { return bottom.size(); }
  bool is_pure() const { return bottom == top; }
};

// Bottom labels are "1".."n"; crossing statements are interleaved with the
// stitches that attach them, so intermediate elements stay small.
StringLink braid_to_program(const BraidWord& word, int n);
// Vertical stacking, s1 below s2.
StringLink compose(const StringLink& s1, const StringLink& s2);
// The matrix M^rho: rows follow bottom, column j is the column of top[j].
RfMatrix gassner_matrix(const StringLink& s);
RfMatrix gassner_matrix(const StringLink& s, const GammaElement& evaluated);
// Connect the rightmost outgoing end to the rightmost incoming end.
StringLink close_rightmost(const StringLink& s);
// A braid realizing the permutation that sends top back to bottom, so that
// compose(s, sorting_braid(s)) is pure.
StringLink sorting_braid(const StringLink& s);

// --------------------------------------------------------- up-down tangles

// A pure tangle on strands "1".."2n"; odd strands point up, even ones down.
struct UpDownTangle {
  TangleProgram program;
  int n = 0;
};

std::vector<Label> odd_labels(int n);
std::vector<Label> even_labels(int n);

// Strand 2i-1 joined to 2i, keeping the odd name.
StitchSpec tau_spec(int n);
// All strands joined into one long strand named "1".
StitchSpec kappa_spec(int n);
GammaElement tau_closure(const UpDownTangle& u);
GammaElement kappa_closure(const UpDownTangle& u);

// Doubles every strand of a pure string link with a reversed parallel copy.
// Strand at bottom position k becomes the pair (2k-1, 2k).
UpDownTangle double_link(const StringLink& s);

}  // namespace gcalc
