// Gamma-calculus elements and the meta-monoid operations on them, together
// with the sigma-calculus values needed for orientation reversal.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcalc/linalg.hpp"
#include "gcalc/polyalg.hpp"

namespace gcalc {

struct EqualLabels : Error {
  using Error::Error;
};
struct DuplicateLabel : Error {
  using Error::Error;
};
struct LabelCollision : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct SelfStitch : Error {
  using Error::Error;
};
struct SingularStitch : Error {
  using Error::Error;
};
struct SpecMismatch : Error {
  using Error::Error;
};
struct SingularReversal : Error {
  using Error::Error;
};

// A scalar omega and a square matrix whose row i is y_{labels[i]} and whose
// column j is x_{labels[j]}.  Labels are kept sorted by label_less.
class GammaElement {
 public:
  GammaElement() : omega_(1) {}
  GammaElement(std::vector<Label> labels, RationalFn omega, RfMatrix matrix);

  const std::vector<Label>& labels() const { return labels_; }
  const RationalFn& omega() const { return omega_; }
  const RfMatrix& matrix() const { return m_; }
  size_t size() const { return labels_.size(); }
  bool has(const Label& x) const { return index_of(x).has_value(); }
  std::optional<size_t> index_of(const Label& x) const;
  // Raises UnknownLabel.
  size_t require(const Label& x) const;
  const RationalFn& entry(const Label& row, const Label& col) const;

  bool operator==(const GammaElement& o) const {
    return labels_ == o.labels_ && omega_ == o.omega_ && m_ == o.m_;
  }
  bool operator!=(const GammaElement& o) const { return !(*this == o); }

 private:
  std::vector<Label> labels_;
  RationalFn omega_;
  RfMatrix m_;
};

class SigmaElement {
 public:
  using Map = std::map<Label, Monomial, LabelLess>;
  SigmaElement() = default;
  explicit SigmaElement(Map m) : s_(std::move(m)) {}

  const Map& values() const { return s_; }
  const Monomial& at(const Label& x) const;
  bool operator==(const SigmaElement& o) const { return s_ == o.s_; }
  bool operator!=(const SigmaElement& o) const { return !(*this == o); }

 private:
  Map s_;
};

// Pairs (a[i], b[i]) are stitched head to tail; c[i] names the strand the
// pair ends up in.
struct StitchSpec {
  std::vector<Label> a;
  std::vector<Label> b;
  std::vector<Label> c;
};

enum class Sign { Plus, Minus };

// ---------------------------------------------------------------- Gamma part

GammaElement generator(Sign s, const Label& over, const Label& under);
GammaElement identity_strand(const GammaElement& z, const Label& x);
GammaElement disjoint_union(const GammaElement& z1, const GammaElement& z2);
GammaElement delete_strand(const GammaElement& z, const Label& x);
GammaElement rename(const GammaElement& z, const Label& x, const Label& w);
GammaElement stitch(const GammaElement& z, const Label& a, const Label& b, const Label& c);
GammaElement stitch_bulk(const GammaElement& z, const StitchSpec& spec);
// Scalar omega * det(I - alpha) with alpha the closed block.
RationalFn trace(const GammaElement& z, const std::vector<Label>& closed);
// Substitute in omega and in every entry (labels unchanged).
GammaElement substitute(const GammaElement& z, const Substitution& sub);
// Identify every strand variable with the common variable t.
GammaElement identify_all(const GammaElement& z);

// Empty list means valid.  With tangle_image the column sums, Laurent
// property and omega(1) = 1 are checked as well.
std::vector<std::string> validate(const GammaElement& z, bool tangle_image);

// --------------------------------------------------------------- Sigma part

SigmaElement sigma_generator(Sign s, const Label& over, const Label& under);
SigmaElement identity_strand(const SigmaElement& s, const Label& x);
SigmaElement disjoint_union(const SigmaElement& s1, const SigmaElement& s2);
SigmaElement delete_strand(const SigmaElement& s, const Label& x);
SigmaElement rename(const SigmaElement& s, const Label& x, const Label& w);
SigmaElement stitch(const SigmaElement& s, const Label& a, const Label& b, const Label& c);
SigmaElement stitch_bulk(const SigmaElement& s, const StitchSpec& spec);

// ------------------------------------------------------- Paired evaluation

// Gamma and sigma values carried together, as the evaluator does.
struct Tangle {
  GammaElement gamma;
  SigmaElement sigma;

  bool operator==(const Tangle& o) const { return gamma == o.gamma && sigma == o.sigma; }
  bool operator!=(const Tangle& o) const { return !(*this == o); }
};

Tangle crossing(Sign s, const Label& over, const Label& under);
Tangle identity_strand(const Tangle& t, const Label& x);
Tangle disjoint_union(const Tangle& t1, const Tangle& t2);
Tangle delete_strand(const Tangle& t, const Label& x);
Tangle rename(const Tangle& t, const Label& x, const Label& w);
Tangle stitch(const Tangle& t, const Label& a, const Label& b, const Label& c);
Tangle stitch_bulk(const Tangle& t, const StitchSpec& spec);
Tangle reverse_orientation(const Tangle& t, const std::vector<Label>& strands);

// --------------------------------------------------------------- Rendering

// Bordered array: "omega | x_1 x_2 ..." followed by one "y_i | ..." row per
// label, with columns aligned.
std::string render(const GammaElement& z, const RenderOptions& opt = {});
// One line: "(omega | [a, b; c, d])".
std::string render_compact(const GammaElement& z, const RenderOptions& opt = {});
// Single-line JSON record with kind, labels, omega and row-major entries.
std::string dump_structured(const GammaElement& z, const RenderOptions& opt = {});
// Inverse of dump_structured.
GammaElement parse_structured(std::string_view line, const RenderOptions& opt = {});
std::string render(const SigmaElement& s, const RenderOptions& opt = {});

}  // namespace gcalc
