// Text forms of Gamma and sigma elements.
#include <algorithm>
#include "json.hpp"

#include "gcalc/gamma.hpp"

namespace gcalc {

namespace {

std::string pad(const std::string& s, size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

}  // namespace

std::string render(const GammaElement& z, const RenderOptions& opt) {
  size_t n = z.size();
  // cells[0] is the header row, cells[i + 1] row y_i; column 0 holds the row heads.
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = render(z.omega(), opt);
  for (size_t j = 0; j < n; ++j) cells[0][j + 1] = "x_" + z.labels()[j];
  for (size_t i = 0; i < n; ++i) {
    cells[i + 1][0] = "y_" + z.labels()[i];
    for (size_t j = 0; j < n; ++j) cells[i + 1][j + 1] = render(z.matrix()(i, j), opt);
  }
  std::vector<size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line = pad(row[0], width[0]) + " |";
    for (size_t j = 1; j <= n; ++j) line += "  " + pad(row[j], width[j]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_compact(const GammaElement& z, const RenderOptions& opt) {
  std::string s = "(" + render(z.omega(), opt) + " | [";
  for (size_t i = 0; i < z.size(); ++i) {
    if (i > 0) s += "; ";
    for (size_t j = 0; j < z.size(); ++j) {
      if (j > 0) s += ", ";
      s += render(z.matrix()(i, j), opt);
    }
  }
  return s + "])";
}

std::string dump_structured(const GammaElement& z, const RenderOptions& opt) {
  nlohmann::json j;
  j["kind"] = "gamma";
  j["labels"] = z.labels();
  j["omega"] = render(z.omega(), opt);
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < z.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t c = 0; c < z.size(); ++c) row.push_back(render(z.matrix()(r, c), opt));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump();
}

GammaElement parse_structured(std::string_view line, const RenderOptions& opt) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ExpressionSyntax(std::string("malformed structured record: ") + e.what());
  }
  if (j.value("kind", "") != "gamma") throw ExpressionSyntax("structured record is not of kind gamma");
  auto labels = j.at("labels").get<std::vector<std::string>>();
  auto entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
  size_t n = labels.size();
  if (entries.size() != n) throw ExpressionSyntax("entry rows do not match the labels");
  RfMatrix m(n, n);
  for (size_t r = 0; r < n; ++r) {
    if (entries[r].size() != n) throw ExpressionSyntax("entry row has the wrong length");
    for (size_t c = 0; c < n; ++c) m(r, c) = parse_rational(entries[r][c], opt);
  }
  return GammaElement(labels, parse_rational(j.at("omega").get<std::string>(), opt), m);
}

std::string render(const SigmaElement& s, const RenderOptions& opt) {
  std::string out = "(";
  bool first = true;
  for (const auto& [x, m] : s.values()) {
    if (!first) out += ", ";
    first = false;
    std::string v = m.is_one() ? "1" : render(m, opt);
    out += "sigma_" + x + " = " + v;
  }
  return out + ")";
}

}  // namespace gcalc
