#include "plm/io.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

#include "plm/errors.hpp"

namespace plm {
namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Non-blank lines, with their 1-based line numbers.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  for (std::size_t n = 1; std::getline(in, text); ++n)
    if (!tokens_of(text).empty()) lines.push_back({n, text});
  return lines;
}

long long parse_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

std::size_t parse_dim(const Line& line) {
  const auto toks = tokens_of(line.text);
  if (toks.size() != 1) throw ParseError(line.number, "expected the dimension d on its own line");
  const long long d = parse_int(toks[0], line.number);
  if (d < 1) throw ParseError(line.number, "dimension must be at least 1");
  return static_cast<std::size_t>(d);
}

Plm parse_colmap_line(const Line& line) {
  // "plm d: i1 … id"
  const auto colon = line.text.find(':');
  if (colon == std::string::npos) throw ParseError(line.number, "expected 'plm d: i1 … id'");
  const auto head = tokens_of(line.text.substr(0, colon));
  if (head.size() != 2 || head[0] != "plm") throw ParseError(line.number, "expected 'plm d: i1 … id'");
  const long long d = parse_int(head[1], line.number);
  if (d < 1) throw ParseError(line.number, "dimension must be at least 1");
  const auto body = tokens_of(line.text.substr(colon + 1));
  if (body.size() != static_cast<std::size_t>(d))
    throw ParseError(line.number, "expected " + std::to_string(d) + " column entries, got " +
                                      std::to_string(body.size()));
  std::vector<Index> colmap;
  for (const auto& tok : body) {
    const long long row = parse_int(tok, line.number);
    if (row < 1 || row > d)
      throw ParseError(line.number, "row index " + tok + " outside 1…" + std::to_string(d));
    colmap.push_back(static_cast<Index>(row - 1));
  }
  return Plm(std::move(colmap));
}

}  // namespace

Plm parse_plm(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, "empty input");
  if (lines[0].text.find("plm") != std::string::npos) {
    if (lines.size() > 1) throw ParseError(lines[1].number, "unexpected content after the column map");
    return parse_colmap_line(lines[0]);
  }
  const std::size_t d = parse_dim(lines[0]);
  if (lines.size() < d + 1)
    throw ParseError(lines.back().number, "expected " + std::to_string(d) + " matrix rows, got " +
                                              std::to_string(lines.size() - 1));
  if (lines.size() > d + 1) throw ParseError(lines[d + 1].number, "unexpected content after the matrix");
  DenseBinaryMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Line& line = lines[i + 1];
    const auto toks = tokens_of(line.text);
    if (toks.size() != d)
      throw ParseError(line.number, "expected " + std::to_string(d) + " entries, got " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < d; ++j) {
      const long long entry = parse_int(toks[j], line.number);
      if (entry != 0 && entry != 1) throw ParseError(line.number, "entry '" + toks[j] + "' is not 0 or 1");
      m(i, j) = entry;
    }
  }
  return from_dense(m);
}

Plm parse_plm(const std::string& text) {
  std::istringstream in(text);
  return parse_plm(in);
}

std::string format_plm(const Plm& a) {
  const auto m = to_dense(a);
  std::ostringstream out;
  out << a.dim() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

std::string format_colmap(const Plm& a) {
  std::ostringstream out;
  out << "plm " << a.dim() << ':';
  for (int row : a.one_based()) out << ' ' << row;
  return out.str();
}

StochasticMatrix parse_stochastic(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, "empty input");
  const std::size_t d = parse_dim(lines[0]);
  if (lines.size() < d + 1)
    throw ParseError(lines.back().number, "expected " + std::to_string(d) + " matrix rows, got " +
                                              std::to_string(lines.size() - 1));
  if (lines.size() > d + 1) throw ParseError(lines[d + 1].number, "unexpected content after the matrix");
  StochasticMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Line& line = lines[i + 1];
    const auto toks = tokens_of(line.text);
    if (toks.size() != d)
      throw ParseError(line.number, "expected " + std::to_string(d) + " entries, got " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < d; ++j) {
      try {
        m(i, j) = parse_rational(toks[j]);
      } catch (const ParseError& e) {
        throw ParseError(line.number, e.what());
      }
    }
  }
  return m;
}

StochasticMatrix parse_stochastic(const std::string& text) {
  std::istringstream in(text);
  return parse_stochastic(in);
}

std::string format_stochastic(const StochasticMatrix& m) {
  std::ostringstream out;
  out << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Plm& a) { return {{"dim", a.dim()}, {"colmap", a.one_based()}}; }

nlohmann::json to_json(const PlmClass& c) {
  struct Visitor {
    nlohmann::json operator()(const RowPlmClass& r) const { return {{"class", "rowplm"}, {"m", r.m + 1}}; }
    nlohmann::json operator()(const CplmClass& r) const { return {{"class", "cplm"}, {"leading", r.leading}}; }
    nlohmann::json operator()(const PcplmClass& r) const {
      return {{"class", "pcplm"}, {"tau", r.tau.one_based()}};
    }
    nlohmann::json operator()(const IplmClass&) const { return {{"class", "iplm"}}; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json to_json(const PeriodicityVerdict& v) {
  struct Visitor {
    nlohmann::json operator()(const Periodic& p) const { return {{"periodicity", "periodic"}, {"k", p.k}}; }
    nlohmann::json operator()(const PreRow& p) const {
      return {{"periodicity", "prerow"}, {"e", p.e}, {"m", p.m + 1}};
    }
    nlohmann::json operator()(const EventuallyPeriodic& p) const {
      return {{"periodicity", "eventually_periodic"}, {"s", p.s}, {"t", p.t}};
    }
  };
  auto j = std::visit(Visitor{}, v.kind);
  j["is_prerow"] = v.is_prerow;
  return j;
}

namespace {

// Twelve significant digits keeps last-bit noise out of reports.
double rounded(double x) {
  if (std::abs(x) < 1e-12) return 0.0;
  const double scale = std::pow(10.0, 11 - std::floor(std::log10(std::abs(x))));
  return std::round(x * scale) / scale;
}

}  // namespace

nlohmann::json to_json(const EigenReport& r) {
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (const auto& lambda : r.numeric_eigenvalues)
    eigenvalues.push_back({rounded(lambda.real()), rounded(lambda.imag())});
  return {{"has_zero", r.has_zero},
          {"roots_of_unity_ok", r.roots_of_unity_ok},
          {"period", r.period},
          {"numeric_eigenvalues", eigenvalues},
          {"spectral_radius_numeric", rounded(r.spectral_radius_numeric)},
          {"numeric_check_ok", r.numeric_check_ok}};
}

nlohmann::json to_json(const CharPoly& p) {
  // Highest power first, as the polynomial is usually written.
  return {{"degree", p.degree()},
          {"coefficients", std::vector<long long>(p.coefficients.rbegin(), p.coefficients.rend())}};
}

nlohmann::json to_json(const Decomposition& dec) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : dec.terms) terms.push_back({{"lambda", to_string(term.lambda)}, {"colmap", term.plm.one_based()}});
  return {{"dim", dec.dim}, {"terms", terms}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  try {
    const auto d = j.at("dim").get<std::size_t>();
    if (d < 1) throw ParseError(0, "dim must be at least 1");
    Decomposition dec{d, {}};
    for (const auto& term : j.at("terms")) {
      const auto colmap = term.at("colmap").get<std::vector<int>>();
      if (colmap.size() != d) throw ParseError(0, "colmap length differs from dim");
      for (int row : colmap)
        if (row < 1 || static_cast<std::size_t>(row) > d) throw ParseError(0, "colmap entry out of range");
      dec.terms.push_back({parse_rational(term.at("lambda").get<std::string>()), Plm::from_one_based(colmap)});
    }
    return dec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("decomposition JSON: ") + e.what());
  }
}

}  // namespace plm
