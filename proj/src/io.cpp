#include "nestconf/io.h"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace nestconf {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + (column ? ":" + std::to_string(column) : "") + ": " +
                         message),
      line_(line),
      column_(column) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> words(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

Exponent parse_count(const Token& t, const std::string& source, std::size_t line, const char* what) {
  if (t.text.empty() || t.text.size() > 18) throw ParseError(source, line, t.column, std::string("bad ") + what);
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(source, line, t.column, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                                   t.text + "'");
  return std::stoll(t.text);
}

}  // namespace

Configuration parse_configuration(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text);
  std::vector<std::string> names;
  std::size_t ln = 0;
  std::vector<std::pair<std::size_t, std::vector<Token>>> rows;
  for (const auto& line : lines) {
    ++ln;
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') {
      const std::string tag = "# names:";
      if (line.compare(first, tag.size(), tag) == 0)
        for (auto& w : words(line.substr(first + tag.size()))) names.push_back(w.text);
      continue;
    }
    if (blank(line)) continue;
    rows.emplace_back(ln, words(line));
  }
  if (rows.empty()) throw ParseError(source, ln == 0 ? 1 : ln, 0, "missing 'd n' header");
  const auto& [hl, header] = rows.front();
  if (header.size() != 2) throw ParseError(source, hl, header.front().column, "header must be 'd n'");
  const auto d = static_cast<std::size_t>(parse_count(header[0], source, hl, "dimension"));
  const auto n = static_cast<std::size_t>(parse_count(header[1], source, hl, "column count"));
  if (d == 0) throw ParseError(source, hl, header[0].column, "dimension must be positive");
  if (n == 0) throw ParseError(source, hl, header[1].column, "column count must be positive");
  if (rows.size() - 1 != d)
    throw ParseError(source, rows.back().first, 0,
                     "expected " + std::to_string(d) + " rows, found " + std::to_string(rows.size() - 1));
  std::vector<ExponentVector> cols(n, ExponentVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    const auto& [rl, row] = rows[i + 1];
    if (row.size() != n)
      throw ParseError(source, rl, row.size() > n ? row[n].column : 0,
                       "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = parse_count(row[j], source, rl, "entry");
  }
  if (!names.empty() && names.size() != d)
    throw ParseError(source, 1, 0, "names line has " + std::to_string(names.size()) + " labels for " +
                                       std::to_string(d) + " rows");
  try {
    return make_configuration(std::move(cols), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, hl, 0, e.what());
  }
}

std::string format_configuration(const Configuration& a) {
  std::ostringstream out;
  if (!a.names.empty()) {
    out << "# names:";
    for (const auto& n : a.names) out << ' ' << n;
    out << '\n';
  }
  out << a.dim << ' ' << a.columns.size() << '\n';
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.columns.size(); ++j) out << (j ? " " : "") << a.columns[j][i];
    out << '\n';
  }
  return out.str();
}

Configuration read_configuration_file(const std::string& path) { return parse_configuration(read_file(path), path); }

std::vector<std::string> plain_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("z" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> nested_names(const NestedConfiguration& n) {
  std::vector<std::string> out;
  for (const auto& v : n.variables) out.push_back(display(v));
  return out;
}

std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& variables) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += variables[v];
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string format_binomials(const std::vector<MarkedBinomial>& family, const std::vector<std::string>& variables) {
  std::string out;
  for (const auto& b : family)
    out += format_monomial(b.lead(), variables) + " - " + format_monomial(b.tail(), variables) + '\n';
  return out;
}

namespace {

// Monomial grammar: "1" | factor ('*' factor)*, factor = name ('^' digits)?.
// Names run until '^', '*' or whitespace, except inside brackets, so nested
// display names parse as one token.
class MonomialParser {
 public:
  MonomialParser(const std::string& line, std::size_t pos, const std::map<std::string, std::size_t>& index,
                 std::size_t n, const std::string& source, std::size_t ln)
      : line_(line), pos_(pos), index_(index), n_(n), source_(source), ln_(ln) {}

  ExponentVector parse() {
    skip_space();
    ExponentVector m(n_, 0);
    if (pos_ < line_.size() && line_[pos_] == '1' &&
        (pos_ + 1 == line_.size() || std::isspace(static_cast<unsigned char>(line_[pos_ + 1])))) {
      ++pos_;
      return m;
    }
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      int depth = 0;
      while (pos_ < line_.size()) {
        char c = line_[pos_];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == '^' || c == '*' || std::isspace(static_cast<unsigned char>(c)))) break;
        ++pos_;
      }
      if (pos_ == start) fail(start, "expected a variable name");
      const std::string name = line_.substr(start, pos_ - start);
      auto it = index_.find(name);
      if (it == index_.end()) fail(start, "unknown variable '" + name + "'");
      Exponent e = 1;
      if (pos_ < line_.size() && line_[pos_] == '^') {
        const std::size_t es = ++pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        if (pos_ == es || pos_ - es > 9) fail(es, "expected an exponent");
        e = std::stoll(line_.substr(es, pos_ - es));
      }
      m[it->second] = checked_add(m[it->second], e);
      if (pos_ < line_.size() && line_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return m;
    }
  }

  std::size_t pos() const { return pos_; }
  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw ParseError(source_, ln_, at + 1, msg); }

 private:
  const std::string& line_;
  std::size_t pos_;
  const std::map<std::string, std::size_t>& index_;
  std::size_t n_;
  const std::string& source_;
  std::size_t ln_;
};

}  // namespace

std::vector<MarkedBinomial> parse_binomials(const std::string& text, const std::vector<std::string>& variables,
                                            const std::string& source) {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < variables.size(); ++v) index.emplace(variables[v], v);
  std::vector<MarkedBinomial> out;
  std::size_t ln = 0;
  for (std::string line : split_lines(text)) {
    ++ln;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    MonomialParser lead(line, 0, index, variables.size(), source, ln);
    ExponentVector l = lead.parse();
    lead.skip_space();
    std::size_t p = lead.pos();
    if (p >= line.size() || line[p] != '-') lead.fail(p, "expected ' - ' between the two monomials");
    MonomialParser tail(line, p + 1, index, variables.size(), source, ln);
    ExponentVector t = tail.parse();
    tail.skip_space();
    if (tail.pos() != line.size()) tail.fail(tail.pos(), "unexpected text after the binomial");
    if (l == t) throw ParseError(source, ln, 0, "both sides are equal");
    out.push_back(MarkedBinomial{std::move(l), std::move(t), Side::Plus});
  }
  return out;
}

MonomialOrder parse_order(const std::string& text, std::size_t variables) {
  if (text == "lex") return MonomialOrder::lex(variables);
  if (text == "grlex") return MonomialOrder::graded_lex(variables);
  if (text == "grevlex") return MonomialOrder::graded_revlex(variables);
  const std::string tag = "weight:";
  if (text.compare(0, tag.size(), tag) == 0) {
    std::vector<Rational> w;
    std::stringstream ss(text.substr(tag.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      Rational r;
      if (item.empty() || r.set_str(item, 10) != 0)
        throw std::invalid_argument("bad weight '" + item + "' in order '" + text + "'");
      r.canonicalize();
      if (r < 0) throw std::invalid_argument("weights must be nonnegative");
      w.push_back(r);
    }
    if (w.size() != variables)
      throw std::invalid_argument("order has " + std::to_string(w.size()) + " weights for " +
                                  std::to_string(variables) + " variables");
    return MonomialOrder::weighted(std::move(w));
  }
  throw std::invalid_argument("unknown order '" + text + "' (expected lex, grlex, grevlex or weight:<csv>)");
}

NestedSpec parse_nested_spec(const std::string& text, const std::string& source) {
  NestedSpec spec;
  std::size_t ln = 0;
  for (const auto& line : split_lines(text)) {
    ++ln;
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto ws = words(line);
    if (ws.size() != 2) throw ParseError(source, ln, ws.front().column, "expected 'outer: PATH' or 'inner: PATH'");
    if (ws[0].text == "outer:") {
      if (!spec.outer.empty()) throw ParseError(source, ln, ws[0].column, "second 'outer:' line");
      spec.outer = ws[1].text;
    } else if (ws[0].text == "inner:") {
      spec.inner.push_back(ws[1].text);
    } else {
      throw ParseError(source, ln, ws[0].column, "unknown key '" + ws[0].text + "'");
    }
  }
  if (spec.outer.empty()) throw ParseError(source, ln == 0 ? 1 : ln, 0, "missing 'outer:' line");
  if (spec.inner.empty()) throw ParseError(source, ln == 0 ? 1 : ln, 0, "missing 'inner:' lines");
  return spec;
}

NestedConfiguration read_nested_spec_file(const std::string& path) {
  NestedSpec spec = parse_nested_spec(read_file(path), path);
  auto base = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path q(p);
    return (q.is_absolute() ? q : base / q).string();
  };
  Configuration outer = read_configuration_file(resolve(spec.outer));
  std::vector<Configuration> inner;
  for (const auto& p : spec.inner) inner.push_back(read_configuration_file(resolve(p)));
  return build_nested(outer, inner);
}

std::string format_hole_report(const HoleReport& r) {
  std::ostringstream out;
  out << "holes=" << r.holes.size() << " search_bound=" << r.search_bound
      << " certifying_bound=" << r.certifying_bound << " exhaustive=" << r.exhaustive
      << " pattern=" << r.pattern_flag << '\n';
  for (const auto& h : r.holes) out << h.degree << ": " << to_string(h.point) << '\n';
  return out.str();
}

std::string format_points(const std::vector<SquareMatrixPoint>& points) {
  std::ostringstream out;
  for (const auto& p : points) {
    for (std::size_t e = 0; e < p.entries.size(); ++e) out << (e ? " " : "") << p.entries[e];
    out << '\n';
  }
  return out.str();
}

}  // namespace nestconf
