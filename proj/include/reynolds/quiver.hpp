#ifndef REYNOLDS_QUIVER_HPP
#define REYNOLDS_QUIVER_HPP

// Quiver-with-relations presentations and their truncated path algebras
// kQ / (I + J^cap), where J is the arrow ideal.
//
// File grammar (line oriented, '#' starts a comment):
//   vertices: 1 2 3
//   arrows: a: 1 -> 2, b: 2 -> 3
//   relations: a*b; 2*a*b - c*d
//   cap: 3
//   field: p=2
//
// Paths compose left to right: "a*b" traverses a first, then b, so target(a)
// must equal source(b). A coefficient is an integer or a parenthesized field
// element such as "(t+1)". Paths of length >= cap are zero.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reynolds/algebra.hpp"
#include "reynolds/error.hpp"
#include "reynolds/gf.hpp"
#include "reynolds/kulshammer.hpp"
#include "reynolds/linalg.hpp"

namespace reynolds {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct RelationTerm {
  Element coefficient = 1;
  std::vector<std::size_t> path;  // arrow indices, left to right
};

struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t line = 0;
};

struct QuiverPresentation {
  FiniteField field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  unsigned cap = 1;
};

namespace detail {

struct SourceLine {
  std::string text;  // content after "key:"
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of text[0]
};

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

/// Cursor over one line with 1-based column reporting.
class Cursor {
 public:
  explicit Cursor(const SourceLine& src) : src_(src) {}

  void skip_space() {
    while (pos_ < src_.text.size() && std::isspace(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= src_.text.size();
  }
  char peek() {
    skip_space();
    return pos_ < src_.text.size() ? src_.text[pos_] : '\0';
  }
  std::size_t column() const { return src_.column + pos_; }
  std::size_t line() const { return src_.line; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(src_.line, column(), message); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& message) const {
    throw ParseError(src_.line, col, message);
  }

  bool accept(std::string_view token) {
    skip_space();
    if (src_.text.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  /// Vertex names: any run of characters other than whitespace and ":,;->*".
  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.text.size()) {
      const char c = src_.text[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || std::string_view(":,;*").find(c) != std::string_view::npos)
        break;
      if (c == '-' && pos_ + 1 < src_.text.size() && src_.text[pos_ + 1] == '>') break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a name");
    return src_.text.substr(start, pos_ - start);
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= src_.text.size() || !is_ident_start(src_.text[pos_])) fail("expected an arrow name");
    const std::size_t start = pos_;
    while (pos_ < src_.text.size() && is_ident_char(src_.text[pos_])) ++pos_;
    return src_.text.substr(start, pos_ - start);
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.text.size() && std::isdigit(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return src_.text.substr(start, pos_ - start);
  }

  /// Text up to the matching ')' (the '(' is already consumed).
  std::string parenthesized() {
    const std::size_t start = pos_;
    while (pos_ < src_.text.size() && src_.text[pos_] != ')') ++pos_;
    if (pos_ >= src_.text.size()) fail("unterminated '('");
    std::string inner = src_.text.substr(start, pos_ - start);
    ++pos_;
    return inner;
  }

 private:
  const SourceLine& src_;
  std::size_t pos_ = 0;
};

inline std::vector<SourceLine> split_list(const SourceLine& src, char sep) {
  std::vector<SourceLine> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= src.text.size(); ++i) {
    if (i == src.text.size() || src.text[i] == sep) {
      out.push_back({src.text.substr(start, i - start), src.line, src.column + start});
      start = i + 1;
    }
  }
  return out;
}

inline bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace detail

/// Parses a quiver file. Every error is a ParseError with line and column.
inline QuiverPresentation parse_quiver(const std::string& text) {
  using detail::SourceLine;
  std::map<std::string, std::vector<SourceLine>> sections;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (detail::blank(raw)) continue;
    std::size_t first = raw.find_first_not_of(" \t");
    const std::size_t colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, first + 1, "expected '<section>:'");
    const std::string key = detail::trim(std::string_view(raw).substr(first, colon - first));
    static const std::vector<std::string> keys{"vertices", "arrows", "relations", "cap", "field"};
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(line_no, first + 1, "unknown section '" + key + "'");
    if ((key == "cap" || key == "field") && sections.count(key))
      throw ParseError(line_no, first + 1, "duplicate '" + key + ":' line");
    sections[key].push_back({raw.substr(colon + 1), line_no, colon + 2});
  }

  QuiverPresentation q;
  auto require = [&](const std::string& key) -> const std::vector<SourceLine>& {
    auto it = sections.find(key);
    if (it == sections.end()) throw ParseError(line_no + 1, 1, "missing '" + key + ":' line");
    return it->second;
  };

  {
    const SourceLine& src = require("field").front();
    try {
      q.field = FiniteField::parse(src.text);
    } catch (const FieldError& e) {
      throw ParseError(src.line, src.column, e.what());
    }
  }

  std::map<std::string, std::size_t> vertex_index;
  for (const auto& src : require("vertices")) {
    detail::Cursor c(src);
    while (!c.done()) {
      const std::size_t col = (c.skip_space(), c.column());
      std::string v = c.name();
      if (vertex_index.count(v)) c.fail_at(col, "duplicate vertex " + v);
      vertex_index[v] = q.vertices.size();
      q.vertices.push_back(std::move(v));
      c.accept(",");
    }
  }
  if (q.vertices.empty()) throw ParseError(require("vertices").front().line, 1, "no vertices declared");

  std::map<std::string, std::size_t> arrow_index;
  if (sections.count("arrows")) {
    for (const auto& line : sections["arrows"])
      for (const auto& item : detail::split_list(line, ',')) {
        if (detail::blank(item.text)) continue;
        detail::Cursor c(item);
        const std::size_t name_col = (c.skip_space(), c.column());
        std::string name = c.identifier();
        if (arrow_index.count(name)) c.fail_at(name_col, "duplicate arrow " + name);
        c.expect(":");
        auto vertex = [&]() {
          const std::size_t col = (c.skip_space(), c.column());
          const std::string v = c.name();
          auto it = vertex_index.find(v);
          if (it == vertex_index.end()) c.fail_at(col, "undeclared vertex " + v);
          return it->second;
        };
        const std::size_t s = vertex();
        c.expect("->");
        const std::size_t t = vertex();
        if (!c.done()) c.fail("unexpected text after arrow declaration");
        arrow_index[name] = q.arrows.size();
        q.arrows.push_back({std::move(name), s, t});
      }
  }

  {
    const SourceLine& src = require("cap").front();
    detail::Cursor c(src);
    const std::size_t col = (c.skip_space(), c.column());
    const long long cap = std::stoll(c.digits());
    if (!c.done()) c.fail("unexpected text after cap");
    if (cap < 1 || cap > 64) c.fail_at(col, "cap must be an integer between 1 and 64");
    q.cap = static_cast<unsigned>(cap);
  }

  if (sections.count("relations")) {
    for (const auto& line : sections["relations"])
      for (const auto& item : detail::split_list(line, ';')) {
        if (detail::blank(item.text)) continue;
        detail::Cursor c(item);
        Relation rel;
        rel.line = item.line;
        std::optional<std::pair<std::size_t, std::size_t>> endpoints;
        bool first = true;
        while (!c.done()) {
          const std::size_t term_col = c.column();
          bool negative = false;
          if (c.accept("+")) {
          } else if (c.accept("-")) {
            negative = true;
          } else if (!first) {
            c.fail("expected '+' or '-' between terms");
          }
          first = false;
          Element coeff = 1;
          const char next = c.peek();
          if (std::isdigit(static_cast<unsigned char>(next))) {
            coeff = q.field.from_int(std::stoll(c.digits()));
            c.expect("*");
          } else if (next == '(') {
            c.expect("(");
            const std::size_t col = c.column();
            const std::string inner = c.parenthesized();
            try {
              coeff = q.field.parse_element(inner);
            } catch (const FieldError& e) {
              c.fail_at(col, e.what());
            }
            c.expect("*");
          }
          if (negative) coeff = q.field.neg(coeff);
          RelationTerm term{coeff, {}};
          std::size_t prev_col = 0;
          do {
            const std::size_t col = (c.skip_space(), c.column());
            const std::string name = c.identifier();
            auto it = arrow_index.find(name);
            if (it == arrow_index.end()) c.fail_at(col, "undeclared arrow " + name);
            if (!term.path.empty()) {
              const Arrow& before = q.arrows[term.path.back()];
              const Arrow& after = q.arrows[it->second];
              if (before.target != after.source)
                c.fail_at(prev_col, "non-composable path: " + before.name + " ends at " + q.vertices[before.target] +
                                        " but " + after.name + " starts at " + q.vertices[after.source] +
                                        " (a*b means a first, then b)");
            }
            term.path.push_back(it->second);
            prev_col = col;
          } while (c.accept("*"));
          const std::pair<std::size_t, std::size_t> ends{q.arrows[term.path.front()].source,
                                                          q.arrows[term.path.back()].target};
          if (endpoints && *endpoints != ends)
            c.fail_at(term_col, "relation mixes distinct (source, target) pairs: (" + q.vertices[endpoints->first] +
                                    ", " + q.vertices[endpoints->second] + ") and (" + q.vertices[ends.first] + ", " +
                                    q.vertices[ends.second] + ")");
          endpoints = ends;
          rel.terms.push_back(std::move(term));
        }
        q.relations.push_back(std::move(rel));
      }
  }
  return q;
}

namespace detail {

struct PathBasis {
  // A path is a list of arrows; trivial paths have an empty list and a vertex.
  struct PathEntry {
    std::vector<std::size_t> arrows;
    std::size_t source = 0;
    std::size_t target = 0;
  };
  std::vector<PathEntry> paths;  // ordered by length, then by discovery
  std::map<std::vector<std::size_t>, std::size_t> index;  // nontrivial paths only

  std::size_t size() const { return paths.size(); }
};

inline PathBasis enumerate_paths(const QuiverPresentation& q, std::size_t limit = 4096) {
  PathBasis b;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) b.paths.push_back({{}, v, v});
  std::vector<std::size_t> frontier;
  for (std::size_t a = 0; a < q.arrows.size() && q.cap > 1; ++a) {
    b.index[{a}] = b.paths.size();
    frontier.push_back(b.paths.size());
    b.paths.push_back({{a}, q.arrows[a].source, q.arrows[a].target});
  }
  for (unsigned len = 2; len < q.cap; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t p : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != b.paths[p].target) continue;
        auto arrows = b.paths[p].arrows;
        arrows.push_back(a);
        b.index[arrows] = b.paths.size();
        next.push_back(b.paths.size());
        b.paths.push_back({std::move(arrows), b.paths[p].source, q.arrows[a].target});
        if (b.paths.size() > limit)
          throw AlgebraError("more than " + std::to_string(limit) + " paths below the cap; lower the cap");
      }
    frontier = std::move(next);
  }
  return b;
}

}  // namespace detail

/// The algebra kQ / (I + J^cap), with basis the path monomials that are not pivots
/// of the closed relation ideal (longest paths are eliminated first).
inline Algebra build_algebra(const QuiverPresentation& q) {
  const FiniteField& f = q.field;
  const auto paths = detail::enumerate_paths(q);
  const std::size_t n = paths.size();
  // Column c of the ideal stores path n-1-c, so row reduction pivots on the longest paths.
  auto col = [n](std::size_t path) { return n - 1 - path; };

  // Index of the concatenation p*r, or nullopt if it is zero (not composable or too long).
  auto concat = [&](std::size_t p, std::size_t r) -> std::optional<std::size_t> {
    const auto& a = paths.paths[p];
    const auto& b = paths.paths[r];
    if (a.target != b.source) return std::nullopt;
    if (a.arrows.empty()) return r;
    if (b.arrows.empty()) return p;
    if (a.arrows.size() + b.arrows.size() >= q.cap) return std::nullopt;
    auto joined = a.arrows;
    joined.insert(joined.end(), b.arrows.begin(), b.arrows.end());
    return paths.index.at(joined);
  };

  std::vector<Vector> gens;
  for (const auto& rel : q.relations) {
    Vector v(n, 0);
    for (const auto& term : rel.terms) {
      if (term.path.size() >= q.cap) continue;  // already zero under truncation
      const std::size_t p = paths.index.at(term.path);
      v[col(p)] = f.add(v[col(p)], term.coefficient);
    }
    if (!is_zero(v)) gens.push_back(std::move(v));
  }
  Subspace ideal = Subspace::span(f, n, gens);

  std::vector<std::size_t> arrow_paths;
  for (std::size_t a = 0; a < q.arrows.size() && q.cap > 1; ++a) arrow_paths.push_back(paths.index.at({a}));
  while (true) {
    std::vector<Vector> more = ideal.basis_vectors();
    for (const auto& v : ideal.basis_vectors())
      for (std::size_t ap : arrow_paths) {
        Vector left(n, 0), right(n, 0);
        for (std::size_t c = 0; c < n; ++c) {
          if (v[c] == 0) continue;
          const std::size_t p = n - 1 - c;
          if (auto r = concat(p, ap)) right[col(*r)] = f.add(right[col(*r)], v[c]);
          if (auto l = concat(ap, p)) left[col(*l)] = f.add(left[col(*l)], v[c]);
        }
        more.push_back(std::move(left));
        more.push_back(std::move(right));
      }
    Subspace next = Subspace::span(f, n, more);
    if (next == ideal) break;
    ideal = std::move(next);
  }

  const QuotientSpace quotient(ideal);
  // Basis monomials in ascending path order.
  std::vector<std::size_t> monomials;
  for (std::size_t c : quotient.representatives()) monomials.push_back(n - 1 - c);
  std::sort(monomials.begin(), monomials.end());
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < monomials.size(); ++i) position[monomials[i]] = i;
  const std::size_t d = monomials.size();

  auto coordinates = [&](std::span<const Element> path_vector) {
    const Vector reduced = ideal.reduce(path_vector);
    Vector out(d, 0);
    for (std::size_t c = 0; c < n; ++c)
      if (reduced[c] != 0) out[position[n - 1 - c]] = reduced[c];
    return out;
  };

  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto r = concat(monomials[i], monomials[j]);
      if (!r) continue;
      Vector pv(n, 0);
      pv[col(*r)] = 1;
      const Vector prod = coordinates(pv);
      for (std::size_t k = 0; k < d; ++k)
        if (prod[k] != 0) sc.push_back({i, j, k, prod[k]});
    }
  Vector unit(d, 0);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) unit[position.at(v)] = 1;
  std::vector<std::string> labels;
  for (std::size_t m : monomials) {
    const auto& p = paths.paths[m];
    if (p.arrows.empty()) {
      labels.push_back("e_" + q.vertices[p.source]);
      continue;
    }
    std::string s;
    for (std::size_t a : p.arrows) s += (s.empty() ? "" : "*") + q.arrows[a].name;
    labels.push_back(s);
  }
  Algebra algebra(f, d, sc, unit, labels);
  require_valid(algebra);
  return algebra;
}

inline Algebra build_algebra(const std::string& quiver_text) { return build_algebra(parse_quiver(quiver_text)); }

}  // namespace reynolds

#endif  // REYNOLDS_QUIVER_HPP
