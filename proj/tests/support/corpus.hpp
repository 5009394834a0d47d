#pragma once
// The reference corpus: small algebras over GF(2), GF(3) and GF(4), each with a
// symmetrizing functional when one is known.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reynolds/reynolds.hpp"

namespace corpus {

using namespace reynolds;

struct Entry {
  std::string name;
  Algebra algebra;
  std::optional<LinearFunctional> pi;

  bool symmetric() const { return pi.has_value(); }
  SymmetrizingForm form() const { return form_from_functional(algebra, *pi); }
  std::optional<SymmetrizingForm> optional_form() const {
    return pi ? std::optional<SymmetrizingForm>(form()) : std::nullopt;
  }
};

inline FiniteField gf(unsigned p) { return FiniteField(p); }
inline FiniteField gf4() { return FiniteField(2, 2, {1, 1, 1}); }

/// k[x]/(x^n), basis 1, x, ..., x^(n-1).
inline Algebra truncated_polynomial(const FiniteField& f, std::size_t n) {
  std::vector<StructureConstant> sc;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; i + j < n; ++j) sc.push_back({i, j, i + j, 1});
  }
  return Algebra(f, n, sc, unit_vector(n, 0), labels);
}

/// Group algebra of a group given by its multiplication table on {0, ..., n-1}, 0 the identity.
inline Algebra group_algebra(const FiniteField& f, const std::vector<std::vector<std::size_t>>& table,
                             std::vector<std::string> labels) {
  const std::size_t n = table.size();
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sc.push_back({i, j, table[i][j], 1});
  return Algebra(f, n, sc, unit_vector(n, 0), std::move(labels));
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

/// Span of the matrix units E_rc with r <= c in M_m(k).
inline Algebra upper_triangular(const FiniteField& f, std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r; c < m; ++c) units.emplace_back(r, c);
  std::vector<StructureConstant> sc;
  std::vector<std::string> labels;
  Vector unit(units.size(), 0);
  for (std::size_t i = 0; i < units.size(); ++i) {
    labels.push_back("e" + std::to_string(units[i].first + 1) + std::to_string(units[i].second + 1));
    if (units[i].first == units[i].second) unit[i] = 1;
    for (std::size_t j = 0; j < units.size(); ++j)
      if (units[i].second == units[j].first)
        for (std::size_t k = 0; k < units.size(); ++k)
          if (units[k] == std::pair{units[i].first, units[j].second}) sc.push_back({i, j, k, 1});
  }
  return Algebra(f, units.size(), sc, unit, labels);
}

inline Algebra full_matrix(const FiniteField& f, std::size_t m) { return matrix_algebra(field_algebra(f), m); }

inline LinearFunctional coefficient_functional(std::size_t dim, const std::vector<std::size_t>& on) {
  Vector v(dim, 0);
  for (auto i : on) v[i] = 1;
  return {v};
}

inline LinearFunctional trace_functional(std::size_t m) {
  std::vector<std::size_t> diag;
  for (std::size_t r = 0; r < m; ++r) diag.push_back(r * m + r);
  return coefficient_functional(m * m, diag);
}

/// pi = sum of the coefficients of the named basis vectors.
inline LinearFunctional functional_on_labels(const Algebra& a, const std::vector<std::string>& names) {
  Vector v(a.dim(), 0);
  for (const auto& n : names)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.label(i) == n) v[i] = 1;
  return {v};
}

inline const char* kTwoCycle =
    "vertices: 1 2\n"
    "arrows: a: 1 -> 2, b: 2 -> 1\n"
    "relations: a*b; b*a\n"
    "cap: 2\n"
    "field: p=2\n";

inline const char* kA3 =
    "vertices: 1 2 3\n"
    "arrows: a: 1 -> 2, b: 2 -> 3\n"
    "relations: a*b\n"
    "cap: 3\n"
    "field: p=3\n";

inline const char* kExterior =
    "vertices: o\n"
    "arrows: x: o -> o, y: o -> o\n"
    "relations: x*x; y*y; x*y + y*x\n"
    "cap: 3\n"
    "field: p=3\n";

// Brauer tree algebra with two simples: symmetric via the coefficients of a*b and b*a.
inline std::string brauer_two_cycle(unsigned p) {
  return "vertices: 1 2\n"
         "arrows: a: 1 -> 2, b: 2 -> 1\n"
         "relations: a*b*a; b*a*b\n"
         "cap: 4\n"
         "field: p=" + std::to_string(p) + "\n";
}

inline std::vector<Entry> build_all() {
  std::vector<Entry> out;
  for (unsigned p : {2u, 3u}) {
    const FiniteField f = gf(p);
    const std::string k = "GF(" + std::to_string(p) + ")";
    out.push_back({k + "[x]/(x^2)", truncated_polynomial(f, 2), coefficient_functional(2, {1})});
    out.push_back({k + " x " + k, direct_product(field_algebra(f), field_algebra(f)), coefficient_functional(2, {0, 1})});
    out.push_back({"M2(" + k + ")", full_matrix(f, 2), trace_functional(2)});
    out.push_back({"UT2(" + k + ")", upper_triangular(f, 2), std::nullopt});
  }
  out.push_back({"UT3(GF(2))", upper_triangular(gf(2), 3), std::nullopt});
  out.push_back({"GF(2)C2", group_algebra(gf(2), cyclic_table(2), {"1", "g"}), coefficient_functional(2, {0})});
  out.push_back({"GF(3)C3", group_algebra(gf(3), cyclic_table(3), {"1", "g", "g^2"}), coefficient_functional(3, {0})});
  out.push_back({"GF(2)[x]/(x^4)", truncated_polynomial(gf(2), 4), coefficient_functional(4, {3})});
  {
    std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) klein[i][j] = i ^ j;
    out.push_back({"GF(2)[C2xC2]", group_algebra(gf(2), klein, {"1", "g", "h", "gh"}), coefficient_functional(4, {0})});
  }
  out.push_back({"quiver two-cycle GF(2)", build_algebra(parse_quiver(kTwoCycle)), std::nullopt});
  out.push_back({"quiver A3/(ab) GF(3)", build_algebra(parse_quiver(kA3)), std::nullopt});
  out.push_back({"quiver exterior GF(3)", build_algebra(parse_quiver(kExterior)), std::nullopt});
  for (unsigned p : {2u, 3u}) {
    Algebra b = build_algebra(parse_quiver(brauer_two_cycle(p)));
    LinearFunctional pi = functional_on_labels(b, {"a*b", "b*a"});
    out.push_back({"quiver Brauer two-cycle GF(" + std::to_string(p) + ")", std::move(b), std::move(pi)});
  }
  const FiniteField f4 = gf4();
  out.push_back({"UT2(GF(4))", upper_triangular(f4, 2), std::nullopt});
  out.push_back({"GF(4)C2", group_algebra(f4, cyclic_table(2), {"1", "g"}), coefficient_functional(2, {0})});
  out.push_back({"GF(4)[x]/(x^2)", truncated_polynomial(f4, 2), coefficient_functional(2, {1})});
  return out;
}

/// Built once; entries are immutable.
inline const std::vector<Entry>& all() {
  static const std::vector<Entry> entries = build_all();
  return entries;
}

inline const Entry& get(const std::string& name) {
  for (const auto& e : all())
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry " + name);
}

}  // namespace corpus
