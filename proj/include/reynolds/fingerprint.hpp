#ifndef REYNOLDS_FINGERPRINT_HPP
#define REYNOLDS_FINGERPRINT_HPP

// Derived-equivalence fingerprints: dimension data that two derived equivalent
// algebras must share. A mismatch proves the algebras are not derived equivalent;
// a match proves nothing.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reynolds/algebra.hpp"
#include "reynolds/error.hpp"
#include "reynolds/kulshammer.hpp"
#include "reynolds/linalg.hpp"
#include "reynolds/trivext.hpp"

namespace reynolds {

inline constexpr int kFingerprintVersion = 0;

struct SymmetricExtras {
  std::vector<std::size_t> reynolds_dims;  // dim T_n(A)^perp
  std::vector<std::size_t> pn_perp_dims;   // dim P_n(Z)^perp / K
  std::vector<std::size_t> tnz_perp_dims;  // dim T_n(Z)^perp / K

  bool operator==(const SymmetricExtras&) const = default;
};

/// All sequences are indexed by n = 0, 1, ... and end one past their stabilization
/// index (at least two entries); the last entry repeats forever.
struct Fingerprint {
  unsigned p = 2;
  unsigned e = 1;
  std::size_t dim = 0;
  std::size_t dim_center = 0;
  std::size_t dim_hh0 = 0;
  std::vector<std::size_t> codim_tn;
  std::optional<std::size_t> stab;
  std::vector<std::size_t> ann_chain_dims;  // dim Ann_{A*}(T_n A)
  std::optional<SymmetricExtras> symmetric_extras;

  bool operator==(const Fingerprint&) const = default;
};

namespace detail {

inline std::vector<std::size_t> stable_dims(const std::function<Subspace(unsigned)>& term, std::size_t dim,
                                            const std::function<std::size_t(const Subspace&)>& measure) {
  const StableChain chain = stabilize(term, static_cast<unsigned>(dim) + 1);
  std::vector<std::size_t> out;
  for (const auto& s : chain.terms) out.push_back(measure(s));
  return out;
}

inline SymmetricExtras symmetric_extras(const Algebra& a, const SymmetrizingForm& form, std::size_t chain_length) {
  SymmetricExtras x;
  const std::size_t dim_k = commutator_space(a).dim();
  const auto chain = t_n_chain(a, static_cast<unsigned>(chain_length - 1));
  for (const auto& t : chain) x.reynolds_dims.push_back(orthogonal(t, form.gram()).dim());
  auto perp_mod_k = [&](const Subspace& s) { return orthogonal(s, form.gram()).dim() - dim_k; };
  x.pn_perp_dims = stable_dims([&](unsigned n) { return p_n_center(a, n); }, a.dim(), perp_mod_k);
  x.tnz_perp_dims = stable_dims([&](unsigned n) { return t_n_center(a, n); }, a.dim(), perp_mod_k);
  return x;
}

}  // namespace detail

namespace detail {

inline Fingerprint fingerprint(const Algebra& a, const SymmetrizingForm* form) {
  Fingerprint fp;
  const FiniteField& f = a.field();
  fp.p = f.characteristic();
  fp.e = f.degree();
  fp.dim = a.dim();
  fp.dim_center = center(a).dim();
  const Subspace k = commutator_space(a);
  fp.dim_hh0 = a.dim() - k.dim();
  const CodimSequence codim = codim_sequence(a);
  fp.codim_tn = codim.values;
  fp.stab = codim.stab;

  // Read off the trivial extension: T_n(T(A))^perp = 0 x Ann(T_n A) for n >= 1.
  fp.ann_chain_dims.push_back(annihilator(k).dim());
  if (fp.codim_tn.size() > 1) {
    const TrivialExtension t(a);
    const auto ext_chain = t_n_chain(t.ext(), static_cast<unsigned>(fp.codim_tn.size() - 1));
    for (std::size_t n = 1; n < fp.codim_tn.size(); ++n)
      fp.ann_chain_dims.push_back(orthogonal(ext_chain[n], t.form().gram()).dim());
  }
  if (form) fp.symmetric_extras = symmetric_extras(a, *form, fp.codim_tn.size());
  return fp;
}

}  // namespace detail

inline Fingerprint compute_fingerprint(const Algebra& a, const SymmetrizingForm& form) {
  return detail::fingerprint(a, &form);
}

/// With a functional: it must be symmetrizing (FormError otherwise).
inline Fingerprint compute_fingerprint(const Algebra& a, const std::optional<LinearFunctional>& pi = std::nullopt) {
  if (!pi) return detail::fingerprint(a, nullptr);
  const SymmetrizingForm form = form_from_functional(a, *pi);
  return detail::fingerprint(a, &form);
}

/// Violations of the internal consistency rules; empty when the record is coherent.
inline std::vector<std::string> invariant_violations(const Fingerprint& fp) {
  std::vector<std::string> bad;
  const auto& c = fp.codim_tn;
  if (c.empty()) return {"codim_tn is empty"};
  if (fp.dim_center > fp.dim || fp.dim_hh0 > fp.dim) bad.push_back("dim_center or dim_hh0 exceeds dim");
  if (c[0] != fp.dim_hh0) bad.push_back("codim_tn[0] != dim_hh0");
  for (std::size_t n = 1; n < c.size(); ++n)
    if (c[n] > c[n - 1]) bad.push_back("codim_tn increases at index " + std::to_string(n));
  if (fp.stab) {
    if (*fp.stab >= c.size()) bad.push_back("stab is past the end of codim_tn");
    else
      for (std::size_t n = *fp.stab; n < c.size(); ++n)
        if (c[n] != c[*fp.stab]) bad.push_back("codim_tn not constant after stab");
  }
  if (fp.ann_chain_dims.size() != c.size()) bad.push_back("ann_chain_dims and codim_tn differ in length");
  else
    for (std::size_t n = 0; n < c.size(); ++n)
      if (fp.ann_chain_dims[n] != c[n]) bad.push_back("ann_chain_dims[" + std::to_string(n) + "] != codim_tn");
  if (fp.symmetric_extras) {
    const auto& x = *fp.symmetric_extras;
    if (x.reynolds_dims.size() != c.size()) bad.push_back("reynolds_dims and codim_tn differ in length");
    else if (x.reynolds_dims != fp.ann_chain_dims) bad.push_back("reynolds_dims != ann_chain_dims");
    if (x.pn_perp_dims.empty() || x.tnz_perp_dims.empty()) bad.push_back("empty symmetric sequence");
  }
  return bad;
}

inline void check_invariants(const Fingerprint& fp) {
  const auto bad = invariant_violations(fp);
  if (!bad.empty()) throw FingerprintError("inconsistent fingerprint: " + bad.front());
}

// ---- comparison -------------------------------------------------------------

struct Verdict {
  enum class Kind { not_distinguished, distinguished, incomparable };
  Kind kind = Kind::not_distinguished;
  std::string invariant;  // first differing invariant, e.g. "codim_tn[1]"
  std::string detail;     // e.g. "1 vs 2", or the incomparability reason

  std::string to_string() const {
    switch (kind) {
      case Kind::not_distinguished:
        return "not distinguished";
      case Kind::distinguished:
        return "distinguished at " + invariant + " (" + detail + ")";
      case Kind::incomparable:
        return "incomparable (" + detail + ")";
    }
    return {};
  }
};

namespace detail {

inline std::optional<Verdict> compare_sequences(const std::string& name, const std::vector<std::size_t>& a,
                                                const std::vector<std::size_t>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t n = 0; n < len; ++n) {
    const std::size_t x = n < a.size() ? a[n] : a.back();
    const std::size_t y = n < b.size() ? b[n] : b.back();
    if (x != y)
      return Verdict{Verdict::Kind::distinguished, name + "[" + std::to_string(n) + "]",
                     std::to_string(x) + " vs " + std::to_string(y)};
  }
  return std::nullopt;
}

inline std::optional<Verdict> compare_values(const std::string& name, std::size_t a, std::size_t b) {
  if (a == b) return std::nullopt;
  return Verdict{Verdict::Kind::distinguished, name, std::to_string(a) + " vs " + std::to_string(b)};
}

}  // namespace detail

/// Raw dim is not compared: it is not invariant under derived equivalence.
inline Verdict compare(const Fingerprint& a, const Fingerprint& b) {
  if (a.p != b.p) return {Verdict::Kind::incomparable, "field", "different characteristic"};
  if (a.e != b.e)
    return {Verdict::Kind::distinguished, "field", "degree " + std::to_string(a.e) + " vs " + std::to_string(b.e)};
  if (auto v = detail::compare_values("dim_center", a.dim_center, b.dim_center)) return *v;
  if (auto v = detail::compare_values("dim_hh0", a.dim_hh0, b.dim_hh0)) return *v;
  if (auto v = detail::compare_sequences("codim_tn", a.codim_tn, b.codim_tn)) return *v;
  if (a.symmetric_extras && b.symmetric_extras) {
    const auto& x = *a.symmetric_extras;
    const auto& y = *b.symmetric_extras;
    if (auto v = detail::compare_sequences("reynolds_dims", x.reynolds_dims, y.reynolds_dims)) return *v;
    if (auto v = detail::compare_sequences("pn_perp_dims", x.pn_perp_dims, y.pn_perp_dims)) return *v;
    if (auto v = detail::compare_sequences("tnz_perp_dims", x.tnz_perp_dims, y.tnz_perp_dims)) return *v;
  }
  return {};
}

// ---- serialization ----------------------------------------------------------

inline nlohmann::json fingerprint_to_json(const Fingerprint& fp) {
  nlohmann::json j;
  j["version"] = kFingerprintVersion;
  j["field"] = {{"p", fp.p}, {"e", fp.e}};
  j["dim"] = fp.dim;
  j["dim_center"] = fp.dim_center;
  j["dim_hh0"] = fp.dim_hh0;
  j["codim_tn"] = fp.codim_tn;
  j["stab"] = fp.stab ? nlohmann::json(*fp.stab) : nlohmann::json(nullptr);
  j["ann_chain_dims"] = fp.ann_chain_dims;
  if (fp.symmetric_extras) {
    const auto& x = *fp.symmetric_extras;
    j["symmetric_extras"] = {
        {"reynolds_dims", x.reynolds_dims}, {"pn_perp_dims", x.pn_perp_dims}, {"tnz_perp_dims", x.tnz_perp_dims}};
  } else {
    j["symmetric_extras"] = nullptr;
  }
  return j;
}

/// Canonical text: sorted keys, no whitespace, trailing newline.
inline std::string serialize(const Fingerprint& fp) { return fingerprint_to_json(fp).dump() + "\n"; }

namespace detail {

inline std::size_t fp_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FingerprintError(std::string("fingerprint lacks \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw FingerprintError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

inline std::vector<std::size_t> fp_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FingerprintError(std::string("fingerprint lacks \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array() || v.empty()) throw FingerprintError(std::string("\"") + key + "\" must be a non-empty array");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) throw FingerprintError(std::string("\"") + key + "\" entries must be non-negative");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace detail

inline Fingerprint fingerprint_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FingerprintError("fingerprint must be a JSON object");
  if (!j.contains("version")) throw FingerprintError("fingerprint lacks \"version\"");
  if (j.at("version") != nlohmann::json(kFingerprintVersion))
    throw FingerprintError("unsupported fingerprint version " + j.at("version").dump() + " (this reader accepts " +
                           std::to_string(kFingerprintVersion) + ")");
  static const std::vector<std::string> known{"version", "field",          "dim",  "dim_center",    "dim_hh0",
                                              "codim_tn", "ann_chain_dims", "stab", "symmetric_extras"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw FingerprintError("unknown fingerprint key \"" + key + "\"");

  Fingerprint fp;
  if (!j.contains("field") || !j.at("field").is_object()) throw FingerprintError("\"field\" must be an object");
  fp.p = static_cast<unsigned>(detail::fp_count(j.at("field"), "p"));
  fp.e = static_cast<unsigned>(detail::fp_count(j.at("field"), "e"));
  fp.dim = detail::fp_count(j, "dim");
  fp.dim_center = detail::fp_count(j, "dim_center");
  fp.dim_hh0 = detail::fp_count(j, "dim_hh0");
  fp.codim_tn = detail::fp_list(j, "codim_tn");
  fp.ann_chain_dims = detail::fp_list(j, "ann_chain_dims");
  if (!j.contains("stab")) throw FingerprintError("fingerprint lacks \"stab\"");
  if (!j.at("stab").is_null()) fp.stab = detail::fp_count(j, "stab");
  if (!j.contains("symmetric_extras")) throw FingerprintError("fingerprint lacks \"symmetric_extras\"");
  if (const auto& x = j.at("symmetric_extras"); !x.is_null()) {
    if (!x.is_object()) throw FingerprintError("\"symmetric_extras\" must be an object or null");
    fp.symmetric_extras =
        SymmetricExtras{detail::fp_list(x, "reynolds_dims"), detail::fp_list(x, "pn_perp_dims"),
                        detail::fp_list(x, "tnz_perp_dims")};
  }
  check_invariants(fp);
  return fp;
}

inline Fingerprint deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FingerprintError(std::string("malformed fingerprint JSON: ") + e.what());
  }
  return fingerprint_from_json(j);
}

}  // namespace reynolds

#endif  // REYNOLDS_FINGERPRINT_HPP
