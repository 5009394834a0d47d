#ifndef REYNOLDS_CLI_HPP
#define REYNOLDS_CLI_HPP

// The `reynolds` command line. Exit codes: 0 success / valid / not distinguished,
// 1 check failed / invalid / distinguished, 2 error or incomparable.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reynolds/algebra.hpp"
#include "reynolds/error.hpp"
#include "reynolds/fingerprint.hpp"
#include "reynolds/io.hpp"
#include "reynolds/kulshammer.hpp"
#include "reynolds/quiver.hpp"
#include "reynolds/trivext.hpp"

namespace reynolds::cli {

/// A failure tied to an input file; what() starts with the path.
class InputError : public Error {
 public:
  InputError(const std::string& path, const std::string& message) : Error(path + ": " + message) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError(path, "cannot write file");
}

inline bool looks_like_json(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  return it != text.end() && *it == '{';
}

/// Algebra JSON, or a quiver file when the content is not JSON.
inline AlgebraFile load_algebra_text(const std::string& path, const std::string& text) {
  try {
    if (looks_like_json(text)) return algebra_from_json_text(text);
    return AlgebraFile{build_algebra(parse_quiver(text)), std::nullopt};
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

inline AlgebraFile load_algebra(const std::string& path) { return load_algebra_text(path, read_file(path)); }

inline std::optional<SymmetrizingForm> load_form(const std::string& path, const AlgebraFile& file) {
  if (!file.pi) return std::nullopt;
  try {
    return form_from_functional(file.algebra, *file.pi);
  } catch (const Error& e) {
    throw InputError(path, std::string("\"pi\": ") + e.what());
  }
}

/// A fingerprint file (JSON with "version"), otherwise an algebra or quiver file.
inline Fingerprint load_fingerprint(const std::string& path, bool use_pi = true) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(path, e.what());
    }
    if (j.is_object() && j.contains("version")) {
      try {
        return fingerprint_from_json(j);
      } catch (const Error& e) {
        throw InputError(path, e.what());
      }
    }
  }
  const AlgebraFile file = load_algebra_text(path, text);
  const auto form = use_pi ? load_form(path, file) : std::nullopt;
  return form ? compute_fingerprint(file.algebra, *form) : compute_fingerprint(file.algebra);
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

inline std::string field_name(const FiniteField& f) {
  return f.degree() == 1 ? "GF(" + std::to_string(f.order()) + ")"
                         : "GF(" + std::to_string(f.characteristic()) + "^" + std::to_string(f.degree()) + ")";
}

/// A bound for verify covering every chain it inspects past stabilization.
inline unsigned auto_nmax(const Algebra& a) {
  std::size_t top = codim_sequence(a).stab.value_or(a.dim());
  for (auto term : {std::function<Subspace(unsigned)>([&](unsigned n) { return p_n_center(a, n); }),
                    std::function<Subspace(unsigned)>([&](unsigned n) { return t_n_center(a, n); })})
    top = std::max(top, stabilize(term, static_cast<unsigned>(a.dim()) + 1).stab.value_or(a.dim()));
  return static_cast<unsigned>(std::max<std::size_t>(1, top + 1));
}

struct Options {
  std::string format = "text";
  std::vector<std::string> inputs;
  std::string output;
  std::optional<unsigned> nmax;
  bool auto_stab = false;
  bool ignore_pi = false;
};

inline int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& path = o.inputs.front();
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const AlgebraFile file = load_algebra_text(path, text);
    const bool symmetric = load_form(path, file).has_value();
    if (o.format == "json") {
      out << nlohmann::json{{"valid", true},
                            {"dim", file.algebra.dim()},
                            {"field", file.algebra.field().spec()},
                            {"symmetric", symmetric}}
                 .dump()
          << "\n";
    } else {
      out << "valid: dim " << file.algebra.dim() << " over " << field_name(file.algebra.field())
          << (symmetric ? ", pi is symmetrizing" : "") << "\n";
    }
    return 0;
  } catch (const Error& e) {
    if (o.format == "json") out << nlohmann::json{{"valid", false}, {"error", e.what()}}.dump() << "\n";
    else out << "invalid: " << e.what() << "\n";
    return 1;
  }
}

inline int cmd_build(const Options& o, std::ostream& out, std::ostream&) {
  const std::string& path = o.inputs.front();
  const std::string text = read_file(path);
  Algebra a = [&] {
    try {
      return build_algebra(parse_quiver(text));
    } catch (const Error& e) {
      throw InputError(path, e.what());
    }
  }();
  write_output(o.output, algebra_json_text(algebra_to_json(a)), out);
  return 0;
}

inline int cmd_invariants(const Options& o, std::ostream& out, std::ostream&) {
  const AlgebraFile file = load_algebra(o.inputs.front());
  const Algebra& a = file.algebra;
  const CodimSequence codim = o.nmax && !o.auto_stab ? codim_sequence(a, *o.nmax) : codim_sequence(a);
  const std::size_t dim_k = commutator_space(a).dim();
  const std::size_t dim_z = center(a).dim();
  std::vector<std::size_t> dims;
  for (auto c : codim.values) dims.push_back(a.dim() - c);
  if (o.format == "json") {
    nlohmann::json j{{"dim", a.dim()},          {"dim_k", dim_k},          {"dim_z", dim_z},
                     {"dim_tn", dims},          {"codim_tn", codim.values}, {"stab", nullptr}};
    if (codim.stab) j["stab"] = *codim.stab;
    out << j.dump() << "\n";
    return 0;
  }
  out << "dim K = " << dim_k << ", dim Z = " << dim_z << ", codim T_n: " << join(codim.values)
      << (codim.stab ? " (stable)" : " (not yet stable)") << "\n";
  out << "dim A = " << a.dim() << ", dim T_n: " << join(dims) << "\n";
  if (codim.stab) out << "T_n stabilizes at n = " << *codim.stab << "\n";
  return 0;
}

inline int cmd_fingerprint(const Options& o, std::ostream& out, std::ostream&) {
  const Fingerprint fp = load_fingerprint(o.inputs.front(), !o.ignore_pi);
  write_output(o.output, serialize(fp), out);
  return 0;
}

inline int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  auto job = [&](const std::string& path) { return load_fingerprint(path, !o.ignore_pi); };
  auto first = std::async(std::launch::async, job, o.inputs[0]);
  auto second = std::async(std::launch::async, job, o.inputs[1]);
  Fingerprint a, b;
  try {
    a = first.get();
    b = second.get();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const Verdict v = compare(a, b);
  if (o.format == "json") {
    static const char* names[] = {"not_distinguished", "distinguished", "incomparable"};
    out << nlohmann::json{{"verdict", names[static_cast<int>(v.kind)]}, {"invariant", v.invariant}, {"detail", v.detail}}
               .dump()
        << "\n";
  } else {
    out << v.to_string() << "\n";
  }
  switch (v.kind) {
    case Verdict::Kind::not_distinguished:
      return 0;
    case Verdict::Kind::distinguished:
      return 1;
    case Verdict::Kind::incomparable:
      return 2;
  }
  return 2;
}

inline int cmd_trivext(const Options& o, std::ostream& out, std::ostream&) {
  const AlgebraFile file = load_algebra(o.inputs.front());
  const TrivialExtension t(file.algebra);
  write_output(o.output, algebra_json_text(algebra_to_json(t.ext(), t.pi())), out);
  return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const std::string& path = o.inputs.front();
  const AlgebraFile file = load_algebra(path);
  const auto form = o.ignore_pi ? std::nullopt : load_form(path, file);
  const unsigned nmax = o.nmax ? *o.nmax : auto_nmax(file.algebra);
  const Report r = verify_all(file.algebra, form, nmax);
  const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.passed; });
  if (o.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"identity", c.identity},
                        {"n", c.n ? nlohmann::json(*c.n) : nlohmann::json(nullptr)},
                        {"passed", c.passed},
                        {"lhs_dim", c.lhs_dim},
                        {"rhs_dim", c.rhs_dim}});
    out << nlohmann::json{{"passed", r.passed()}, {"nmax", nmax}, {"checks", checks}}.dump() << "\n";
  } else {
    out << r.to_string();
    out << (r.passed() ? "all " + std::to_string(r.checks.size()) + " identities PASS"
                       : std::to_string(failed) + " of " + std::to_string(r.checks.size()) + " identities FAIL")
        << " (n <= " << nmax << (form ? ", symmetric" : "") << ")\n";
  }
  return r.passed() ? 0 : 1;
}

/// argv-style entry point (argv[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reynolds/Kulshammer invariants of finite-dimensional algebras over finite fields", "reynolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.inputs, what)->required()->expected(1);
  };
  auto* validate = app.add_subcommand("validate", "Load a file and run the structural checks");
  input(validate, "Algebra JSON or quiver file");
  auto* build = app.add_subcommand("build", "Build the algebra of a quiver file");
  input(build, "Quiver file");
  build->add_option("-o,--output", o.output, "Write the algebra JSON here");
  auto* inv = app.add_subcommand("invariants", "Print K, Z and the T_n chain");
  input(inv, "Algebra JSON or quiver file");
  auto* nmax_opt = inv->add_option("--nmax", o.nmax, "Compute n = 0..N");
  inv->add_flag("--auto", o.auto_stab, "Stop at stabilization (default)")->excludes(nmax_opt);
  auto* fp = app.add_subcommand("fingerprint", "Print the canonical fingerprint JSON");
  input(fp, "Algebra JSON or quiver file");
  fp->add_option("-o,--output", o.output, "Write the fingerprint here");
  fp->add_flag("--ignore-pi", o.ignore_pi, "Omit the symmetric extras even if the file has pi");
  auto* cmp = app.add_subcommand("compare", "Compare two fingerprints (or algebra files)");
  cmp->add_option("files", o.inputs, "Two fingerprint, algebra or quiver files")->required()->expected(2);
  cmp->add_flag("--ignore-pi", o.ignore_pi, "Do not use pi when fingerprinting algebra files");
  auto* tx = app.add_subcommand("trivext", "Export the trivial extension with its symmetrizing functional");
  input(tx, "Algebra JSON or quiver file");
  tx->add_option("-o,--output", o.output, "Write the algebra JSON here");
  auto* ver = app.add_subcommand("verify", "Check every identity on the given algebra");
  input(ver, "Algebra JSON or quiver file");
  ver->add_option("--nmax", o.nmax, "Check n = 1..N (default: past every stabilization)");
  ver->add_flag("--ignore-pi", o.ignore_pi, "Skip the checks that need pi");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*build) return cmd_build(o, out, err);
    if (*inv) return cmd_invariants(o, out, err);
    if (*fp) return cmd_fingerprint(o, out, err);
    if (*cmp) return cmd_compare(o, out, err);
    if (*tx) return cmd_trivext(o, out, err);
    if (*ver) return cmd_verify(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace reynolds::cli

#endif  // REYNOLDS_CLI_HPP
