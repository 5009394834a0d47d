#ifndef REYNOLDS_GF_HPP
#define REYNOLDS_GF_HPP

// Exact arithmetic in GF(p^e) = GF(p)[t]/(f(t)).
//
// Elements are encoded as integers c_0 + c_1 p + ... + c_{e-1} p^{e-1}, where
// c_i are the coefficients of the residue polynomial c_0 + c_1 t + ... in the
// basis 1, t, ..., t^{e-1}. For e = 1 the encoding is the residue itself.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "reynolds/error.hpp"

namespace reynolds {

using Element = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline long long parse_integer(std::string_view text, const char* what) {
  std::string s = trim(text);
  if (s.empty()) throw FieldError(std::string("empty ") + what);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw FieldError(std::string("invalid ") + what + " '" + s + "'");
  }
  if (pos != s.size()) throw FieldError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

// Remainder of a modulo the monic polynomial m (coefficients low to high).
inline std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& m,
                                           std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

struct FieldData {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::vector<std::uint64_t> modulus;  // monic, size e + 1
  std::uint64_t order = 2;
  std::vector<std::uint64_t> powers;  // p^0 .. p^e
  // Small extension fields get full tables.
  std::vector<Element> add_table, mul_table, inv_table;
};

}  // namespace detail

class Scalar;

/// A finite field GF(p^e). Cheap to copy; instances share immutable tables.
class FiniteField {
 public:
  /// GF(2).
  FiniteField() : FiniteField(2) {}

  /// Prime field GF(p).
  explicit FiniteField(std::uint64_t p) : FiniteField(p, 1, {0, 1}) {}

  /// GF(p)[t]/(modulus); modulus lists coefficients c_0..c_e and must be monic and irreducible.
  FiniteField(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus) {
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) throw FieldError("characteristic too large");
    if (e < 1) throw FieldError("extension degree must be >= 1");
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = e;
    if (e == 1 && modulus.empty()) modulus = {0, 1};
    if (modulus.size() != static_cast<std::size_t>(e) + 1)
      throw FieldError("modulus must have e + 1 = " + std::to_string(e + 1) + " coefficients");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw FieldError("modulus must be monic");
    d->modulus = modulus;
    d->powers.assign(e + 1, 1);
    for (unsigned i = 1; i <= e; ++i) {
      if (d->powers[i - 1] > std::numeric_limits<Element>::max() / p)
        throw FieldError("field order exceeds 2^32");
      d->powers[i] = d->powers[i - 1] * p;
    }
    d->order = d->powers[e];
    if (e > 1 && !irreducible(p, modulus))
      throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
    data_ = std::move(d);
    build_tables();
  }

  std::uint64_t characteristic() const noexcept { return data_->p; }
  unsigned degree() const noexcept { return data_->e; }
  std::uint64_t order() const noexcept { return data_->order; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return data_->modulus; }

  bool operator==(const FiniteField& o) const noexcept {
    return data_ == o.data_ || (data_->p == o.data_->p && data_->modulus == o.data_->modulus);
  }
  bool operator!=(const FiniteField& o) const noexcept { return !(*this == o); }

  /// GF(p) as its own field object.
  FiniteField prime_field() const { return FiniteField(data_->p); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element from_int(long long v) const {
    const auto p = static_cast<long long>(data_->p);
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<Element>(r);
  }

  Element from_coefficients(const std::vector<long long>& coeffs) const {
    if (coeffs.size() > data_->e)
      throw FieldError("scalar has " + std::to_string(coeffs.size()) + " residues, field degree is " +
                       std::to_string(data_->e));
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) code += from_int(coeffs[i]) * data_->powers[i];
    return static_cast<Element>(code);
  }

  std::vector<std::uint64_t> coefficients(Element a) const {
    std::vector<std::uint64_t> c(data_->e);
    std::uint64_t v = a;
    for (unsigned i = 0; i < data_->e; ++i) {
      c[i] = v % data_->p;
      v /= data_->p;
    }
    return c;
  }

  bool contains(Element a) const noexcept { return a < data_->order; }

  Element add(Element a, Element b) const noexcept {
    if (data_->e == 1) return static_cast<Element>((std::uint64_t{a} + b) % data_->p);
    if (!data_->add_table.empty()) return data_->add_table[a * data_->order + b];
    std::uint64_t r = 0, x = a, y = b;
    for (unsigned i = 0; i < data_->e; ++i) {
      r += ((x % data_->p + y % data_->p) % data_->p) * data_->powers[i];
      x /= data_->p;
      y /= data_->p;
    }
    return static_cast<Element>(r);
  }

  Element neg(Element a) const noexcept {
    if (data_->e == 1) return a == 0 ? 0 : static_cast<Element>(data_->p - a);
    std::uint64_t r = 0, x = a;
    for (unsigned i = 0; i < data_->e; ++i) {
      const std::uint64_t c = x % data_->p;
      r += ((data_->p - c) % data_->p) * data_->powers[i];
      x /= data_->p;
    }
    return static_cast<Element>(r);
  }

  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  Element mul(Element a, Element b) const noexcept {
    if (data_->e == 1) return static_cast<Element>((std::uint64_t{a} * b) % data_->p);
    if (!data_->mul_table.empty()) return data_->mul_table[a * data_->order + b];
    return poly_mul(a, b);
  }

  Element pow(Element a, std::uint64_t k) const noexcept {
    Element result = 1;
    Element base = a;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  Element inv(Element a) const {
    if (a == 0) throw FieldError("division by zero");
    if (!data_->inv_table.empty()) return data_->inv_table[a];
    return pow(a, data_->order - 2);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// a^(p^n): n applications of the p-power map. Since x^(p^e) = x only n mod e rounds are needed.
  Element frobenius(Element a, std::uint64_t n = 1) const noexcept {
    for (std::uint64_t i = 0; i < n % data_->e; ++i) a = pow(a, data_->p);
    return a;
  }

  /// The unique b with b^(p^n) = a, i.e. a^(p^(e-1)) iterated n times.
  Element frobenius_inverse(Element a, std::uint64_t n = 1) const noexcept {
    const std::uint64_t k = n % data_->e;
    return frobenius(a, (data_->e - k) % data_->e);
  }

  /// Frobenius twist by a possibly negative exponent.
  Element twist(Element a, long long n) const noexcept {
    const long long e = data_->e;
    long long k = n % e;
    if (k < 0) k += e;
    return frobenius(a, static_cast<std::uint64_t>(k));
  }

  /// "p=2" or "p=2,e=2,mod=1,1,1".
  std::string spec() const {
    std::ostringstream os;
    os << "p=" << data_->p;
    if (data_->e > 1) {
      os << ",e=" << data_->e << ",mod=";
      for (std::size_t i = 0; i < data_->modulus.size(); ++i) os << (i ? "," : "") << data_->modulus[i];
    }
    return os.str();
  }

  static FiniteField parse(std::string_view text) {
    std::string s = detail::trim(text);
    std::uint64_t p = 0;
    long long e = 1;
    std::vector<std::uint64_t> mod;
    bool have_p = false, have_mod = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
      const std::size_t eq = s.find('=', pos);
      if (eq == std::string::npos) throw FieldError("malformed field spec '" + s + "'");
      const std::string key = detail::trim(std::string_view(s).substr(pos, eq - pos));
      if (key == "mod") {
        // Modulus consumes the rest of the string.
        std::string rest = s.substr(eq + 1);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const long long c = detail::parse_integer(item, "modulus coefficient");
          if (c < 0) throw FieldError("negative modulus coefficient");
          mod.push_back(static_cast<std::uint64_t>(c));
        }
        have_mod = true;
        pos = s.size();
        break;
      }
      std::size_t comma = s.find(',', eq);
      if (comma == std::string::npos) comma = s.size();
      const std::string value = s.substr(eq + 1, comma - eq - 1);
      if (key == "p") {
        const long long v = detail::parse_integer(value, "characteristic");
        if (v < 2) throw FieldError("characteristic must be a prime >= 2");
        p = static_cast<std::uint64_t>(v);
        have_p = true;
      } else if (key == "e") {
        e = detail::parse_integer(value, "extension degree");
        if (e < 1 || e > 64) throw FieldError("extension degree out of range");
      } else {
        throw FieldError("unknown field spec key '" + key + "'");
      }
      pos = comma + 1;
    }
    if (!have_p) throw FieldError("field spec lacks p=<prime>");
    if (e > 1 && !have_mod) throw FieldError("field spec with e > 1 requires mod=<c0,...,1>");
    if (!have_mod) mod = {0, 1};
    return FiniteField(p, static_cast<unsigned>(e), mod);
  }

  /// Residue list "c0,c1,...", integer, or polynomial in t such as "t+1" or "2*t^2 - 1".
  Element parse_element(std::string_view text) const {
    std::string s = detail::trim(text);
    if (s.empty()) throw FieldError("empty scalar");
    if (s.find(',') != std::string::npos) {
      std::vector<long long> coeffs;
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(detail::parse_integer(item, "residue"));
      return from_coefficients(coeffs);
    }
    Element acc = 0;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    bool first = true;
    while (true) {
      skip();
      if (i >= s.size()) break;
      bool negative = false;
      if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
        skip();
      } else if (!first) {
        throw FieldError("malformed scalar '" + s + "'");
      }
      first = false;
      long long coeff = 1;
      bool have_coeff = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        coeff = detail::parse_integer(s.substr(i, j - i), "coefficient");
        i = j;
        have_coeff = true;
        skip();
      }
      unsigned exponent = 0;
      bool have_t = false;
      if (i < s.size() && s[i] == '*') {
        if (!have_coeff) throw FieldError("malformed scalar '" + s + "'");
        ++i;
        skip();
        if (i >= s.size() || s[i] != 't') throw FieldError("malformed scalar '" + s + "'");
      }
      if (i < s.size() && s[i] == 't') {
        if (data_->e == 1) throw FieldError("'t' is undefined in a prime field: '" + s + "'");
        have_t = true;
        ++i;
        exponent = 1;
        skip();
        if (i < s.size() && s[i] == '^') {
          ++i;
          skip();
          std::size_t j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          exponent = static_cast<unsigned>(detail::parse_integer(s.substr(i, j - i), "exponent"));
          i = j;
        }
      }
      if (!have_coeff && !have_t) throw FieldError("malformed scalar '" + s + "'");
      Element term = mul(from_int(coeff), pow(generator_element(), exponent));
      acc = negative ? sub(acc, term) : add(acc, term);
    }
    return acc;
  }

  /// Integer for prime fields, polynomial in t otherwise.
  std::string format(Element a) const {
    if (data_->e == 1) return std::to_string(a);
    const auto c = coefficients(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c[i]);
      } else {
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Every element of the field in encoding order.
  std::vector<Element> elements() const {
    std::vector<Element> all(data_->order);
    for (std::uint64_t i = 0; i < data_->order; ++i) all[i] = static_cast<Element>(i);
    return all;
  }

  Scalar scalar(Element a) const;
  Scalar scalar_from_int(long long v) const;

 private:
  std::shared_ptr<const detail::FieldData> data_;

  Element generator_element() const noexcept {
    return data_->e == 1 ? 0 : static_cast<Element>(data_->p);
  }

  static bool irreducible(std::uint64_t p, const std::vector<std::uint64_t>& f) {
    const std::size_t e = f.size() - 1;
    // Trial division by every monic polynomial of degree 1..e/2.
    for (std::size_t deg = 1; deg <= e / 2; ++deg) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint64_t> g(deg + 1);
        std::uint64_t v = code;
        for (std::size_t i = 0; i < deg; ++i) {
          g[i] = v % p;
          v /= p;
        }
        g[deg] = 1;
        const auto r = detail::poly_mod(f, g, p);
        if (std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0; })) return false;
      }
    }
    return true;
  }

  Element poly_mul(Element a, Element b) const noexcept {
    const auto& d = *data_;
    const auto ca = coefficients(a), cb = coefficients(b);
    std::vector<std::uint64_t> prod(2 * d.e - 1, 0);
    for (unsigned i = 0; i < d.e; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < d.e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % d.p;
    }
    const auto r = detail::poly_mod(std::move(prod), d.modulus, d.p);
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * d.powers[i];
    return static_cast<Element>(code);
  }

  void build_tables() {
    if (data_->e == 1 && data_->order > (1u << 16)) return;
    auto d = std::make_shared<detail::FieldData>(*data_);
    const std::uint64_t q = d->order;
    if (d->e > 1 && q <= 256) {
      d->add_table.resize(q * q);
      d->mul_table.resize(q * q);
      for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) {
          d->add_table[a * q + b] = add(static_cast<Element>(a), static_cast<Element>(b));
          d->mul_table[a * q + b] = poly_mul(static_cast<Element>(a), static_cast<Element>(b));
        }
    }
    if (q <= (1u << 16)) {
      d->inv_table.assign(q, 0);
      for (std::uint64_t a = 1; a < q; ++a) d->inv_table[a] = pow(static_cast<Element>(a), q - 2);
    }
    data_ = std::move(d);
  }
};

/// A field element bound to its field. Arithmetic across different fields throws.
class Scalar {
 public:
  Scalar(FiniteField field, Element value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) throw FieldError("element code out of range for " + field_.spec());
  }

  const FiniteField& field() const noexcept { return field_; }
  Element value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  Scalar operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar frobenius(std::uint64_t n = 1) const { return {field_, field_.frobenius(value_, n)}; }
  Scalar frobenius_inverse(std::uint64_t n = 1) const { return {field_, field_.frobenius_inverse(value_, n)}; }
  Scalar inverse() const { return {field_, field_.inv(value_)}; }

  std::string to_string() const { return field_.format(value_); }

 private:
  FiniteField field_;
  Element value_;

  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
      throw FieldError("mixed-field operands: " + a.field_.spec() + " vs " + b.field_.spec());
  }
};

inline Scalar FiniteField::scalar(Element a) const { return Scalar(*this, a); }
inline Scalar FiniteField::scalar_from_int(long long v) const { return Scalar(*this, from_int(v)); }

}  // namespace reynolds

#endif  // REYNOLDS_GF_HPP
