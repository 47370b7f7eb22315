#pragma once

// Exact arithmetic on the circle group. A gain is a rational number of turns
// p/q in [0, 1), standing for exp(2*pi*i*p/q).

#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaingraph {

class UnitGain {
public:
  constexpr UnitGain() = default;

  /// Builds p/q turns, reduced mod 1 and to lowest terms. q must be nonzero.
  UnitGain(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("gain denominator is zero");
    assign(num, den);
  }

  static UnitGain identity() { return {}; }
  static UnitGain half_turn() { return UnitGain(1, 2); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_identity() const noexcept { return num_ == 0; }

  friend UnitGain mul(const UnitGain& a, const UnitGain& b) {
    const __int128 g = std::gcd(a.den_, b.den_);
    const __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                         static_cast<__int128>(b.num_) * (a.den_ / g);
    const __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
    UnitGain r;
    r.assign_wide(num, den);
    return r;
  }

  friend UnitGain inv(const UnitGain& a) {
    UnitGain r;
    r.num_ = a.num_ == 0 ? 0 : a.den_ - a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend UnitGain operator*(const UnitGain& a, const UnitGain& b) { return mul(a, b); }
  UnitGain& operator*=(const UnitGain& b) { return *this = mul(*this, b); }

  friend bool operator==(const UnitGain&, const UnitGain&) = default;
  friend auto operator<=>(const UnitGain&, const UnitGain&) = default;

private:
  void assign(std::int64_t num, std::int64_t den) { assign_wide(num, den); }

  void assign_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    __int128 a = num, b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    const __int128 g = a == 0 ? den : a;
    num /= g;
    den /= g;
    if (den > INT64_MAX) throw std::overflow_error("gain denominator overflows 64 bits");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// The point exp(2*pi*i*turns). Multiples of a quarter turn are exact.
inline std::complex<double> to_complex(const UnitGain& a) {
  // Split turns = k/4 + r with 0 <= r < 1/4, evaluate the small angle, then
  // rotate by i^k exactly.
  const __int128 four_num = static_cast<__int128>(a.num()) * 4;
  const int quadrant = static_cast<int>(four_num / a.den());
  const __int128 rem_num = four_num - static_cast<__int128>(quadrant) * a.den();
  // r = rem_num / (4 * den)
  double c = 1.0, s = 0.0;
  if (rem_num != 0) {
    const double r = static_cast<double>(rem_num) / (4.0 * static_cast<double>(a.den()));
    if (r <= 0.125) {
      c = std::cos(2.0 * std::numbers::pi * r);
      s = std::sin(2.0 * std::numbers::pi * r);
    } else {
      const double t = 0.25 - r;
      c = std::sin(2.0 * std::numbers::pi * t);
      s = std::cos(2.0 * std::numbers::pi * t);
    }
  }
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

/// "p/q" in lowest terms, "0" for the identity.
inline std::string to_string(const UnitGain& a) {
  if (a.is_identity()) return "0";
  return std::to_string(a.num()) + "/" + std::to_string(a.den());
}

inline std::ostream& operator<<(std::ostream& os, const UnitGain& a) { return os << to_string(a); }

/// Parses "p/q" or an integer "k". Returns nullopt on malformed text or q = 0.
inline std::optional<UnitGain> parse_gain(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return std::nullopt;
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      if (v > (INT64_MAX - (s[i] - '0')) / 10) return std::nullopt;
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto k = parse_int(text);
    if (!k) return std::nullopt;
    return UnitGain(*k, 1);
  }
  auto p = parse_int(text.substr(0, slash));
  auto q = parse_int(text.substr(slash + 1));
  if (!p || !q || *q <= 0) return std::nullopt;
  return UnitGain(*p, *q);
}

enum class GroupFamily { circle, roots_of_unity, sign };

/// A gain group with its distinguished central involution. Every family here
/// is abelian, so centrality is automatic.
struct GroupSpec {
  GroupFamily family = GroupFamily::circle;
  std::int64_t order = 0;  // n for roots_of_unity, ignored otherwise
  UnitGain involution{};

  static GroupSpec circle(UnitGain s = UnitGain::half_turn()) { return {GroupFamily::circle, 0, s}; }
  static GroupSpec roots_of_unity(std::int64_t n, UnitGain s = UnitGain::half_turn()) {
    return {GroupFamily::roots_of_unity, n, s};
  }
  static GroupSpec sign(UnitGain s = UnitGain::half_turn()) { return {GroupFamily::sign, 0, s}; }

  bool contains(const UnitGain& g) const noexcept {
    switch (family) {
      case GroupFamily::circle: return true;
      case GroupFamily::roots_of_unity: return order > 0 && order % g.den() == 0;
      case GroupFamily::sign: return g.den() <= 2;
    }
    return false;
  }

  /// +1 or -1: the involution read as a real scalar.
  int involution_sign() const noexcept { return involution.is_identity() ? 1 : -1; }

  bool same_family(const GroupSpec& o) const noexcept {
    if (family != o.family) return false;
    return family != GroupFamily::roots_of_unity || order == o.order;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline std::string to_string(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::circle: return "circle";
    case GroupFamily::roots_of_unity: return "mu " + std::to_string(spec.order);
    case GroupFamily::sign: return "sign";
  }
  return "?";
}

/// Returns the first violated rule, or nullopt when the spec is consistent.
inline std::optional<std::string> validate_spec(const GroupSpec& spec) {
  if (spec.family == GroupFamily::roots_of_unity && spec.order < 1)
    return "roots-of-unity order must be positive, got " + std::to_string(spec.order);
  if (!mul(spec.involution, spec.involution).is_identity())
    return "involution " + to_string(spec.involution) + " does not square to the identity";
  if (!spec.contains(spec.involution))
    return "involution " + to_string(spec.involution) + " is not in group " + to_string(spec);
  return std::nullopt;
}

}  // namespace gaingraph

template <>
struct std::hash<gaingraph::UnitGain> {
  std::size_t operator()(const gaingraph::UnitGain& g) const noexcept {
    return std::hash<std::int64_t>{}(g.num()) * 1000003u ^ std::hash<std::int64_t>{}(g.den());
  }
};
