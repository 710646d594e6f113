#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

namespace chern {

/// Upper bound on the number of ring variables (the doubled ring used for
/// Rees-algebra components must also fit).
inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 0xffff;

/// Exponent vector with cached total degree. Unused trailing slots are zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int index, int power = 1);

  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  bool is_one() const { return degree_ == 0; }

  /// Number of variables with a positive exponent.
  int support_size() const;

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Exponent of variable i lowered by k, clamped at zero.
  Monomial lowered(int i, int k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  int degree_ = 0;
};

/// Graded reverse lexicographic comparison over the first nvars variables:
/// positive when a > b.
inline int grevlex_compare(const Monomial& a, const Monomial& b, int nvars) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

enum class OrderKind {
  kGrevlex,            // ring elements; behaves like position-over-term
  kPositionOverTerm,   // component first (lower index is larger), then grevlex
  kTermOverPosition,   // twisted degree, then grevlex, then component
};

/// Term order on module terms x^a e_i. Twisted degrees are only consulted
/// by term-over-position.
struct MonomialOrder {
  OrderKind kind = OrderKind::kPositionOverTerm;
  int nvars = 0;
  std::span<const int> degrees;

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (kind == OrderKind::kTermOverPosition) {
      const int da = a.degree() + degrees[static_cast<std::size_t>(ca)];
      const int db = b.degree() + degrees[static_cast<std::size_t>(cb)];
      if (da != db) return da > db ? 1 : -1;
      if (int c = grevlex_compare(a, b, nvars); c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    if (ca != cb) return ca < cb ? 1 : -1;
    return grevlex_compare(a, b, nvars);
  }
};

}  // namespace chern

template <>
struct std::hash<chern::Monomial> {
  std::size_t operator()(const chern::Monomial& m) const noexcept { return m.hash(); }
};
