#include "chern/monomial.hpp"

#include <algorithm>
#include <string>

namespace chern {

namespace {

std::uint16_t checked_exponent(long v) {
  if (v < 0 || v > kMaxExponent) {
    throw std::overflow_error("monomial exponent out of range: " + std::to_string(v));
  }
  return static_cast<std::uint16_t>(v);
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("too many variables for a monomial");
  }
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    m.exps_[i] = checked_exponent(exps[i]);
    m.degree_ += exps[i];
  }
  return m;
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index");
  Monomial m;
  m.exps_[static_cast<std::size_t>(index)] = checked_exponent(power);
  m.degree_ = power;
  return m;
}

int Monomial::support_size() const {
  return static_cast<int>(std::count_if(exps_.begin(), exps_.end(), [](auto e) { return e != 0; }));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exps_[i] = checked_exponent(static_cast<long>(a.exps_[i]) + b.exps_[i]);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::invalid_argument("monomial division is not exact");
    m.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial Monomial::lowered(int i, int k) const {
  Monomial m = *this;
  auto& e = m.exps_[static_cast<std::size_t>(i)];
  const int drop = std::min<int>(e, k);
  e = static_cast<std::uint16_t>(e - drop);
  m.degree_ -= drop;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chern
