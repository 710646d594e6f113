#include "chern/field.hpp"

namespace chern {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw FieldError("characteristic must be a prime in [3, 2^31): " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw FieldError("division by zero in " + name());
  // Extended Euclid on signed 64-bit values.
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero in QQ");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
  if (sgn(b) == 0) throw FieldError("division by zero in QQ");
  Element r = a / b;
  r.canonicalize();
  return r;
}

}  // namespace chern
