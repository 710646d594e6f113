#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chern/groebner.hpp"

namespace chern::testing {

inline RingPtr<PrimeField> zp_ring(std::vector<std::string> names, std::uint32_t p = 32003) {
  return std::make_shared<const PolyRing<PrimeField>>(PrimeField(p), std::move(names));
}

inline RingPtr<RationalField> qq_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing<RationalField>>(RationalField(), std::move(names));
}

template <class F>
std::vector<Poly<F>> parse_all(const PolyRing<F>& r, const std::vector<std::string>& texts) {
  std::vector<Poly<F>> out;
  for (const auto& t : texts) out.push_back(r.parse(t));
  return out;
}

}  // namespace chern::testing
