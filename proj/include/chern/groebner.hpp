#pragma once

#include <optional>
#include <vector>

#include "chern/free_module.hpp"

namespace chern {

struct GbOptions {
  /// Stop after all S-pairs and generators of this twisted degree are
  /// processed; the result is then a basis only up to that degree.
  std::optional<int> max_degree;
};

struct GbStats {
  long pairs_considered = 0;
  long pairs_reduced = 0;
  long zero_reductions = 0;
};

/// Reduced Groebner basis of a submodule of a graded free module.
template <class F>
class SubmoduleGB {
 public:
  SubmoduleGB(FreeModule<F> ambient, std::vector<Poly<F>> generators, std::vector<Poly<F>> basis,
              std::optional<int> truncated_at, GbStats stats);

  const FreeModule<F>& ambient() const { return ambient_; }
  const std::vector<Poly<F>>& generators() const { return generators_; }
  const std::vector<Poly<F>>& basis() const { return basis_; }
  OrderKind order() const { return ambient_.order_kind(); }
  std::optional<int> truncated_at() const { return truncated_at_; }
  const GbStats& stats() const { return stats_; }
  bool is_zero() const { return basis_.empty(); }

  /// Remainder with no term divisible by a leading term of the basis.
  Poly<F> normal_form(const Poly<F>& v) const;
  /// Same, after checking v is declared in the basis' ambient module.
  Poly<F> normal_form(const FreeModule<F>& v_ambient, const Poly<F>& v) const;
  bool contains(const Poly<F>& v) const { return normal_form(v).is_zero(); }
  bool contains(const SubmoduleGB& other) const;

  /// Leading monomials of the basis grouped by component.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  /// A (component, variable) pair with no pure power of the variable among
  /// the leading terms in that component; nullopt when the quotient has
  /// finite length.
  std::optional<std::pair<int, int>> infinite_direction() const;
  bool quotient_is_artinian() const { return !infinite_direction().has_value(); }

  friend bool operator==(const SubmoduleGB& a, const SubmoduleGB& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FreeModule<F> ambient_;
  std::vector<Poly<F>> generators_;
  std::vector<Poly<F>> basis_;
  std::optional<int> truncated_at_;
  GbStats stats_;
};

/// Buchberger's algorithm, degree by degree, with the Gebauer-Moeller
/// criteria. Generators must be homogeneous.
template <class F>
SubmoduleGB<F> groebner(const FreeModule<F>& ambient, std::vector<Poly<F>> gens,
                        const GbOptions& options = {});

/// Full reduction of v by an arbitrary list of (not necessarily monic) divisors.
template <class F>
Poly<F> reduce(const FreeModule<F>& ambient, const Poly<F>& v,
               const std::vector<const Poly<F>*>& divisors);

/// The S-vector of two elements with leading terms in the same component.
template <class F>
Poly<F> s_vector(const FreeModule<F>& ambient, const Poly<F>& a, const Poly<F>& b);

extern template class SubmoduleGB<PrimeField>;
extern template class SubmoduleGB<RationalField>;

}  // namespace chern
