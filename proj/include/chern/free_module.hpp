#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chern/poly.hpp"

namespace chern {

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InhomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graded free module S(-a_1) + ... + S(-a_rank). degrees()[i] = a_i is the
/// degree of the i-th basis vector, so x^m e_i has degree |m| + a_i.
template <class F>
class FreeModule {
 public:
  using Element = typename F::Element;

  FreeModule(RingPtr<F> ring, std::vector<int> degrees,
             OrderKind order = OrderKind::kPositionOverTerm)
      : ring_(std::move(ring)), degrees_(std::move(degrees)), order_(order) {
    if (!ring_) throw std::invalid_argument("free module needs a ring");
  }

  static FreeModule ring_module(RingPtr<F> ring) { return FreeModule(std::move(ring), {0}); }

  const RingPtr<F>& ring_ptr() const { return ring_; }
  const PolyRing<F>& ring() const { return *ring_; }
  const F& field() const { return ring_->field(); }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  OrderKind order_kind() const { return order_; }
  /// The returned order views this module's degree list.
  MonomialOrder order() const { return MonomialOrder{order_, ring_->num_vars(), degrees_}; }

  FreeModule with_order(OrderKind order) const { return FreeModule(ring_, degrees_, order); }

  Poly<F> basis(int i) const { return Poly<F>({Term<F>{Monomial{}, i, field().one()}}); }
  /// f * e_comp for a ring element f.
  Poly<F> embed(const Poly<F>& f, int comp) const;
  /// The ring element in position comp.
  Poly<F> entry(const Poly<F>& v, int comp) const;
  /// Builds a vector from its ring-element coordinates.
  Poly<F> from_entries(const std::vector<Poly<F>>& entries) const;

  Poly<F> add(const Poly<F>& a, const Poly<F>& b) const { return arith::add(field(), order(), a, b); }
  Poly<F> sub(const Poly<F>& a, const Poly<F>& b) const { return arith::sub(field(), order(), a, b); }
  Poly<F> neg(const Poly<F>& a) const { return arith::neg(field(), a); }
  Poly<F> scale(const Poly<F>& a, const Element& c) const { return arith::scale(field(), a, c); }
  Poly<F> mul(const Poly<F>& f, const Poly<F>& v) const { return arith::mul(field(), order(), f, v); }
  /// Re-sorts terms of a vector produced under another order.
  Poly<F> normalize(std::vector<Term<F>> raw) const {
    return arith::canonicalize(field(), order(), std::move(raw));
  }

  int term_degree(const Term<F>& t) const { return t.mono.degree() + degree(t.comp); }
  /// Twisted degree of the leading term; nullopt for zero.
  std::optional<int> degree_of(const Poly<F>& v) const {
    if (v.is_zero()) return std::nullopt;
    return term_degree(v.lead());
  }
  bool is_homogeneous(const Poly<F>& v) const;

  /// This module followed by other (components of other shifted by rank()).
  FreeModule direct_sum(const FreeModule& other) const;
  static Poly<F> shift_components(const Poly<F>& v, int offset);

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.degrees_ == b.degrees_ &&
           a.order_ == b.order_;
  }

 private:
  RingPtr<F> ring_;
  std::vector<int> degrees_;
  OrderKind order_;
};

/// Homogeneous map source -> target stored by columns: column j is the image
/// of the j-th basis vector of source, an element of target.
template <class F>
class ModuleMap {
 public:
  ModuleMap(FreeModule<F> source, FreeModule<F> target, std::vector<Poly<F>> columns);

  /// Source degrees taken from the columns; zero columns get degree 0.
  static ModuleMap from_columns(const FreeModule<F>& target, std::vector<Poly<F>> columns);
  static ModuleMap zero(const FreeModule<F>& source, const FreeModule<F>& target) {
    return ModuleMap(source, target, std::vector<Poly<F>>(source.rank()));
  }

  const FreeModule<F>& source() const { return source_; }
  const FreeModule<F>& target() const { return target_; }
  const std::vector<Poly<F>>& columns() const { return columns_; }
  const Poly<F>& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  /// Entry (i, j) as a ring element.
  Poly<F> entry(int i, int j) const { return target_.entry(column(j), i); }

  /// Image of a source vector.
  Poly<F> apply(const Poly<F>& v) const;
  /// this after other.
  ModuleMap compose(const ModuleMap& other) const;
  /// Hom(-, S) of this map: target* -> source* with negated degrees.
  ModuleMap dual() const;
  bool is_zero() const;

 private:
  FreeModule<F> source_;
  FreeModule<F> target_;
  std::vector<Poly<F>> columns_;
};

template <class F>
class SubmoduleGB;

/// A graded module presented as the cokernel of a homogeneous map. The
/// Groebner basis of the relation submodule is computed on first use and
/// shared between copies.
template <class F>
class GradedModule {
 public:
  explicit GradedModule(ModuleMap<F> presentation);

  static GradedModule free(const FreeModule<F>& module);
  /// S / (gens).
  static GradedModule quotient_ring(RingPtr<F> ring, const std::vector<Poly<F>>& gens);
  /// ambient / (relations), relations given as elements of ambient.
  static GradedModule cokernel(const FreeModule<F>& ambient, std::vector<Poly<F>> relations);

  const ModuleMap<F>& presentation() const { return presentation_; }
  const FreeModule<F>& ambient() const { return presentation_.target(); }
  const std::vector<Poly<F>>& relations() const { return presentation_.columns(); }
  const PolyRing<F>& ring() const { return ambient().ring(); }
  const RingPtr<F>& ring_ptr() const { return ambient().ring_ptr(); }

  const SubmoduleGB<F>& gb() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<SubmoduleGB<F>> gb;
  };

  ModuleMap<F> presentation_;
  std::shared_ptr<Cache> cache_;
};

extern template class FreeModule<PrimeField>;
extern template class FreeModule<RationalField>;
extern template class ModuleMap<PrimeField>;
extern template class ModuleMap<RationalField>;
extern template class GradedModule<PrimeField>;
extern template class GradedModule<RationalField>;

}  // namespace chern
