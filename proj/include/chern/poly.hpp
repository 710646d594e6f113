#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chern/field.hpp"
#include "chern/monomial.hpp"

namespace chern {

template <class F>
struct Term {
  Monomial mono;
  int comp = 0;
  typename F::Element coeff{};

  friend bool operator==(const Term& a, const Term& b) {
    return a.comp == b.comp && a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Sparse distributed element of a free module over a polynomial ring:
/// terms c * x^a * e_comp, strictly descending in the ambient order, with no
/// zero coefficients. Ring elements are the rank-one case (comp == 0).
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Term<F>> canonical_terms) : terms_(std::move(canonical_terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term<F>& lead() const { return terms_.front(); }
  const Term<F>& operator[](std::size_t i) const { return terms_[i]; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::vector<Term<F>>& mutable_terms() { return terms_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term<F>> terms_;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Order-aware arithmetic shared by rings and free modules.

namespace arith {

template <class F>
Poly<F> add(const F& k, const MonomialOrder& ord, const Poly<F>& a, const Poly<F>& b) {
  std::vector<Term<F>> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    const int c = ord.compare(i->mono, i->comp, j->mono, j->comp);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      auto s = k.add(i->coeff, j->coeff);
      if (!k.is_zero(s)) out.push_back(Term<F>{i->mono, i->comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return Poly<F>(std::move(out));
}

template <class F>
Poly<F> scale(const F& k, const Poly<F>& a, const typename F::Element& c) {
  if (k.is_zero(c)) return {};
  std::vector<Term<F>> out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(Term<F>{t.mono, t.comp, k.mul(t.coeff, c)});
  return Poly<F>(std::move(out));
}

template <class F>
Poly<F> neg(const F& k, const Poly<F>& a) {
  return scale(k, a, k.neg(k.one()));
}

template <class F>
Poly<F> sub(const F& k, const MonomialOrder& ord, const Poly<F>& a, const Poly<F>& b) {
  return add(k, ord, a, neg(k, b));
}

/// c * m * a; multiplication by a monomial preserves every supported order.
template <class F>
Poly<F> mul_term(const F& k, const Poly<F>& a, const Monomial& m, const typename F::Element& c) {
  if (k.is_zero(c)) return {};
  std::vector<Term<F>> out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(Term<F>{t.mono * m, t.comp, k.mul(t.coeff, c)});
  return Poly<F>(std::move(out));
}

/// Sorts raw terms, merges duplicates and drops zeros.
template <class F>
Poly<F> canonicalize(const F& k, const MonomialOrder& ord, std::vector<Term<F>> raw) {
  std::sort(raw.begin(), raw.end(), [&](const Term<F>& x, const Term<F>& y) {
    return ord.compare(x.mono, x.comp, y.mono, y.comp) > 0;
  });
  std::vector<Term<F>> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
      if (k.is_zero(out.back().coeff)) out.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return Poly<F>(std::move(out));
}

/// f * v for a ring element f and a module element v.
template <class F>
Poly<F> mul(const F& k, const MonomialOrder& ord, const Poly<F>& f, const Poly<F>& v) {
  if (f.is_zero() || v.is_zero()) return {};
  if (f.size() == 1) return mul_term(k, v, f.lead().mono, f.lead().coeff);
  std::vector<Term<F>> raw;
  raw.reserve(f.size() * v.size());
  for (const auto& s : f) {
    for (const auto& t : v) raw.push_back(Term<F>{s.mono * t.mono, t.comp, k.mul(s.coeff, t.coeff)});
  }
  return canonicalize(k, ord, std::move(raw));
}

}  // namespace arith

// ---------------------------------------------------------------------------

/// Standard-graded polynomial ring k[x_1, ..., x_n] with grevlex order.
template <class F>
class PolyRing {
 public:
  using Element = typename F::Element;

  PolyRing(F field, std::vector<std::string> var_names);

  const F& field() const { return field_; }
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  /// -1 when the name is unknown.
  int var_index(std::string_view name) const;

  MonomialOrder order() const { return MonomialOrder{OrderKind::kGrevlex, num_vars(), {}}; }

  Poly<F> zero() const { return {}; }
  Poly<F> constant(const Element& c) const;
  Poly<F> from_integer(long long c) const { return constant(field_.from_integer(c)); }
  Poly<F> variable(int i) const;
  Poly<F> monomial(const Monomial& m, const Element& c) const;

  Poly<F> add(const Poly<F>& a, const Poly<F>& b) const { return arith::add(field_, order(), a, b); }
  Poly<F> sub(const Poly<F>& a, const Poly<F>& b) const { return arith::sub(field_, order(), a, b); }
  Poly<F> neg(const Poly<F>& a) const { return arith::neg(field_, a); }
  Poly<F> scale(const Poly<F>& a, const Element& c) const { return arith::scale(field_, a, c); }
  Poly<F> mul(const Poly<F>& a, const Poly<F>& b) const { return arith::mul(field_, order(), a, b); }
  Poly<F> pow(const Poly<F>& a, int k) const;

  /// Maximal total degree; nullopt for the zero polynomial.
  static std::optional<int> total_degree(const Poly<F>& a);
  static bool is_homogeneous(const Poly<F>& a);

  /// Grammar: sums of products of integers, variables, powers `^n` and
  /// parenthesised subexpressions.
  Poly<F> parse(std::string_view text) const;
  std::string to_string(const Poly<F>& a) const;
  std::string monomial_string(const Monomial& m) const;

  /// A ring with extra variables appended (same field).
  PolyRing extended(const std::vector<std::string>& extra_names) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

/// Ring element bound to its ring: the checked, operator-friendly surface.
template <class F>
class RingElement {
 public:
  RingElement(RingPtr<F> ring, Poly<F> value) : ring_(std::move(ring)), value_(std::move(value)) {}

  const RingPtr<F>& ring() const { return ring_; }
  const Poly<F>& value() const { return value_; }
  std::optional<int> total_degree() const { return PolyRing<F>::total_degree(value_); }
  std::string to_string() const { return ring_->to_string(value_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    check(a, b);
    return {a.ring_, a.ring_->add(a.value_, b.value_)};
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    check(a, b);
    return {a.ring_, a.ring_->sub(a.value_, b.value_)};
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    check(a, b);
    return {a.ring_, a.ring_->mul(a.value_, b.value_)};
  }
  friend RingElement operator-(const RingElement& a) { return {a.ring_, a.ring_->neg(a.value_)}; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.value_ == b.value_;
  }

 private:
  static void check(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) {
      throw RingMismatch("operands belong to different polynomial rings");
    }
  }

  RingPtr<F> ring_;
  Poly<F> value_;
};

extern template class PolyRing<PrimeField>;
extern template class PolyRing<RationalField>;

}  // namespace chern
