#include "chern/free_module.hpp"

#include <string>

#include "chern/groebner.hpp"

namespace chern {

template <class F>
Poly<F> FreeModule<F>::embed(const Poly<F>& f, int comp) const {
  if (comp < 0 || comp >= rank()) throw std::out_of_range("component out of range");
  std::vector<Term<F>> raw;
  raw.reserve(f.size());
  for (const auto& t : f) raw.push_back(Term<F>{t.mono, comp, t.coeff});
  // grevlex order of f is preserved inside a single component.
  return Poly<F>(std::move(raw));
}

template <class F>
Poly<F> FreeModule<F>::entry(const Poly<F>& v, int comp) const {
  std::vector<Term<F>> raw;
  for (const auto& t : v) {
    if (t.comp == comp) raw.push_back(Term<F>{t.mono, 0, t.coeff});
  }
  return arith::canonicalize(field(), ring_->order(), std::move(raw));
}

template <class F>
Poly<F> FreeModule<F>::from_entries(const std::vector<Poly<F>>& entries) const {
  if (static_cast<int>(entries.size()) != rank()) {
    throw std::invalid_argument("vector has " + std::to_string(entries.size()) +
                                " entries, module rank is " + std::to_string(rank()));
  }
  std::vector<Term<F>> raw;
  for (int i = 0; i < rank(); ++i) {
    for (const auto& t : entries[static_cast<std::size_t>(i)]) raw.push_back(Term<F>{t.mono, i, t.coeff});
  }
  return normalize(std::move(raw));
}

template <class F>
bool FreeModule<F>::is_homogeneous(const Poly<F>& v) const {
  if (v.is_zero()) return true;
  const int d = term_degree(v.lead());
  for (const auto& t : v) {
    if (t.comp < 0 || t.comp >= rank()) return false;
    if (term_degree(t) != d) return false;
  }
  return true;
}

template <class F>
FreeModule<F> FreeModule<F>::direct_sum(const FreeModule& other) const {
  auto d = degrees_;
  d.insert(d.end(), other.degrees_.begin(), other.degrees_.end());
  return FreeModule(ring_, std::move(d), order_);
}

template <class F>
Poly<F> FreeModule<F>::shift_components(const Poly<F>& v, int offset) {
  auto terms = v.terms();
  for (auto& t : terms) t.comp += offset;
  return Poly<F>(std::move(terms));
}

// ---------------------------------------------------------------------------

template <class F>
ModuleMap<F>::ModuleMap(FreeModule<F> source, FreeModule<F> target, std::vector<Poly<F>> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_.rank()) {
    throw std::invalid_argument("map has " + std::to_string(columns_.size()) +
                                " columns but the source has rank " + std::to_string(source_.rank()));
  }
  for (int j = 0; j < source_.rank(); ++j) {
    const auto& col = columns_[static_cast<std::size_t>(j)];
    if (!target_.is_homogeneous(col)) {
      throw InhomogeneousInput("column " + std::to_string(j) + " is not homogeneous");
    }
    if (!col.is_zero() && *target_.degree_of(col) != source_.degree(j)) {
      throw InhomogeneousInput("column " + std::to_string(j) + " has degree " +
                               std::to_string(*target_.degree_of(col)) + ", expected " +
                               std::to_string(source_.degree(j)));
    }
  }
}

template <class F>
ModuleMap<F> ModuleMap<F>::from_columns(const FreeModule<F>& target, std::vector<Poly<F>> columns) {
  std::vector<int> degrees;
  degrees.reserve(columns.size());
  for (const auto& c : columns) degrees.push_back(target.degree_of(c).value_or(0));
  return ModuleMap(FreeModule<F>(target.ring_ptr(), std::move(degrees), target.order_kind()), target,
                   std::move(columns));
}

template <class F>
Poly<F> ModuleMap<F>::apply(const Poly<F>& v) const {
  std::vector<Term<F>> raw;
  const auto& k = target_.field();
  for (const auto& t : v) {
    for (const auto& s : column(t.comp)) {
      raw.push_back(Term<F>{s.mono * t.mono, s.comp, k.mul(s.coeff, t.coeff)});
    }
  }
  return target_.normalize(std::move(raw));
}

template <class F>
ModuleMap<F> ModuleMap<F>::compose(const ModuleMap& other) const {
  if (!(other.target_.degrees() == source_.degrees())) {
    throw AmbientMismatch("cannot compose maps: middle modules differ");
  }
  std::vector<Poly<F>> cols;
  cols.reserve(other.columns_.size());
  for (const auto& c : other.columns_) cols.push_back(apply(c));
  return ModuleMap(other.source_, target_, std::move(cols));
}

template <class F>
ModuleMap<F> ModuleMap<F>::dual() const {
  std::vector<int> src_deg, tgt_deg;
  for (int d : target_.degrees()) src_deg.push_back(-d);
  for (int d : source_.degrees()) tgt_deg.push_back(-d);
  FreeModule<F> new_source(target_.ring_ptr(), std::move(src_deg), target_.order_kind());
  FreeModule<F> new_target(source_.ring_ptr(), std::move(tgt_deg), source_.order_kind());
  std::vector<std::vector<Term<F>>> raw(static_cast<std::size_t>(target_.rank()));
  for (int j = 0; j < source_.rank(); ++j) {
    for (const auto& t : column(j)) {
      raw[static_cast<std::size_t>(t.comp)].push_back(Term<F>{t.mono, j, t.coeff});
    }
  }
  std::vector<Poly<F>> cols;
  cols.reserve(raw.size());
  for (auto& r : raw) cols.push_back(new_target.normalize(std::move(r)));
  return ModuleMap(std::move(new_source), std::move(new_target), std::move(cols));
}

template <class F>
bool ModuleMap<F>::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

template <class F>
GradedModule<F>::GradedModule(ModuleMap<F> presentation)
    : presentation_(std::move(presentation)), cache_(std::make_shared<Cache>()) {}

template <class F>
GradedModule<F> GradedModule<F>::free(const FreeModule<F>& module) {
  return GradedModule(ModuleMap<F>::from_columns(module, {}));
}

template <class F>
GradedModule<F> GradedModule<F>::quotient_ring(RingPtr<F> ring, const std::vector<Poly<F>>& gens) {
  auto s = FreeModule<F>::ring_module(std::move(ring));
  std::vector<Poly<F>> cols;
  for (const auto& g : gens) {
    if (!g.is_zero()) cols.push_back(s.embed(g, 0));
  }
  return GradedModule(ModuleMap<F>::from_columns(s, std::move(cols)));
}

template <class F>
GradedModule<F> GradedModule<F>::cokernel(const FreeModule<F>& ambient, std::vector<Poly<F>> relations) {
  std::erase_if(relations, [](const Poly<F>& p) { return p.is_zero(); });
  return GradedModule(ModuleMap<F>::from_columns(ambient, std::move(relations)));
}

template <class F>
const SubmoduleGB<F>& GradedModule<F>::gb() const {
  std::call_once(cache_->once, [this] {
    cache_->gb = std::make_unique<SubmoduleGB<F>>(groebner(ambient(), relations()));
  });
  return *cache_->gb;
}

template class FreeModule<PrimeField>;
template class FreeModule<RationalField>;
template class ModuleMap<PrimeField>;
template class ModuleMap<RationalField>;
template class GradedModule<PrimeField>;
template class GradedModule<RationalField>;

}  // namespace chern
