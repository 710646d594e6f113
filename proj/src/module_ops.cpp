#include "chern/module_ops.hpp"

#include <string>

namespace chern {

namespace {

template <class F>
Poly<F> drop_component(const FreeModule<F>& reduced, const Poly<F>& v, int comp) {
  std::vector<Term<F>> raw;
  raw.reserve(v.size());
  for (const auto& t : v) {
    if (t.comp == comp) throw std::logic_error("dropping a component that is still in use");
    raw.push_back(Term<F>{t.mono, t.comp > comp ? t.comp - 1 : t.comp, t.coeff});
  }
  return reduced.normalize(std::move(raw));
}

template <class F>
FreeModule<F> without_component(const FreeModule<F>& m, int comp) {
  auto d = m.degrees();
  d.erase(d.begin() + comp);
  return FreeModule<F>(m.ring_ptr(), std::move(d), m.order_kind());
}

template <class F>
ModuleMap<F> inclusion_map(const FreeModule<F>& ambient, const std::vector<Poly<F>>& gens) {
  std::vector<Poly<F>> cols;
  for (const auto& g : gens) {
    if (!g.is_zero()) cols.push_back(g);
  }
  return ModuleMap<F>::from_columns(ambient, std::move(cols));
}

}  // namespace

template <class F>
SubmoduleGB<F> preimage(const ModuleMap<F>& f, const std::vector<Poly<F>>& n_gens) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  const int t = tgt.rank();
  FreeModule<F> joint(tgt.ring_ptr(), tgt.degrees(), OrderKind::kPositionOverTerm);
  joint = joint.direct_sum(FreeModule<F>(src.ring_ptr(), src.degrees()));

  std::vector<Poly<F>> gens;
  for (int j = 0; j < src.rank(); ++j) {
    auto raw = f.column(j).terms();
    raw.push_back(Term<F>{Monomial{}, t + j, src.field().one()});
    gens.push_back(joint.normalize(std::move(raw)));
  }
  for (const auto& n : n_gens) {
    if (!n.is_zero()) gens.push_back(joint.normalize(n.terms()));
  }
  auto gb = groebner(joint, std::move(gens));

  std::vector<Poly<F>> projected;
  for (const auto& b : gb.basis()) {
    if (b.lead().comp >= t) projected.push_back(FreeModule<F>::shift_components(b, -t));
  }
  if (src.order_kind() == OrderKind::kPositionOverTerm) {
    return SubmoduleGB<F>(src, projected, projected, std::nullopt, gb.stats());
  }
  return groebner(src, std::move(projected));
}

template <class F>
SubmoduleGB<F> kernel(const ModuleMap<F>& f) {
  return preimage(f, {});
}

template <class F>
SubmoduleGB<F> image(const ModuleMap<F>& f) {
  return groebner(f.target(), f.columns());
}

template <class F>
ModuleMap<F> syzygies(const FreeModule<F>& ambient, const std::vector<Poly<F>>& gens) {
  auto f = ModuleMap<F>::from_columns(ambient, gens);
  auto k = kernel(f);
  return ModuleMap<F>::from_columns(f.source(), k.basis());
}

template <class F>
SubmoduleGB<F> colon(const SubmoduleGB<F>& n, const Poly<F>& f) {
  const auto& amb = n.ambient();
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!PolyRing<F>::is_homogeneous(f)) throw InhomogeneousInput("colon by an inhomogeneous element");
  const int df = f.lead().mono.degree();
  std::vector<int> d;
  for (int a : amb.degrees()) d.push_back(a + df);
  FreeModule<F> src(amb.ring_ptr(), std::move(d), amb.order_kind());
  std::vector<Poly<F>> cols;
  for (int i = 0; i < amb.rank(); ++i) cols.push_back(amb.embed(f, i));
  auto pre = preimage(ModuleMap<F>(src, amb, std::move(cols)), n.basis());
  // The preimage lives in a twist of the ambient; the vectors are the same.
  return groebner(amb, pre.basis());
}

template <class F>
SubmoduleGB<F> colon(const SubmoduleGB<F>& n, const std::vector<Poly<F>>& ideal) {
  std::optional<SubmoduleGB<F>> acc;
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    auto c = colon(n, g);
    acc = acc ? intersect(*acc, c) : std::move(c);
  }
  if (!acc) {
    // N : 0 is everything.
    std::vector<Poly<F>> all;
    for (int i = 0; i < n.ambient().rank(); ++i) all.push_back(n.ambient().basis(i));
    return groebner(n.ambient(), all);
  }
  return *acc;
}

template <class F>
SubmoduleGB<F> saturate(const SubmoduleGB<F>& n, const std::vector<Poly<F>>& ideal) {
  std::optional<SubmoduleGB<F>> acc;
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    SubmoduleGB<F> cur = n;
    while (true) {
      auto next = colon(cur, g);
      if (cur.contains(next)) break;
      cur = std::move(next);
    }
    acc = acc ? intersect(*acc, cur) : std::move(cur);
  }
  if (!acc) return colon(n, ideal);
  return *acc;
}

template <class F>
SubmoduleGB<F> intersect(const SubmoduleGB<F>& a, const SubmoduleGB<F>& b) {
  if (!(a.ambient() == b.ambient())) throw AmbientMismatch("intersection of submodules of different modules");
  auto inc = inclusion_map(a.ambient(), a.basis());
  auto pre = preimage(inc, b.basis());
  std::vector<Poly<F>> out;
  for (const auto& p : pre.basis()) out.push_back(inc.apply(p));
  return groebner(a.ambient(), std::move(out));
}

template <class F>
SubmoduleGB<F> annihilator(const GradedModule<F>& m) {
  const auto& amb = m.ambient();
  auto s = FreeModule<F>::ring_module(m.ring_ptr());
  std::optional<SubmoduleGB<F>> acc;
  for (int i = 0; i < amb.rank(); ++i) {
    FreeModule<F> src(amb.ring_ptr(), {amb.degree(i)});
    auto pre = preimage(ModuleMap<F>(src, amb, {amb.basis(i)}), m.gb().basis());
    auto ideal = groebner(s, pre.basis());
    acc = acc ? intersect(*acc, ideal) : std::move(ideal);
  }
  if (!acc) return groebner(s, {s.basis(0)});
  return *acc;
}

template <class F>
GradedModule<F> subquotient(const FreeModule<F>& ambient, const std::vector<Poly<F>>& gens,
                            const std::vector<Poly<F>>& relations) {
  auto inc = inclusion_map(ambient, gens);
  auto pre = preimage(inc, relations);
  return prune(GradedModule<F>::cokernel(inc.source(), pre.basis()));
}

template <class F>
GradedModule<F> colon_module(const GradedModule<F>& m, const Poly<F>& f) {
  auto c = colon(m.gb(), f);
  return subquotient(m.ambient(), c.basis(), m.gb().basis());
}

template <class F>
GradedModule<F> quotient_by_ideal(const GradedModule<F>& m, const std::vector<Poly<F>>& ideal) {
  const auto& amb = m.ambient();
  auto rels = m.relations();
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    for (int i = 0; i < amb.rank(); ++i) rels.push_back(amb.embed(g, i));
  }
  return GradedModule<F>::cokernel(amb, std::move(rels));
}

template <class F>
GradedModule<F> direct_sum(const GradedModule<F>& a, const GradedModule<F>& b) {
  auto amb = a.ambient().direct_sum(b.ambient());
  std::vector<Poly<F>> rels;
  for (const auto& r : a.relations()) rels.push_back(amb.normalize(r.terms()));
  for (const auto& r : b.relations()) {
    rels.push_back(amb.normalize(FreeModule<F>::shift_components(r, a.ambient().rank()).terms()));
  }
  return GradedModule<F>::cokernel(amb, std::move(rels));
}

template <class F>
GradedModule<F> prune(const GradedModule<F>& m) {
  FreeModule<F> amb = m.ambient();
  std::vector<Poly<F>> rels = m.relations();
  const F& k = amb.field();
  while (true) {
    int which = -1;
    int comp = -1;
    typename F::Element unit{};
    for (std::size_t r = 0; r < rels.size() && which < 0; ++r) {
      for (const auto& t : rels[r]) {
        if (t.mono.is_one()) {
          which = static_cast<int>(r);
          comp = t.comp;
          unit = t.coeff;
          break;
        }
      }
    }
    if (which < 0) break;
    const Poly<F> pivot = rels[static_cast<std::size_t>(which)];
    const auto inv = k.neg(k.inv(unit));
    std::vector<Poly<F>> next;
    auto reduced = without_component(amb, comp);
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (static_cast<int>(r) == which) continue;
      auto c = amb.entry(rels[r], comp);
      auto v = rels[r];
      if (!c.is_zero()) v = amb.add(v, amb.mul(arith::scale(k, c, inv), pivot));
      if (!v.is_zero()) next.push_back(drop_component(reduced, v, comp));
    }
    amb = std::move(reduced);
    rels = std::move(next);
  }
  return GradedModule<F>::cokernel(amb, std::move(rels));
}

template <class F>
bool is_zero_module(const GradedModule<F>& m) {
  const auto leads = m.gb().leading_monomials();
  for (const auto& l : leads) {
    bool unit = false;
    for (const auto& mono : l) unit = unit || mono.is_one();
    if (!unit) return false;
  }
  return true;
}

#define CHERN_INSTANTIATE(F)                                                                    \
  template SubmoduleGB<F> preimage(const ModuleMap<F>&, const std::vector<Poly<F>>&);          \
  template SubmoduleGB<F> kernel(const ModuleMap<F>&);                                         \
  template SubmoduleGB<F> image(const ModuleMap<F>&);                                          \
  template ModuleMap<F> syzygies(const FreeModule<F>&, const std::vector<Poly<F>>&);           \
  template SubmoduleGB<F> colon(const SubmoduleGB<F>&, const Poly<F>&);                        \
  template SubmoduleGB<F> colon(const SubmoduleGB<F>&, const std::vector<Poly<F>>&);           \
  template SubmoduleGB<F> saturate(const SubmoduleGB<F>&, const std::vector<Poly<F>>&);        \
  template SubmoduleGB<F> intersect(const SubmoduleGB<F>&, const SubmoduleGB<F>&);             \
  template SubmoduleGB<F> annihilator(const GradedModule<F>&);                                 \
  template GradedModule<F> subquotient(const FreeModule<F>&, const std::vector<Poly<F>>&,      \
                                       const std::vector<Poly<F>>&);                           \
  template GradedModule<F> colon_module(const GradedModule<F>&, const Poly<F>&);               \
  template GradedModule<F> quotient_by_ideal(const GradedModule<F>&, const std::vector<Poly<F>>&); \
  template GradedModule<F> direct_sum(const GradedModule<F>&, const GradedModule<F>&);         \
  template GradedModule<F> prune(const GradedModule<F>&);                                      \
  template bool is_zero_module(const GradedModule<F>&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
