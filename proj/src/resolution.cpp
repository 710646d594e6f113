#include "chern/resolution.hpp"

namespace chern {

template <class F>
std::vector<int> FreeResolution<F>::betti() const {
  std::vector<int> out;
  for (int i = 0; i <= length(); ++i) out.push_back(modules[static_cast<std::size_t>(i)].rank());
  return out;
}

template <class F>
std::vector<std::map<int, int>> FreeResolution<F>::graded_betti() const {
  std::vector<std::map<int, int>> out;
  for (int i = 0; i <= length(); ++i) {
    std::map<int, int> row;
    for (int d : modules[static_cast<std::size_t>(i)].degrees()) ++row[d];
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

/// Generators of a submodule together with generators of their syzygies,
/// the latter living in a free module with one basis vector per generator.
template <class F>
struct GeneratorSet {
  FreeModule<F> source;
  std::vector<Poly<F>> gens;
  std::vector<Poly<F>> syz;
};

// Drops generators that are combinations of the others: a syzygy with a
// unit entry at j expresses gens[j] through the rest.
template <class F>
void minimize(GeneratorSet<F>& g) {
  const F& k = g.source.field();
  while (true) {
    int zi = -1;
    int j = -1;
    typename F::Element unit{};
    for (std::size_t a = 0; a < g.syz.size() && zi < 0; ++a) {
      for (const auto& t : g.syz[a]) {
        if (t.mono.is_one()) {
          zi = static_cast<int>(a);
          j = t.comp;
          unit = t.coeff;
          break;
        }
      }
    }
    if (zi < 0) return;
    const Poly<F> z = g.syz[static_cast<std::size_t>(zi)];
    const auto inv = k.neg(k.inv(unit));
    auto d = g.source.degrees();
    d.erase(d.begin() + j);
    FreeModule<F> reduced(g.source.ring_ptr(), std::move(d), g.source.order_kind());
    std::vector<Poly<F>> next;
    for (std::size_t a = 0; a < g.syz.size(); ++a) {
      if (static_cast<int>(a) == zi) continue;
      auto v = g.syz[a];
      auto c = g.source.entry(v, j);
      if (!c.is_zero()) v = g.source.add(v, g.source.mul(arith::scale(k, c, inv), z));
      if (v.is_zero()) continue;
      std::vector<Term<F>> raw;
      for (const auto& t : v) raw.push_back(Term<F>{t.mono, t.comp > j ? t.comp - 1 : t.comp, t.coeff});
      next.push_back(reduced.normalize(std::move(raw)));
    }
    g.gens.erase(g.gens.begin() + j);
    g.syz = std::move(next);
    g.source = std::move(reduced);
  }
}

template <class F>
GeneratorSet<F> with_syzygies(const FreeModule<F>& ambient, std::vector<Poly<F>> gens) {
  auto syz = syzygies(ambient, gens);
  GeneratorSet<F> g{syz.target(), std::move(gens), syz.columns()};
  minimize(g);
  return g;
}

}  // namespace

template <class F>
FreeResolution<F> minimal_free_resolution(const GradedModule<F>& m, int max_len) {
  const int bound = max_len < 0 ? m.ring().num_vars() + 1 : max_len;
  auto pruned = prune(m);
  FreeResolution<F> res;
  res.modules.push_back(pruned.ambient());
  std::vector<Poly<F>> gens = pruned.relations();
  FreeModule<F> current = pruned.ambient();
  for (int step = 1; step <= bound && !gens.empty(); ++step) {
    auto g = with_syzygies(current, std::move(gens));
    res.maps.push_back(ModuleMap<F>(g.source, current, g.gens));
    res.modules.push_back(g.source);
    current = g.source;
    gens = std::move(g.syz);
  }
  return res;
}

template struct FreeResolution<PrimeField>;
template struct FreeResolution<RationalField>;
template FreeResolution<PrimeField> minimal_free_resolution(const GradedModule<PrimeField>&, int);
template FreeResolution<RationalField> minimal_free_resolution(const GradedModule<RationalField>&, int);

}  // namespace chern
