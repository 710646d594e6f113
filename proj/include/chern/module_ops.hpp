#pragma once

#include <vector>

#include "chern/groebner.hpp"

namespace chern {

/// {v in source : f(v) in N}, where N is generated by n_gens inside
/// f.target(). Computed by elimination in target + source.
template <class F>
SubmoduleGB<F> preimage(const ModuleMap<F>& f, const std::vector<Poly<F>>& n_gens);

/// Kernel of f as a submodule of f.source().
template <class F>
SubmoduleGB<F> kernel(const ModuleMap<F>& f);

/// Image of f as a submodule of f.target().
template <class F>
SubmoduleGB<F> image(const ModuleMap<F>& f);

/// A map onto the module of syzygies of gens: its columns generate all
/// relations sum c_j gens_j = 0.
template <class F>
ModuleMap<F> syzygies(const FreeModule<F>& ambient, const std::vector<Poly<F>>& gens);

/// Syzygies of the generators the basis was computed from.
template <class F>
ModuleMap<F> syzygies(const SubmoduleGB<F>& gb) {
  return syzygies(gb.ambient(), gb.generators());
}

/// N : f = {v : f v in N}. f must be nonzero and homogeneous.
template <class F>
SubmoduleGB<F> colon(const SubmoduleGB<F>& n, const Poly<F>& f);

/// N : I for an ideal given by generators.
template <class F>
SubmoduleGB<F> colon(const SubmoduleGB<F>& n, const std::vector<Poly<F>>& ideal);

/// N : I^infinity.
template <class F>
SubmoduleGB<F> saturate(const SubmoduleGB<F>& n, const std::vector<Poly<F>>& ideal);

template <class F>
SubmoduleGB<F> intersect(const SubmoduleGB<F>& a, const SubmoduleGB<F>& b);

template <class F>
bool same_submodule(const SubmoduleGB<F>& a, const SubmoduleGB<F>& b) {
  return a.contains(b) && b.contains(a);
}

/// ann(M) as an ideal (a submodule of the rank-one free module).
template <class F>
SubmoduleGB<F> annihilator(const GradedModule<F>& m);

/// (gens + relations) / relations inside ambient, re-presented on the gens
/// and pruned.
template <class F>
GradedModule<F> subquotient(const FreeModule<F>& ambient, const std::vector<Poly<F>>& gens,
                            const std::vector<Poly<F>>& relations);

/// 0 :_M f as a module.
template <class F>
GradedModule<F> colon_module(const GradedModule<F>& m, const Poly<F>& f);

/// M / I M.
template <class F>
GradedModule<F> quotient_by_ideal(const GradedModule<F>& m, const std::vector<Poly<F>>& ideal);

template <class F>
GradedModule<F> direct_sum(const GradedModule<F>& a, const GradedModule<F>& b);

/// Removes generators killed by relations with a unit entry. The result is
/// isomorphic to m and its generators are minimal.
template <class F>
GradedModule<F> prune(const GradedModule<F>& m);

/// True when the module has no nonzero element (the relations span the
/// ambient module).
template <class F>
bool is_zero_module(const GradedModule<F>& m);

}  // namespace chern
