#include "chern/invariants.hpp"

#include <sstream>

namespace chern {

long long HdegReport::torsion(int i) const {
  if (i < 1 || i > static_cast<int>(torsions.size())) throw std::out_of_range("torsion index out of range");
  return torsions[static_cast<std::size_t>(i - 1)];
}

bool HdegReport::chain_holds() const {
  if (hdeg < deg) return false;
  if (!torsions.empty() && hdeg <= torsions.front()) return false;
  for (std::size_t i = 1; i < torsions.size(); ++i) {
    if (torsions[i] > torsions[i - 1]) return false;
  }
  return true;
}

namespace {

template <class F>
std::string presentation_key(const GradedModule<F>& m) {
  std::ostringstream out;
  const auto& amb = m.ambient();
  const F& k = amb.field();
  for (int d : amb.degrees()) out << d << ',';
  out << '|';
  for (const auto& rel : m.gb().basis()) {
    for (const auto& t : rel) {
      out << t.comp << ':' << k.to_string(t.coeff) << ':';
      for (int v = 0; v < amb.ring().num_vars(); ++v) out << t.mono[v] << '.';
      out << ';';
    }
    out << '|';
  }
  return out.str();
}

template <class F>
std::vector<long long> torsions_from(int r, const std::vector<long long>& dual_hdeg) {
  std::vector<long long> out;
  for (int i = 1; i <= r - 1; ++i) {
    long long t = 0;
    for (int j = 1; j <= r - i; ++j) t += binomial(r - i - 1, j - 1) * dual_hdeg[static_cast<std::size_t>(j)];
    out.push_back(t);
  }
  return out;
}

}  // namespace

template <class F>
HdegReport HdegCalculator<F>::report(const GradedModule<F>& m) {
  HdegReport rep;
  const int r = dim_module(m);
  if (r == kDimensionOfZero) {
    rep.r = -1;
    return rep;
  }
  rep.r = r;
  if (r == 0) {
    rep.hdeg = *length(m);
    rep.deg = rep.hdeg;
    return rep;
  }
  rep.deg = samuel_coefficients(m, q_, options_).e_at(0);
  const auto prof = local_cohomology_lengths(m);
  rep.hdeg = rep.deg;
  for (int j = 0; j < r; ++j) {
    const long long v = (*this)(prof.duals[static_cast<std::size_t>(j)]);
    rep.dual_hdeg.push_back(v);
    rep.hdeg += binomial(r - 1, j) * v;
  }
  rep.torsions = torsions_from<F>(r, rep.dual_hdeg);
  return rep;
}

template <class F>
long long HdegCalculator<F>::operator()(const GradedModule<F>& m) {
  const auto key = presentation_key(m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const long long v = report(m).hdeg;
  memo_.emplace(key, v);
  return v;
}

template <class F>
long long torsion(const GradedModule<F>& m, const ParameterIdeal<F>& q, int i) {
  const auto rep = hdeg(m, q);
  if (rep.r < 2) throw std::out_of_range("torsions need dim M >= 2");
  return rep.torsion(i);
}

template <class F>
BoundCheck check_e1_torsion_bound(const GradedModule<F>& m, const ParameterIdeal<F>& q) {
  const auto e = hilbert_coefficients(m, q);
  if (e.r < 2) throw std::invalid_argument("the torsion bound needs dim M >= 2");
  return make_bound(-e.e_at(1), hdeg(m, q).torsion(1));
}

template <class F>
BoundCheck check_chi1_hdeg_bound(const GradedModule<F>& m, const ParameterIdeal<F>& q) {
  const auto chi1 = koszul_homology(m, q).chi1;
  const auto rep = hdeg(m, q);
  auto out = make_bound(chi1, rep.hdeg - rep.deg);
  out.pass = out.pass && q.colength <= rep.hdeg;
  return out;
}

template <class F>
bool is_d_sequence(const GradedModule<F>& m, const std::vector<Poly<F>>& x) {
  const auto& s = FreeModule<F>::ring_module(m.ring_ptr());
  const int r = static_cast<int>(x.size());
  for (int i = 0; i < r; ++i) {
    const std::vector<Poly<F>> first(x.begin(), x.begin() + i);
    const auto n = quotient_by_ideal(m, first).gb();
    for (int k = i; k < r; ++k) {
      const auto& xk = x[static_cast<std::size_t>(k)];
      const auto prod = s.mul(x[static_cast<std::size_t>(i)], xk);
      if (!same_submodule(colon(n, prod), colon(n, xk))) return false;
    }
  }
  return true;
}

template <class F>
long long hilbert_characteristic(const GradedModule<F>& m, const ParameterIdeal<F>& q, const SamuelOptions& options) {
  const auto e = hilbert_coefficients(m, q, options);
  long long h = 0;
  for (int i = 0; i <= e.r; ++i) h += (i % 2 == 0 ? 1 : -1) * e.e_at(i);
  return h;
}

template <class F>
BettiBoundReport betti_bound_check(const GradedModule<F>& m, const ParameterIdeal<F>& q) {
  BettiBoundReport rep;
  rep.colength = q.colength;
  rep.betti_module = minimal_free_resolution(m).betti();
  std::vector<Poly<F>> vars;
  for (int i = 0; i < m.ring().num_vars(); ++i) vars.push_back(m.ring().variable(i));
  rep.betti_residue_field = minimal_free_resolution(GradedModule<F>::quotient_ring(m.ring_ptr(), vars)).betti();
  rep.pass = true;
  for (std::size_t i = 0; i < rep.betti_module.size(); ++i) {
    const long long bk = i < rep.betti_residue_field.size() ? rep.betti_residue_field[i] : 0;
    rep.pass = rep.pass && rep.betti_module[i] <= rep.colength * bk;
  }
  return rep;
}

template <class F>
BuchsbaumData buchsbaum_data(const CohomologyProfile<F>& prof) {
  BuchsbaumData out;
  out.generalized_cm = prof.generalized_cm();
  const int r = prof.dim;
  if (!out.generalized_cm || r < 1) return out;
  for (int i = 0; i <= r - 1; ++i) out.i_m += binomial(r - 1, i) * prof.h_at(i);
  if (r == 1) {
    out.bound_s = prof.h_at(0);
  } else {
    for (int i = 1; i <= r - 1; ++i) out.bound_s += binomial(r - 2, i - 1) * prof.h_at(i);
  }
  return out;
}

template <class F>
HdegAxiomReport hdeg_axioms(const GradedModule<F>& m, const ParameterIdeal<F>& q, const Poly<F>& h) {
  HdegAxiomReport rep;
  HdegCalculator<F> calc(q.gens);
  const auto full = calc.report(m);
  rep.hdeg = full.hdeg;

  auto h0 = zeroth_local_cohomology(m);
  rep.h0 = *length(h0);
  std::vector<Poly<F>> vars;
  for (int i = 0; i < m.ring().num_vars(); ++i) vars.push_back(m.ring().variable(i));
  auto reduced = GradedModule<F>::cokernel(m.ambient(), saturate(m.gb(), vars).basis());
  rep.hdeg_quotient_h0 = calc(reduced);
  rep.torsion_part = rep.hdeg == rep.hdeg_quotient_h0 + rep.h0;

  const auto prof = local_cohomology_lengths(m);
  rep.hyperplane_applies = prof.depth >= 1 && full.r >= 1;
  rep.hyperplane = true;
  if (rep.hyperplane_applies) {
    const auto section = calc.report(quotient_by_ideal(m, {h}));
    rep.hdeg_section = section.hdeg;
    rep.hyperplane = section.hdeg <= full.hdeg;
    for (std::size_t i = 0; i < section.torsions.size(); ++i) {
      rep.hyperplane = rep.hyperplane && section.torsions[i] <= full.torsions[i];
    }
  }
  rep.calibration_applies = prof.cohen_macaulay();
  rep.calibration = !rep.calibration_applies || full.hdeg == full.deg;
  rep.pass = rep.torsion_part && rep.hyperplane && rep.calibration;
  return rep;
}

template <class F>
ErConventionReport er_convention(const GradedModule<F>& m, const ParameterIdeal<F>& q) {
  ErConventionReport rep;
  const auto e = hilbert_coefficients(m, q);
  rep.r = e.r;
  rep.e_r = e.e_at(e.r);
  rep.lambda_m0 = *length(zeroth_local_cohomology(m));
  rep.matches_unsigned = rep.e_r == rep.lambda_m0;
  rep.matches_signed = rep.e_r == (e.r % 2 == 0 ? 1 : -1) * rep.lambda_m0;
  return rep;
}

template <class F>
QuasiDegreeReport quasi_degree_check(const GradedModule<F>& m, const ParameterIdeal<F>& q) {
  QuasiDegreeReport rep;
  rep.h = hilbert_characteristic(m, q);
  const auto prof = local_cohomology_lengths(m);
  rep.section_applies = prof.depth >= 1;
  rep.section = true;
  if (rep.section_applies) {
    const auto quot = quotient_by_ideal(m, {q.gens.front()});
    const std::vector<Poly<F>> rest(q.gens.begin() + 1, q.gens.end());
    const auto e = samuel_coefficients(quot, rest);
    for (int i = 0; i <= e.r; ++i) rep.h_section += (i % 2 == 0 ? 1 : -1) * e.e_at(i);
    rep.section = rep.h == rep.h_section;
  }
  std::vector<Poly<F>> vars;
  for (int i = 0; i < m.ring().num_vars(); ++i) vars.push_back(m.ring().variable(i));
  const auto reduced = GradedModule<F>::cokernel(m.ambient(), saturate(m.gb(), vars).basis());
  rep.lambda_h0 = *length(zeroth_local_cohomology(m));
  const auto e = samuel_coefficients(reduced, q.gens);
  // M/H^0 keeps the dimension of M, so the same number of coefficients enter.
  for (int i = 0; i <= static_cast<int>(q.gens.size()); ++i) rep.h_quotient += (i % 2 == 0 ? 1 : -1) * e.e_at(i);
  rep.torsion_part = rep.h == rep.h_quotient + rep.lambda_h0;
  rep.pass = rep.section && rep.torsion_part;
  return rep;
}

template class HdegCalculator<PrimeField>;
template class HdegCalculator<RationalField>;

#define CHERN_INSTANTIATE(F)                                                                                  \
  template long long torsion(const GradedModule<F>&, const ParameterIdeal<F>&, int);                          \
  template BoundCheck check_e1_torsion_bound(const GradedModule<F>&, const ParameterIdeal<F>&);              \
  template BoundCheck check_chi1_hdeg_bound(const GradedModule<F>&, const ParameterIdeal<F>&);               \
  template bool is_d_sequence(const GradedModule<F>&, const std::vector<Poly<F>>&);                          \
  template long long hilbert_characteristic(const GradedModule<F>&, const ParameterIdeal<F>&,                \
                                            const SamuelOptions&);                                            \
  template BettiBoundReport betti_bound_check(const GradedModule<F>&, const ParameterIdeal<F>&);             \
  template BuchsbaumData buchsbaum_data(const CohomologyProfile<F>&);                                         \
  template HdegAxiomReport hdeg_axioms(const GradedModule<F>&, const ParameterIdeal<F>&, const Poly<F>&);    \
  template ErConventionReport er_convention(const GradedModule<F>&, const ParameterIdeal<F>&);               \
  template QuasiDegreeReport quasi_degree_check(const GradedModule<F>&, const ParameterIdeal<F>&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
