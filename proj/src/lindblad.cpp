#include "bolano/lindblad.hpp"

#include "bolano/errors.hpp"

namespace bolano {

DissipatorSpec::DissipatorSpec(Scalar rate, LadderPoly O)
    : rate(std::move(rate)), O(O), P(std::move(O)) {}

DissipatorSpec::DissipatorSpec(Scalar rate, LadderPoly O, LadderPoly P)
    : rate(std::move(rate)), O(std::move(O)), P(std::move(P)) {}

Expectation wrap_expectation(const NormalPoly& n) {
  Expectation out;
  for (const auto& [sig, coeff] : n.entries()) {
    if (sig.empty()) {
      out.constant += coeff;
    } else {
      out.terms.emplace(ExpVal{sig}, coeff);
    }
  }
  return out;
}

NormalPoly hamiltonian_trace(const LadderPoly& H, const LadderPoly& A,
                             const ParallelConfig& cfg) {
  return commutator_no(A, H, cfg);
}

NormalPoly dissipator_trace(const LadderPoly& O, const LadderPoly& P,
                            const LadderPoly& A, const ParallelConfig& cfg) {
  const LadderPoly Pd = dagger(P);
  const Scalar half(Rational(1, 2));
  const LadderPoly integrand =
      half * ((Pd * A - A * Pd) * O) + half * (Pd * (A * O - O * A));
  return normal_order(integrand, cfg);
}

EvolutionEquation lme_expval_evo(const LindbladSpec& spec, const LadderPoly& A,
                                 const ParallelConfig& cfg) {
  if (A.is_zero()) throw EmptyObservable("observable is zero");

  auto prepare = [&](const LadderPoly& p) {
    return spec.hbar_is_one ? p.substitute_one(kHbar) : p;
  };
  const LadderPoly observable = prepare(A);
  if (observable.is_zero()) throw EmptyObservable("observable is zero");

  Scalar prefactor = -Scalar::imaginary_unit();
  if (!spec.hbar_is_one) prefactor *= Scalar::symbol(kHbar, -1);

  NormalPoly total = prefactor * hamiltonian_trace(prepare(spec.H), observable, cfg);
  for (const auto& d : spec.dissipators) {
    const Scalar rate = spec.hbar_is_one ? d.rate.substitute_one(kHbar) : d.rate;
    total += rate * dissipator_trace(prepare(d.O), prepare(d.P), observable, cfg);
  }
  return EvolutionEquation{normal_order(observable, cfg), wrap_expectation(total)};
}

}  // namespace bolano
