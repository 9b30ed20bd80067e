#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bolano/normord.hpp"

namespace bolano {

/// One dissipator gamma * D[O, P]. P defaults to O.
struct DissipatorSpec {
  Scalar rate;
  LadderPoly O;
  LadderPoly P;

  DissipatorSpec(Scalar rate, LadderPoly O);
  DissipatorSpec(Scalar rate, LadderPoly O, LadderPoly P);
};

struct LindbladSpec {
  LadderPoly H;
  std::vector<DissipatorSpec> dissipators;
  bool hbar_is_one = true;
};

/// Expectation value of one normal-ordered monomial with unit coefficient.
/// <1> is never represented; it folds into a constant.
struct ExpVal {
  NormalSignature signature;

  friend bool operator==(const ExpVal&, const ExpVal&) = default;
  friend std::strong_ordering operator<=>(const ExpVal&, const ExpVal&) = default;
};

struct Expectation {
  std::map<ExpVal, Scalar> terms;
  Scalar constant;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

/// d<A>/dt = sum_k c_k <X_k> + constant.
struct EvolutionEquation {
  /// Normal-ordered A, used for display.
  NormalPoly observable;
  Expectation rhs;

  friend bool operator==(const EvolutionEquation&, const EvolutionEquation&) = default;
};

/// <n> by linearity, with <1> = 1.
Expectation wrap_expectation(const NormalPoly& n);

/// Normal-ordered [A, H], the integrand of Tr([H, rho] A).
NormalPoly hamiltonian_trace(const LadderPoly& H, const LadderPoly& A,
                             const ParallelConfig& cfg = {});

/// Normal-ordered 1/2 [P†, A] O + 1/2 P† [A, O], the integrand of
/// Tr(D[O, P](rho) A).
NormalPoly dissipator_trace(const LadderPoly& O, const LadderPoly& P,
                            const LadderPoly& A, const ParallelConfig& cfg = {});

/// Assembles d<A>/dt = -i/hbar <[A,H]> + sum_j gamma_j Tr(D_j A).
/// When spec.hbar_is_one, hbar is set to 1 everywhere first.
/// Throws EmptyObservable for A = 0.
EvolutionEquation lme_expval_evo(const LindbladSpec& spec, const LadderPoly& A,
                                 const ParallelConfig& cfg = {});

}  // namespace bolano
