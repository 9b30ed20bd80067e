#include "doctest.h"

#include "bolano/lindblad.hpp"
#include "bolano/oracle.hpp"
#include "support.hpp"

using namespace bolano;
using testing::P;
using testing::uniform;

namespace {

NormalPoly no(const LadderPoly& p) { return normal_order(p, ParallelConfig::serial()); }

LadderPoly small_poly(testing::Rng& rng) {
  return testing::random_poly(rng, uniform(rng, 1, 3), 3, 2);
}

}  // namespace

TEST_CASE("commutator antisymmetry and Jacobi") {
  testing::Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const LadderPoly a = small_poly(rng), b = small_poly(rng), c = small_poly(rng);
    CHECK(commutator_no(a, b) == -commutator_no(b, a));
    const LadderPoly ab = a * b - b * a, bc = b * c - c * b, ca = c * a - a * c;
    const NormalPoly jacobi = commutator_no(a, bc) + commutator_no(b, ca) + commutator_no(c, ab);
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("canonical commutation relations") {
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const LadderPoly bj = LadderPoly::annihilate(std::to_string(j));
      const LadderPoly bdk = LadderPoly::create(std::to_string(k));
      CHECK(commutator_no(bj, bdk) == NormalPoly(Scalar(j == k ? 1 : 0)));
      CHECK(commutator_no(bj, LadderPoly::annihilate(std::to_string(k))).is_zero());
    }
  }
}

TEST_CASE("normal_order is linear and commutes with dagger") {
  testing::Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const LadderPoly a = testing::random_poly(rng, 3, 6, 3);
    const LadderPoly b = testing::random_poly(rng, 3, 6, 3);
    const Scalar s = testing::random_scalar(rng);
    CHECK(no(a + s * b) == no(a) + s * no(b));
    CHECK(dagger(dagger(a)) == a);
    CHECK(no(dagger(a)) == no(dagger(no(a).to_ladder())));
  }
}

TEST_CASE("normal forms are fixed points") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const NormalPoly n = testing::random_normal_poly(rng, 5, 3, 3);
    CHECK(no(n.to_ladder()) == n);
    CHECK(flatten_and_swap_no(n.to_ladder()) == n);
  }
}

TEST_CASE("oscillator energy is conserved") {
  testing::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Scalar w = testing::random_scalar(rng);
    LindbladSpec spec{w * P("hbar*bd*b"), {}, uniform(rng, 0, 1) == 1};
    const auto eq = lme_expval_evo(spec, P("bd*b"));
    CHECK(eq.rhs.terms.empty());
    CHECK(eq.rhs.constant.is_zero());
  }
}

TEST_CASE("Hermitian observables pair up under conjugation") {
  const LadderPoly H = P("omega_0*(bd_1*b_1 + bd_2*b_2 + bd_3*b_3) + g*(bd_1*b_2 + bd_2*b_1 + "
                         "bd_2*b_3 + bd_3*b_2)");
  std::vector<DissipatorSpec> D;
  for (int k = 1; k <= 3; ++k) {
    const std::string m = std::to_string(k);
    D.emplace_back(Scalar::symbol("gamma_" + m), LadderPoly::annihilate(m));
    D.emplace_back(Scalar::symbol("p_" + m), LadderPoly::create(m));
  }
  const LindbladSpec spec{H, D, true};
  testing::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const LadderPoly A = testing::random_poly(rng, 2, 3, 3, false);
    if (no(A).is_zero()) continue;
    const auto eq = lme_expval_evo(spec, A);
    const auto adj = lme_expval_evo(spec, dagger(A));
    Expectation conj;
    conj.constant = eq.rhs.constant.conjugate();
    for (const auto& [ev, c] : eq.rhs.terms) conj.terms[ExpVal{ev.signature.dagger()}] = c.conjugate();
    CHECK(adj.rhs == conj);
  }
}
