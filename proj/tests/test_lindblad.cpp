#include "doctest.h"

#include "bolano/errors.hpp"
#include "bolano/lindblad.hpp"
#include "bolano/oracle.hpp"
#include "support.hpp"

using namespace bolano;
using testing::P;

namespace {

NormalPoly N(const char* text) { return normal_order(P(text)); }

Expectation E(const char* text) { return wrap_expectation(N(text)); }

EvolutionEquation evolve(const char* H, std::vector<DissipatorSpec> D, const char* A,
                         bool hbar_is_one = true) {
  LindbladSpec spec{P(H), std::move(D), hbar_is_one};
  return lme_expval_evo(spec, P(A));
}

}  // namespace

TEST_CASE("wrap_expectation folds <1> into the constant") {
  const Expectation e = E("3 + 2*bd*b - x");
  CHECK(e.constant == Scalar(3) - Scalar::symbol("x"));
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.begin()->second == Scalar(2));
}

TEST_CASE("hamiltonian trace of the oscillator") {
  const NormalPoly t = hamiltonian_trace(P("hbar*omega_0*bd*b"), P("b"));
  CHECK(t == N("hbar*omega_0*b"));
}

TEST_CASE("dissipator traces") {
  CHECK(dissipator_trace(P("b"), P("b"), P("bd*b")) == N("-bd*b"));
  CHECK(dissipator_trace(P("bd"), P("bd"), P("bd*b")) == N("1 + bd*b"));
  CHECK(dissipator_trace(P("b_2"), P("b_1"), P("b_1")) == N("-1/2*b_2"));
  CHECK(dissipator_trace(P("b"), P("b"), P("b")) == N("-1/2*b"));
}

TEST_CASE("trace identities hold on a masked Fock block") {
  // Tr(D[O,P](rho) A) = Tr(rho X) for every rho means
  // X = 1/2 (2 P† A O - P† O A - A P† O) as operators.
  const char* cases[][3] = {{"b", "b", "bd*b"}, {"bd^2", "bd^2", "b*bd^2"},
                            {"b_2", "b_1", "bd_1*b_2"}, {"bd_1*b_2", "b_1", "b_1*b_2"}};
  for (const auto& c : cases) {
    const LadderPoly O = P(c[0]), Pp = P(c[1]), A = P(c[2]);
    const LadderPoly Pd = dagger(Pp);
    const LadderPoly direct = Pd * A * O - Scalar(Rational(1, 2)) * (Pd * O * A) -
                              Scalar(Rational(1, 2)) * (A * Pd * O);
    const NormalPoly x = dissipator_trace(O, Pp, A);
    std::vector<ModeLabel> modes = modes_of(direct);
    if (modes.empty()) modes.push_back(ModeLabel{});
    unsigned degree = 0;
    for (const auto& [w, coeff] : direct.terms()) degree = std::max(degree, w.degree());
    const unsigned dim = degree + 4;
    CAPTURE(c[2]);
    CHECK(fock_matrix(direct, modes, dim).block_equal(fock_matrix(x, modes, dim), degree));
    CHECK(x == flatten_and_swap_no(direct));
  }
}

TEST_CASE("oscillator equations") {
  const auto keep = evolve("hbar*omega_0*bd*b", {}, "b", false);
  Expectation expected;
  expected.terms[ExpVal{N("b").entries().begin()->first}] =
      Scalar(-1) * Scalar::imaginary_unit() * Scalar::symbol("omega_0");
  CHECK(keep.rhs == expected);
  CHECK(keep.observable == N("b"));
  CHECK(evolve("hbar*omega_0*bd*b", {}, "b").rhs == expected);

  const auto energy = evolve("hbar*omega_0*bd*b", {}, "bd*b");
  CHECK(energy.rhs.terms.empty());
  CHECK(energy.rhs.constant.is_zero());
}

TEST_CASE("hbar stays symbolic when asked") {
  const auto eq = evolve("omega*bd*b", {}, "b", false);
  CHECK(eq.rhs.terms.begin()->second ==
        Scalar(-1) * Scalar::imaginary_unit() * Scalar::symbol("omega") * Scalar::symbol("hbar", -1));
}

TEST_CASE("damped oscillator with pumping") {
  std::vector<DissipatorSpec> D{{Scalar::symbol("gamma"), P("b")}, {Scalar::symbol("p"), P("bd")}};
  const auto eq = evolve("omega*bd*b", D, "bd*b");
  Expectation expected = E("p + (p - gamma)*bd*b");
  CHECK(eq.rhs == expected);
}

TEST_CASE("complex rates multiply the trace unchanged") {
  const Scalar rate = Scalar::symbol("Gamma") * Scalar::phase(SymbolAtom{"phi"}, 1);
  const auto eq = evolve("0", {{rate, P("b_2"), P("b_1")}}, "b_1");
  CHECK(eq.rhs == wrap_expectation(rate * N("-1/2*b_2")));
}

TEST_CASE("empty observable") {
  CHECK_THROWS_AS(evolve("bd*b", {}, "0"), EmptyObservable);
  CHECK_THROWS_AS(evolve("bd*b", {}, "b - b"), EmptyObservable);
}

TEST_CASE("scalar observable has zero derivative") {
  const auto eq = evolve("bd*b", {{1, P("b")}}, "5");
  CHECK(eq.rhs.terms.empty());
  CHECK(eq.rhs.constant.is_zero());
}
