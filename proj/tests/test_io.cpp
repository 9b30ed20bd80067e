#include "doctest.h"

#include "bolano/errors.hpp"
#include "bolano/normord.hpp"
#include "bolano/render.hpp"
#include "support.hpp"

using namespace bolano;
using testing::P;

namespace {

NormalPoly N(const char* text) { return normal_order(P(text)); }

EvolutionEquation evolve(const char* H, std::vector<DissipatorSpec> D, const char* A,
                         bool hbar_is_one = true) {
  return lme_expval_evo(LindbladSpec{P(H), std::move(D), hbar_is_one}, P(A));
}

}  // namespace

TEST_CASE("latex output of tutorial inputs") {
  CHECK(render(N("b*bd*b"), Format::Latex) == "b_{} + {b^\\dagger_{}} b_{}^{2}");
  CHECK(render(commutator_no(P("bd*b"), P("b")), Format::Latex) == "- b_{}");
  CHECK(render(commutator_no(P("bd_1*bd_2"), P("b_1*b_2")), Format::Latex) ==
        "-1 - {b^\\dagger_{1}} b_{1} - {b^\\dagger_{2}} b_{2}");
  CHECK(render(N("x*b_1*x^2*bd_1^2"), Format::Latex) ==
        "2 x^{3} {b^\\dagger_{1}} + x^{3} {b^\\dagger_{1}}^{2} b_{1}");
  CHECK(render(N("5"), Format::Latex) == "5");
  CHECK(render(N("-1/2*b"), Format::Latex) == "- \\frac{b_{}}{2}");
  CHECK(render(N("3/2"), Format::Latex) == "\\frac{3}{2}");
  CHECK(render(N("mu*q_0^2*b/2"), Format::Latex) == "\\frac{\\mu q_{0}^{2} b_{}}{2}");
}

TEST_CASE("latex equations") {
  CHECK(render(evolve("hbar*omega_0*bd*b", {}, "b", false), Format::Latex) ==
        "\\frac{d}{d t} {\\left\\langle b_{} \\right\\rangle} = "
        "- i \\omega_{0} {\\left\\langle b_{} \\right\\rangle}");
  CHECK(render(evolve("hbar*omega_0*bd*b", {}, "bd*b"), Format::Latex) ==
        "\\frac{d}{d t} {\\left\\langle {b^\\dagger_{}} b_{} \\right\\rangle} = 0");
  const auto phase = evolve("g*exp(-I*theta)*bd_2*b_1", {}, "b_2");
  CHECK(render(phase, Format::Latex) ==
        "\\frac{d}{d t} {\\left\\langle b_{2} \\right\\rangle} = "
        "- i g {\\left\\langle b_{1} \\right\\rangle} e^{- i \\theta}");
}

TEST_CASE("plain output") {
  CHECK(render(NormalPoly{}, Format::Plain) == "0");
  CHECK(render(N("b*bd*b"), Format::Plain) == "b + bd*b^2");
  CHECK(render(N("-x^(3/2)*I*bd_1^2 + exp(-I*t)/3"), Format::Plain) ==
        "1/3*exp(-I*t) - I*x^(3/2)*bd_1^2");
  CHECK(render(evolve("omega*bd*b", {}, "b"), Format::Plain) == "d/dt <b> = -I*omega*<b>");
}

TEST_CASE("plain output parses back to the same operator") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const NormalPoly n = testing::random_normal_poly(rng, testing::uniform(rng, 0, 6), 3, 3);
    const std::string text = render(n, Format::Plain);
    CAPTURE(text);
    CHECK(normal_order(P(text.c_str())) == n);
    CHECK(render(n, Format::Plain) == text);
  }
  const NormalPoly with_phase = N("exp(3/2*I*t)*y^(-2)*bd - 2*exp(-I*t)");
  CHECK(normal_order(P(render(with_phase, Format::Plain).c_str())) == with_phase);
}

TEST_CASE("records round-trip") {
  testing::Rng rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalPoly n = testing::random_normal_poly(rng, testing::uniform(rng, 0, 6), 3, 3);
    const auto back = parse_record(to_record(n).dump());
    REQUIRE(std::holds_alternative<NormalPoly>(back));
    CHECK(std::get<NormalPoly>(back) == n);
  }
  std::vector<DissipatorSpec> D{{Scalar::symbol("Gamma") * Scalar::phase(SymbolAtom{"phi"}, 1),
                                 P("b_2"), P("b_1")},
                                {Scalar::symbol("p"), P("bd_1")}};
  const auto eq = evolve("Omega*(b_1 + bd_1) + bd_1*b_2", D, "bd_1*b_1");
  const auto back = parse_record(render(eq, Format::Record));
  REQUIRE(std::holds_alternative<EvolutionEquation>(back));
  CHECK(std::get<EvolutionEquation>(back) == eq);
  CHECK(render(std::get<EvolutionEquation>(back), Format::Record) == render(eq, Format::Record));
}

TEST_CASE("record reader is strict") {
  nlohmann::json doc = to_record(N("2*bd*b"));
  CHECK(doc["schema_version"] == kRecordSchemaVersion);
  CHECK_NOTHROW(read_record(doc));

  auto broken = doc;
  broken.erase("schema_version");
  CHECK_THROWS_AS(read_record(broken), RecordError);

  broken = doc;
  broken["schema_version"] = 2;
  CHECK_THROWS_AS(read_record(broken), RecordError);

  broken = doc;
  broken["extra"] = 1;
  CHECK_THROWS_AS(read_record(broken), RecordError);

  broken = doc;
  broken["terms"][0]["signature"][0]["colour"] = "red";
  CHECK_THROWS_AS(read_record(broken), RecordError);

  broken = doc;
  broken["terms"][0]["signature"][0]["p"] = -1;
  CHECK_THROWS_AS(read_record(broken), RecordError);

  broken = doc;
  broken["terms"][0]["coeff"][0]["coeff"] = "1/0x";
  CHECK_THROWS_AS(read_record(broken), RecordError);

  broken = doc;
  broken["kind"] = "matrix";
  CHECK_THROWS_AS(read_record(broken), RecordError);

  CHECK_THROWS_AS(parse_record("{not json"), RecordError);
  CHECK_THROWS_AS(parse_record("[]"), RecordError);
}

TEST_CASE("rendering is deterministic") {
  const NormalPoly a = N("b_2*bd_1 + x*bd_2*b_1 + 3");
  const NormalPoly b = N("3 + x*bd_2*b_1 + b_2*bd_1");
  for (auto f : {Format::Plain, Format::Latex, Format::Record}) CHECK(render(a, f) == render(b, f));
}
