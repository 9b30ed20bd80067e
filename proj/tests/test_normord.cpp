#include "doctest.h"

#include <cstdlib>

#include "bolano/errors.hpp"
#include "bolano/normord.hpp"
#include "bolano/oracle.hpp"
#include "support.hpp"

using namespace bolano;
using testing::P;

namespace {

NormalSignature sig(std::vector<ModePowers> entries) { return NormalSignature(std::move(entries)); }

struct EnvGuard {
  explicit EnvGuard(std::initializer_list<std::pair<const char*, const char*>> vars) {
    for (const auto& [k, v] : vars) {
      names.push_back(k);
      ::setenv(k, v, 1);
    }
  }
  ~EnvGuard() {
    for (const char* k : names) ::unsetenv(k);
  }
  std::vector<const char*> names;
};

}  // namespace

TEST_CASE("tutorial normal orderings") {
  const ModeLabel m1("1"), m2("2"), none;

  NormalPoly a;
  a.add(sig({{none, 0, 1}}), 1);
  a.add(sig({{none, 1, 2}}), 1);
  CHECK(normal_order(P("b*bd*b")) == a);

  NormalPoly b;
  b.add(sig({{m1, 1, 1}, {m2, 1, 0}}), 2);
  b.add(sig({{m1, 1, 1}, {m2, 2, 1}}), 1);
  b.add(sig({{m2, 1, 0}}), 2);
  b.add(sig({{m2, 2, 1}}), 1);
  CHECK(normal_order(P("b_2*b_1*bd_2^2*bd_1")) == b);

  NormalPoly c;
  c.add(sig({{m2, 0, 1}}), 1);
  c.add(sig({{m1, 1, 1}, {m2, 0, 2}}), 5);
  c.add(sig({{m1, 0, 1}, {m2, 1, 0}}), 1);
  CHECK(normal_order(P("b_1*bd_2 + 5*b_2**2*bd_1*b_1 + b_2")) == c);

  const Scalar x3 = Scalar::symbol("x", 3);
  NormalPoly d;
  d.add(sig({{m1, 1, 0}}), x3.scaled(2));
  d.add(sig({{m1, 2, 1}}), x3);
  CHECK(normal_order(P("x*b_1*x**2*bd_1**2")) == d);
}

TEST_CASE("tutorial commutators") {
  const ModeLabel m1("1"), m2("2"), none;
  NormalPoly minus_b;
  minus_b.add(sig({{none, 0, 1}}), -1);
  CHECK(commutator_no(P("bd*b"), P("b")) == minus_b);

  NormalPoly two;
  two.add(NormalSignature{}, -1);
  two.add(sig({{m1, 1, 1}}), -1);
  two.add(sig({{m2, 1, 1}}), -1);
  CHECK(commutator_no(P("bd_1*bd_2"), P("b_1*b_2")) == two);

  NormalPoly poly;
  poly.add(sig({{m2, 0, 2}}), 8);
  poly.add(sig({{m1, 2, 0}}), 3);
  CHECK(commutator_no(P("b_1 + 2*b_2^2"), P("bd_1^3 + 2*bd_2*b_2")) == poly);

  NormalPoly sym;
  sym.add(sig({{none, 0, 1}}), Scalar::symbol("x", Rational(3, 2)));
  CHECK(commutator_no(P("x*b_1"), P("x**(0.5)*bd_1*b")) == sym);
}

TEST_CASE("scalars and zero") {
  CHECK(normal_order(P("5")) == NormalPoly(Scalar(5)));
  CHECK(normal_order(P("0*b")).is_zero());
  CHECK(normal_order(LadderPoly{}).is_zero());
  CHECK(commutator_no(P("b_1"), P("b_1")).is_zero());
  CHECK(commutator_no(P("b_1"), P("bd_2")).is_zero());
}

TEST_CASE("factor_by_mode keeps per-mode order") {
  const auto term = P("3*b_2*bd_1*bd_2*b_1").term_list().front();
  const auto split = factor_by_mode(term);
  CHECK(split.scalar == Scalar(3));
  REQUIRE(split.words.size() == 2);
  CHECK(split.words.at(ModeLabel("1")) == P("bd_1*b_1").terms().begin()->first);
  CHECK(split.words.at(ModeLabel("2")) == P("b_2*bd_2").terms().begin()->first);
}

TEST_CASE("final_sort overloads agree") {
  std::vector<std::pair<ModeLabel, std::vector<ModeTerm>>> series{
      {ModeLabel("a"), {{0, 1, 2}, {1, 2, 1}}},
      {ModeLabel("b"), {{1, 0, 3}}}};
  std::vector<NormalPoly> polys;
  for (const auto& [mode, terms] : series) {
    NormalPoly n;
    for (const auto& t : terms) n.add(NormalSignature::single(mode, t.p, t.q), Scalar(Rational(t.coeff)));
    polys.push_back(n);
  }
  const Scalar s = Scalar::symbol("g").scaled(Rational(1, 2));
  CHECK(final_sort(series, s) == final_sort(polys, s));
  CHECK(final_sort(series, s).size() == 2);
}

TEST_CASE("parallel configuration") {
  ParallelConfig cfg;
  cfg.workers = 4;
  cfg.min_summands = 0;
  CHECK(cfg.effective_min_summands() == 2);
  CHECK_FALSE(cfg.runs_parallel(1));
  CHECK(cfg.runs_parallel(2));
  cfg.enable = false;
  CHECK_FALSE(cfg.runs_parallel(100));
  CHECK_FALSE(ParallelConfig::serial().runs_parallel(100));
  CHECK(ParallelConfig::default_workers() >= 1);
}

TEST_CASE("environment overrides") {
  {
    EnvGuard env({{"BOLANO_WORKERS", "3"}, {"BOLANO_MIN_SUMMANDS", "7"}, {"BOLANO_PARALLEL", "0"}});
    const auto cfg = ParallelConfig::from_env();
    CHECK(cfg.workers == 3);
    CHECK(cfg.min_summands == 7);
    CHECK_FALSE(cfg.enable);
  }
  {
    EnvGuard env({{"BOLANO_WORKERS", "two"}});
    CHECK_THROWS_AS(ParallelConfig::from_env(), std::invalid_argument);
  }
  {
    EnvGuard env({{"BOLANO_WORKERS", "0"}});
    CHECK_THROWS_AS(ParallelConfig::from_env(), std::invalid_argument);
  }
  {
    EnvGuard env({{"BOLANO_PARALLEL", "yes"}});
    CHECK_THROWS_AS(ParallelConfig::from_env(), std::invalid_argument);
  }
}

TEST_CASE("worker count does not change the result") {
  testing::Rng rng(5);
  const LadderPoly p = testing::random_poly(rng, 40, 7, 3);
  const NormalPoly serial = normal_order(p, ParallelConfig::serial());
  for (unsigned w : {2u, 3u, 8u}) {
    ParallelConfig cfg;
    cfg.workers = w;
    CHECK(normal_order(p, cfg) == serial);
  }
  CHECK(serial == flatten_and_swap_no(p));
}
