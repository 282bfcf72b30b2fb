#include <memory>

#include <doctest.h>

#include "corpus.hpp"
#include "jet.hpp"
#include "oracle.hpp"

TEST_CASE("jets: products, inverses and derivatives") {
  auto sp = std::make_shared<const oracle::JetSpace>(2, 3);
  const std::vector<std::string> names{"u", "v"};
  const std::vector<mpq_class> at{mpq_class(2), mpq_class(-1, 3)};
  const auto f = oracle::eval_text("u^3*v - 1/u", names, at, sp);
  CHECK(f.value() == mpq_class(-8, 3) - mpq_class(1, 2));
  // d/du = 3 u^2 v + 1/u^2
  CHECK(f.diff(0).value() == mpq_class(-4) + mpq_class(1, 4));
  // d2/du2 = 6 u v - 2/u^3
  CHECK(f.diff(0).diff(0).value() == mpq_class(-4) - mpq_class(1, 4));
  // d2/dudv = 3 u^2
  CHECK(f.diff(0).diff(1).value() == 12);
  // d3/du3 = 6 v + 6/u^4
  CHECK(f.diff(0).diff(0).diff(0).value() == mpq_class(-2) + mpq_class(3, 8));
  CHECK_THROWS(f.diff(0).diff(0).diff(0).diff(0).value());
  const auto g = oracle::eval_text("(u - 2)*v", names, at, sp);
  CHECK_THROWS_AS(g.inverse(), std::domain_error);
  CHECK(oracle::eval_text("-u^2", names, at, sp).value() == -4);
  CHECK(oracle::eval_text("v^(-2)", names, at, sp).value() == 9);
}

TEST_CASE("engine components equal the jet recomputation on the corpus") {
  for (const auto& def : corpus::all()) {
    CAPTURE(def.name);
    const auto geo = corpus::geometry(def);
    for (const auto& p : oracle::pole_free_points(def, geo, 3, 101u)) {
      const auto engine = oracle::engine_values(geo, p);
      const auto recomputed = oracle::recompute(def, p);
      CHECK(recomputed.size() >= 18);
      for (const auto& bad : oracle::compare(engine, recomputed)) FAIL_CHECK(bad);
    }
  }
}
