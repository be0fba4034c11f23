#include <doctest.h>

#include "efsolve/errors.hpp"
#include "efsolve/problem.hpp"

using namespace efsolve;

namespace {

Problem base_problem() {
  return Problem{3, 1.0, 2.0, PotentialSpec::from_expression("(1+r^2)^(-2)"),
                 PotentialSpec::constant(1.0), std::nullopt};
}

}  // namespace

TEST_CASE("a conforming problem validates") {
  CHECK(validate_problem(base_problem()).ok());
}

TEST_CASE("dimension below 3 is rejected") {
  Problem p = base_problem();
  p.dimension = 2;
  const ValidationReport r = validate_problem(p);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().code == Violation::Code::kDimensionTooSmall);
}

TEST_CASE("nonpositive exponents are rejected") {
  Problem p = base_problem();
  p.gamma = 0.0;
  CHECK_FALSE(validate_problem(p).ok());
  p = base_problem();
  p.a = -1.0;
  CHECK_FALSE(validate_problem(p).ok());
}

TEST_CASE("sign violations come with a witness radius") {
  Problem p = base_problem();
  p.p = PotentialSpec::from_expression("r-1");  // negative near 0
  const ValidationReport r = validate_problem(p);
  REQUIRE_FALSE(r.ok());
  const Violation& v = r.violations.front();
  CHECK(v.code == Violation::Code::kPotentialSignViolation);
  REQUIRE(v.witness_r.has_value());
  CHECK(*v.witness_r < 1.0);

  Problem q = base_problem();
  q.q = PotentialSpec::from_expression("-(r+1)");
  CHECK_FALSE(validate_problem(q).ok());
}

TEST_CASE("evaluation failures during the audit are reported, not thrown") {
  Problem p = base_problem();
  p.p = PotentialSpec::from_expression("log(r-1)");  // domain error for r < 1
  const ValidationReport r = validate_problem(p);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().code == Violation::Code::kEvaluationFailure);
}

TEST_CASE("majorant of a radial p is p itself") {
  const Problem p = base_problem();
  const MajorantProfile phi = majorant(p);
  CHECK(phi.provenance == MajorantProfile::Provenance::kRadialP);
  for (double r : {0.0, 0.37, 1.0, 5.0, 123.0}) {
    CHECK(phi(r) == p.p(r));  // exact passthrough
  }
}

TEST_CASE("a supplied phi wins and is tagged user-supplied") {
  Problem p = base_problem();
  p.phi = PotentialSpec::from_expression("(1+r)^(-3)");
  const MajorantProfile phi = majorant(p);
  CHECK(phi.provenance == MajorantProfile::Provenance::kUserSupplied);
  CHECK(phi(2.0) == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
}

TEST_CASE("non-radial p without phi is an unsupported instance") {
  Problem p = base_problem();
  p.p = PotentialSpec::from_callable([](double r) { return 1.0 / (1.0 + r * r); },
                                     "sampled non-radial p", /*radial=*/false);
  CHECK_THROWS_AS(majorant(p), invariant_violation);
  p.phi = PotentialSpec::from_expression("(1+r^2)^(-1)");
  CHECK_NOTHROW(majorant(p));
}
