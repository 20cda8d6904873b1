#include "doctest.h"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "rbx/deformation.hpp"
#include "rbx/io.hpp"

using namespace rbx;

namespace {
const std::string kFixtureDir = RBX_FIXTURE_DIR;
}

TEST_CASE("fixture files mirror the in-code fixtures") {
  const InputDocument dual = load_document(kFixtureDir + "/dual_numbers.json");
  CHECK(dual.algebra.mul == fixtures::dual_numbers().mul);
  CHECK(dual.algebra.inv == fixtures::dual_numbers().inv);
  REQUIRE(dual.op.has_value());
  CHECK(*dual.op == fixtures::dual_numbers_operator());
  CHECK(validate_algebra(dual.algebra).ok());
  REQUIRE(dual.series.has_value());
  CHECK(check_deformation(make_deformation_series(dual.algebra, dual.bimodule_or_regular(), *dual.series)).ok());

  const InputDocument tri = load_document(kFixtureDir + "/upper_triangular.json");
  CHECK(tri.algebra.mul == fixtures::upper_triangular().mul);
  CHECK(*tri.op == fixtures::upper_triangular_operator());

  const InputDocument zero = load_document(kFixtureDir + "/zero_mult.json");
  CHECK(zero.algebra.mul == fixtures::zero_mult().mul);
  CHECK(check_relative_rb(zero.algebra, zero.bimodule_or_regular(), *zero.op).ok());
}

TEST_CASE("schema errors carry locations; floats are rejected") {
  const std::string dir = "/tmp/rbx_io_test";
  std::filesystem::create_directories(dir);

  {
    std::ofstream out(dir + "/float.json");
    out << R"({"field":"rational","algebra":{"dim":1,"mul":[[[0.5]]],"involution":[[1]]}})";
  }
  CHECK_THROWS_WITH_AS(load_document(dir + "/float.json"), doctest::Contains("mul[0][0]"), InputError);

  {
    std::ofstream out(dir + "/marker.json");
    out << R"({"field":"real","algebra":{"dim":1,"mul":[[[1]]],"involution":[[1]]}})";
  }
  CHECK_THROWS_WITH_AS(load_document(dir + "/marker.json"), doctest::Contains("rational"), InputError);

  {
    std::ofstream out(dir + "/shape.json");
    out << R"({"field":"rational","algebra":{"dim":2,"mul":[[[1,0],[0,1]]],"involution":[[1,0],[0,1]]}})";
  }
  CHECK_THROWS_WITH_AS(load_document(dir + "/shape.json"), doctest::Contains("mul"), InputError);

  CHECK_THROWS_AS(load_document(dir + "/missing.json"), InputError);
}

TEST_CASE("rationals round-trip through matrix json") {
  Mat m(2, 2);
  m << Rational(1, 3), Rational(-7), Rational(0), Rational(22, 7);
  const Json j = matrix_to_json(m);
  CHECK(matrix_from_json(j, 2, 2, "t") == m);
}

TEST_CASE("cohomology reports serialize deterministically") {
  const auto f = fixtures::all()[0];
  const CohomologyReport report = hochschild_cohomology(f.algebra, f.bimodule, 2, Variant::involutive);
  const std::string once = report_to_json(report, "hochschild").dump(2);
  const CohomologyReport again = hochschild_cohomology(f.algebra, f.bimodule, 2, Variant::involutive);
  CHECK(once == report_to_json(again, "hochschild").dump(2));
  // Round-trip of the dimension table.
  const Json parsed = Json::parse(once);
  CHECK(parsed["degrees"].size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(parsed["degrees"][n]["cohomology"].get<Index>() == report.degrees[n].dim_cohomology);
    CHECK(parsed["degrees"][n]["cochains"].get<Index>() == report.degrees[n].dim_cochains);
  }
}

TEST_CASE("cochain files parse with shape checking") {
  const std::string dir = "/tmp/rbx_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir + "/cochain.json");
    out << R"({"degree":1,"coeffs":[["1","0"],["0","1/2"]]})";
  }
  const Cochain c = load_cochain(dir + "/cochain.json", 2, 2);
  CHECK(c.degree == 1);
  CHECK(c.coeffs(1, 1) == Rational(1, 2));
  {
    std::ofstream out(dir + "/cochain_bad.json");
    out << R"({"degree":2,"coeffs":[["1","0"],["0","1"]]})";
  }
  CHECK_THROWS_AS(load_cochain(dir + "/cochain_bad.json", 2, 2), InputError);
}
