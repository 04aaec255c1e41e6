#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fracorder/residue.hpp"

using namespace fracorder::residue;

namespace {

// Pascal's triangle row n, built by addition only
std::vector<BigInt> pascal_row(unsigned n) {
  std::vector<BigInt> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1, 1);
    for (unsigned j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

BigInt big_factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("Rational normalisation") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(3, -4) == Rational(-3, 4));
  CHECK(Rational(-6, -8).to_string() == "3/4");
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(-1, 3).to_string() == "-1/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) + Rational(-1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(Rational(-7, 2).to_double() == -3.5);
  CHECK(Rational(1, 3).is_positive());
  CHECK_FALSE(Rational(-1, 3).is_positive());
  CHECK_FALSE(Rational(0).is_positive());
}

TEST_CASE("residue reference values") {
  CHECK(residue_at(3, 0) == Rational(1, 6));
  CHECK(residue_at(4, 2) == Rational(1, 4));
  CHECK(residue_at(1, 1) == Rational(1));
  CHECK(residue_at(2, 1).to_string() == "1");
  CHECK(residue_at(2, 2).to_string() == "1/2");
  CHECK_THROWS_AS(residue_at(0, 0), std::domain_error);
  CHECK_THROWS_AS(residue_at(3, 4), std::domain_error);
}

TEST_CASE("closed-form coefficients") {
  CHECK(closed_form_coeff(1) == Rational(2));
  CHECK(closed_form_coeff(3) == Rational(4, 3));
  CHECK(closed_form_coeff(5) == Rational(4, 15));
  CHECK(closed_form_coeff(5).to_string() == "4/15");
  CHECK(indented_integral_value(1) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(indented_integral_value(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(closed_form_coeff(0), std::domain_error);
}

TEST_CASE("residues are binomials over n! exactly, n up to 30") {
  for (unsigned n = 1; n <= 30; ++n) {
    const auto row = pascal_row(n);
    const BigInt nf = big_factorial(n);
    const auto terms = residues(n);
    REQUIRE(terms.size() == n + 1);
    for (unsigned j = 0; j <= n; ++j) {
      INFO("n = " << n << ", j = " << j);
      CHECK(terms[j].pole == j);
      CHECK(terms[j].value == Rational(row[j], nf));
      CHECK(terms[j].value.is_positive());
    }
    CHECK(closed_form_coeff(n) == Rational(BigInt(1) << n, nf));
  }
}

TEST_CASE("residues are symmetric in j and n - j") {
  for (unsigned n = 1; n <= 40; ++n) {
    for (unsigned j = 0; j <= n; ++j) CHECK(residue_at(n, j) == residue_at(n, n - j));
  }
}

TEST_CASE("large n stays exact") {
  const Rational c = closed_form_coeff(60);
  CHECK(c == Rational(BigInt(1) << 60, big_factorial(60)));
  CHECK(c.to_double() == doctest::Approx(std::ldexp(1.0, 60) / std::tgamma(61.0)).epsilon(1e-13));
}
