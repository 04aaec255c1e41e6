#pragma once

/**
 * @file residue.hpp
 * @brief Exact residues of e^(i pi z) / (z (1-z)(2-z) ... (n-z)).
 *
 * All poles j = 0..n are real and simple, so the indented contour gives
 *
 *     PV int sin(pi x) / (x (1-x)_n) dx = Im(pi i sum_j res_j) = pi sum_j res_j
 *
 * Each residue is assembled from the simple-pole limit e^(i pi j) / Q'(j) with
 * Q'(j) expanded as an exact integer product, independently of any binomial
 * closed form.
 */

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fracorder::residue {

using BigInt = boost::multiprecision::cpp_int;

/// Exact num/den with gcd(|num|, den) = 1 and den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt num, BigInt den = 1);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator+(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  bool operator==(const Rational& other) const = default;
  bool is_positive() const { return num_ > 0; }

  double to_double() const;
  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

struct ResidueTerm {
  unsigned pole = 0;
  Rational value;
};

/// Residue at z = j, 0 <= j <= n, n >= 1.
Rational residue_at(unsigned n, unsigned j);

/// residue_at(n, j) for j = 0..n.
std::vector<ResidueTerm> residues(unsigned n);

/// Exact sum of the residues: the coefficient of pi in the integral.
Rational closed_form_coeff(unsigned n);

/// pi * closed_form_coeff(n), the value of int sin(pi x) / (x (1-x)_n) dx.
double indented_integral_value(unsigned n);

}  // namespace fracorder::residue
