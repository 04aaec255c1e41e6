#include "fracorder/residue.hpp"

#include <numbers>
#include <stdexcept>

#include <utility>

namespace fracorder::residue {

using boost::multiprecision::cpp_rational;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& other) const {
  return {num_ * other.den_ + other.num_ * den_, den_ * other.den_};
}

Rational Rational::operator*(const Rational& other) const {
  return {num_ * other.num_, den_ * other.den_};
}

double Rational::to_double() const { return cpp_rational(num_, den_).convert_to<double>(); }

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational residue_at(unsigned n, unsigned j) {
  if (n == 0) throw std::domain_error("residue_at: n must be >= 1");
  if (j > n) throw std::domain_error("residue_at: pole index must satisfy j <= n");
  // Q(z) = z (1-z) ... (n-z) = -prod_{k=0..n} (k - z), so Q'(j) = prod_{k != j} (k - j)
  BigInt derivative = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k == j) continue;
    derivative *= BigInt(static_cast<long long>(k) - static_cast<long long>(j));
  }
  // e^(i pi j) = (-1)^j, purely real
  const BigInt numerator = (j % 2 == 0) ? 1 : -1;
  return {numerator, derivative};
}

std::vector<ResidueTerm> residues(unsigned n) {
  std::vector<ResidueTerm> out;
  out.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) out.push_back({j, residue_at(n, j)});
  return out;
}

Rational closed_form_coeff(unsigned n) {
  Rational sum;
  for (const ResidueTerm& term : residues(n)) sum = sum + term.value;
  return sum;
}

double indented_integral_value(unsigned n) {
  return std::numbers::pi * closed_form_coeff(n).to_double();
}

}  // namespace fracorder::residue
