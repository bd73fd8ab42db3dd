#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

namespace ulcf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in k with exact rational coefficients; index i holds
/// the coefficient of k^i. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The monomial c * k^power.
  static Polynomial monomial(int power, const Rational& c = 1);
  /// k(k-1)...(k-n+1); 1 for n = 0.
  static Polynomial falling_factorial(int n);
  /// k(k+1)...(k+n-1); 1 for n = 0.
  static Polynomial rising_factorial(int n);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const;
  Rational coefficient(int power) const;

  Rational evaluate(const Rational& k) const;
  Rational evaluate(long k) const { return evaluate(Rational(k)); }

  /// p(k + shift).
  Polynomial shifted(long shift) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

  /// "k^3 - 2k^2 + k"; rational coefficients render as "(1/2)k^2".
  std::string to_string() const;

  /// Factors out every linear factor (k - r) with integer root r and prints
  /// the remainder in parentheses, e.g. "k(k-1)^2" or "(1/2)k(k+1)".
  std::string factored() const;

  /// JSON array of "num/den" strings, lowest power first.
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::string to_string(const Rational& q);

}  // namespace ulcf
