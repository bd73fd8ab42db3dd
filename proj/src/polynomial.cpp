#include "ulcf/polynomial.hpp"

#include <algorithm>
#include <map>

#include "ulcf/error.hpp"

namespace ulcf {

std::string to_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::falling_factorial(int n) {
  Polynomial p = constant(1);
  for (int i = 0; i < n; ++i) p = p * Polynomial({Rational(-i), Rational(1)});
  return p;
}

Polynomial Polynomial::rising_factorial(int n) {
  Polynomial p = constant(1);
  for (int i = 0; i < n; ++i) p = p * Polynomial({Rational(i), Rational(1)});
  return p;
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

Rational Polynomial::evaluate(const Rational& k) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

Polynomial Polynomial::shifted(long shift) const {
  // Horner in the polynomial ring: p(k + s) = (...(c_d (k+s) + c_{d-1})(k+s) ...).
  const Polynomial linear({Rational(shift), Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear + constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

namespace {

// "", "2", "(1/2)" for a positive magnitude multiplying a power of k.
std::string magnitude_prefix(const Rational& magnitude, bool has_variable) {
  if (magnitude == 1 && has_variable) return "";
  if (magnitude.get_den() == 1) return magnitude.get_num().get_str();
  return "(" + to_string(magnitude) + ")";
}

std::string power_of_k(int power) {
  if (power == 0) return "";
  if (power == 1) return "k";
  return "k^" + std::to_string(power);
}

std::string scalar_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  if (c.get_den() == 1) return c.get_num().get_str();
  return "(" + to_string(c) + ")";
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude_prefix(abs(c), i > 0) + power_of_k(i);
  }
  return out;
}

std::string Polynomial::factored() const {
  if (is_zero()) return "0";
  const Rational lead = leading_coefficient();
  Polynomial rest = *this * Rational(Rational(1) / lead);
  if (rest.degree() == 0) return ulcf::to_string(lead);

  // Cauchy bound on the magnitude of every root of the monic remainder.
  Rational bound = 0;
  for (int i = 0; i < rest.degree(); ++i) bound = std::max(bound, Rational(abs(rest.coeffs_[i])));
  const mpz_class limit = mpz_class(bound.get_num() / bound.get_den()) + 1;
  const long scan = limit.fits_slong_p() ? std::min<long>(limit.get_si(), 4096) : 4096;

  std::map<long, int> multiplicity;
  for (long r = -scan; r <= scan && rest.degree() > 0; ++r) {
    while (rest.degree() > 0 && rest.evaluate(r) == 0) {
      // Synthetic division by (k - r).
      std::vector<Rational> q(rest.degree(), Rational(0));
      Rational carry = 0;
      for (int i = rest.degree(); i >= 1; --i) {
        carry = rest.coeffs_[i] + carry * r;
        q[i - 1] = carry;
      }
      rest = Polynomial(std::move(q));
      ++multiplicity[r];
    }
  }

  std::vector<std::pair<long, int>> factors(multiplicity.begin(), multiplicity.end());
  // k first, then (k-1), (k-2), ..., then (k+1), (k+2), ...
  std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
    const auto key = [](long r) { return r >= 0 ? std::pair{0, r} : std::pair{1, -r}; };
    return key(x.first) < key(y.first);
  });

  std::string out = scalar_prefix(lead);
  for (const auto& [r, m] : factors) {
    std::string f = r == 0 ? "k" : (r > 0 ? "(k-" + std::to_string(r) + ")"
                                          : "(k+" + std::to_string(-r) + ")");
    out += f;
    if (m > 1) out += "^" + std::to_string(m);
  }
  if (rest.degree() > 0) out += "(" + rest.to_string() + ")";
  return out;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) {
    arr.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  }
  return arr;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  for (const auto& item : j) {
    if (!item.is_string()) throw InvalidArgument("polynomial coefficients must be strings");
    Rational q;
    if (q.set_str(item.get<std::string>(), 10) != 0 || q.get_den() == 0) {
      throw InvalidArgument("bad rational coefficient '" + item.get<std::string>() + "'");
    }
    coeffs.push_back(q);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace ulcf
