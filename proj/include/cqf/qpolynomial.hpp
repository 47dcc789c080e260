#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqf {

// Coefficient counts grow factorially with the vertex count, so they are kept
// exact and unbounded rather than trusting a machine word.
using Int = boost::multiprecision::cpp_int;

// Polynomial in q with nonnegative integer coefficients, stored constant term
// first with trailing zeros trimmed.  The zero polynomial has an empty
// coefficient vector and no degree.
class QPolynomial {
 public:
  QPolynomial() = default;

  explicit QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    for (const Int& x : c_)
      if (x < 0) throw std::invalid_argument("QPolynomial: negative coefficient");
    trim();
  }

  static QPolynomial monomial(int exponent, Int coefficient = 1) {
    if (exponent < 0) throw std::invalid_argument("QPolynomial: negative exponent");
    if (coefficient < 0) throw std::invalid_argument("QPolynomial: negative coefficient");
    if (coefficient == 0) return QPolynomial();
    std::vector<Int> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = std::move(coefficient);
    return QPolynomial(std::move(c));
  }

  // From small ints, constant term first: QPolynomial::from({1, 3, 2}) = 2q^2+3q+1.
  static QPolynomial from(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return QPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  // Degree of the zero polynomial is "minus infinity", reported as nullopt.
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  Int coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<Int>& coeffs() const { return c_; }

  QPolynomial& operator+=(const QPolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    a += b;
    return a;
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }
  friend bool operator<(const QPolynomial& a, const QPolynomial& b) { return a.c_ < b.c_; }

  Int evaluate(const Int& q0) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
  }

  // q^m * p(1/q): coefficient of q^i becomes coefficient of q^(m-i).
  QPolynomial reversed(int m) const {
    if (is_zero()) return QPolynomial();
    if (*degree() > m)
      throw std::invalid_argument("QPolynomial::reversed: degree exceeds reversal center");
    std::vector<Int> r(static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      r[static_cast<std::size_t>(m) - i] = c_[i];
    return QPolynomial(std::move(r));
  }

  // Smallest i with coeff(i) != coeff(m-i), if any.
  std::optional<int> first_asymmetry(int m) const {
    if (!is_zero() && *degree() > m)
      throw std::invalid_argument("QPolynomial::first_asymmetry: degree exceeds center");
    for (int i = 0; i <= m; ++i)
      if (coeff(i) != coeff(m - i)) return i;
    return std::nullopt;
  }

  bool is_palindromic(int m) const { return !first_asymmetry(m).has_value(); }

  // Display form with decreasing powers: "5q^3+7q^2+7q+5", "q^3+1", "0".
  std::string to_display_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
      const Int& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += a.str();
      } else {
        if (a != 1) s += a.str();
        s += "q";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace cqf
