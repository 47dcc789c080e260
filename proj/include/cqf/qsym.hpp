#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cqf/composition.hpp"
#include "cqf/qpolynomial.hpp"

namespace cqf {

// Expansion of a degree-n quasisymmetric function with q-polynomial
// coefficients in the monomial basis: a map from compositions of n to
// coefficient polynomials.  Compositions absent from the map have zero
// coefficient; zero polynomials are never stored.  When the expansion comes
// from a graph, edge_count carries |E| (the degree bound for every
// coefficient in q).
class QSymExpansion {
 public:
  QSymExpansion() = default;
  explicit QSymExpansion(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("QSymExpansion: n must be >= 1");
  }

  int n() const { return n_; }
  std::optional<int> edge_count() const { return m_; }

  void set_edge_count(int m) {
    if (m < 0) throw std::invalid_argument("QSymExpansion: negative edge count");
    for (const auto& [alpha, poly] : coeffs_)
      if (poly.degree().value_or(-1) > m)
        throw std::invalid_argument("QSymExpansion: coefficient degree exceeds edge count");
    m_ = m;
  }

  const std::map<Composition, QPolynomial>& coeffs() const { return coeffs_; }

  const QPolynomial& coeff(const Composition& alpha) const {
    static const QPolynomial zero;
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? zero : it->second;
  }

  void set_coeff(const Composition& alpha, QPolynomial poly) {
    require_composition(alpha);
    if (composition_sum(alpha) != n_)
      throw std::invalid_argument("QSymExpansion: composition does not sum to n");
    if (m_ && poly.degree().value_or(-1) > *m_)
      throw std::invalid_argument("QSymExpansion: coefficient degree exceeds edge count");
    if (poly.is_zero())
      coeffs_.erase(alpha);
    else
      coeffs_[alpha] = std::move(poly);
  }

  QSymExpansion& operator+=(const QSymExpansion& other) {
    if (n_ != other.n_) throw std::invalid_argument("QSymExpansion: degree mismatch in +");
    if (m_ != other.m_) m_.reset();
    for (const auto& [alpha, poly] : other.coeffs_) {
      auto sum = coeff(alpha) + poly;
      if (sum.is_zero())
        coeffs_.erase(alpha);
      else
        coeffs_[alpha] = std::move(sum);
    }
    return *this;
  }

  friend QSymExpansion operator+(QSymExpansion a, const QSymExpansion& b) {
    a += b;
    return a;
  }

  friend bool operator==(const QSymExpansion& a, const QSymExpansion& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QSymExpansion& a, const QSymExpansion& b) { return !(a == b); }

 private:
  int n_ = 1;
  std::optional<int> m_;
  std::map<Composition, QPolynomial> coeffs_;
};

// The involution sending the monomial function of alpha to that of alpha
// reversed.  Pure coefficient transport; no q manipulation.
inline QSymExpansion rho(const QSymExpansion& q) {
  QSymExpansion out(q.n());
  for (const auto& [alpha, poly] : q.coeffs()) out.set_coeff(reversed_composition(alpha), poly);
  if (q.edge_count()) out.set_edge_count(*q.edge_count());
  return out;
}

struct PalindromicityResult {
  bool palindromic = true;
  // First offending composition/power in canonical scan order, when not.
  Composition witness_alpha;
  int witness_power = -1;
};

// True iff the coefficient of q^i equals the coefficient of q^(m-i) for all i,
// as quasisymmetric functions; checked coefficient polynomial by coefficient
// polynomial in canonical composition order.
inline PalindromicityResult is_palindromic(const QSymExpansion& q, int m) {
  for (const auto& [alpha, poly] : q.coeffs()) {
    if (poly.degree().value_or(-1) > m)
      throw std::invalid_argument("is_palindromic: coefficient degree exceeds m");
    if (auto bad = poly.first_asymmetry(m)) return {false, alpha, *bad};
  }
  return {};
}

struct SymmetryResult {
  bool symmetric = true;
  // A pair of rearrangements with different coefficients, when not.
  Composition witness_alpha;
  Composition witness_beta;
};

// True iff rearranging parts never changes the coefficient.  Scans
// rearrangement classes in canonical order; inside a class every composition
// is compared against the lexicographically first one.
inline SymmetryResult is_symmetric(const QSymExpansion& q) {
  std::map<std::vector<int>, Composition> first_of_class;
  for (const auto& alpha : compositions_of(q.n())) {
    auto key = partition_key(alpha);
    auto [it, fresh] = first_of_class.emplace(std::move(key), alpha);
    if (fresh) continue;
    if (q.coeff(it->second) != q.coeff(alpha)) return {false, it->second, alpha};
  }
  return {};
}

inline std::map<Composition, Int> specialize_q(const QSymExpansion& q, const Int& q0) {
  std::map<Composition, Int> out;
  for (const auto& [alpha, poly] : q.coeffs()) {
    Int v = poly.evaluate(q0);
    if (v != 0) out.emplace(alpha, std::move(v));
  }
  return out;
}

inline Int binomial(int k, int r) {
  if (r < 0 || r > k) return 0;
  Int num = 1;
  for (int i = 0; i < r; ++i) {
    num *= k - i;
    num /= i + 1;  // exact at every step: product of j consecutive ints is divisible by j!
  }
  return num;
}

// Setting q = 1 and specializing the monomial functions to k variables equal
// to 1 turns the expansion into the number of proper colorings with colors
// from {1..k}: each composition with l parts contributes c_alpha(1) * C(k,l).
inline Int chromatic_from_expansion(const QSymExpansion& q, int k) {
  if (k < 0) throw std::invalid_argument("chromatic_from_expansion: negative k");
  Int total = 0;
  for (const auto& [alpha, poly] : q.coeffs())
    total += poly.evaluate(1) * binomial(k, static_cast<int>(alpha.size()));
  return total;
}

inline std::string expansion_to_display_string(const QSymExpansion& q) {
  if (q.coeffs().empty()) return "0";
  std::string s;
  for (const auto& [alpha, poly] : q.coeffs()) {
    if (!s.empty()) s += " + ";
    s += "(" + poly.to_display_string() + ")M" + composition_to_string(alpha);
  }
  return s;
}

}  // namespace cqf
