#ifndef DYCK_SERIES_HPP
#define DYCK_SERIES_HPP

#include <string>
#include <vector>

#include "dyck/integer.hpp"

namespace dyck {

// Power series in x and t truncated at x-degree `order`, with exact integer
// coefficients. Only terms t^k x^n with k <= n can be nonzero; storage is the
// triangle 0 <= k <= n <= order.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order = 0);

  static BivariateSeries zero(int order) { return BivariateSeries(order); }
  static BivariateSeries one(int order);
  // t^k x^n; throws IndexOutOfRange outside the triangle.
  static BivariateSeries monomial(int order, int n, int k,
                                  const BigInt& coefficient = 1);

  int order() const noexcept { return order_; }

  // Coefficient of t^k x^n; zero outside the triangle.
  BigInt coeff(int n, int k) const;
  // Throws IndexOutOfRange unless 0 <= k <= n <= order.
  void set(int n, int k, BigInt value);

  bool is_zero() const;

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);

  friend BivariateSeries operator+(BivariateSeries lhs,
                                   const BivariateSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BivariateSeries operator-(BivariateSeries lhs,
                                   const BivariateSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend bool operator==(const BivariateSeries&,
                         const BivariateSeries&) = default;

 private:
  const BigInt& at(int n, int k) const {
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  BigInt& at(int n, int k) {
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  void require_same_order(const BivariateSeries& rhs) const;

  int order_ = 0;
  std::vector<std::vector<BigInt>> rows_;

  friend BivariateSeries multiply(const BivariateSeries&,
                                  const BivariateSeries&);
};

// Truncated Cauchy product. Throws OrderMismatch.
BivariateSeries multiply(const BivariateSeries& a, const BivariateSeries& b);

// sum_{l=0}^{order} u^l, i.e. 1/(1-u) through the truncation order.
// Throws NonzeroConstantTerm.
BivariateSeries geometric_inverse(const BivariateSeries& u);

// c(x) = sum C_n x^n.
BivariateSeries catalan_series(int order);

// c - 1 - x c^2; identically zero for the Catalan series.
BivariateSeries functional_equation_residual(const BivariateSeries& c);

// Positive primes weighted by x per step pair: x c(x).
BivariateSeries prime_series_pos(int order);

// Negative primes weighted by tx per step pair: tx c(tx).
BivariateSeries prime_series_neg(int order);

// N(t,x) = 1 / (1 - p_+ - p_-); coefficient of t^k x^n counts S_k at
// half-length n.
BivariateSeries n_series(int order);

// One "n<TAB>k<TAB>coefficient" line per triangle entry, by n then k.
std::string to_text(const BivariateSeries& series);

}  // namespace dyck

#endif  // DYCK_SERIES_HPP
