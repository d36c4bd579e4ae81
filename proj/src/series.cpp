#include "dyck/series.hpp"

#include <string>

#include "dyck/enumerate.hpp"
#include "dyck/error.hpp"

namespace dyck {

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) {
    throw Error(ErrorKind::IndexOutOfRange,
                "truncation order " + std::to_string(order) + " is negative");
  }
  rows_.resize(static_cast<std::size_t>(order) + 1);
  for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n].resize(n + 1);
}

BivariateSeries BivariateSeries::one(int order) {
  return monomial(order, 0, 0);
}

BivariateSeries BivariateSeries::monomial(int order, int n, int k,
                                          const BigInt& coefficient) {
  BivariateSeries out(order);
  out.set(n, k, coefficient);
  return out;
}

BigInt BivariateSeries::coeff(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > order_) return 0;
  return at(n, k);
}

void BivariateSeries::set(int n, int k, BigInt value) {
  if (n < 0 || k < 0 || k > n || n > order_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "term t^" + std::to_string(k) + " x^" + std::to_string(n) +
                    " outside the triangle of order " +
                    std::to_string(order_));
  }
  at(n, k) = std::move(value);
}

bool BivariateSeries::is_zero() const {
  for (const auto& row : rows_) {
    for (const auto& c : row) {
      if (c != 0) return false;
    }
  }
  return true;
}

void BivariateSeries::require_same_order(const BivariateSeries& rhs) const {
  if (order_ != rhs.order_) {
    throw Error(ErrorKind::OrderMismatch,
                "truncation orders " + std::to_string(order_) + " and " +
                    std::to_string(rhs.order_) + " differ");
  }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  require_same_order(rhs);
  for (int n = 0; n <= order_; ++n) {
    for (int k = 0; k <= n; ++k) at(n, k) += rhs.at(n, k);
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  require_same_order(rhs);
  for (int n = 0; n <= order_; ++n) {
    for (int k = 0; k <= n; ++k) at(n, k) -= rhs.at(n, k);
  }
  return *this;
}

BivariateSeries multiply(const BivariateSeries& a, const BivariateSeries& b) {
  a.require_same_order(b);
  const int order = a.order_;
  BivariateSeries out(order);
  for (int n1 = 0; n1 <= order; ++n1) {
    for (int k1 = 0; k1 <= n1; ++k1) {
      const BigInt& lhs = a.at(n1, k1);
      if (lhs == 0) continue;
      for (int n2 = 0; n1 + n2 <= order; ++n2) {
        for (int k2 = 0; k2 <= n2; ++k2) {
          const BigInt& rhs = b.at(n2, k2);
          if (rhs == 0) continue;
          out.at(n1 + n2, k1 + k2) += lhs * rhs;
        }
      }
    }
  }
  return out;
}

BivariateSeries geometric_inverse(const BivariateSeries& u) {
  if (u.coeff(0, 0) != 0) {
    throw Error(ErrorKind::NonzeroConstantTerm,
                "geometric inverse needs a zero constant term");
  }
  // u^l has no terms below x^l, so powers past the order vanish.
  BivariateSeries sum = BivariateSeries::one(u.order());
  BivariateSeries power = sum;
  for (int l = 1; l <= u.order(); ++l) {
    power = multiply(power, u);
    sum += power;
  }
  return sum;
}

BivariateSeries catalan_series(int order) {
  BivariateSeries c(order);
  for (int n = 0; n <= order; ++n) c.set(n, 0, catalan(n));
  return c;
}

BivariateSeries functional_equation_residual(const BivariateSeries& c) {
  const int order = c.order();
  const auto x = order >= 1 ? BivariateSeries::monomial(order, 1, 0)
                            : BivariateSeries::zero(order);
  return c - BivariateSeries::one(order) - multiply(x, multiply(c, c));
}

BivariateSeries prime_series_pos(int order) {
  BivariateSeries p(order);
  for (int n = 1; n <= order; ++n) p.set(n, 0, catalan(n - 1));
  return p;
}

BivariateSeries prime_series_neg(int order) {
  BivariateSeries p(order);
  for (int n = 1; n <= order; ++n) p.set(n, n, catalan(n - 1));
  return p;
}

BivariateSeries n_series(int order) {
  return geometric_inverse(prime_series_pos(order) + prime_series_neg(order));
}

std::string to_text(const BivariateSeries& series) {
  std::string out;
  for (int n = 0; n <= series.order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      out += std::to_string(n);
      out += '\t';
      out += std::to_string(k);
      out += '\t';
      out += series.coeff(n, k).str();
      out += '\n';
    }
  }
  return out;
}

}  // namespace dyck
