#include "dyck/bijection.hpp"

#include <stdexcept>
#include <string>

#include "dyck/error.hpp"

namespace dyck {

namespace {

struct Split {
  LatticePath before;
  SignedPrime prime;
  LatticePath after;
};

// Splits around the last prime with the given sign, if any.
bool split_at_last(const PrimeFactorization& primes, Sign sign, Split& out) {
  std::size_t last = primes.size();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i].sign == sign) last = i;
  }
  if (last == primes.size()) return false;
  for (std::size_t i = 0; i < last; ++i) out.before.append(primes[i].body);
  out.prime = primes[last];
  for (std::size_t i = last + 1; i < primes.size(); ++i) {
    out.after.append(primes[i].body);
  }
  return true;
}

LatticePath strip_ends(const LatticePath& prime) {
  return prime.slice(1, prime.size() - 2);
}

}  // namespace

LatticePath PositiveFactorization::assemble() const {
  return prefix + Step::Up + inner + Step::Down + suffix;
}

LatticePath NegativeFactorization::assemble() const {
  return prefix + Step::Down + inner + Step::Up + suffix;
}

PositiveFactorization factor_last_positive_prime(const LatticePath& s) {
  Split split;
  if (!split_at_last(factor_primes(s), Sign::Positive, split)) {
    throw Error(ErrorKind::NoPositivePrime,
                "no positive prime in '" + render_path(s) + "'");
  }
  PositiveFactorization f{std::move(split.before),
                          strip_ends(split.prime.body),
                          std::move(split.after)};
  if (!is_dyck(f.inner) || !is_negative_dyck(f.suffix)) {
    throw std::logic_error("malformed positive factorization of '" +
                           render_path(s) + "'");
  }
  return f;
}

NegativeFactorization factor_last_negative_prime(const LatticePath& sigma) {
  Split split;
  if (!split_at_last(factor_primes(sigma), Sign::Negative, split)) {
    throw Error(ErrorKind::NoNegativePrime,
                "no negative prime in '" + render_path(sigma) + "'");
  }
  NegativeFactorization f{std::move(split.before),
                          strip_ends(split.prime.body),
                          std::move(split.after)};
  if (!is_negative_dyck(f.inner) || !is_dyck(f.suffix)) {
    throw std::logic_error("malformed negative factorization of '" +
                           render_path(sigma) + "'");
  }
  return f;
}

LatticePath phi_plus(const LatticePath& s) {
  const auto f = factor_last_positive_prime(s);
  return f.prefix + Step::Down + f.suffix + Step::Up + f.inner;
}

LatticePath phi_minus(const LatticePath& sigma) {
  const auto f = factor_last_negative_prime(sigma);
  return f.prefix + Step::Up + f.suffix + Step::Down + f.inner;
}

LatticePath lift(const LatticePath& dyck_path, int k) {
  if (!is_dyck(dyck_path)) {
    throw Error(ErrorKind::NotDyck,
                "path '" + render_path(dyck_path) + "' is not a Dyck path");
  }
  const int n = half_length(dyck_path);
  if (k < 0 || k > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "negativity " + std::to_string(k) + " outside 0.." +
                    std::to_string(n));
  }
  LatticePath out = dyck_path;
  for (int i = 0; i < k; ++i) out = phi_plus(out);
  return out;
}

}  // namespace dyck
