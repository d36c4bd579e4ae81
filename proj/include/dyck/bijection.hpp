#ifndef DYCK_BIJECTION_HPP
#define DYCK_BIJECTION_HPP

#include "dyck/path.hpp"

namespace dyck {

// s = prefix . U . inner . D . suffix where U.inner.D is the last positive
// prime, inner is a Dyck path and suffix is a negative Dyck path.
struct PositiveFactorization {
  LatticePath prefix;
  LatticePath inner;
  LatticePath suffix;

  LatticePath assemble() const;
  friend bool operator==(const PositiveFactorization&,
                         const PositiveFactorization&) = default;
};

// sigma = prefix . D . inner . U . suffix where D.inner.U is the last negative
// prime, inner is a negative Dyck path and suffix is a Dyck path.
struct NegativeFactorization {
  LatticePath prefix;
  LatticePath inner;
  LatticePath suffix;

  LatticePath assemble() const;
  friend bool operator==(const NegativeFactorization&,
                         const NegativeFactorization&) = default;
};

// Throws NotBalanced, or NoPositivePrime when every step is below the axis.
PositiveFactorization factor_last_positive_prime(const LatticePath& s);

// Throws NotBalanced, or NoNegativePrime when the path is a Dyck path.
NegativeFactorization factor_last_negative_prime(const LatticePath& sigma);

// S_k -> S_{k+1}: prefix.U.inner.D.suffix |-> prefix.D.suffix.U.inner
LatticePath phi_plus(const LatticePath& s);

// S_{k+1} -> S_k: prefix.D.inner.U.suffix |-> prefix.U.suffix.D.inner
LatticePath phi_minus(const LatticePath& sigma);

// k-fold phi_plus of a Dyck path; a bijection S_0 -> S_k.
// Throws NotDyck, or IndexOutOfRange unless 0 <= k <= n.
LatticePath lift(const LatticePath& dyck_path, int k);

}  // namespace dyck

#endif  // DYCK_BIJECTION_HPP
