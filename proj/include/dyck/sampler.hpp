#ifndef DYCK_SAMPLER_HPP
#define DYCK_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "dyck/path.hpp"

namespace dyck {

// Seeded 64-bit Mersenne Twister (std::mt19937_64, whose output sequence is
// fixed by the C++ standard). Bounded draws use Lemire's multiply-shift
// method rather than std::uniform_int_distribution, whose algorithm is left
// to the library vendor, so streams are identical across platforms.
//
// Not thread-safe; use one source per thread.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Uniform random arrangement of the steps, Fisher-Yates from the back.
void shuffle(std::vector<Step>& steps, RandomSource& rng);

// Uniform Dyck path of half-length n: shuffle n+1 Ups with n Downs, take the
// unique dominating rotation and drop its leading Up.
LatticePath sample_dyck(int n, RandomSource& rng);

// lift(sample_dyck(n), k). Throws IndexOutOfRange unless 0 <= k <= n.
LatticePath sample_k_negative(int n, int k, RandomSource& rng);

// Uniform over all C(2n,n) balanced paths.
LatticePath sample_balanced(int n, RandomSource& rng);

}  // namespace dyck

#endif  // DYCK_SAMPLER_HPP
