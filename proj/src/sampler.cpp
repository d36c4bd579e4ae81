#include "dyck/sampler.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "dyck/bijection.hpp"
#include "dyck/cycle.hpp"
#include "dyck/error.hpp"

namespace dyck {

namespace {

__extension__ using Wide = unsigned __int128;

void require_half_length(int n) {
  if (n < 0) {
    throw Error(ErrorKind::IndexOutOfRange,
                "half-length " + std::to_string(n) + " is negative");
  }
}

std::vector<Step> multiset(int ups, int downs) {
  std::vector<Step> steps(static_cast<std::size_t>(ups), Step::Up);
  steps.insert(steps.end(), static_cast<std::size_t>(downs), Step::Down);
  return steps;
}

}  // namespace

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  Wide m = static_cast<Wide>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<Wide>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

void shuffle(std::vector<Step>& steps, RandomSource& rng) {
  for (std::size_t i = steps.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(steps[i - 1], steps[j]);
  }
}

LatticePath sample_dyck(int n, RandomSource& rng) {
  require_half_length(n);
  auto steps = multiset(n + 1, n);
  shuffle(steps, rng);
  const auto canonical = canonical_rotation(CyclicSequence(std::move(steps)));
  const auto terms = canonical.rotation.terms();
  return LatticePath(std::vector<Step>(terms.begin() + 1, terms.end()));
}

LatticePath sample_k_negative(int n, int k, RandomSource& rng) {
  require_half_length(n);
  if (k < 0 || k > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "negativity " + std::to_string(k) + " outside 0.." +
                    std::to_string(n));
  }
  return lift(sample_dyck(n, rng), k);
}

LatticePath sample_balanced(int n, RandomSource& rng) {
  require_half_length(n);
  auto steps = multiset(n, n);
  shuffle(steps, rng);
  return LatticePath(std::move(steps));
}

}  // namespace dyck
