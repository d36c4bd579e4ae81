#ifndef DYCK_PATH_HPP
#define DYCK_PATH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

// A unit step of a lattice path: Up is (1,1), Down is (1,-1).
enum class Step : std::int8_t { Down = -1, Up = 1 };

constexpr int value(Step s) noexcept { return static_cast<int>(s); }

constexpr Step flip(Step s) noexcept {
  return s == Step::Up ? Step::Down : Step::Up;
}

// A finite sequence of +-1 steps starting at height 0.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  LatticePath(std::initializer_list<Step> steps) : steps_(steps) {}

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  std::span<const Step> steps() const noexcept { return steps_; }
  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  void push_back(Step s) { steps_.push_back(s); }
  LatticePath& append(const LatticePath& other);

  // Steps [first, first + count).
  LatticePath slice(std::size_t first, std::size_t count) const;

  friend LatticePath operator+(LatticePath lhs, const LatticePath& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend LatticePath operator+(LatticePath lhs, Step rhs) {
    lhs.push_back(rhs);
    return lhs;
  }
  friend LatticePath operator+(Step lhs, const LatticePath& rhs) {
    return LatticePath{lhs} + rhs;
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  // Lexicographic with Up < Down, matching the 'U' < 'D' enumeration order.
  friend std::strong_ordering operator<=>(const LatticePath& lhs,
                                          const LatticePath& rhs);

 private:
  std::vector<Step> steps_;
};

// The class S_k of balanced paths with 2n steps and 2k of them below the axis.
struct PathClass {
  int n = 0;
  int k = 0;
  friend bool operator==(const PathClass&, const PathClass&) = default;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

// A balanced excursion touching height 0 only at its two endpoints.
struct SignedPrime {
  Sign sign = Sign::Positive;
  LatticePath body;
  friend bool operator==(const SignedPrime&, const SignedPrime&) = default;
};

using PrimeFactorization = std::vector<SignedPrime>;

// Parses a string over {'U','D'}. Throws InvalidCharacter at the first other
// character, including whitespace.
LatticePath parse_path(std::string_view text);
std::string render_path(const LatticePath& path);

// Height profile h(0..|path|) with h(0) = 0.
std::vector<int> heights(const LatticePath& path);

bool is_balanced(const LatticePath& path) noexcept;
int half_length(const LatticePath& path) noexcept;

// True iff the step between heights a and b lies below the axis. A step
// touching 0 from below counts, one touching 0 from above does not.
constexpr bool is_below_axis(int a, int b) noexcept { return a + b < 0; }

// Number of steps below the axis; defined for any path.
std::size_t below_axis_steps(const LatticePath& path) noexcept;

// Number of Up steps starting at height <= -1.
std::size_t below_axis_up_steps(const LatticePath& path) noexcept;

// k such that the balanced path has exactly 2k below-axis steps.
int negativity(const LatticePath& path);

PathClass classify(const LatticePath& path);

// Cuts a balanced path at every return to height 0.
PrimeFactorization factor_primes(const LatticePath& path);

LatticePath concatenate(const PrimeFactorization& primes);

bool is_dyck(const LatticePath& path) noexcept;

// True iff the path is balanced and never rises above the axis.
bool is_negative_dyck(const LatticePath& path) noexcept;

LatticePath reflect(const LatticePath& path);

}  // namespace dyck

#endif  // DYCK_PATH_HPP
