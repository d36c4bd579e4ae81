#include "dyck/path.hpp"

#include <algorithm>

#include "dyck/error.hpp"

namespace dyck {

namespace {

void require_balanced(const LatticePath& path) {
  if (!is_balanced(path)) {
    throw Error(ErrorKind::NotBalanced,
                "path '" + render_path(path) + "' is not balanced");
  }
}

}  // namespace

LatticePath& LatticePath::append(const LatticePath& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

LatticePath LatticePath::slice(std::size_t first, std::size_t count) const {
  auto from = steps_.begin() + static_cast<std::ptrdiff_t>(first);
  return LatticePath(
      std::vector<Step>(from, from + static_cast<std::ptrdiff_t>(count)));
}

std::strong_ordering operator<=>(const LatticePath& lhs,
                                const LatticePath& rhs) {
  // Up = +1 and Down = -1, so reversing the integer order puts Up first.
  return std::lexicographical_compare_three_way(
      lhs.steps_.begin(), lhs.steps_.end(), rhs.steps_.begin(),
      rhs.steps_.end(), [](Step a, Step b) { return value(b) <=> value(a); });
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw Error(ErrorKind::InvalidCharacter,
                    "invalid character at position " + std::to_string(i), i);
    }
  }
  return LatticePath(std::move(steps));
}

std::string render_path(const LatticePath& path) {
  std::string out;
  out.reserve(path.size());
  for (Step s : path) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

std::vector<int> heights(const LatticePath& path) {
  std::vector<int> h;
  h.reserve(path.size() + 1);
  h.push_back(0);
  for (Step s : path) h.push_back(h.back() + value(s));
  return h;
}

bool is_balanced(const LatticePath& path) noexcept {
  int sum = 0;
  for (Step s : path) sum += value(s);
  return sum == 0;
}

int half_length(const LatticePath& path) noexcept {
  return static_cast<int>(path.size() / 2);
}

std::size_t below_axis_steps(const LatticePath& path) noexcept {
  std::size_t count = 0;
  int h = 0;
  for (Step s : path) {
    const int next = h + value(s);
    if (is_below_axis(h, next)) ++count;
    h = next;
  }
  return count;
}

std::size_t below_axis_up_steps(const LatticePath& path) noexcept {
  std::size_t count = 0;
  int h = 0;
  for (Step s : path) {
    if (s == Step::Up && h <= -1) ++count;
    h += value(s);
  }
  return count;
}

int negativity(const LatticePath& path) {
  require_balanced(path);
  return static_cast<int>(below_axis_steps(path) / 2);
}

PathClass classify(const LatticePath& path) {
  const int k = negativity(path);
  return PathClass{half_length(path), k};
}

PrimeFactorization factor_primes(const LatticePath& path) {
  require_balanced(path);
  PrimeFactorization primes;
  std::size_t start = 0;
  int h = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    h += value(path[i]);
    if (h == 0) {
      const Sign sign =
          path[start] == Step::Up ? Sign::Positive : Sign::Negative;
      primes.push_back({sign, path.slice(start, i + 1 - start)});
      start = i + 1;
    }
  }
  return primes;
}

LatticePath concatenate(const PrimeFactorization& primes) {
  LatticePath out;
  for (const auto& prime : primes) out.append(prime.body);
  return out;
}

bool is_dyck(const LatticePath& path) noexcept {
  int h = 0;
  for (Step s : path) {
    h += value(s);
    if (h < 0) return false;
  }
  return h == 0;
}

bool is_negative_dyck(const LatticePath& path) noexcept {
  int h = 0;
  for (Step s : path) {
    h += value(s);
    if (h > 0) return false;
  }
  return h == 0;
}

LatticePath reflect(const LatticePath& path) {
  std::vector<Step> steps(path.begin(), path.end());
  std::ranges::transform(steps, steps.begin(), flip);
  return LatticePath(std::move(steps));
}

}  // namespace dyck
