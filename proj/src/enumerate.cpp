#include "dyck/enumerate.hpp"

#include <mutex>
#include <string>

#include "dyck/error.hpp"

namespace dyck {

namespace {

void require_nonnegative(int n) {
  if (n < 0) {
    throw Error(ErrorKind::IndexOutOfRange,
                "half-length " + std::to_string(n) + " is negative");
  }
}

void require_within_bound(int n, int bound) {
  require_nonnegative(n);
  if (n > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "half-length " + std::to_string(n) +
                    " exceeds enumeration bound " + std::to_string(bound));
  }
}

// Depth-first generation; Up before Down gives lexicographic order.
class BalancedWalker {
 public:
  BalancedWalker(int n,
                 const std::function<void(std::span<const Step>, int)>& visit)
      : visit_(visit), steps_(static_cast<std::size_t>(2 * n)) {
    ups_left_ = downs_left_ = n;
  }

  void run() { descend(0, 0, 0); }

 private:
  void descend(std::size_t depth, int height, int below) {
    if (depth == steps_.size()) {
      visit_(steps_, below / 2);
      return;
    }
    if (ups_left_ > 0) {
      --ups_left_;
      steps_[depth] = Step::Up;
      descend(depth + 1, height + 1,
              below + (is_below_axis(height, height + 1) ? 1 : 0));
      ++ups_left_;
    }
    if (downs_left_ > 0) {
      --downs_left_;
      steps_[depth] = Step::Down;
      descend(depth + 1, height - 1,
              below + (is_below_axis(height, height - 1) ? 1 : 0));
      ++downs_left_;
    }
  }

  const std::function<void(std::span<const Step>, int)>& visit_;
  std::vector<Step> steps_;
  int ups_left_ = 0;
  int downs_left_ = 0;
};

}  // namespace

BigInt catalan(int n) {
  require_nonnegative(n);
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::scoped_lock lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const std::size_t m = table.size();
    BigInt next = 0;
    for (std::size_t i = 0; i < m; ++i) next += table[i] * table[m - 1 - i];
    table.push_back(std::move(next));
  }
  return table[static_cast<std::size_t>(n)];
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt central_binomial(int n) {
  require_nonnegative(n);
  return binomial(2 * n, n);
}

BigInt catalan_closed_form(int n) {
  return central_binomial(n) / (n + 1);
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

std::string to_text(const CountTable& table) {
  std::string out;
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    out += std::to_string(k);
    out += '\t';
    out += table.counts[k].str();
    out += '\n';
  }
  return out;
}

void for_each_balanced(
    int n, const std::function<void(std::span<const Step>, int)>& visit,
    int bound) {
  require_within_bound(n, bound);
  BalancedWalker(n, visit).run();
}

std::vector<LatticePath> enumerate_balanced(int n, int bound) {
  std::vector<LatticePath> paths;
  for_each_balanced(
      n,
      [&](std::span<const Step> steps, int) {
        paths.emplace_back(std::vector<Step>(steps.begin(), steps.end()));
      },
      bound);
  return paths;
}

CountTable partition_by_negativity(int n, int bound) {
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n < 0 ? 0 : n) + 1);
  for_each_balanced(
      n, [&](std::span<const Step>, int k) { ++tally[static_cast<std::size_t>(k)]; },
      bound);
  CountTable table{n, {}};
  table.counts.reserve(tally.size());
  for (auto c : tally) table.counts.emplace_back(c);
  return table;
}

std::vector<std::vector<LatticePath>> negativity_classes(int n, int bound) {
  std::vector<std::vector<LatticePath>> classes(
      static_cast<std::size_t>(n < 0 ? 0 : n) + 1);
  for_each_balanced(
      n,
      [&](std::span<const Step> steps, int k) {
        classes[static_cast<std::size_t>(k)].emplace_back(
            std::vector<Step>(steps.begin(), steps.end()));
      },
      bound);
  return classes;
}

CountTable count_table_recurrence(int n) {
  require_nonnegative(n);
  // table[m][j] = N(m, j) for j <= m.
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {BigInt(1)};
  for (int m = 1; m <= n; ++m) {
    auto& row = table[static_cast<std::size_t>(m)];
    row.assign(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (int k = 0; k <= m; ++k) {
      BigInt sum = 0;
      // First prime positive, of half-length p.
      for (int p = 1; p <= m - k; ++p) {
        sum += catalan(p - 1) *
               table[static_cast<std::size_t>(m - p)][static_cast<std::size_t>(k)];
      }
      // First prime negative, of half-length q.
      for (int q = 1; q <= k; ++q) {
        sum += catalan(q - 1) *
               table[static_cast<std::size_t>(m - q)][static_cast<std::size_t>(k - q)];
      }
      row[static_cast<std::size_t>(k)] = std::move(sum);
    }
  }
  return CountTable{n, std::move(table[static_cast<std::size_t>(n)])};
}

BigInt count_recurrence(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "class (" + std::to_string(n) + "," + std::to_string(k) +
                    ") requires 0 <= k <= n");
  }
  return count_table_recurrence(n).counts[static_cast<std::size_t>(k)];
}

}  // namespace dyck
