#ifndef DYCK_ENUMERATE_HPP
#define DYCK_ENUMERATE_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dyck/integer.hpp"
#include "dyck/path.hpp"

namespace dyck {

// Largest half-length the brute-force enumerator accepts by default.
// C(24,12) = 2,704,156 paths.
inline constexpr int kDefaultEnumerationBound = 12;

// Catalan number C_n from C_0 = 1 and C_n = sum_{i<n} C_i C_{n-1-i}.
// Memoized; safe to call concurrently.
BigInt catalan(int n);

// C(2n,n) / (n+1), computed independently of catalan().
BigInt catalan_closed_form(int n);

BigInt binomial(int n, int k);
BigInt central_binomial(int n);

// Exact counts |S_k| for k = 0..n.
struct CountTable {
  int n = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// One "k<TAB>count" line per k, ascending.
std::string to_text(const CountTable& table);

// Calls visit(steps, negativity) for every balanced path of half-length n in
// lexicographic order with 'U' < 'D'. The span is only valid during the call.
void for_each_balanced(
    int n, const std::function<void(std::span<const Step>, int)>& visit,
    int bound = kDefaultEnumerationBound);

// All C(2n,n) balanced paths of half-length n, lexicographic with 'U' < 'D'.
std::vector<LatticePath> enumerate_balanced(
    int n, int bound = kDefaultEnumerationBound);

CountTable partition_by_negativity(int n,
                                   int bound = kDefaultEnumerationBound);

// The classes S_0..S_n themselves, each in lexicographic order.
std::vector<std::vector<LatticePath>> negativity_classes(
    int n, int bound = kDefaultEnumerationBound);

// N(n,k) from the first-prime recurrence
//   N(n,k) = sum_{p=1}^{n-k} C_{p-1} N(n-p,k) + sum_{q=1}^{k} C_{q-1} N(n-q,k-q)
// with N(0,0) = 1. The right side refers back to N rather than to C_n, so
// agreement with catalan(n) is a checked outcome.
BigInt count_recurrence(int n, int k);

// All N(n,k) for k = 0..n from a single table fill.
CountTable count_table_recurrence(int n);

}  // namespace dyck

#endif  // DYCK_ENUMERATE_HPP
