#ifndef DYCK_CYCLE_HPP
#define DYCK_CYCLE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/path.hpp"

namespace dyck {

// A +-1 sequence a_1..a_L considered up to rotation. Stored 0-based; prefix
// sums and shifts are indexed 0..L, with shift L equivalent to shift 0.
class CyclicSequence {
 public:
  CyclicSequence() = default;
  explicit CyclicSequence(std::vector<Step> terms);
  explicit CyclicSequence(const LatticePath& path);

  std::size_t length() const noexcept { return terms_.size(); }
  int sum() const noexcept { return sum_; }
  std::span<const Step> terms() const noexcept { return terms_; }
  Step operator[](std::size_t i) const { return terms_[i]; }

  // a_{j+1} .. a_L a_1 .. a_j
  CyclicSequence rotated(std::size_t shift) const;

  LatticePath to_path() const { return LatticePath(terms_); }

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::vector<Step> terms_;
  int sum_ = 0;
};

// Parses a string over {'+','-'}; throws InvalidCharacter otherwise.
CyclicSequence parse_sequence(std::string_view text);
std::string render_sequence(const CyclicSequence& seq);

// s(0..L), s(0) = 0, s(L) = sum.
std::vector<int> partial_sums(const CyclicSequence& seq);

// p strictly precedes q iff s(p) < s(q), or s(p) == s(q) and p > q.
// Throws IndexOutOfRange unless p, q <= L.
bool precedes(const CyclicSequence& seq, std::size_t p, std::size_t q);

// m_0..m_L: m_i is the index with exactly i indices preceding it.
struct RankOrder {
  std::vector<std::size_t> ranks;
  friend bool operator==(const RankOrder&, const RankOrder&) = default;
};

RankOrder rank_order(const CyclicSequence& seq);

// Partial sum at index p measured from the origin of the j-th shift:
//   s(p) - s(j)        when j <= p
//   s(p) - s(j) + sum  when p < j
int shifted_partial_sum(const CyclicSequence& seq, std::size_t j,
                        std::size_t p);

// Shifts i in [0, L) whose rotation has every prefix sum (lengths 1..L) >= 1.
// Found by rotating directly and cross-checked against shifted_partial_sum;
// the result always has exactly sum() elements. Throws NonPositiveSum.
std::vector<std::size_t> dominating_shifts(const CyclicSequence& seq);

// The same set, derived only from the partial sums of the unrotated sequence.
std::vector<std::size_t> dominating_shifts_from_partial_sums(
    const CyclicSequence& seq);

// Number of p in 0..L with shifted_partial_sum(seq, m_i, p) <= 0.
// Throws NonUnitSum unless sum() == 1, IndexOutOfRange unless i <= L.
std::size_t nonpositive_count_at_rank(const CyclicSequence& seq,
                                      std::size_t i);

struct CanonicalRotation {
  std::size_t shift = 0;
  CyclicSequence rotation;
};

// The unique dominating rotation of a sequence with sum 1; shift = m_0 mod L.
CanonicalRotation canonical_rotation(const CyclicSequence& seq);

}  // namespace dyck

#endif  // DYCK_CYCLE_HPP
