#include "dyck/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dyck/error.hpp"

namespace dyck {

namespace {

void require_index(const CyclicSequence& seq, std::size_t index) {
  if (index > seq.length()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(index) + " outside 0.." +
                    std::to_string(seq.length()));
  }
}

void require_positive_sum(const CyclicSequence& seq) {
  if (seq.sum() <= 0) {
    throw Error(ErrorKind::NonPositiveSum,
                "sequence sum " + std::to_string(seq.sum()) +
                    " is not positive");
  }
}

void require_unit_sum(const CyclicSequence& seq) {
  if (seq.sum() != 1) {
    throw Error(ErrorKind::NonUnitSum,
                "sequence sum " + std::to_string(seq.sum()) + " is not 1");
  }
}

bool all_prefixes_positive(const CyclicSequence& seq) {
  int s = 0;
  for (Step a : seq.terms()) {
    s += value(a);
    if (s < 1) return false;
  }
  return true;
}

}  // namespace

CyclicSequence::CyclicSequence(std::vector<Step> terms)
    : terms_(std::move(terms)) {
  for (Step a : terms_) sum_ += value(a);
}

CyclicSequence::CyclicSequence(const LatticePath& path)
    : CyclicSequence(std::vector<Step>(path.begin(), path.end())) {}

CyclicSequence CyclicSequence::rotated(std::size_t shift) const {
  std::vector<Step> out(terms_);
  if (!out.empty()) {
    std::ranges::rotate(out, out.begin() + static_cast<std::ptrdiff_t>(
                                               shift % out.size()));
  }
  return CyclicSequence(std::move(out));
}

CyclicSequence parse_sequence(std::string_view text) {
  std::vector<Step> terms;
  terms.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': terms.push_back(Step::Up); break;
      case '-': terms.push_back(Step::Down); break;
      default:
        throw Error(ErrorKind::InvalidCharacter,
                    "invalid character at position " + std::to_string(i), i);
    }
  }
  return CyclicSequence(std::move(terms));
}

std::string render_sequence(const CyclicSequence& seq) {
  std::string out;
  out.reserve(seq.length());
  for (Step a : seq.terms()) out.push_back(a == Step::Up ? '+' : '-');
  return out;
}

std::vector<int> partial_sums(const CyclicSequence& seq) {
  std::vector<int> s;
  s.reserve(seq.length() + 1);
  s.push_back(0);
  for (Step a : seq.terms()) s.push_back(s.back() + value(a));
  return s;
}

bool precedes(const CyclicSequence& seq, std::size_t p, std::size_t q) {
  require_index(seq, p);
  require_index(seq, q);
  const auto s = partial_sums(seq);
  return s[p] < s[q] || (s[p] == s[q] && p > q);
}

RankOrder rank_order(const CyclicSequence& seq) {
  const auto s = partial_sums(seq);
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::sort(order, [&](std::size_t p, std::size_t q) {
    return s[p] < s[q] || (s[p] == s[q] && p > q);
  });
  return RankOrder{std::move(order)};
}

int shifted_partial_sum(const CyclicSequence& seq, std::size_t j,
                        std::size_t p) {
  require_index(seq, j);
  require_index(seq, p);
  const auto s = partial_sums(seq);
  return j <= p ? s[p] - s[j] : s[p] - s[j] + seq.sum();
}

std::vector<std::size_t> dominating_shifts_from_partial_sums(
    const CyclicSequence& seq) {
  require_positive_sum(seq);
  const auto s = partial_sums(seq);
  const std::size_t length = seq.length();
  const int k = seq.sum();
  std::vector<std::size_t> shifts;
  for (std::size_t j = 0; j < length; ++j) {
    // Prefix of length t of the j-th rotation ends at index (j + t) mod L.
    bool dominating = true;
    for (std::size_t t = 1; t <= length && dominating; ++t) {
      const std::size_t p = j + t;
      const int value = p <= length ? s[p] - s[j] : s[p - length] - s[j] + k;
      dominating = value >= 1;
    }
    if (dominating) shifts.push_back(j);
  }
  return shifts;
}

std::vector<std::size_t> dominating_shifts(const CyclicSequence& seq) {
  require_positive_sum(seq);
  std::vector<std::size_t> shifts;
  for (std::size_t j = 0; j < seq.length(); ++j) {
    if (all_prefixes_positive(seq.rotated(j))) shifts.push_back(j);
  }
  if (shifts != dominating_shifts_from_partial_sums(seq)) {
    throw std::logic_error("rotation and partial-sum routes disagree for '" +
                           render_sequence(seq) + "'");
  }
  if (shifts.size() != static_cast<std::size_t>(seq.sum())) {
    throw std::logic_error("cycle lemma count violated for '" +
                           render_sequence(seq) + "'");
  }
  return shifts;
}

std::size_t nonpositive_count_at_rank(const CyclicSequence& seq,
                                      std::size_t i) {
  require_unit_sum(seq);
  require_index(seq, i);
  const std::size_t j = rank_order(seq).ranks[i];
  std::size_t count = 0;
  for (std::size_t p = 0; p <= seq.length(); ++p) {
    if (shifted_partial_sum(seq, j, p) <= 0) ++count;
  }
  return count;
}

CanonicalRotation canonical_rotation(const CyclicSequence& seq) {
  require_unit_sum(seq);
  const std::size_t shift = rank_order(seq).ranks.front() % seq.length();
  CanonicalRotation out{shift, seq.rotated(shift)};
  if (!all_prefixes_positive(out.rotation)) {
    throw std::logic_error("lowest-ranked shift is not dominating for '" +
                           render_sequence(seq) + "'");
  }
  return out;
}

}  // namespace dyck
