#include "dyck/verify.hpp"

#include <algorithm>
#include <set>

#include "dyck/bijection.hpp"
#include "dyck/error.hpp"

namespace dyck {

bool bijection_holds(int n, int bound) {
  const auto classes = negativity_classes(n, bound);
  for (int k = 0; k < n; ++k) {
    const auto& source = classes[static_cast<std::size_t>(k)];
    const auto& target = classes[static_cast<std::size_t>(k + 1)];
    std::set<LatticePath> image;
    for (const auto& s : source) {
      auto mapped = phi_plus(s);
      if (negativity(mapped) != k + 1) return false;
      if (phi_minus(mapped) != s) return false;
      image.insert(std::move(mapped));
    }
    // Injective and onto S_{k+1}.
    if (image.size() != source.size()) return false;
    if (!std::equal(image.begin(), image.end(), target.begin(), target.end())) {
      return false;
    }
    for (const auto& sigma : target) {
      if (phi_plus(phi_minus(sigma)) != sigma) return false;
    }
  }
  return true;
}

CountingMethods default_methods() {
  return CountingMethods{
      [](int n) { return partition_by_negativity(n); },
      [](int n) { return count_table_recurrence(n); },
      [](int order) { return n_series(order); },
      [](int n) { return catalan(n); },
      [](int n) { return bijection_holds(n); },
  };
}

std::string VerifyRow::failures() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(enumeration_ok, "enumeration");
  add(recurrence_ok, "recurrence");
  add(series_ok, "series");
  add(closed_form_ok, "closed-form");
  add(bijection_ok, "bijection");
  return out;
}

std::vector<VerifyRow> verify_theorem(int max_n, const CountingMethods& methods,
                                      int bound) {
  if (max_n > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "max-n " + std::to_string(max_n) +
                    " exceeds enumeration bound " + std::to_string(bound));
  }
  if (max_n < 0) {
    throw Error(ErrorKind::IndexOutOfRange,
                "max-n " + std::to_string(max_n) + " is negative");
  }
  const BivariateSeries series = methods.series(max_n);
  std::vector<VerifyRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    VerifyRow row;
    row.n = n;
    row.catalan = methods.catalan(n);
    const auto expected_size = static_cast<std::size_t>(n) + 1;

    const CountTable brute = methods.brute_force(n);
    row.enumeration_ok = brute.counts.size() == expected_size &&
                         brute.total() == central_binomial(n);
    const CountTable recurrence = methods.recurrence(n);
    row.recurrence_ok = recurrence.counts.size() == expected_size;
    row.series_ok = series.order() >= n;
    for (int k = 0; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (row.enumeration_ok && brute.counts[uk] != row.catalan) {
        row.enumeration_ok = false;
      }
      if (row.recurrence_ok &&
          (uk >= brute.counts.size() ||
           recurrence.counts[uk] != brute.counts[uk] ||
           recurrence.counts[uk] != row.catalan)) {
        row.recurrence_ok = false;
      }
      if (row.series_ok && (uk >= brute.counts.size() ||
                            series.coeff(n, k) != brute.counts[uk] ||
                            series.coeff(n, k) != row.catalan)) {
        row.series_ok = false;
      }
    }
    row.closed_form_ok = row.catalan == catalan_closed_form(n) &&
                         BigInt(n + 1) * row.catalan == central_binomial(n);
    row.bijection_ok = methods.bijection(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dyck
