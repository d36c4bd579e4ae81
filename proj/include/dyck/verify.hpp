#ifndef DYCK_VERIFY_HPP
#define DYCK_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "dyck/enumerate.hpp"
#include "dyck/series.hpp"

namespace dyck {

// True iff phi_plus maps S_k onto S_{k+1} for every k < n, with phi_minus as
// its two-sided inverse. Exhaustive over the enumerated classes.
bool bijection_holds(int n, int bound = kDefaultEnumerationBound);

// The independent counting routes compared by verify_theorem. Each member can
// be swapped out, e.g. to check that a faulty route is detected.
struct CountingMethods {
  std::function<CountTable(int n)> brute_force;
  std::function<CountTable(int n)> recurrence;
  std::function<BivariateSeries(int order)> series;
  std::function<BigInt(int n)> catalan;
  std::function<bool(int n)> bijection;
};

CountingMethods default_methods();

struct VerifyRow {
  int n = 0;
  BigInt catalan;
  bool enumeration_ok = false;  // |S_k| = C_n for all k, sum = C(2n,n)
  bool recurrence_ok = false;
  bool series_ok = false;
  bool closed_form_ok = false;
  bool bijection_ok = false;

  bool pass() const {
    return enumeration_ok && recurrence_ok && series_ok && closed_form_ok &&
           bijection_ok;
  }
  // Comma-separated names of the failing checks; empty when pass().
  std::string failures() const;
};

// One row per n = 0..max_n. Throws BoundExceeded when max_n is beyond the
// enumeration bound.
std::vector<VerifyRow> verify_theorem(
    int max_n, const CountingMethods& methods = default_methods(),
    int bound = kDefaultEnumerationBound);

}  // namespace dyck

#endif  // DYCK_VERIFY_HPP
