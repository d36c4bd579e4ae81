#ifndef DYCK_INTEGER_HPP
#define DYCK_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

// Exact arbitrary-precision integer used for every combinatorial count.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace dyck

#endif  // DYCK_INTEGER_HPP
