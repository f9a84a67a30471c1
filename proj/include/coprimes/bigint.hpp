#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace coprimes {

/// Exact arbitrary-precision integer used by every counting surface
/// (the counts grow as 4^n).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace coprimes
