#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace imb {

// Succinct-side arithmetic: clique sizes are unbounded and gamma squares them.
using BigInt = boost::multiprecision::cpp_int;

} // namespace imb
