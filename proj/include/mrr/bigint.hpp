#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mrr {

// Exact arbitrary-precision integer for automorphism group orders.
// |Aut| of a near-empty graph at the vertex cap exceeds 64 bits by far.
using BigInt = boost::multiprecision::cpp_int;

} // namespace mrr
