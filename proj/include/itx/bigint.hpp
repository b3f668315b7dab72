#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace itx {

// Exact signed arbitrary-precision integer. Counting results outgrow 64 bits
// quickly (a dense digraph on n vertices can have ~n! paths), so every exact
// count in the library is carried in this type.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace itx
