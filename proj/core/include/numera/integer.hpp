#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace numera {

/// Arbitrary-precision signed integer. Numeral values, weights and every
/// decoded quantity live in this type; digit strings can denote numbers far
/// beyond any machine word.
using Integer = boost::multiprecision::cpp_int;

} // namespace numera
