#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace qacert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

}  // namespace qacert
