#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace invsort {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace invsort
