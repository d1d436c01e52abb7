#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace castle {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace castle
