#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace subcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace subcodes
