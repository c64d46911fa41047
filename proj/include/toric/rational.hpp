#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p" or "p/q", q > 0
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& text);

RatVec to_rat(const IntVec& v);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

}  // namespace toric
