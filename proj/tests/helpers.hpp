#pragma once

#include "meshpat/poly.hpp"

#include <string>
#include <vector>

namespace meshpat::test {

inline IntPoly P(std::initializer_list<long long> c) { return IntPoly(c); }

inline std::string S(const IntPoly& p) { return p.to_string(); }

}  // namespace meshpat::test
