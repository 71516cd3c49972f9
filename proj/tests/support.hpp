#pragma once

#include "horo/rational.hpp"
#include "horo/face_set.hpp"

#include <initializer_list>

namespace testing {

inline horo::RatVector vec(std::initializer_list<horo::Rational> xs) { return horo::RatVector(xs); }

inline horo::FaceSet face(std::initializer_list<std::size_t> xs) {
  return horo::FaceSet::of(std::vector<std::size_t>(xs));
}

inline horo::Rational q(long n, long d = 1) { return horo::Rational(n, d); }

}  // namespace testing
