// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXCOV_MATHUTIL_HPP_
#define MAXCOV_MATHUTIL_HPP_

#include <cmath>
#include <limits>

namespace maxcov {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(1 + e^x) without overflow for large |x|.
inline double softplus(double x) {
  if (x > 0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// 1 / (1 + e^-x).
inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(1 - e^-t) for t >= 0; returns -inf at t = 0.
inline double log1m_exp(double t) {
  if (t <= 0) return kNegInf;
  if (t <= 0.6931471805599453) return std::log(-std::expm1(-t));
  return std::log1p(-std::exp(-t));
}

// log(e^a + e^b), tolerant of -inf arguments.
inline double logaddexp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp((a > b ? b : a) - m));
}

}  // namespace maxcov

#endif  // MAXCOV_MATHUTIL_HPP_
