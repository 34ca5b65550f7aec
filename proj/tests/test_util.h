// Copyright 2026 The qcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCAP_TEST_UTIL_H
#define QCAP_TEST_UTIL_H

#include <cmath>

#include "qcap/linalg.h"

namespace qcap::testing {

inline double binary_entropy(double p) {
    if (p <= 0 || p >= 1) {
        return 0;
    }
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

inline CMatrix pauli_x() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    return m;
}

inline CMatrix pauli_z() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return m;
}

inline CMatrix bell_state() {
    CVector v = CVector::Zero(4);
    v(0) = 1 / std::sqrt(2.0);
    v(3) = 1 / std::sqrt(2.0);
    return v * v.adjoint();
}

/// max_x h((1−γ)x) − h(γx) on a grid of the given resolution. Diagonal inputs
/// suffice for amplitude damping by phase covariance.
inline double amplitude_damping_q1_oracle(double gamma, double resolution = 1e-5) {
    double best = 0;
    const long steps = static_cast<long>(std::llround(1 / resolution));
    for (long i = 0; i <= steps; i++) {
        double x = static_cast<double>(i) / static_cast<double>(steps);
        best = std::max(best, binary_entropy((1 - gamma) * x) - binary_entropy(gamma * x));
    }
    return best;
}

}  // namespace qcap::testing

#endif
