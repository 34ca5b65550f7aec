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

#ifndef QCAP_LOCAL_ASCENT_H
#define QCAP_LOCAL_ASCENT_H

#include <functional>
#include <vector>

namespace qcap {

/// Returns f(x) and writes ∇f(x) into grad (already sized like x).
using ValueAndGradient = std::function<double(const std::vector<double> &x, std::vector<double> &grad)>;

struct AscentResult {
    std::vector<double> x;
    double value;
    size_t iterations;
    /// Gradient norm fell below the tolerance.
    bool converged;
    /// The very first line search could not make progress.
    bool line_search_failed;
};

/// Quasi-Newton (BFGS) ascent from x0. Stops on gradient norm ≤ grad_tol, on
/// lack of progress, or after max_iters. Returns the best point seen.
AscentResult maximize_local(const ValueAndGradient &fn, std::vector<double> x0, size_t max_iters, double grad_tol);

}  // namespace qcap

#endif
