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

#ifndef QCAP_ZOO_H
#define QCAP_ZOO_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcap/channel.h"

namespace qcap {

KrausChannel identity_channel(size_t d);
/// {√(1−p) I, √p Z}.
KrausChannel dephasing(double p);
/// ρ ↦ (1−p)ρ + p·I/d via the d² Weyl–Heisenberg operators.
KrausChannel depolarizing(size_t d, double p);
/// {|0⟩⟨0| + √(1−γ)|1⟩⟨1|, √γ |0⟩⟨1|}.
KrausChannel amplitude_damping(double gamma);
/// Erases with probability p into the flag level d of a (d+1)-level output.
KrausChannel erasure(double p, size_t d);
/// Discards the input and prepares |0⟩ on d_out levels.
KrausChannel replace_channel(size_t d_in, size_t d_out);
/// Qutrit-input channel whose complementary Choi state is the tiles bound
/// entangled state after local filtering on the input so that the Choi matrix is
/// trace preserving. The filter is invertible, so PPT and entanglement carry
/// over; both are re-checked at construction and a failure raises
/// ConstructionFailed.
KrausChannel tiles_complement();

/// Looks up a channel by name with numeric parameters:
///   identity(d) dephasing(p) depolarizing(d,p) amplitude_damping(γ)
///   erasure(p,d) replace(d_in,d_out) tiles_complement()
KrausChannel builtin(std::string_view name, std::span<const double> params);
/// "name:p1,p2" form used on the command line, e.g. "erasure:0.5,2".
KrausChannel builtin_from_spec(std::string_view spec);
std::vector<std::string> builtin_names();

}  // namespace qcap

#endif
