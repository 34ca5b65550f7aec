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

#ifndef QCAP_OBJECTIVES_H
#define QCAP_OBJECTIVES_H

#include <vector>

#include "qcap/channel.h"
#include "qcap/state.h"

namespace qcap {

/// g(σ) = S(main(σ)) − S(eve(σ)) and its matrix gradient
/// W(σ) = eve†(log₂ eve(σ)) − main†(log₂ main(σ)). The 1/ln2 terms of the
/// entropy derivative cancel because both maps are trace preserving.
class EntropyGap {
   public:
    EntropyGap(KrausChannel main, KrausChannel eve);

    size_t dim() const {
        return main_.d_in();
    }
    double value(const CMatrix &sigma) const;
    double value_and_gradient(const CMatrix &sigma, CMatrix &gradient) const;

   private:
    KrausChannel main_;
    KrausChannel eve_;
};

/// I_coh over the factor parameterization ρ = GG†/Tr(GG†). Parameters are the
/// real parts then the imaginary parts of G in column-major order.
class CoherentObjective {
   public:
    explicit CoherentObjective(const KrausChannel &n);

    size_t parameter_count() const {
        return 2 * dim_ * dim_;
    }
    double operator()(const std::vector<double> &x, std::vector<double> &grad) const;
    CMatrix decode(const std::vector<double> &x) const;
    std::vector<double> encode(const CMatrix &factor) const;

   private:
    EntropyGap gap_;
    size_t dim_;
};

/// Objectives over hierarchical ensembles with m' outer and m inner members.
/// Layout: m' outer logits, m'·m inner logits, then m'·m kets of d complex
/// entries stored as (re, im) pairs. Probabilities are softmax of logits and
/// kets are normalized.
class EnsembleObjective {
   public:
    enum class Kind {
        /// g(ρ̄) − Σ p(x') g(ρ^{x'}): the private information of the pair.
        Private,
        /// Σ p(x') [g(ρ^{x'}) − Σ p(x|x') g(ψ_{x,x'})]: η for a channel and its
        /// complementary. The pure-state terms vanish identically there, so
        /// they carry no gradient.
        Eta,
    };

    EnsembleObjective(WiretapChannel pair, size_t outer, size_t inner, Kind kind);

    size_t parameter_count() const;
    double operator()(const std::vector<double> &x, std::vector<double> &grad) const;
    HierarchicalEnsemble decode(const std::vector<double> &x) const;
    /// Pads short ensembles (extra outer members get weight e^-40, extra inner
    /// members repeat the first ket). Returns empty if h does not fit.
    std::vector<double> encode(const HierarchicalEnsemble &h) const;

   private:
    struct Decoded {
        std::vector<double> outer;
        std::vector<std::vector<double>> inner;
        std::vector<std::vector<CVector>> kets;
        std::vector<std::vector<double>> norms;
    };
    Decoded unpack(const std::vector<double> &x) const;

    EntropyGap gap_;
    size_t dim_;
    size_t outer_;
    size_t inner_;
    Kind kind_;
};

}  // namespace qcap

#endif
