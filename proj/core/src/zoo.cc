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

#include "qcap/zoo.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qcap/entanglement.h"

namespace qcap {

namespace {

using Index = Eigen::Index;

void require_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw Error(ErrorKind::InvalidParams, std::string(name) + " must lie in [0, 1]");
    }
}

size_t require_dim(double d, const char *name) {
    if (!(d >= 1) || d != std::floor(d) || d > 64) {
        throw Error(ErrorKind::InvalidParams, std::string(name) + " must be a positive integer");
    }
    return static_cast<size_t>(d);
}

void require_count(std::span<const double> params, size_t count, std::string_view name) {
    if (params.size() != count) {
        throw Error(
            ErrorKind::InvalidParams,
            std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    }
}

}  // namespace

KrausChannel identity_channel(size_t d) {
    auto n = static_cast<Index>(d);
    return KrausChannel(d, d, {CMatrix::Identity(n, n)});
}

KrausChannel dephasing(double p) {
    require_probability(p, "dephasing p");
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 1;
    z(1, 1) = -1;
    return KrausChannel(2, 2, {std::sqrt(1 - p) * CMatrix::Identity(2, 2), std::sqrt(p) * z});
}

KrausChannel depolarizing(size_t d, double p) {
    require_probability(p, "depolarizing p");
    if (d == 0) {
        throw Error(ErrorKind::InvalidParams, "depolarizing d must be positive");
    }
    const auto n = static_cast<Index>(d);
    const double pi = std::acos(-1.0);
    CMatrix shift = CMatrix::Zero(n, n);
    CMatrix clock = CMatrix::Zero(n, n);
    for (Index k = 0; k < n; k++) {
        shift((k + 1) % n, k) = 1;
        clock(k, k) = std::polar(1.0, 2 * pi * static_cast<double>(k) / static_cast<double>(d));
    }
    std::vector<CMatrix> ops;
    const double dd = static_cast<double>(d * d);
    CMatrix xa = CMatrix::Identity(n, n);
    for (size_t a = 0; a < d; a++) {
        CMatrix zb = CMatrix::Identity(n, n);
        for (size_t b = 0; b < d; b++) {
            double weight = (a == 0 && b == 0) ? 1 - p + p / dd : p / dd;
            if (weight > 0) {
                ops.push_back(std::sqrt(weight) * xa * zb);
            }
            zb = zb * clock;
        }
        xa = xa * shift;
    }
    return KrausChannel(d, d, std::move(ops));
}

KrausChannel amplitude_damping(double gamma) {
    require_probability(gamma, "amplitude damping gamma");
    CMatrix k0 = CMatrix::Zero(2, 2);
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1 - gamma);
    CMatrix k1 = CMatrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return KrausChannel(2, 2, {k0, k1});
}

KrausChannel erasure(double p, size_t d) {
    require_probability(p, "erasure p");
    if (d == 0) {
        throw Error(ErrorKind::InvalidParams, "erasure d must be positive");
    }
    const auto n = static_cast<Index>(d);
    std::vector<CMatrix> ops;
    CMatrix keep = CMatrix::Zero(n + 1, n);
    keep.topRows(n) = std::sqrt(1 - p) * CMatrix::Identity(n, n);
    ops.push_back(keep);
    for (Index i = 0; i < n; i++) {
        CMatrix flag = CMatrix::Zero(n + 1, n);
        flag(n, i) = std::sqrt(p);
        ops.push_back(flag);
    }
    return KrausChannel(d, d + 1, std::move(ops));
}

KrausChannel replace_channel(size_t d_in, size_t d_out) {
    if (d_in == 0 || d_out == 0) {
        throw Error(ErrorKind::InvalidParams, "replace dimensions must be positive");
    }
    std::vector<CMatrix> ops;
    for (size_t i = 0; i < d_in; i++) {
        CMatrix k = CMatrix::Zero(static_cast<Index>(d_out), static_cast<Index>(d_in));
        k(0, static_cast<Index>(i)) = 1;
        ops.push_back(std::move(k));
    }
    return KrausChannel(d_in, d_out, std::move(ops));
}

KrausChannel tiles_complement() {
    const CMatrix rho = tiles_state();
    const Dims dims{3, 3};
    HermitianEig marginal = herm_eig(partial_trace(rho, dims, Subsystem::A));
    if (marginal.eigenvalues(0) <= 1e-12) {
        throw Error(ErrorKind::ConstructionFailed, "tiles_complement: tiles marginal is singular");
    }
    RVector inv_sqrt = marginal.eigenvalues.cwiseSqrt().cwiseInverse();
    CMatrix f = marginal.eigenvectors * inv_sqrt.asDiagonal() * marginal.eigenvectors.adjoint();
    CMatrix filter = kron(f, CMatrix::Identity(3, 3));
    CMatrix j = hermitian_part(filter * rho * filter.adjoint());

    // N_c has Kraus G_r (3x3); N takes K_e[r, i] = G_r[e, i], so N's
    // complementary is N_c exactly.
    KrausChannel env = choi_to_kraus(ChoiMatrix(3, 3, j, 1e-9));
    const size_t rank = env.kraus_count();
    std::vector<CMatrix> ops;
    for (Index e = 0; e < 3; e++) {
        CMatrix k(static_cast<Index>(rank), 3);
        for (size_t r = 0; r < rank; r++) {
            k.row(static_cast<Index>(r)) = env.operators()[r].row(e);
        }
        ops.push_back(std::move(k));
    }
    KrausChannel n(3, rank, std::move(ops));

    KrausChannel back = complementary_channel(n);
    if (back.d_out() != 3 || (kraus_to_choi(back).matrix() - j).norm() > 1e-9) {
        throw Error(ErrorKind::ConstructionFailed, "tiles_complement: complementary does not reproduce the target Choi");
    }
    ComplementaryClassification c = classify_complementary(n);
    if (c.verdict != ComplementaryClass::PptEntangled) {
        throw Error(
            ErrorKind::ConstructionFailed, "tiles_complement: complementary Choi classified as " +
                                               std::string(complementary_class_name(c.verdict)));
    }
    return n;
}

KrausChannel builtin(std::string_view name, std::span<const double> params) {
    if (name == "identity") {
        require_count(params, 1, name);
        return identity_channel(require_dim(params[0], "identity d"));
    }
    if (name == "dephasing") {
        require_count(params, 1, name);
        return dephasing(params[0]);
    }
    if (name == "depolarizing") {
        require_count(params, 2, name);
        return depolarizing(require_dim(params[0], "depolarizing d"), params[1]);
    }
    if (name == "amplitude_damping" || name == "ad") {
        require_count(params, 1, name);
        return amplitude_damping(params[0]);
    }
    if (name == "erasure") {
        require_count(params, 2, name);
        return erasure(params[0], require_dim(params[1], "erasure d"));
    }
    if (name == "replace") {
        require_count(params, 2, name);
        return replace_channel(require_dim(params[0], "replace d_in"), require_dim(params[1], "replace d_out"));
    }
    if (name == "tiles_complement") {
        require_count(params, 0, name);
        return tiles_complement();
    }
    throw Error(ErrorKind::UnknownChannel, "no builtin channel named '" + std::string(name) + "'");
}

KrausChannel builtin_from_spec(std::string_view spec) {
    size_t colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string_view::npos) {
        std::string rest(spec.substr(colon + 1));
        size_t pos = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string token = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            char *end = nullptr;
            double v = std::strtod(token.c_str(), &end);
            if (token.empty() || end != token.c_str() + token.size()) {
                throw Error(ErrorKind::InvalidParams, "cannot parse parameter '" + token + "' in '" + std::string(spec) + "'");
            }
            params.push_back(v);
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    return builtin(name, params);
}

std::vector<std::string> builtin_names() {
    return {"identity", "dephasing", "depolarizing", "amplitude_damping", "erasure", "replace", "tiles_complement"};
}

}  // namespace qcap
