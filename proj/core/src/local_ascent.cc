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

#include "qcap/local_ascent.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace qcap {

namespace {

struct Context {
    const ValueAndGradient *fn;
    std::vector<double> x;
    std::vector<double> grad;
    std::vector<double> best_x;
    double best_value = -std::numeric_limits<double>::infinity();
};

// GSL minimizes, so everything is negated here.
double eval(const gsl_vector *v, Context &ctx) {
    for (size_t i = 0; i < ctx.x.size(); i++) {
        ctx.x[i] = gsl_vector_get(v, i);
    }
    double value = (*ctx.fn)(ctx.x, ctx.grad);
    if (!std::isfinite(value)) {
        std::fill(ctx.grad.begin(), ctx.grad.end(), 0.0);
        return std::numeric_limits<double>::max();
    }
    if (value > ctx.best_value) {
        ctx.best_value = value;
        ctx.best_x = ctx.x;
    }
    return -value;
}

double f_cb(const gsl_vector *v, void *params) {
    return eval(v, *static_cast<Context *>(params));
}

void df_cb(const gsl_vector *v, void *params, gsl_vector *g) {
    auto &ctx = *static_cast<Context *>(params);
    eval(v, ctx);
    for (size_t i = 0; i < ctx.grad.size(); i++) {
        gsl_vector_set(g, i, -ctx.grad[i]);
    }
}

void fdf_cb(const gsl_vector *v, void *params, double *f, gsl_vector *g) {
    auto &ctx = *static_cast<Context *>(params);
    *f = eval(v, ctx);
    for (size_t i = 0; i < ctx.grad.size(); i++) {
        gsl_vector_set(g, i, -ctx.grad[i]);
    }
}

struct MinimizerDeleter {
    void operator()(gsl_multimin_fdfminimizer *s) const {
        gsl_multimin_fdfminimizer_free(s);
    }
};

struct VectorDeleter {
    void operator()(gsl_vector *v) const {
        gsl_vector_free(v);
    }
};

}  // namespace

AscentResult maximize_local(const ValueAndGradient &fn, std::vector<double> x0, size_t max_iters, double grad_tol) {
    static std::once_flag quiet;
    std::call_once(quiet, [] { gsl_set_error_handler_off(); });

    const size_t n = x0.size();
    Context ctx{&fn, x0, std::vector<double>(n), x0};
    if (n == 0) {
        ctx.best_value = fn(ctx.x, ctx.grad);
        return {x0, ctx.best_value, 0, true, false};
    }

    std::unique_ptr<gsl_vector, VectorDeleter> start(gsl_vector_alloc(n));
    for (size_t i = 0; i < n; i++) {
        gsl_vector_set(start.get(), i, x0[i]);
    }
    gsl_multimin_function_fdf func{&f_cb, &df_cb, &fdf_cb, n, &ctx};
    std::unique_ptr<gsl_multimin_fdfminimizer, MinimizerDeleter> s(
        gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, n));
    gsl_multimin_fdfminimizer_set(s.get(), &func, start.get(), 0.05, 0.1);

    size_t iter = 0;
    bool converged = gsl_multimin_test_gradient(s->gradient, grad_tol) == GSL_SUCCESS;
    bool failed_first = false;
    while (!converged && iter < max_iters) {
        int status = gsl_multimin_fdfminimizer_iterate(s.get());
        if (status != GSL_SUCCESS) {
            failed_first = iter == 0;
            break;
        }
        iter++;
        converged = gsl_multimin_test_gradient(s->gradient, grad_tol) == GSL_SUCCESS;
    }
    return {std::move(ctx.best_x), ctx.best_value, iter, converged, failed_first};
}

}  // namespace qcap
