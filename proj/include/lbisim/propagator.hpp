// Copyright 2026 The lbisim Authors
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

#pragma once

#include <functional>
#include <vector>

#include "lbisim/hamiltonian.hpp"

namespace lbisim {

/// H(t) = h0 + sum_k [f_k(t) x_k + conj(f_k(t)) x_k^dag], all in GHz; h0 Hermitian.
struct DrivenHamiltonian {
    using Coefficients = std::vector<cdouble>;

    SparseMatrix h0;
    std::vector<SparseMatrix> x;
    std::vector<SparseMatrix> x_dag;
    std::function<void(double t_ns, Coefficients &f)> f;

    /// Adds the term f x + conj(f) x^dag with a single time-dependent coefficient.
    void add_term(const SparseMatrix &op);
    Coefficients coefficients(double t_ns) const;

    /// y = H v for already-evaluated coefficients `c`, with h0 scaled by `h0_weight`.
    void apply(const Coefficients &c, const Vector &v, Vector &y, double h0_weight = 1.0) const;
};

struct PropagatorOptions {
    // Local error per step (2-norm of the state) accepted by the step controller.
    double tolerance = 1e-9;
    double initial_step_ns = 0.05;
    double max_step_ns = 2.0;
    double min_step_ns = 1e-7;
    int max_krylov = 48;
};

struct PropagationStats {
    long accepted = 0;
    long rejected = 0;
    long matvecs = 0;
};

/// Called after every accepted step with the current time and state.
using StepObserver = std::function<void(double t_ns, const Vector &psi)>;

/// exp(-i 2 pi tau K) v by Lanczos with full reorthogonalization; K Hermitian, given as
/// a matvec. Returns false when `max_krylov` vectors do not converge to `tol`.
bool lanczos_expmv(const std::function<void(const Vector &, Vector &)> &k, double tau_ns, const Vector &v,
                   Vector &out, double tol, int max_krylov, long *matvecs = nullptr);

/// Adaptive fourth-order commutator-free Magnus integration of i dpsi/dt = 2 pi H(t) psi
/// with step-doubling error control. Throws IntegrationError on step underflow.
PropagationStats propagate(const DrivenHamiltonian &h, Vector &psi, double t0_ns, double t1_ns,
                           const PropagatorOptions &options = {}, const StepObserver &observer = {});

/// Reference path: adaptive Dormand-Prince integration of the same equation. Only
/// sensible for small dimensions; used to cross-check `propagate`.
void propagate_dopri(const DrivenHamiltonian &h, Vector &psi, double t0_ns, double t1_ns, double abs_tol,
                     double rel_tol);

}  // namespace lbisim
