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

#include "lbisim/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "lbisim/errors.hpp"
#include "lbisim/units.hpp"

namespace lbisim {

namespace {

// Commutator-free fourth-order weights: Gauss nodes 1/2 -+ sqrt(3)/6.
const double kRoot3 = std::sqrt(3.0);
const double kNode1 = 0.5 - kRoot3 / 6.0;
const double kNode2 = 0.5 + kRoot3 / 6.0;
const double kWeightA = 0.25 - kRoot3 / 6.0;
const double kWeightB = 0.25 + kRoot3 / 6.0;

struct Stepper {
    const DrivenHamiltonian &h;
    const PropagatorOptions &opt;
    long matvecs = 0;

    // One CF4 step; false when a Krylov expansion failed to converge.
    bool step(double t, double dt, const Vector &in, Vector &out) {
        auto f1 = h.coefficients(t + kNode1 * dt);
        auto f2 = h.coefficients(t + kNode2 * dt);
        DrivenHamiltonian::Coefficients first(f1.size()), second(f1.size());
        for (std::size_t k = 0; k < f1.size(); ++k) {
            first[k] = kWeightB * f1[k] + kWeightA * f2[k];
            second[k] = kWeightA * f1[k] + kWeightB * f2[k];
        }
        Vector mid;
        const double ktol = 1e-3 * opt.tolerance;
        // The two weights sum to 1/2, so each exponential carries half of h0.
        auto op = [this](const DrivenHamiltonian::Coefficients &c) {
            return [this, &c](const Vector &v, Vector &y) { h.apply(c, v, y, 0.5); };
        };
        if (!lanczos_expmv(op(first), dt, in, mid, ktol, opt.max_krylov, &matvecs)) return false;
        return lanczos_expmv(op(second), dt, mid, out, ktol, opt.max_krylov, &matvecs);
    }
};

}  // namespace

void DrivenHamiltonian::add_term(const SparseMatrix &op) {
    x.push_back(op);
    x_dag.push_back(SparseMatrix(op.adjoint()));
}

DrivenHamiltonian::Coefficients DrivenHamiltonian::coefficients(double t) const {
    Coefficients c(x.size(), cdouble(0.0));
    if (f && !x.empty()) f(t, c);
    return c;
}

void DrivenHamiltonian::apply(const Coefficients &c, const Vector &v, Vector &y, double h0_weight) const {
    y.noalias() = h0 * v;
    if (h0_weight != 1.0) y *= h0_weight;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (c[k] == 0.0) continue;
        y.noalias() += c[k] * (x[k] * v);
        y.noalias() += std::conj(c[k]) * (x_dag[k] * v);
    }
}

bool lanczos_expmv(const std::function<void(const Vector &, Vector &)> &k, double tau_ns, const Vector &v,
                   Vector &out, double tol, int max_krylov, long *matvecs) {
    const double beta0 = v.norm();
    if (beta0 == 0.0) {
        out = v;
        return true;
    }
    const Eigen::Index n = v.size();
    const int m_max = static_cast<int>(std::min<Eigen::Index>(max_krylov, n));
    std::vector<Vector> basis;
    basis.reserve(m_max + 1);
    basis.push_back(v / beta0);
    std::vector<double> alpha, beta;
    Vector w(n);
    const double phase = kTwoPi * tau_ns;

    auto small_exp = [&](int m, Eigen::VectorXcd &y) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        Eigen::VectorXcd c(m);
        for (int i = 0; i < m; ++i) {
            c[i] = std::polar(1.0, -phase * es.eigenvalues()[i]) * es.eigenvectors()(0, i);
        }
        y = es.eigenvectors().cast<cdouble>() * c;
    };

    for (int j = 0; j < m_max; ++j) {
        k(basis[j], w);
        if (matvecs) ++*matvecs;
        double a = std::real(basis[j].dot(w));
        alpha.push_back(a);
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i <= j; ++i) w -= basis[i].dot(w) * basis[i];
        }
        double b = w.norm();
        const int m = j + 1;
        bool breakdown = b < 1e-13 * std::max(1.0, std::abs(a));
        bool check = breakdown || m == m_max || m % 4 == 0 || m == n;
        if (check) {
            Eigen::VectorXcd y;
            small_exp(m, y);
            double err = breakdown ? 0.0 : b * std::abs(y[m - 1]);
            if (err <= tol || breakdown || m == n) {
                out = Vector::Zero(n);
                for (int i = 0; i < m; ++i) out += y[i] * basis[i];
                out *= beta0;
                return true;
            }
        }
        beta.push_back(b);
        basis.push_back(w / b);
    }
    return false;
}

PropagationStats propagate(const DrivenHamiltonian &h, Vector &psi, double t0, double t1,
                           const PropagatorOptions &options, const StepObserver &observer) {
    PropagationStats stats;
    Stepper stepper{h, options};
    double t = t0;
    double dt = std::min(options.initial_step_ns, t1 - t0);
    Vector full, half, two;
    while (t < t1) {
        bool last = false;
        if (t + dt >= t1) {
            dt = t1 - t;
            last = true;
        }
        bool ok = stepper.step(t, dt, psi, full) && stepper.step(t, 0.5 * dt, psi, half) &&
                  stepper.step(t + 0.5 * dt, 0.5 * dt, half, two);
        double err = ok ? (two - full).norm() / 15.0 : INFINITY;
        if (ok && err <= options.tolerance) {
            psi = two;
            t = last ? t1 : t + dt;
            ++stats.accepted;
            if (observer) observer(t, psi);
            double grow = err > 0 ? 0.9 * std::pow(options.tolerance / err, 0.2) : 2.0;
            dt = std::min({dt * std::clamp(grow, 0.3, 2.0), options.max_step_ns});
        } else {
            ++stats.rejected;
            double shrink = ok ? std::clamp(0.9 * std::pow(options.tolerance / err, 0.2), 0.2, 0.7) : 0.5;
            dt *= shrink;
            if (dt < options.min_step_ns) {
                throw IntegrationError("step size underflow at t = " + std::to_string(t) + " ns");
            }
        }
    }
    stats.matvecs = stepper.matvecs;
    return stats;
}

void propagate_dopri(const DrivenHamiltonian &h, Vector &psi, double t0, double t1, double abs_tol,
                     double rel_tol) {
    using State = std::vector<cdouble>;
    namespace ode = boost::numeric::odeint;
    const auto n = psi.size();
    State x(psi.data(), psi.data() + n);
    Vector in(n), out(n);
    auto rhs = [&](const State &s, State &ds, double t) {
        for (Eigen::Index i = 0; i < n; ++i) in[i] = s[i];
        h.apply(h.coefficients(t), in, out);
        const cdouble factor(0.0, -kTwoPi);
        for (Eigen::Index i = 0; i < n; ++i) ds[i] = factor * out[i];
    };
    auto stepper = ode::make_controlled(abs_tol, rel_tol, ode::runge_kutta_dopri5<State>());
    ode::integrate_adaptive(stepper, rhs, x, t0, t1, 1e-3);
    for (Eigen::Index i = 0; i < n; ++i) psi[i] = x[i];
}

}  // namespace lbisim
