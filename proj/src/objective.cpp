// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/objective.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "maopt/errors.hpp"

namespace maopt {

namespace {

// Eigensystem of Z(x) with the singular-gain guard applied.
GainEigensystem checked_eigensystem(const AntennaPositions &x, const ValidatedScenario &scen)
{
    Eigen::VectorXd omega_inv_sqrt = scen.omega_diag().cwiseSqrt().cwiseInverse();
    GainEigensystem eig = eigendecompose_gain(gain_matrix(x, scen), omega_inv_sqrt);
    const double lo = eig.eigenvalues(0);
    const double hi = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (!(lo > kSingularGainRelTol * hi))
        throw SingularGainError("gain matrix is numerically singular: min/max eigenvalue ratio " +
                                std::to_string(lo / hi));
    return eig;
}

bool has_degenerate_gap(const Eigen::VectorXd &ev)
{
    const double hi = ev(ev.size() - 1);
    for (Eigen::Index i = 0; i + 1 < ev.size(); ++i)
        if (ev(i + 1) - ev(i) < kDegenerateGapRelTol * hi)
            return true;
    return false;
}

} // namespace

double total_power_objective(const AntennaPositions &x, const ValidatedScenario &scen)
{
    return checked_eigensystem(x, scen).eigenvalues.cwiseInverse().sum();
}

Gradient gradient_from_eigensystem(const GainEigensystem &eig, const AntennaPositions &x,
                                   const ValidatedScenario &scen, GradientInfo *info)
{
    const int n = scen.n();
    const int m = scen.m();
    Gradient g(n);
    double worst_residue = 0.0;
    for (int a = 0; a < n; ++a) {
        Eigen::MatrixXcd dz = gain_matrix_partial(x, scen, a);
        double acc = 0.0;
        for (int i = 0; i < m; ++i) {
            const std::complex<double> term = eig.v_inv.row(i) * dz * eig.v.col(i);
            // The summand is real in exact arithmetic; the residue bound is
            // scaled by the term magnitude so legitimately large gradients
            // near singular geometries do not false-trigger.
            const double scale = std::max(1.0, std::abs(term));
            const double residue = std::abs(term.imag()) / scale;
            worst_residue = std::max(worst_residue, residue);
            if (residue > 1e-9)
                throw Error("eigen-gradient term lost realness: scaled imaginary residue " +
                            std::to_string(residue));
            const double lam = eig.eigenvalues(i);
            acc += -1.0 / (lam * lam) * term.real();
        }
        g(a) = acc;
    }
    if (info)
        info->max_imag_residue = std::max(info->max_imag_residue, worst_residue);
    return g;
}

Gradient gradient_closed_form(const AntennaPositions &x, const ValidatedScenario &scen,
                              GradientInfo *info, DegeneratePolicy policy)
{
    GainEigensystem eig = checked_eigensystem(x, scen);
    if (has_degenerate_gap(eig.eigenvalues)) {
        if (policy == DegeneratePolicy::abort)
            throw DegenerateSpectrumError("repeated gain eigenvalues: per-eigenvalue "
                                          "derivatives are ill-defined");
        if (info)
            info->degenerate_fallback = true;
        return gradient_trace_form(x, scen);
    }
    return gradient_from_eigensystem(eig, x, scen, info);
}

Gradient gradient_finite_difference(const AntennaPositions &x, const ValidatedScenario &scen,
                                    double epsilon, FdMode mode)
{
    const int n = scen.n();
    Gradient g(n);
    AntennaPositions probe = x;
    const double f0 =
        (mode == FdMode::forward) ? total_power_objective(x, scen) : 0.0;
    for (int a = 0; a < n; ++a) {
        probe(a) = x(a) + epsilon;
        const double fp = total_power_objective(probe, scen);
        if (mode == FdMode::forward) {
            g(a) = (fp - f0) / epsilon;
        } else {
            probe(a) = x(a) - epsilon;
            const double fm = total_power_objective(probe, scen);
            g(a) = (fp - fm) / (2.0 * epsilon);
        }
        probe(a) = x(a);
    }
    return g;
}

Gradient gradient_trace_form(const AntennaPositions &x, const ValidatedScenario &scen)
{
    // Guard the spectrum the same way the eigen route does.
    (void)checked_eigensystem(x, scen);
    Eigen::MatrixXcd z = gain_matrix(x, scen);
    Eigen::MatrixXcd zinv =
        z.partialPivLu().solve(Eigen::MatrixXcd::Identity(z.rows(), z.cols()));
    Eigen::MatrixXcd z2 = zinv * zinv;

    const int n = scen.n();
    Gradient g(n);
    for (int a = 0; a < n; ++a) {
        Eigen::MatrixXcd dz = gain_matrix_partial(x, scen, a);
        // tr(Z^{-2} dZ) = sum_{i,j} Z2(i,j) dZ(j,i)
        const std::complex<double> tr = (z2.transpose().cwiseProduct(dz)).sum();
        g(a) = -tr.real();
    }
    return g;
}

} // namespace maopt
