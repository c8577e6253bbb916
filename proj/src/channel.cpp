// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "maopt/errors.hpp"
#include "maopt/rng.hpp"

namespace maopt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXd user_sines(const ValidatedScenario &scen)
{
    Eigen::VectorXd s(scen.m());
    for (int i = 0; i < scen.m(); ++i)
        s(i) = std::sin(scen.cfg.aoas[static_cast<size_t>(i)]);
    return s;
}

// H^H H with a spectral rank check shared by the ZF paths.
Eigen::MatrixXcd gram_checked(const ChannelMatrix &h)
{
    Eigen::MatrixXcd gram = h.adjoint() * h;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    const auto &ev = es.eigenvalues();
    const double lo = ev(0), hi = ev(ev.size() - 1);
    if (!(lo > kRankRelTol * hi)) {
        const double cond = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
        throw RankDeficiencyError(
            "channel matrix is rank-deficient: cond(H^H H) = " + std::to_string(cond), cond);
    }
    return gram;
}

} // namespace

Eigen::VectorXcd steering_vector(const AntennaPositions &x, double theta, double lambda)
{
    const double k = kTwoPi / lambda * std::sin(theta);
    Eigen::VectorXcd v(x.size());
    for (Eigen::Index n = 0; n < x.size(); ++n)
        v(n) = std::polar(1.0, k * x(n));
    return v;
}

ChannelMatrix channel_matrix(const AntennaPositions &x, const ValidatedScenario &scen)
{
    ChannelMatrix h(x.size(), scen.m());
    for (int i = 0; i < scen.m(); ++i)
        h.col(i) = steering_vector(x, scen.cfg.aoas[static_cast<size_t>(i)], scen.cfg.wavelength);
    return h;
}

Eigen::MatrixXcd zf_combiner(const ChannelMatrix &h)
{
    Eigen::MatrixXcd gram = gram_checked(h);
    // gram is Hermitian positive definite past the rank check.
    return h * gram.llt().solve(Eigen::MatrixXcd::Identity(h.cols(), h.cols()));
}

Eigen::VectorXd sinr_general(const Eigen::MatrixXcd &w, const ChannelMatrix &h,
                             const PowerAllocation &p, double sigma2)
{
    const int m = static_cast<int>(h.cols());
    Eigen::MatrixXcd cross = w.adjoint() * h;  // cross(i, k) = w_i^H h_k
    Eigen::VectorXd gamma(m);
    for (int i = 0; i < m; ++i) {
        double interference = 0.0;
        for (int k = 0; k < m; ++k)
            if (k != i)
                interference += p(k) * std::norm(cross(i, k));
        const double signal = p(i) * std::norm(cross(i, i));
        gamma(i) = signal / (interference + w.col(i).squaredNorm() * sigma2);
    }
    return gamma;
}

Eigen::VectorXd sinr_zf(const AntennaPositions &x, const ValidatedScenario &scen,
                        const PowerAllocation &p)
{
    Eigen::MatrixXcd w = zf_combiner(channel_matrix(x, scen));
    Eigen::VectorXd gamma(scen.m());
    for (int i = 0; i < scen.m(); ++i)
        gamma(i) = p(i) / (w.col(i).squaredNorm() * scen.cfg.noise_power);
    return gamma;
}

PowerAllocation min_powers(const AntennaPositions &x, const ValidatedScenario &scen)
{
    Eigen::MatrixXcd w = zf_combiner(channel_matrix(x, scen));
    PowerAllocation p(scen.m());
    for (int i = 0; i < scen.m(); ++i)
        p(i) = w.col(i).squaredNorm() * scen.epsilons.eps(i) * scen.cfg.noise_power;
    return p;
}

Eigen::MatrixXcd gain_matrix(const AntennaPositions &x, const ValidatedScenario &scen)
{
    const int m = scen.m();
    const Eigen::VectorXd sines = user_sines(scen);
    const Eigen::VectorXd omega = scen.omega_diag();
    const double k = kTwoPi / scen.cfg.wavelength;

    Eigen::MatrixXcd z(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double dsin = sines(j) - sines(i);
            std::complex<double> sum = 0.0;
            for (Eigen::Index a = 0; a < x.size(); ++a)
                sum += std::polar(1.0, k * x(a) * dsin);
            z(i, j) = sum / omega(i);
        }
    }
    return z;
}

Eigen::MatrixXcd gain_matrix_partial(const AntennaPositions &x, const ValidatedScenario &scen,
                                     int n)
{
    if (n < 0 || n >= scen.n())
        throw Error("antenna index out of range: " + std::to_string(n));
    const int m = scen.m();
    const Eigen::VectorXd sines = user_sines(scen);
    const Eigen::VectorXd omega = scen.omega_diag();
    const double k = kTwoPi / scen.cfg.wavelength;

    Eigen::MatrixXcd dz = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j)
                continue;  // dsin = 0 zeroes the diagonal exactly
            const double dsin = sines(j) - sines(i);
            dz(i, j) = k * dsin / omega(i) *
                       std::polar(1.0, k * x(n) * dsin + std::numbers::pi / 2.0);
        }
    }
    return dz;
}

GainEigensystem eigendecompose_gain(const Eigen::MatrixXcd &z,
                                    const Eigen::VectorXd &omega_inv_sqrt_diag)
{
    const Eigen::Index m = z.rows();
    const Eigen::VectorXd &d = omega_inv_sqrt_diag;

    // S = Omega^{1/2} Z Omega^{-1/2}: S_ij = z_ij * d_j / d_i.
    Eigen::MatrixXcd s(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            s(i, j) = z(i, j) * (d(j) / d(i));

    const double norm = s.norm();
    const double asym = (s - s.adjoint()).norm();
    if (norm > 0.0 && asym > kHermitianAsymTol * norm)
        throw DecompositionError("similarity-transformed gain matrix is not Hermitian: "
                                 "relative asymmetry " +
                                 std::to_string(asym / norm));

    Eigen::MatrixXcd sh = 0.5 * (s + s.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sh);
    if (es.info() != Eigen::Success)
        throw DecompositionError("eigendecomposition did not converge");

    Eigen::MatrixXcd u = es.eigenvectors();  // unitary, eigenvalues ascending
    // Phase convention: first significant entry of each column real positive.
    for (Eigen::Index c = 0; c < m; ++c) {
        for (Eigen::Index r = 0; r < m; ++r) {
            const double mag = std::abs(u(r, c));
            if (mag > 1e-12) {
                u.col(c) *= std::conj(u(r, c)) / mag;
                break;
            }
        }
    }

    GainEigensystem out;
    out.z = z;
    out.eigenvalues = es.eigenvalues();
    out.v = d.asDiagonal() * u;                          // V = Omega^{-1/2} U
    out.v_inv = u.adjoint() * d.cwiseInverse().asDiagonal();  // V^{-1} = U^H Omega^{1/2}
    return out;
}

Eigen::VectorXd simulate_uplink_sinr(const AntennaPositions &x, const ValidatedScenario &scen,
                                     const PowerAllocation &p, std::int64_t num_symbols,
                                     std::uint64_t seed)
{
    const int m = scen.m();
    const int n = scen.n();
    ChannelMatrix h = channel_matrix(x, scen);
    Eigen::MatrixXcd wh = zf_combiner(h).adjoint();  // M x N
    Eigen::VectorXd sqrt_p = p.cwiseSqrt();
    const double noise_scale = std::sqrt(scen.cfg.noise_power / 2.0);

    Eigen::VectorXd desired = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd residual = Eigen::VectorXd::Zero(m);
    Eigen::VectorXcd s(m), noise(n), y(m);

    for (std::int64_t t = 0; t < num_symbols; ++t) {
        SplitMix64 stream(derive_seed(seed, static_cast<std::uint64_t>(t)));
        for (int i = 0; i < m; ++i)
            s(i) = std::polar(1.0, kTwoPi * stream.uniform());
        for (int a = 0; a < n; ++a) {
            auto [g1, g2] = stream.gaussian_pair();
            noise(a) = noise_scale * std::complex<double>(g1, g2);
        }
        y = wh * (h * sqrt_p.cwiseProduct(s).matrix() + noise);
        for (int i = 0; i < m; ++i) {
            const std::complex<double> want = sqrt_p(i) * s(i);
            desired(i) += std::norm(want);
            residual(i) += std::norm(y(i) - want);
        }
    }
    return desired.cwiseQuotient(residual);
}

} // namespace maopt
