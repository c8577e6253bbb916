// SPDX-License-Identifier: Apache-2.0
//
// maopt: movable-antenna array position optimization for multiuser uplink
// Copyright (C) 2026 maopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "maopt/scenario.hpp"

namespace maopt {

// Line-of-sight channel matrix, N x M, column i the steering vector of user i.
// Every entry has unit modulus.
using ChannelMatrix = Eigen::MatrixXcd;

// Eigensystem of the gain matrix Z = Omega^{-1} H^H H. Z is similar to the
// Hermitian PSD matrix S = Omega^{-1/2} H^H H Omega^{-1/2}; eigenvalues are
// therefore real and nonnegative, stored ascending. V and v_inv come from the
// similarity, so v_inv is exact (no matrix inversion): V = Omega^{-1/2} U,
// V^{-1} = U^H Omega^{1/2} for the unitary U of S.
struct GainEigensystem {
    Eigen::MatrixXcd z;
    Eigen::MatrixXcd v;
    Eigen::MatrixXcd v_inv;
    Eigen::VectorXd eigenvalues;  // ascending
};

// Relative spectral floor below which the gain matrix counts as singular.
inline constexpr double kSingularGainRelTol = 1e-12;
// Relative floor on the smallest eigenvalue of H^H H for ZF to be defined.
inline constexpr double kRankRelTol = 1e-10;
// Hermitian-asymmetry bound for the similarity-transformed eigenproblem.
inline constexpr double kHermitianAsymTol = 1e-8;

// Per-antenna phase response to a plane wave from angle theta:
// entry n = exp(j (2 pi / lambda) x_n sin theta).
Eigen::VectorXcd steering_vector(const AntennaPositions &x, double theta, double lambda);

// Stack the per-user steering vectors into the N x M channel matrix.
ChannelMatrix channel_matrix(const AntennaPositions &x, const ValidatedScenario &scen);

// Interference-nulling combiner W = H (H^H H)^{-1}, so W^H H = I.
// Throws RankDeficiencyError when H^H H's spectrum falls under kRankRelTol.
Eigen::MatrixXcd zf_combiner(const ChannelMatrix &h);

// SINR of an arbitrary linear combiner:
// gamma_i = P_i |w_i^H h_i|^2 / (sum_{k != i} P_k |w_i^H h_k|^2 + ||w_i||^2 sigma^2).
Eigen::VectorXd sinr_general(const Eigen::MatrixXcd &w, const ChannelMatrix &h,
                             const PowerAllocation &p, double sigma2);

// SINR under the interference-nulling combiner:
// gamma_i = P_i / (||[H (H^H H)^{-1}]_{:,i}||^2 sigma^2).
Eigen::VectorXd sinr_zf(const AntennaPositions &x, const ValidatedScenario &scen,
                        const PowerAllocation &p);

// Smallest per-user powers meeting the rate targets with equality:
// P_i = ||[H (H^H H)^{-1}]_{:,i}||^2 eps_i sigma^2.
PowerAllocation min_powers(const AntennaPositions &x, const ValidatedScenario &scen);

// Gain matrix by its closed form,
// [Z]_{ij} = (1 / (eps_i sigma^2)) sum_k exp(j (2 pi / lambda) x_k (sin theta_j - sin theta_i)).
// Equals Omega^{-1} H^H H computed as a product, to rounding.
Eigen::MatrixXcd gain_matrix(const AntennaPositions &x, const ValidatedScenario &scen);

// Entrywise derivative of the gain matrix in x_n (0-based antenna index):
// [dZ/dx_n]_{ij} = (1 / (eps_i sigma^2)) (2 pi / lambda) (sin theta_j - sin theta_i)
//                  * exp(j [(2 pi / lambda) x_n (sin theta_j - sin theta_i) + pi/2]).
// Diagonal identically zero.
Eigen::MatrixXcd gain_matrix_partial(const AntennaPositions &x, const ValidatedScenario &scen,
                                     int n);

// Eigendecompose Z via the Hermitian similarity S = Omega^{1/2} Z Omega^{-1/2}.
// omega_inv_sqrt_diag holds 1 / sqrt(eps_i sigma^2). Eigenvector columns are
// phase-normalized (first significant entry real positive) for deterministic
// bookkeeping. Throws DecompositionError when S fails the Hermitian check.
GainEigensystem eigendecompose_gain(const Eigen::MatrixXcd &z,
                                    const Eigen::VectorXd &omega_inv_sqrt_diag);

// Symbol-level Monte-Carlo estimate of the per-user SINR at positions x and
// powers p: unit-modulus random-phase symbols, circularly-symmetric Gaussian
// noise of per-antenna variance sigma^2, ZF combining. Per-user ratio of
// accumulated desired power to accumulated residual power. Deterministic for
// a given seed; symbols draw from counter-based substreams.
Eigen::VectorXd simulate_uplink_sinr(const AntennaPositions &x, const ValidatedScenario &scen,
                                     const PowerAllocation &p, std::int64_t num_symbols,
                                     std::uint64_t seed);

} // namespace maopt
