// Copyright 2026 The effnoise Authors
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

#ifndef EFFNOISE_ENTANGLEMENT_HPP
#define EFFNOISE_ENTANGLEMENT_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "effnoise/pauli.hpp"

namespace effnoise {

/// Dense n-qubit density matrix; qubit q is bit q of the row index.
class DensityMatrix {
   public:
    DensityMatrix(std::size_t n, Eigen::MatrixXcd entries);

    std::size_t num_qubits() const { return n_; }
    const Eigen::MatrixXcd &matrix() const { return rho_; }
    double trace() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }

   private:
    std::size_t n_;
    Eigen::MatrixXcd rho_;
};

inline constexpr std::size_t kMaxDenseQubits = 14;

/// (|0...0> + |1...1>) / sqrt2 as a density matrix.
DensityMatrix ghz_state(std::size_t n, std::size_t max_qubits = kMaxDenseQubits);

DensityMatrix apply_channel(const DensityMatrix &rho, const PauliChannel &channel, std::size_t qubit);
DensityMatrix apply_channel_all(const DensityMatrix &rho, const PauliChannel &channel);

/// Partial transpose on every qubit whose bit is set in `mask`.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, std::uint64_t mask);

/// All eigenvalues of a Hermitian matrix in ascending order (Householder
/// tridiagonalization followed by implicit symmetric QR).
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd &h);

/// Sum of the magnitudes of the negative eigenvalues of rho^{T_A}, where A is
/// the listed set of qubits (nonempty, proper).
double negativity(const DensityMatrix &rho, const std::vector<std::size_t> &partition);

/// Negativity of the 1 : N-1 split of the N-qubit GHZ state after `channel`
/// acted on every qubit. Runs in O(N) using the X-shaped support of the state.
double ghz_negativity_fast(std::size_t n, const PauliChannel &channel);

struct NegativityPoint {
    std::size_t n = 0;
    double value = 0;
};
using NegativityCurve = std::vector<NegativityPoint>;

NegativityCurve ghz_negativity_curve(const PauliChannel &channel, const std::vector<std::size_t> &sizes);

/// Maps the physical noise parameter p to the logical channel each GHZ
/// member sees.
using ChannelFamily = std::function<PauliChannel(double)>;

/// After `channel` on every qubit of GHZ(n), measure qubits 2..n-1 in the X
/// basis, keep the all-plus branch, and return the normalized two-qubit state
/// of qubits 0 and 1. `dense` selects full density-matrix simulation instead
/// of the closed-form reduction.
Eigen::Matrix4cd distilled_pair(std::size_t n, const PauliChannel &channel, bool dense = false);

/// Smallest eigenvalue of the partial transpose of a two-qubit state.
double min_pt_eigenvalue(const Eigen::Matrix4cd &pair);

enum class LifetimeStatus {
    crossing,
    /// Entangled at every grid point, p_crit = 0.
    entangled_everywhere,
    /// Never detected as entangled, p_crit = 1.
    never_entangled,
};

const char *lifetime_status_name(LifetimeStatus status);

struct LifetimeResult {
    double p_crit = 0;
    int iterations = 0;
    /// Width of the final bisection bracket.
    double residual = 0;
    LifetimeStatus status = LifetimeStatus::crossing;
    /// False when the coarse pre-scan saw the sign flip more than once; the
    /// lowest bracket is then bisected.
    bool monotone = true;
};

struct LifetimeOptions {
    double tol = 1e-9;
    std::size_t grid_points = 33;
    bool dense = false;
};

/// Infimum of p at which the distilled pair is NPT, with the channel family
/// applied to every member of GHZ(n).
LifetimeResult lifetime_pcrit(const ChannelFamily &family, std::size_t n, const LifetimeOptions &options = {});

}  // namespace effnoise

#endif
