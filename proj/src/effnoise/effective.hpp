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

#ifndef EFFNOISE_EFFECTIVE_HPP
#define EFFNOISE_EFFECTIVE_HPP

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "effnoise/codes.hpp"
#include "effnoise/pauli.hpp"

namespace effnoise {

struct SyndromeChannel {
    Syndrome syndrome = 0;
    double probability = 0;
    /// Logical channel conditioned on this syndrome; (1, 0, 0, 0) when the
    /// syndrome cannot occur.
    PauliChannel channel;
    bool reachable = false;
};

struct EffectiveChannel {
    /// Indexed by syndrome integer.
    std::vector<SyndromeChannel> per_syndrome;
    PauliChannel mean;

    const SyndromeChannel &at(Syndrome s) const;
    const PauliChannel &projected() const { return at(0).channel; }
};

struct EnumerationOptions {
    /// Largest m the 4^m enumeration accepts.
    std::size_t max_qubits = 12;
    /// Worker threads; 0 picks the machine's parallelism. Results do not
    /// depend on this value.
    unsigned jobs = 1;
};

/// Sums the i.i.d. probability of every m-qubit Pauli error into its
/// (syndrome, logical action) bucket. The enumeration is split into fixed
/// prefix chunks that are merged in chunk order, so the floating-point result
/// is bit-identical for any job count.
EffectiveChannel derive_effective(const StabilizerCode &code, const PauliChannel &channel,
                                  const EnumerationOptions &options = {});

/// Number of physical errors the recovery for `s` undoes (its weight). For
/// repetition and GHZ codes this is the paper's index i.
std::size_t error_count(const StabilizerCode &code, Syndrome s);

/// Entries of the projected Choi matrix
///
///     | a 0 0 c |
///     | 0 b d 0 |
///     | 0 d b 0 |
///     | c 0 0 a |
///
/// in the basis |i_L> (x) |j>, index 2i + j.
struct ChoiCoefficients {
    double a = 0;
    double b = 0;
    double c = 0;
    double d = 0;
};

/// Renormalized Bell-basis weights ((a+c), (b+d), (b-d), (a-c)) / (2a + 2b).
PauliChannel bell_diagonal_channel(const ChoiCoefficients &coeffs);

/// Closed form for the repetition code with i corrected flips.
std::pair<ChoiCoefficients, PauliChannel> repetition_closed_form(std::size_t m, std::size_t i,
                                                                const PauliChannel &channel);

/// Mean channel of the repetition code from the closed form, summed over i
/// with multiplicity binom(m, i). m odd.
PauliChannel repetition_mean(std::size_t m, const PauliChannel &channel);

/// Projected-channel fidelity of the five-qubit cluster ring under white
/// noise, expressed as a white-noise parameter.
double cluster_ring_p0(double p);

/// Probability of at most one error among five qubits: p^5 + 5 p^4 (1 - p).
double p_eff_estimate(double p);

/// White-noise parameter (4 lambda_0 - 1) / 3 of a channel.
double white_parameter(const PauliChannel &channel);

struct ChoiResult {
    ChoiCoefficients coeffs;
    Eigen::Matrix4cd matrix;
    /// tr M, the probability of the syndrome.
    double probability = 0;
    /// Channel read from the Bell-basis diagonal of M.
    PauliChannel channel;
};

/// Dense code words |0_L>, |1_L> on m qubits (qubit q is bit q of the index):
/// |0_L> is the normalized projection of the first basis state with nonzero
/// overlap onto the joint +1 eigenspace of the generators and logical Z, and
/// |1_L> = logical_x |0_L>.
std::array<Eigen::VectorXcd, 2> logical_basis(const StabilizerCode &code);

/// Dense Choi-state construction of the channel conditioned on syndrome s:
/// encodes half of |Phi+>, applies the physical channel to every code qubit,
/// projects onto syndrome s, applies the recovery and reads M off.
ChoiResult choi_effective(const StabilizerCode &code, const PauliChannel &channel, Syndrome s,
                          std::size_t max_qubits = 6);

}  // namespace effnoise

#endif
