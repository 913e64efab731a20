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

#ifndef EFFNOISE_PAULI_HPP
#define EFFNOISE_PAULI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace effnoise {

/// Single-qubit Pauli letter. The numeric value doubles as the index into a
/// PauliChannel's probability vector (sigma_0 .. sigma_3).
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_bits(bool x, bool z);
Pauli pauli_from_char(char c);

/// An m-qubit Pauli operator i^k * P_0 (x) P_1 (x) ... (x) P_{m-1}.
///
/// Stored symplectically: bit q of x_mask / z_mask is the X / Z component of
/// the letter on qubit q, with (1, 1) denoting Y itself (not XZ). The phase is
/// the exponent k of i, kept mod 4.
///
/// Both masks live in one 64-bit word, which bounds m at 64. Growing past that
/// means replacing the two words with bit vectors; every operation below is
/// written against masks, popcounts and xors, so the change stays local.
class PauliString {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    /// Identity on m qubits.
    explicit PauliString(std::size_t m);
    PauliString(std::size_t m, std::uint64_t x_mask, std::uint64_t z_mask, std::uint8_t phase = 0);

    /// Parses letter notation such as "XZZXI", "+ZZI", "-Y" or "iXY". Qubit 0
    /// is the leftmost letter.
    static PauliString parse(std::string_view text);
    static PauliString single(std::size_t m, std::size_t qubit, Pauli p);

    std::size_t size() const { return m_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    /// Exponent k of the global phase i^k, in [0, 4).
    std::uint8_t phase() const { return phase_; }

    Pauli at(std::size_t qubit) const;
    std::size_t weight() const;
    bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
    PauliString without_phase() const { return PauliString(m_, x_, z_, 0); }

    /// Letter notation with a leading sign when the phase is not +1.
    std::string str() const;

    friend bool operator==(const PauliString &a, const PauliString &b) = default;

   private:
    std::size_t m_;
    std::uint64_t x_;
    std::uint64_t z_;
    std::uint8_t phase_;
};

/// Product P * Q with the phase from the per-site multiplication table.
PauliString multiply(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) { return multiply(p, q); }

/// True iff PQ = QP, i.e. the symplectic product vanishes mod 2.
bool commutes(const PauliString &p, const PauliString &q);

/// Single-qubit Pauli channel rho -> sum_j lambda_j sigma_j rho sigma_j.
class PauliChannel {
   public:
    static constexpr double kTolerance = 1e-12;

    /// Identity channel (1, 0, 0, 0).
    PauliChannel();
    /// Rejects negative entries, entries above 1 and sums off by more than
    /// kTolerance. Inputs are never rescaled here.
    explicit PauliChannel(const std::array<double, 4> &lambdas);

    /// Explicit opt-in rescaling of non-negative weights onto the simplex.
    static PauliChannel normalized(const std::array<double, 4> &weights);

    double operator[](std::size_t j) const { return lambdas_[j]; }
    double operator[](Pauli p) const { return lambdas_[static_cast<std::size_t>(p)]; }
    const std::array<double, 4> &lambdas() const { return lambdas_; }

    friend bool operator==(const PauliChannel &a, const PauliChannel &b) = default;

   private:
    std::array<double, 4> lambdas_;
};

/// Depolarizing channel: lambda_0 = (1 + 3p) / 4, lambda_{1,2,3} = (1 - p) / 4.
PauliChannel white_noise(double p);
/// Dephasing channel: lambda_0 = (1 + p) / 2, lambda_3 = (1 - p) / 2.
PauliChannel phase_noise(double p);

/// Probability of the tensor-product error E under i.i.d. application of the
/// channel to every qubit. The phase of E is ignored.
double string_probability(const PauliChannel &channel, const PauliString &error);

}  // namespace effnoise

#endif
