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

#include "effnoise/pauli.hpp"

#include <bit>
#include <cmath>

#include "effnoise/errors.hpp"

namespace effnoise {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument:
            return "invalid-argument";
        case ErrorKind::unsupported_parameter:
            return "unsupported-parameter";
        case ErrorKind::resource_limit:
            return "resource-limit";
        case ErrorKind::construction_failure:
            return "construction-failure";
        case ErrorKind::parse_error:
            return "parse-error";
    }
    return "unknown";
}

namespace {

std::uint64_t low_mask(std::size_t m) { return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

void require_same_size(const PauliString &p, const PauliString &q) {
    if (p.size() != q.size()) {
        fail(ErrorKind::invalid_argument, "Pauli strings of different lengths (" + std::to_string(p.size()) +
                                              " vs " + std::to_string(q.size()) + ")");
    }
}

}  // namespace

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<std::size_t>(p)];
}

Pauli pauli_from_bits(bool x, bool z) {
    if (x) {
        return z ? Pauli::Y : Pauli::X;
    }
    return z ? Pauli::Z : Pauli::I;
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
        case 'x':
            return Pauli::X;
        case 'Y':
        case 'y':
            return Pauli::Y;
        case 'Z':
        case 'z':
            return Pauli::Z;
        default:
            fail(ErrorKind::invalid_argument, std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString::PauliString(std::size_t m) : PauliString(m, 0, 0, 0) {}

PauliString::PauliString(std::size_t m, std::uint64_t x_mask, std::uint64_t z_mask, std::uint8_t phase)
    : m_(m), x_(x_mask), z_(z_mask), phase_(static_cast<std::uint8_t>(phase & 3)) {
    if (m == 0 || m > kMaxQubits) {
        fail(ErrorKind::invalid_argument, "Pauli string length must be in [1, 64], got " + std::to_string(m));
    }
    if (((x_ | z_) & ~low_mask(m)) != 0) {
        fail(ErrorKind::invalid_argument, "Pauli string masks exceed its length");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        phase = text.front() == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    // Lowercase 'i' is only ever the imaginary unit; the identity letter is 'I' or '_'.
    if (text.size() > 1 && text.front() == 'i') {
        phase = static_cast<std::uint8_t>(phase + 1);
        text.remove_prefix(1);
    }
    if (text.empty()) {
        fail(ErrorKind::invalid_argument, "empty Pauli string");
    }
    if (text.size() > kMaxQubits) {
        fail(ErrorKind::invalid_argument, "Pauli string longer than 64 qubits");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < text.size(); ++q) {
        auto p = static_cast<unsigned>(pauli_from_char(text[q]));
        if (p == 1 || p == 2) {
            x |= std::uint64_t{1} << q;
        }
        if (p == 2 || p == 3) {
            z |= std::uint64_t{1} << q;
        }
    }
    return PauliString(text.size(), x, z, phase);
}

PauliString PauliString::single(std::size_t m, std::size_t qubit, Pauli p) {
    if (qubit >= m) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    bool x = p == Pauli::X || p == Pauli::Y;
    bool z = p == Pauli::Z || p == Pauli::Y;
    return PauliString(m, x ? bit : 0, z ? bit : 0);
}

Pauli PauliString::at(std::size_t qubit) const {
    if (qubit >= m_) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    return pauli_from_bits((x_ >> qubit) & 1, (z_ >> qubit) & 1);
}

std::size_t PauliString::weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"", "i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t q = 0; q < m_; ++q) {
        out += pauli_char(pauli_from_bits((x_ >> q) & 1, (z_ >> q) & 1));
    }
    return out;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    std::uint64_t px = p.x_mask() & ~p.z_mask();
    std::uint64_t py = p.x_mask() & p.z_mask();
    std::uint64_t pz = ~p.x_mask() & p.z_mask();
    std::uint64_t qx = q.x_mask() & ~q.z_mask();
    std::uint64_t qy = q.x_mask() & q.z_mask();
    std::uint64_t qz = ~q.x_mask() & q.z_mask();
    // XY = iZ, YZ = iX, ZX = iY; the reversed orders give -i.
    std::uint64_t plus = (px & qy) | (py & qz) | (pz & qx);
    std::uint64_t minus = (py & qx) | (pz & qy) | (px & qz);
    int k = p.phase() + q.phase() + std::popcount(plus) - std::popcount(minus);
    auto phase = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
    return PauliString(p.size(), p.x_mask() ^ q.x_mask(), p.z_mask() ^ q.z_mask(), phase);
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    std::uint64_t s = (p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask());
    return (std::popcount(s) & 1) == 0;
}

PauliChannel::PauliChannel() : lambdas_{1.0, 0.0, 0.0, 0.0} {}

PauliChannel::PauliChannel(const std::array<double, 4> &lambdas) : lambdas_(lambdas) {
    double sum = 0;
    for (double l : lambdas_) {
        if (!(l >= 0.0 && l <= 1.0)) {
            fail(ErrorKind::invalid_argument, "Pauli channel entry outside [0, 1]");
        }
        sum += l;
    }
    if (std::abs(sum - 1.0) > kTolerance) {
        fail(ErrorKind::invalid_argument, "Pauli channel entries do not sum to 1");
    }
}

PauliChannel PauliChannel::normalized(const std::array<double, 4> &weights) {
    double sum = 0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            fail(ErrorKind::invalid_argument, "channel weights must be finite and non-negative");
        }
        sum += w;
    }
    if (sum <= 0) {
        fail(ErrorKind::invalid_argument, "channel weights sum to zero");
    }
    std::array<double, 4> out{};
    for (std::size_t j = 0; j < 4; ++j) {
        out[j] = weights[j] / sum;
    }
    return PauliChannel(out);
}

PauliChannel white_noise(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorKind::invalid_argument, "noise parameter p must lie in [0, 1]");
    }
    double e = (1.0 - p) / 4.0;
    return PauliChannel({(1.0 + 3.0 * p) / 4.0, e, e, e});
}

PauliChannel phase_noise(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorKind::invalid_argument, "noise parameter p must lie in [0, 1]");
    }
    return PauliChannel({(1.0 + p) / 2.0, 0.0, 0.0, (1.0 - p) / 2.0});
}

double string_probability(const PauliChannel &channel, const PauliString &error) {
    double prob = 1.0;
    for (std::size_t q = 0; q < error.size(); ++q) {
        prob *= channel[error.at(q)];
    }
    return prob;
}

}  // namespace effnoise
