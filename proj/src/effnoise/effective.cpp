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

#include "effnoise/effective.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <thread>

#include "effnoise/errors.hpp"

namespace effnoise {

const SyndromeChannel &EffectiveChannel::at(Syndrome s) const {
    if (s >= per_syndrome.size()) {
        fail(ErrorKind::invalid_argument, "syndrome " + std::to_string(s) + " out of range");
    }
    return per_syndrome[s];
}

namespace {

// Two logical bits packed as (x << 1) | z, matching the Pauli letter order
// I = 0, X = 1, Y = 2, Z = 3 after conversion.
unsigned anticommutation_bits(const StabilizerCode &code, const PauliString &p) {
    unsigned x = commutes(p, code.logical_z) ? 0 : 1;
    unsigned z = commutes(p, code.logical_x) ? 0 : 1;
    return (x << 1) | z;
}

std::size_t bits_to_letter(unsigned bits) {
    return static_cast<std::size_t>(pauli_from_bits(bits & 2, bits & 1));
}

struct SiteTables {
    std::vector<std::array<Syndrome, 4>> syndrome;
    std::vector<std::array<unsigned, 4>> logical;
    std::array<double, 4> lambda{};
};

class Enumerator {
   public:
    Enumerator(const StabilizerCode &code, const PauliChannel &channel)
        : m_(code.m), num_syndromes_(code.num_syndromes()) {
        tables_.syndrome.resize(m_);
        tables_.logical.resize(m_);
        tables_.lambda = channel.lambdas();
        for (std::size_t q = 0; q < m_; ++q) {
            for (std::size_t l = 0; l < 4; ++l) {
                auto e = PauliString::single(m_, q, static_cast<Pauli>(l));
                tables_.syndrome[q][l] = syndrome(code, e);
                tables_.logical[q][l] = anticommutation_bits(code, e);
            }
        }
        recovery_bits_.resize(num_syndromes_);
        for (std::size_t s = 0; s < num_syndromes_; ++s) {
            recovery_bits_[s] = anticommutation_bits(code, code.recovery[s]);
        }
        prefix_ = std::min<std::size_t>(m_, 3);
    }

    std::size_t num_chunks() const { return std::size_t{1} << (2 * prefix_); }

    // Buckets indexed 4 * syndrome + raw logical bits of the error.
    void run_chunk(std::size_t chunk, std::vector<double> &buckets) const {
        buckets.assign(4 * num_syndromes_, 0.0);
        double prob = 1.0;
        Syndrome s = 0;
        unsigned lg = 0;
        for (std::size_t q = 0; q < prefix_; ++q) {
            std::size_t l = (chunk >> (2 * (prefix_ - 1 - q))) & 3;
            prob *= tables_.lambda[l];
            s ^= tables_.syndrome[q][l];
            lg ^= tables_.logical[q][l];
        }
        if (prob == 0.0) {
            return;
        }
        descend(prefix_, prob, s, lg, buckets);
    }

    void finish(const std::vector<double> &raw, EffectiveChannel &out) const {
        double total = 0;
        std::vector<std::array<double, 4>> weights(num_syndromes_);
        for (std::size_t s = 0; s < num_syndromes_; ++s) {
            for (unsigned bits = 0; bits < 4; ++bits) {
                weights[s][bits_to_letter(bits ^ recovery_bits_[s])] += raw[4 * s + bits];
            }
            for (double w : weights[s]) {
                total += w;
            }
        }
        out.per_syndrome.resize(num_syndromes_);
        std::array<double, 4> mean{};
        for (std::size_t s = 0; s < num_syndromes_; ++s) {
            auto &entry = out.per_syndrome[s];
            entry.syndrome = s;
            double ps = weights[s][0] + weights[s][1] + weights[s][2] + weights[s][3];
            entry.probability = ps / total;
            entry.reachable = ps > 0;
            entry.channel = entry.reachable ? PauliChannel::normalized(weights[s]) : PauliChannel();
            for (std::size_t j = 0; j < 4; ++j) {
                mean[j] += weights[s][j];
            }
        }
        out.mean = PauliChannel::normalized(mean);
    }

   private:
    void descend(std::size_t q, double prob, Syndrome s, unsigned lg, std::vector<double> &buckets) const {
        if (q == m_) {
            buckets[4 * s + lg] += prob;
            return;
        }
        const auto &syn = tables_.syndrome[q];
        const auto &log = tables_.logical[q];
        for (std::size_t l = 0; l < 4; ++l) {
            double next = prob * tables_.lambda[l];
            if (next != 0.0) {
                descend(q + 1, next, s ^ syn[l], lg ^ log[l], buckets);
            }
        }
    }

    std::size_t m_;
    std::size_t num_syndromes_;
    std::size_t prefix_ = 0;
    SiteTables tables_;
    std::vector<unsigned> recovery_bits_;
};

}  // namespace

EffectiveChannel derive_effective(const StabilizerCode &code, const PauliChannel &channel,
                                  const EnumerationOptions &options) {
    if (code.m > options.max_qubits) {
        fail(ErrorKind::resource_limit, "enumeration over 4^" + std::to_string(code.m) +
                                            " errors exceeds the cap of m = " + std::to_string(options.max_qubits));
    }
    if (code.recovery.size() != code.num_syndromes()) {
        fail(ErrorKind::invalid_argument, "code '" + code.label + "' has an incomplete recovery table");
    }
    Enumerator engine(code, channel);
    std::size_t chunks = engine.num_chunks();
    std::vector<std::vector<double>> partial(chunks);

    unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, chunks));
    if (jobs <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            engine.run_chunk(c, partial[c]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++) {
                    engine.run_chunk(c, partial[c]);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::vector<double> raw(4 * code.num_syndromes(), 0.0);
    for (const auto &part : partial) {
        for (std::size_t k = 0; k < raw.size(); ++k) {
            raw[k] += part[k];
        }
    }
    EffectiveChannel out;
    engine.finish(raw, out);
    return out;
}

std::size_t error_count(const StabilizerCode &code, Syndrome s) {
    if (s >= code.recovery.size()) {
        fail(ErrorKind::invalid_argument, "syndrome " + std::to_string(s) + " out of range");
    }
    return code.recovery[s].weight();
}

PauliChannel bell_diagonal_channel(const ChoiCoefficients &k) {
    if (!(k.a + k.b > 0)) {
        fail(ErrorKind::invalid_argument, "Choi coefficients describe an unreachable syndrome (a + b = 0)");
    }
    return PauliChannel::normalized({std::max(0.0, k.a + k.c), std::max(0.0, k.b + k.d), std::max(0.0, k.b - k.d),
                                     std::max(0.0, k.a - k.c)});
}

std::pair<ChoiCoefficients, PauliChannel> repetition_closed_form(std::size_t m, std::size_t i,
                                                                const PauliChannel &channel) {
    if (m == 0) {
        fail(ErrorKind::invalid_argument, "m must be positive");
    }
    if (i > m / 2) {
        fail(ErrorKind::invalid_argument,
             "error count " + std::to_string(i) + " exceeds floor(m/2) = " + std::to_string(m / 2));
    }
    double u = channel[0] + channel[3];
    double v = channel[1] + channel[2];
    double g = channel[0] - channel[3];
    double h = channel[1] - channel[2];
    auto pw = [](double base, std::size_t e) { return std::pow(base, static_cast<double>(e)); };
    ChoiCoefficients k;
    k.a = 0.5 * pw(u, m - i) * pw(v, i);
    k.b = 0.5 * pw(u, i) * pw(v, m - i);
    k.c = 0.5 * pw(g, m - i) * pw(h, i);
    k.d = 0.5 * pw(g, i) * pw(h, m - i);
    PauliChannel lam = k.a + k.b > 0 ? bell_diagonal_channel(k) : PauliChannel();
    return {k, lam};
}

PauliChannel repetition_mean(std::size_t m, const PauliChannel &channel) {
    if (m % 2 == 0) {
        fail(ErrorKind::unsupported_parameter, "repetition mean needs odd m, got " + std::to_string(m));
    }
    std::array<double, 4> mu{};
    double binom = 1;
    for (std::size_t i = 0; i <= m / 2; ++i) {
        auto k = repetition_closed_form(m, i, channel).first;
        mu[0] += binom * (k.a + k.c);
        mu[1] += binom * (k.b + k.d);
        mu[2] += binom * (k.b - k.d);
        mu[3] += binom * (k.a - k.c);
        binom = binom * static_cast<double>(m - i) / static_cast<double>(i + 1);
    }
    for (double &x : mu) {
        x = std::max(0.0, x);
    }
    return PauliChannel::normalized(mu);
}

double cluster_ring_p0(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorKind::invalid_argument, "noise parameter p must lie in [0, 1]");
    }
    double x = (1 - p) / (1 + 3 * p);
    double x3 = x * x * x;
    double x4 = x3 * x;
    double x5 = x4 * x;
    return (1 - 10 * x3 + 15 * x4 - 6 * x5) / (1 + 30 * x3 + 15 * x4 + 18 * x5);
}

double p_eff_estimate(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorKind::invalid_argument, "noise parameter p must lie in [0, 1]");
    }
    double p4 = p * p * p * p;
    return p4 * p + 5 * p4 * (1 - p);
}

double white_parameter(const PauliChannel &channel) { return (4 * channel[0] - 1) / 3; }

namespace {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Coefficient c with P|b> = c |b xor x>.
Complex pauli_coefficient(const PauliString &p, std::uint64_t b) {
    int k = p.phase() + std::popcount(p.x_mask() & p.z_mask()) + 2 * std::popcount(p.z_mask() & b);
    return kIPow[k & 3];
}

Vec apply_pauli(const PauliString &p, const Vec &v) {
    Vec out = Vec::Zero(v.size());
    for (Eigen::Index b = 0; b < v.size(); ++b) {
        auto bb = static_cast<std::uint64_t>(b);
        out[static_cast<Eigen::Index>(bb ^ p.x_mask())] += pauli_coefficient(p, bb) * v[b];
    }
    return out;
}

// P rho P^dagger for a Pauli acting on the low qubits of a larger register.
Dense conjugate(const PauliString &p, const Dense &rho) {
    auto dim = rho.rows();
    std::vector<Complex> coef(static_cast<std::size_t>(dim));
    std::vector<Eigen::Index> target(static_cast<std::size_t>(dim));
    for (Eigen::Index b = 0; b < dim; ++b) {
        auto bb = static_cast<std::uint64_t>(b);
        coef[b] = pauli_coefficient(p, bb);
        target[b] = static_cast<Eigen::Index>(bb ^ p.x_mask());
    }
    Dense out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            out(target[r], target[c]) = coef[r] * std::conj(coef[c]) * rho(r, c);
        }
    }
    return out;
}

// Widens an m-qubit Pauli to the (m + 1)-qubit register with the reference on top.
PauliString widen(const PauliString &p) { return PauliString(p.size() + 1, p.x_mask(), p.z_mask(), p.phase()); }

}  // namespace

std::array<Eigen::VectorXcd, 2> logical_basis(const StabilizerCode &code) {
    auto dim = Eigen::Index{1} << code.m;
    std::vector<PauliString> projectors = code.generators;
    projectors.push_back(code.logical_z);
    for (Eigen::Index seed = 0; seed < dim; ++seed) {
        Vec v = Vec::Zero(dim);
        v[seed] = 1;
        for (const auto &g : projectors) {
            v = 0.5 * (v + apply_pauli(g, v));
        }
        double n = v.norm();
        if (n > 1e-6) {
            v /= n;
            return {v, apply_pauli(code.logical_x, v)};
        }
    }
    fail(ErrorKind::construction_failure, "code '" + code.label + "' has an empty code space");
}

ChoiResult choi_effective(const StabilizerCode &code, const PauliChannel &channel, Syndrome s,
                          std::size_t max_qubits) {
    if (code.m > max_qubits) {
        fail(ErrorKind::resource_limit, "dense Choi construction on " + std::to_string(code.m) +
                                            " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    if (s >= code.num_syndromes() || s >= code.recovery.size()) {
        fail(ErrorKind::invalid_argument, "syndrome " + std::to_string(s) + " out of range");
    }
    const std::size_t m = code.m;
    const auto dim_code = Eigen::Index{1} << m;
    const auto dim = dim_code * 2;

    auto logical = logical_basis(code);
    const Vec &zero = logical[0];
    const Vec &one = logical[1];

    // |Phi+> with the reference qubit as bit m.
    Vec phi = Vec::Zero(dim);
    phi.head(dim_code) = zero / std::sqrt(2.0);
    phi.tail(dim_code) = one / std::sqrt(2.0);
    Dense rho = phi * phi.adjoint();

    for (std::size_t q = 0; q < m; ++q) {
        Dense acc = channel[0] * rho;
        for (std::size_t l = 1; l < 4; ++l) {
            if (channel[l] != 0) {
                acc += channel[l] * conjugate(PauliString::single(m + 1, q, static_cast<Pauli>(l)), rho);
            }
        }
        rho = std::move(acc);
    }

    Dense proj = Dense::Identity(dim, dim);
    for (std::size_t a = 0; a < code.generators.size(); ++a) {
        auto g = widen(code.generators[a]);
        Dense gm = Dense::Zero(dim, dim);
        for (Eigen::Index b = 0; b < dim; ++b) {
            auto bb = static_cast<std::uint64_t>(b);
            gm(static_cast<Eigen::Index>(bb ^ g.x_mask()), b) = pauli_coefficient(g, bb);
        }
        double sign = ((s >> a) & 1) ? -1.0 : 1.0;
        proj = proj * (0.5 * (Dense::Identity(dim, dim) + sign * gm));
    }
    rho = proj * rho * proj.adjoint();
    rho = conjugate(widen(code.recovery[s]), rho);

    ChoiResult out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Vec bra = Vec::Zero(dim);
            (j == 0 ? bra.head(dim_code) : bra.tail(dim_code)) = logical[i];
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    Vec ket = Vec::Zero(dim);
                    (l == 0 ? ket.head(dim_code) : ket.tail(dim_code)) = logical[k];
                    out.matrix(2 * i + j, 2 * k + l) = bra.dot(rho * ket);
                }
            }
        }
    }
    out.coeffs.a = out.matrix(0, 0).real();
    out.coeffs.b = out.matrix(1, 1).real();
    out.coeffs.c = out.matrix(0, 3).real();
    out.coeffs.d = out.matrix(1, 2).real();
    out.probability = out.matrix.trace().real();

    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix4cd bell;
    // Columns: Phi+, Psi+, Psi-, Phi- (the images of I, X, Y, Z on Phi+).
    bell << r, 0, 0, r, 0, r, r, 0, 0, r, -r, 0, r, 0, 0, -r;
    Eigen::Matrix4cd diag = bell.adjoint() * out.matrix * bell;
    if (out.probability > 0) {
        std::array<double, 4> w{};
        for (int j = 0; j < 4; ++j) {
            w[j] = std::max(0.0, diag(j, j).real());
        }
        out.channel = PauliChannel::normalized(w);
    }
    return out;
}

}  // namespace effnoise
