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

#include <gtest/gtest.h>

#include <cmath>

#include "effnoise/effective.hpp"
#include "effnoise/errors.hpp"
#include "support/oracles.hpp"

namespace effnoise {
namespace {

using testing::random_channels;

double max_diff(const PauliChannel &a, const PauliChannel &b) {
    double d = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        d = std::max(d, std::fabs(a[j] - b[j]));
    }
    return d;
}

TEST(Effective, MatchesBruteForceJointDistribution) {
    std::vector<StabilizerCode> codes = {repetition_code(3), repetition_code(5), ghz_code(3), cluster_ring_code(5)};
    for (const auto &code : codes) {
        for (const auto &ch : random_channels(5, 101)) {
            auto joint = testing::brute_force_joint(code, ch);
            auto eff = derive_effective(code, ch);
            std::array<double, 4> mean{0, 0, 0, 0};
            for (std::uint64_t s = 0; s < code.num_syndromes(); ++s) {
                double ps = joint[s][0] + joint[s][1] + joint[s][2] + joint[s][3];
                const auto &got = eff.at(s);
                EXPECT_NEAR(got.probability, ps, 1e-14);
                for (std::size_t j = 0; j < 4; ++j) {
                    EXPECT_NEAR(got.channel[j], joint[s][j] / ps, 1e-12) << code.label << " s=" << s;
                    mean[j] += joint[s][j];
                }
            }
            EXPECT_LT(max_diff(eff.mean, PauliChannel(mean)), 1e-14);
        }
    }
}

TEST(Effective, ProbabilitiesAndMeanAreConsistent) {
    for (const auto &ch : random_channels(5, 202)) {
        auto eff = derive_effective(cluster_ring_code(7), ch);
        double total = 0;
        std::array<double, 4> mix{0, 0, 0, 0};
        for (const auto &sc : eff.per_syndrome) {
            total += sc.probability;
            for (std::size_t j = 0; j < 4; ++j) {
                mix[j] += sc.probability * sc.channel[j];
            }
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_NEAR(eff.mean[0] + eff.mean[1] + eff.mean[2] + eff.mean[3], 1.0, 1e-12);
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_NEAR(mix[j], eff.mean[j], 1e-12);
        }
    }
}

TEST(Effective, ResultIndependentOfJobCount) {
    auto code = cluster_ring_code(7);
    auto ch = PauliChannel({0.9, 0.03, 0.05, 0.02});
    auto serial = derive_effective(code, ch, {12, 1});
    for (unsigned jobs : {2u, 3u, 8u, 0u}) {
        auto par = derive_effective(code, ch, {12, jobs});
        EXPECT_EQ(par.mean, serial.mean);
        for (std::size_t s = 0; s < serial.per_syndrome.size(); ++s) {
            EXPECT_EQ(par.per_syndrome[s].probability, serial.per_syndrome[s].probability);
            EXPECT_EQ(par.per_syndrome[s].channel, serial.per_syndrome[s].channel);
        }
    }
}

TEST(Effective, EnumerationCapIsAResourceLimit) {
    auto code = repetition_code(13);
    try {
        derive_effective(code, white_noise(0.9));
        FAIL() << "expected resource limit";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
    }
    EXPECT_NO_THROW(derive_effective(repetition_code(5), white_noise(0.9), {5, 1}));
    EXPECT_THROW(derive_effective(repetition_code(5), white_noise(0.9), {4, 1}), Error);
}

TEST(Effective, NoiselessAndUnreachable) {
    auto eff = derive_effective(cluster_ring_code(5), PauliChannel());
    EXPECT_EQ(eff.mean, PauliChannel());
    EXPECT_DOUBLE_EQ(eff.at(0).probability, 1.0);
    // Pure dephasing never trips a ZZ check.
    auto rep = derive_effective(repetition_code(3), phase_noise(0.7));
    EXPECT_TRUE(rep.at(0).reachable);
    for (std::uint64_t s = 1; s < 4; ++s) {
        EXPECT_FALSE(rep.at(s).reachable);
        EXPECT_EQ(rep.at(s).probability, 0.0);
        EXPECT_EQ(rep.at(s).channel, PauliChannel());
    }
    EXPECT_THROW(rep.at(4), Error);
}

TEST(ClosedForm, RepetitionMatchesEngineOnEverySyndrome) {
    for (std::size_t m : {3, 5, 7}) {
        auto code = repetition_code(m);
        for (const auto &ch : random_channels(20, 300 + m)) {
            auto eff = derive_effective(code, ch);
            for (std::uint64_t s = 0; s < code.num_syndromes(); ++s) {
                auto [coeffs, lam] = repetition_closed_form(m, error_count(code, s), ch);
                EXPECT_LT(max_diff(lam, eff.at(s).channel), 1e-12) << "m=" << m << " s=" << s;
                EXPECT_NEAR(2 * (coeffs.a + coeffs.b), eff.at(s).probability, 1e-14);
            }
            EXPECT_LT(max_diff(repetition_mean(m, ch), eff.mean), 1e-12);
        }
    }
}

TEST(ClosedForm, ErrorCountIsRecoveryWeight) {
    auto code = repetition_code(5);
    EXPECT_EQ(error_count(code, 0), 0u);
    std::size_t by_weight[3] = {0, 0, 0};
    for (std::uint64_t s = 0; s < code.num_syndromes(); ++s) {
        ++by_weight[error_count(code, s)];
    }
    // binom(5, i) syndromes carry i corrected flips.
    EXPECT_EQ(by_weight[0], 1u);
    EXPECT_EQ(by_weight[1], 5u);
    EXPECT_EQ(by_weight[2], 10u);
    EXPECT_THROW(repetition_closed_form(5, 3, white_noise(0.9)), Error);
    EXPECT_THROW(repetition_mean(4, white_noise(0.9)), Error);
}

TEST(ClosedForm, BellDiagonalChannel) {
    auto ch = bell_diagonal_channel({0.3, 0.1, 0.2, 0.05});
    EXPECT_NEAR(ch[0], 0.5 / 0.8, 1e-15);
    EXPECT_NEAR(ch[1], 0.15 / 0.8, 1e-15);
    EXPECT_NEAR(ch[2], 0.05 / 0.8, 1e-15);
    EXPECT_NEAR(ch[3], 0.1 / 0.8, 1e-15);
}

TEST(ClusterRing, ProjectedChannelIsWhiteAndMatchesRationalForm) {
    auto code = cluster_ring_code(5);
    for (int k = 0; k <= 100; ++k) {
        double p = k / 100.0;
        auto eff = derive_effective(code, white_noise(p));
        double x = (1 - p) / (1 + 3 * p);
        double expect = (1 - 10 * std::pow(x, 3) + 15 * std::pow(x, 4) - 6 * std::pow(x, 5)) /
                        (1 + 30 * std::pow(x, 3) + 15 * std::pow(x, 4) + 18 * std::pow(x, 5));
        EXPECT_NEAR(white_parameter(eff.projected()), expect, 1e-12) << "p=" << p;
        EXPECT_NEAR(cluster_ring_p0(p), expect, 1e-15);
        EXPECT_NEAR(eff.projected()[1], eff.projected()[2], 1e-15);
        EXPECT_NEAR(eff.projected()[1], eff.projected()[3], 1e-15);
    }
}

TEST(ClusterRing, EverySyndromeSeesTheSameWhiteChannel) {
    auto eff = derive_effective(cluster_ring_code(5), white_noise(0.9));
    for (const auto &sc : eff.per_syndrome) {
        EXPECT_NEAR(sc.channel[1], sc.channel[3], 1e-15);
        EXPECT_NEAR(sc.channel[2], sc.channel[3], 1e-15);
    }
    EXPECT_NEAR(eff.mean[1], eff.mean[3], 1e-15);
}

TEST(ClusterRing, Estimates) {
    EXPECT_DOUBLE_EQ(p_eff_estimate(1.0), 1.0);
    EXPECT_NEAR(p_eff_estimate(0.9), 0.91854, 1e-12);
    EXPECT_DOUBLE_EQ(white_parameter(white_noise(0.37)), 0.37);
    EXPECT_THROW(p_eff_estimate(1.2), Error);
}

TEST(Choi, LogicalBasisMatchesDenseProjection) {
    for (const auto &code : {repetition_code(3), ghz_code(3), cluster_ring_code(5)}) {
        auto basis = logical_basis(code);
        auto ref = testing::dense_code_basis(code);
        for (int j = 0; j < 2; ++j) {
            EXPECT_NEAR(std::abs(ref.col(j).dot(basis[j])), 1.0, 1e-12) << code.label;
            EXPECT_NEAR(basis[j].norm(), 1.0, 1e-12);
        }
        EXPECT_NEAR(std::abs(basis[0].dot(basis[1])), 0.0, 1e-12);
        // Relative phase between the code words must agree too.
        std::complex<double> r0 = ref.col(0).dot(basis[0]);
        std::complex<double> r1 = ref.col(1).dot(basis[1]);
        EXPECT_NEAR(std::abs(r0 - r1), 0.0, 1e-12);
    }
}

TEST(Choi, DenseOracleMatchesEngine) {
    const std::complex<double> h(1 / std::sqrt(2.0), 0);
    Eigen::Matrix4cd bell;
    // Columns Phi+, Psi+, Psi-, Phi- in the |i_L j> basis.
    bell << h, 0, 0, h, 0, h, h, 0, 0, h, -h, 0, h, 0, 0, -h;
    bell.transposeInPlace();
    for (const auto &code : {repetition_code(3), ghz_code(3), cluster_ring_code(5)}) {
        for (const auto &ch : random_channels(4, 404)) {
            auto eff = derive_effective(code, ch);
            for (std::uint64_t s = 0; s < code.num_syndromes(); ++s) {
                auto choi = choi_effective(code, ch, s);
                EXPECT_NEAR(choi.probability, eff.at(s).probability, 1e-12);
                EXPECT_LT(max_diff(choi.channel, eff.at(s).channel), 1e-10) << code.label << " s=" << s;
                const auto &m = choi.matrix;
                for (int r = 0; r < 4; ++r) {
                    for (int c = 0; c < 4; ++c) {
                        bool on = r == c || r + c == 3;
                        if (!on) {
                            EXPECT_LT(std::abs(m(r, c)), 1e-12);
                        }
                    }
                }
                Eigen::Matrix4cd inb = bell.adjoint() * m * bell;
                for (int r = 0; r < 4; ++r) {
                    for (int c = 0; c < 4; ++c) {
                        if (r != c) {
                            EXPECT_LT(std::abs(inb(r, c)), 1e-12);
                        }
                    }
                }
            }
        }
    }
}

TEST(Choi, CapIsAResourceLimit) {
    try {
        choi_effective(cluster_ring_code(7), white_noise(0.9), 0);
        FAIL() << "expected resource limit";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
    }
}

}  // namespace
}  // namespace effnoise
