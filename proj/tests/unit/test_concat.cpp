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

#include "effnoise/concat.hpp"
#include "effnoise/errors.hpp"
#include "support/oracles.hpp"

namespace effnoise {
namespace {

using testing::LetterCode;

// Decodes all 4^9 errors of the (3, 3) code block by block: each inner GHZ
// block yields a logical letter, the outer repetition code then decodes the
// three letters. The histogram of outer logical classes is the mean channel.
std::array<double, 4> blockwise_nine_qubit(const PauliChannel &ch) {
    LetterCode inner(ghz_code(3));
    LetterCode outer(repetition_code(3));
    const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    std::array<long double, 4> out{0, 0, 0, 0};
    testing::for_each_error(9, ch, [&](const std::string &e, double prob) {
        std::string block_letters(3, 'I');
        for (std::size_t b = 0; b < 3; ++b) {
            block_letters[b] = kLetters[inner.logical(e.substr(3 * b, 3))];
        }
        out[outer.logical(block_letters)] += prob;
    });
    return {static_cast<double>(out[0]), static_cast<double>(out[1]), static_cast<double>(out[2]),
            static_cast<double>(out[3])};
}

TEST(Concat, MeanMatchesBlockwiseNineQubitDecoder) {
    auto channels = testing::random_channels(3, 55);
    channels.push_back(white_noise(0.9));
    for (const auto &ch : channels) {
        auto expect = blockwise_nine_qubit(ch);
        auto got = concatenate(generalized_shor(3, 3), ch).mean;
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_NEAR(got[j], expect[j], 1e-12);
        }
    }
}

TEST(Concat, LevelsComposeByMode) {
    auto ch = PauliChannel({0.9, 0.02, 0.03, 0.05});
    auto inner = derive_effective(ghz_code(3), ch);
    auto outer_proj = derive_effective(repetition_code(5), inner.projected());
    EXPECT_EQ(concatenated_channel(generalized_shor(3, 5, ChannelMode::projected_0), ch), outer_proj.projected());
    auto outer_mean = derive_effective(repetition_code(5), inner.mean);
    EXPECT_EQ(concatenated_channel(generalized_shor(3, 5), ch), outer_mean.mean);
    EXPECT_EQ(concatenate(generalized_shor(3, 5), ch).mean, outer_mean.mean);
}

TEST(Concat, SizeOneLevelsAreTransparent) {
    auto ch = PauliChannel({0.9, 0.02, 0.03, 0.05});
    auto same = [](const PauliChannel &a, const PauliChannel &b) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_NEAR(a[j], b[j], 1e-15);
        }
    };
    same(concatenated_channel(generalized_shor(1, 1), ch), ch);
    same(concatenated_channel(generalized_shor(3, 1), ch), derive_effective(ghz_code(3), ch).mean);
}

TEST(Concat, RejectsEvenSizesAndEmptySpecs) {
    try {
        generalized_shor(2, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported_parameter);
    }
    EXPECT_THROW(concatenate(ConcatSpec{}, white_noise(0.9)), Error);
}

TEST(Concat, ModeNames) {
    EXPECT_EQ(channel_mode_from_name(channel_mode_name(ChannelMode::mean)), ChannelMode::mean);
    EXPECT_EQ(channel_mode_from_name("projected_0"), ChannelMode::projected_0);
    EXPECT_THROW(channel_mode_from_name("average"), Error);
}

TEST(Concat, WeakNoiseSuppressesBothSpecies) {
    double p = 0.99;
    auto mu = concatenate(generalized_shor(3, 3), white_noise(p)).mean;
    EXPECT_LT(mu[1], (1 - p) / 4);
    EXPECT_LT(mu[3], (1 - p) / 4);
    EXPECT_NEAR(mu[0] + mu[1] + mu[2] + mu[3], 1.0, 1e-12);
}

TEST(CriticalRate, ThreeByThreeHasOneCrossing) {
    auto r = critical_rate(3, 3);
    ASSERT_TRUE(r.p_c.has_value());
    EXPECT_GT(*r.p_c, 0.0);
    EXPECT_LT(*r.p_c, 1.0);
    EXPECT_TRUE(r.grid_checked);
    EXPECT_EQ(r.brackets.size(), 1u);
    auto diff = [](double p) { return logical_error_rate(3, 3, p) - (1 - white_noise(p)[0]); };
    EXPECT_LT(diff(*r.p_c - 1e-6) * diff(*r.p_c + 1e-6), 0.0);
}

TEST(CriticalRate, UnencodedHasNone) {
    auto r = critical_rate(1, 1);
    EXPECT_FALSE(r.p_c.has_value());
    EXPECT_TRUE(r.brackets.empty());
    EXPECT_TRUE(r.grid_checked);
    EXPECT_THROW(critical_rate(3, 3, 0.0), Error);
}

TEST(CriticalRate, GridUpToSevenCompletes) {
    for (std::size_t m1 : {3, 5, 7}) {
        for (std::size_t m2 : {3, 5, 7}) {
            auto r = critical_rate(m1, m2, 1e-8);
            EXPECT_TRUE(r.grid_checked) << m1 << "," << m2;
            ASSERT_TRUE(r.p_c.has_value()) << m1 << "," << m2;
            EXPECT_GT(*r.p_c, 0.0);
            EXPECT_LT(*r.p_c, 1.0);
        }
    }
}

TEST(LifetimeCompare, BothLevelsCross) {
    auto cmp = lifetime_concat_compare(3, 3, 3, 1e-7);
    EXPECT_EQ(cmp.one_level.status, LifetimeStatus::crossing);
    EXPECT_EQ(cmp.two_level.status, LifetimeStatus::crossing);
    EXPECT_GT(cmp.one_level.p_crit, 0.0);
    EXPECT_LT(cmp.two_level.p_crit, 1.0);
    EXPECT_THROW(lifetime_concat_compare(3, 2, 3), Error);
}

}  // namespace
}  // namespace effnoise
