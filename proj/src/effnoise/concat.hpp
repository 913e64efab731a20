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

#ifndef EFFNOISE_CONCAT_HPP
#define EFFNOISE_CONCAT_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "effnoise/codes.hpp"
#include "effnoise/effective.hpp"
#include "effnoise/entanglement.hpp"

namespace effnoise {

/// Which channel a level hands to the level above it.
enum class ChannelMode { mean, projected_0 };

const char *channel_mode_name(ChannelMode mode);
ChannelMode channel_mode_from_name(std::string_view name);

struct ConcatLevel {
    StabilizerCode code;
    ChannelMode mode = ChannelMode::mean;
};

/// Innermost level first.
struct ConcatSpec {
    std::vector<ConcatLevel> levels;
};

/// The last level's effective channel after feeding each level the
/// mode-selected output of the one below.
EffectiveChannel concatenate(const ConcatSpec &spec, const PauliChannel &physical,
                             const EnumerationOptions &options = {});

/// The channel the outermost level hands upward under its own mode.
PauliChannel concatenated_channel(const ConcatSpec &spec, const PauliChannel &physical,
                                  const EnumerationOptions &options = {});

/// Inner ghz_code(m1), outer repetition_code(m2), both in `mode`. A size of
/// 1 stands for the trivial code.
ConcatSpec generalized_shor(std::size_t m1, std::size_t m2, ChannelMode mode = ChannelMode::mean);

struct CriticalRateResult {
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    std::optional<double> p_c;
    /// True iff the pre-scan found at most one sign change.
    bool grid_checked = true;
    /// Every grid interval on which e_L - e_P changes sign.
    std::vector<std::pair<double, double>> brackets;
    int iterations = 0;
};

/// Logical error rate 1 - mu_0 of the generalized Shor code under white noise.
double logical_error_rate(std::size_t m1, std::size_t m2, double p, const EnumerationOptions &options = {});

/// Scans e_L - e_P with e_P = 1 - lambda_0 on p = k/65, k = 1..64, and
/// bisects a unique sign change to `tol`.
CriticalRateResult critical_rate(std::size_t m1, std::size_t m2, double tol = 1e-10,
                                 const EnumerationOptions &options = {});

struct ConcatLifetimeComparison {
    /// ghz_code(m1 * m2) as one level.
    LifetimeResult one_level;
    /// ghz_code(m1) inside repetition_code(m2), projected channels throughout.
    LifetimeResult two_level;
};

ConcatLifetimeComparison lifetime_concat_compare(std::size_t n, std::size_t m1, std::size_t m2, double tol = 1e-9,
                                                 const EnumerationOptions &options = {});

}  // namespace effnoise

#endif
