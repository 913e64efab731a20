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

#include "effnoise/concat.hpp"

#include <cmath>

#include "effnoise/errors.hpp"

namespace effnoise {

const char *channel_mode_name(ChannelMode mode) { return mode == ChannelMode::mean ? "mean" : "projected_0"; }

ChannelMode channel_mode_from_name(std::string_view name) {
    if (name == "mean") {
        return ChannelMode::mean;
    }
    if (name == "projected_0") {
        return ChannelMode::projected_0;
    }
    fail(ErrorKind::invalid_argument, "unknown channel mode '" + std::string(name) + "'");
}

namespace {

PauliChannel handed_up(const EffectiveChannel &eff, ChannelMode mode) {
    return mode == ChannelMode::mean ? eff.mean : eff.projected();
}

StabilizerCode level_code(std::size_t m, bool ghz) {
    if (m == 1) {
        return trivial_code();
    }
    return ghz ? ghz_code(m) : repetition_code(m);
}

}  // namespace

EffectiveChannel concatenate(const ConcatSpec &spec, const PauliChannel &physical,
                             const EnumerationOptions &options) {
    if (spec.levels.empty()) {
        fail(ErrorKind::invalid_argument, "concatenation needs at least one level");
    }
    PauliChannel current = physical;
    EffectiveChannel eff;
    for (const auto &level : spec.levels) {
        eff = derive_effective(level.code, current, options);
        current = handed_up(eff, level.mode);
    }
    return eff;
}

PauliChannel concatenated_channel(const ConcatSpec &spec, const PauliChannel &physical,
                                  const EnumerationOptions &options) {
    return handed_up(concatenate(spec, physical, options), spec.levels.back().mode);
}

ConcatSpec generalized_shor(std::size_t m1, std::size_t m2, ChannelMode mode) {
    if (m1 % 2 == 0 || m2 % 2 == 0) {
        fail(ErrorKind::unsupported_parameter,
             "generalized Shor code needs odd (m1, m2), got (" + std::to_string(m1) + ", " + std::to_string(m2) + ")");
    }
    ConcatSpec spec;
    spec.levels.push_back({level_code(m1, true), mode});
    spec.levels.push_back({level_code(m2, false), mode});
    return spec;
}

double logical_error_rate(std::size_t m1, std::size_t m2, double p, const EnumerationOptions &options) {
    return 1.0 - concatenate(generalized_shor(m1, m2), white_noise(p), options).mean[0];
}

namespace {

// Differences this small carry no sign; they arise when e_L and e_P are the
// same quantity computed along two routes.
constexpr double kZeroBand = 1e-14;

int sign_of(double d) { return d > kZeroBand ? 1 : (d < -kZeroBand ? -1 : 0); }

}  // namespace

CriticalRateResult critical_rate(std::size_t m1, std::size_t m2, double tol, const EnumerationOptions &options) {
    if (!(tol > 0)) {
        fail(ErrorKind::invalid_argument, "tolerance must be positive");
    }
    CriticalRateResult result;
    result.m1 = m1;
    result.m2 = m2;
    auto spec = generalized_shor(m1, m2);
    auto diff = [&](double p) {
        double e_l = 1.0 - concatenate(spec, white_noise(p), options).mean[0];
        double e_p = 1.0 - white_noise(p)[0];
        return e_l - e_p;
    };

    constexpr int kGrid = 65;
    double last_p = 0;
    int last_sign = 0;
    for (int k = 1; k < kGrid; ++k) {
        double p = static_cast<double>(k) / kGrid;
        int s = sign_of(diff(p));
        if (s == 0) {
            continue;
        }
        if (last_sign != 0 && s != last_sign) {
            result.brackets.emplace_back(last_p, p);
        }
        last_p = p;
        last_sign = s;
    }
    if (result.brackets.size() > 1) {
        result.grid_checked = false;
        return result;
    }
    if (result.brackets.empty()) {
        return result;
    }
    auto [lo, hi] = result.brackets.front();
    int lo_sign = sign_of(diff(lo));
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        int s = sign_of(diff(mid));
        if (s == 0) {
            lo = hi = mid;
            break;
        }
        (s == lo_sign ? lo : hi) = mid;
        ++result.iterations;
    }
    result.p_c = 0.5 * (lo + hi);
    return result;
}

ConcatLifetimeComparison lifetime_concat_compare(std::size_t n, std::size_t m1, std::size_t m2, double tol,
                                                 const EnumerationOptions &options) {
    if (m1 % 2 == 0 || m2 % 2 == 0) {
        fail(ErrorKind::unsupported_parameter, "lifetime comparison needs odd (m1, m2)");
    }
    LifetimeOptions lopt;
    lopt.tol = tol;
    auto one_code = level_code(m1 * m2, true);
    ConcatLifetimeComparison out;
    out.one_level = lifetime_pcrit(
        [&](double p) { return derive_effective(one_code, white_noise(p), options).projected(); }, n, lopt);
    auto spec = generalized_shor(m1, m2, ChannelMode::projected_0);
    out.two_level =
        lifetime_pcrit([&](double p) { return concatenated_channel(spec, white_noise(p), options); }, n, lopt);
    return out;
}

}  // namespace effnoise
