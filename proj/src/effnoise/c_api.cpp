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

#include "effnoise/effnoise.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "effnoise/codes.hpp"
#include "effnoise/concat.hpp"
#include "effnoise/effective.hpp"
#include "effnoise/entanglement.hpp"
#include "effnoise/errors.hpp"

struct effnoise_code {
    effnoise::StabilizerCode code;
};

struct effnoise_effective {
    effnoise::EffectiveChannel eff;
};

struct effnoise_report {
    effnoise::ValidationReport report;
};

namespace {

thread_local std::string last_error;

effnoise_status status_of(effnoise::ErrorKind kind) {
    switch (kind) {
        case effnoise::ErrorKind::invalid_argument:
            return EFFNOISE_INVALID_ARGUMENT;
        case effnoise::ErrorKind::unsupported_parameter:
            return EFFNOISE_UNSUPPORTED_PARAMETER;
        case effnoise::ErrorKind::resource_limit:
            return EFFNOISE_RESOURCE_LIMIT;
        case effnoise::ErrorKind::construction_failure:
            return EFFNOISE_CONSTRUCTION_FAILURE;
        case effnoise::ErrorKind::parse_error:
            return EFFNOISE_PARSE_ERROR;
    }
    return EFFNOISE_INTERNAL_ERROR;
}

template <typename F>
effnoise_status guarded(F &&body) {
    try {
        body();
        return EFFNOISE_OK;
    } catch (const effnoise::Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return EFFNOISE_RESOURCE_LIMIT;
    } catch (const std::exception &e) {
        last_error = e.what();
        return EFFNOISE_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown failure";
        return EFFNOISE_INTERNAL_ERROR;
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        effnoise::fail(effnoise::ErrorKind::invalid_argument, std::string("null argument: ") + what);
    }
}

effnoise::PauliChannel channel_from(const double lambda[4]) {
    require(lambda != nullptr, "lambda");
    return effnoise::PauliChannel({lambda[0], lambda[1], lambda[2], lambda[3]});
}

void write_channel(const effnoise::PauliChannel &c, double out[4]) {
    for (std::size_t j = 0; j < 4; ++j) {
        out[j] = c[j];
    }
}

effnoise::PauliChannel physical_noise(effnoise_noise noise, double p) {
    switch (noise) {
        case EFFNOISE_NOISE_WHITE:
            return effnoise::white_noise(p);
        case EFFNOISE_NOISE_PHASE:
            return effnoise::phase_noise(p);
    }
    effnoise::fail(effnoise::ErrorKind::invalid_argument, "unknown noise kind");
}

effnoise::EnumerationOptions enumeration(size_t max_qubits, unsigned jobs) {
    effnoise::EnumerationOptions o;
    if (max_qubits != 0) {
        o.max_qubits = max_qubits;
    }
    o.jobs = jobs;
    return o;
}

void write_lifetime(const effnoise::LifetimeResult &r, effnoise_lifetime_result *out) {
    out->p_crit = r.p_crit;
    out->residual = r.residual;
    out->iterations = r.iterations;
    out->monotone = r.monotone ? 1 : 0;
    switch (r.status) {
        case effnoise::LifetimeStatus::crossing:
            out->status = EFFNOISE_LIFETIME_CROSSING;
            break;
        case effnoise::LifetimeStatus::entangled_everywhere:
            out->status = EFFNOISE_LIFETIME_ENTANGLED_EVERYWHERE;
            break;
        case effnoise::LifetimeStatus::never_entangled:
            out->status = EFFNOISE_LIFETIME_NEVER_ENTANGLED;
            break;
    }
}

}  // namespace

extern "C" {

const char *effnoise_version(void) { return "1.0.0"; }

const char *effnoise_last_error(void) { return last_error.c_str(); }

const char *effnoise_status_name(effnoise_status status) {
    switch (status) {
        case EFFNOISE_OK:
            return "ok";
        case EFFNOISE_INVALID_ARGUMENT:
            return "invalid-argument";
        case EFFNOISE_UNSUPPORTED_PARAMETER:
            return "unsupported-parameter";
        case EFFNOISE_RESOURCE_LIMIT:
            return "resource-limit";
        case EFFNOISE_CONSTRUCTION_FAILURE:
            return "construction-failure";
        case EFFNOISE_PARSE_ERROR:
            return "parse-error";
        case EFFNOISE_INTERNAL_ERROR:
            return "internal-error";
    }
    return "unknown";
}

effnoise_status effnoise_white_noise(double p, double out[4]) {
    return guarded([&] {
        require(out != nullptr, "out");
        write_channel(effnoise::white_noise(p), out);
    });
}

effnoise_status effnoise_phase_noise(double p, double out[4]) {
    return guarded([&] {
        require(out != nullptr, "out");
        write_channel(effnoise::phase_noise(p), out);
    });
}

effnoise_status effnoise_noise_channel(effnoise_noise noise, double p, double out[4]) {
    return guarded([&] {
        require(out != nullptr, "out");
        write_channel(physical_noise(noise, p), out);
    });
}

effnoise_status effnoise_check_channel(const double lambda[4]) {
    return guarded([&] { channel_from(lambda); });
}

effnoise_status effnoise_p_eff_estimate(double p, double *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        *out = effnoise::p_eff_estimate(p);
    });
}

effnoise_status effnoise_cluster_ring_p0(double p, double *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        *out = effnoise::cluster_ring_p0(p);
    });
}

effnoise_status effnoise_code_builtin(const char *family, size_t m, effnoise_code **out) {
    return guarded([&] {
        require(family != nullptr, "family");
        require(out != nullptr, "out");
        std::string f = family;
        auto handle = std::make_unique<effnoise_code>();
        if (f == "trivial" || (m == 1 && (f == "repetition" || f == "ghz" || f == "cluster_ring"))) {
            if (m != 1) {
                effnoise::fail(effnoise::ErrorKind::unsupported_parameter, "the trivial code has m = 1");
            }
            handle->code = effnoise::trivial_code();
        } else if (f == "repetition") {
            handle->code = effnoise::repetition_code(m);
        } else if (f == "ghz") {
            handle->code = effnoise::ghz_code(m);
        } else if (f == "cluster_ring") {
            handle->code = effnoise::cluster_ring_code(m);
        } else {
            effnoise::fail(effnoise::ErrorKind::invalid_argument, "unknown code family '" + f + "'");
        }
        *out = handle.release();
    });
}

effnoise_status effnoise_code_from_json(const char *text, effnoise_code **out) {
    return guarded([&] {
        require(text != nullptr, "text");
        require(out != nullptr, "out");
        auto handle = std::make_unique<effnoise_code>();
        handle->code = effnoise::parse_code_definition(text);
        *out = handle.release();
    });
}

void effnoise_code_free(effnoise_code *code) { delete code; }

const char *effnoise_code_label(const effnoise_code *code) { return code ? code->code.label.c_str() : ""; }

size_t effnoise_code_size(const effnoise_code *code) { return code ? code->code.m : 0; }

size_t effnoise_code_num_syndromes(const effnoise_code *code) { return code ? code->code.num_syndromes() : 0; }

effnoise_status effnoise_code_classify(const effnoise_code *code, const char *error, uint64_t *syndrome,
                                       char *logical) {
    return guarded([&] {
        require(code != nullptr, "code");
        require(error != nullptr, "error");
        auto e = effnoise::PauliString::parse(error);
        if (syndrome) {
            *syndrome = effnoise::syndrome(code->code, e);
        }
        if (logical) {
            *logical = effnoise::pauli_char(effnoise::logical_action(code->code, e));
        }
    });
}

effnoise_status effnoise_code_recovery(const effnoise_code *code, uint64_t syndrome, char *buf, size_t buf_size) {
    return guarded([&] {
        require(code != nullptr, "code");
        require(buf != nullptr, "buf");
        if (syndrome >= code->code.recovery.size()) {
            effnoise::fail(effnoise::ErrorKind::invalid_argument, "syndrome out of range");
        }
        std::string s = code->code.recovery[syndrome].str();
        if (s.size() + 1 > buf_size) {
            effnoise::fail(effnoise::ErrorKind::invalid_argument, "buffer too small");
        }
        std::memcpy(buf, s.c_str(), s.size() + 1);
    });
}

effnoise_status effnoise_code_validate(const effnoise_code *code, effnoise_report **out) {
    return guarded([&] {
        require(code != nullptr, "code");
        require(out != nullptr, "out");
        auto handle = std::make_unique<effnoise_report>();
        handle->report = effnoise::validate(code->code);
        *out = handle.release();
    });
}

void effnoise_report_free(effnoise_report *report) { delete report; }

size_t effnoise_report_size(const effnoise_report *report) { return report ? report->report.checks.size() : 0; }

int effnoise_report_all_passed(const effnoise_report *report) {
    return report && report->report.all_passed() ? 1 : 0;
}

effnoise_status effnoise_report_check(const effnoise_report *report, size_t index, const char **name, int *passed,
                                      const char **detail) {
    return guarded([&] {
        require(report != nullptr, "report");
        if (index >= report->report.checks.size()) {
            effnoise::fail(effnoise::ErrorKind::invalid_argument, "check index out of range");
        }
        const auto &c = report->report.checks[index];
        if (name) {
            *name = c.name.c_str();
        }
        if (passed) {
            *passed = c.passed ? 1 : 0;
        }
        if (detail) {
            *detail = c.detail.c_str();
        }
    });
}

effnoise_status effnoise_derive(const effnoise_code *code, const double lambda[4], size_t max_qubits, unsigned jobs,
                                effnoise_effective **out) {
    return guarded([&] {
        require(code != nullptr, "code");
        require(out != nullptr, "out");
        auto handle = std::make_unique<effnoise_effective>();
        handle->eff = effnoise::derive_effective(code->code, channel_from(lambda), enumeration(max_qubits, jobs));
        *out = handle.release();
    });
}

effnoise_status effnoise_concat_shor(size_t m1, size_t m2, effnoise_mode mode, const double lambda[4],
                                     size_t max_qubits, unsigned jobs, effnoise_effective **out) {
    return guarded([&] {
        require(out != nullptr, "out");
        auto m = mode == EFFNOISE_MODE_MEAN ? effnoise::ChannelMode::mean : effnoise::ChannelMode::projected_0;
        auto handle = std::make_unique<effnoise_effective>();
        handle->eff = effnoise::concatenate(effnoise::generalized_shor(m1, m2, m), channel_from(lambda),
                                            enumeration(max_qubits, jobs));
        *out = handle.release();
    });
}

void effnoise_effective_free(effnoise_effective *eff) { delete eff; }

size_t effnoise_effective_num_syndromes(const effnoise_effective *eff) {
    return eff ? eff->eff.per_syndrome.size() : 0;
}

effnoise_status effnoise_effective_syndrome(const effnoise_effective *eff, uint64_t syndrome, double *probability,
                                            double lambda[4], int *reachable) {
    return guarded([&] {
        require(eff != nullptr, "eff");
        const auto &entry = eff->eff.at(syndrome);
        if (probability) {
            *probability = entry.probability;
        }
        if (lambda) {
            write_channel(entry.channel, lambda);
        }
        if (reachable) {
            *reachable = entry.reachable ? 1 : 0;
        }
    });
}

effnoise_status effnoise_effective_mean(const effnoise_effective *eff, double out[4]) {
    return guarded([&] {
        require(eff != nullptr, "eff");
        require(out != nullptr, "out");
        write_channel(eff->eff.mean, out);
    });
}

effnoise_status effnoise_ghz_negativity(size_t n, const double lambda[4], double *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        *out = effnoise::ghz_negativity_fast(n, channel_from(lambda));
    });
}

effnoise_status effnoise_lifetime(const effnoise_code *code, effnoise_noise noise, size_t n, double tol,
                                  effnoise_lifetime_result *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        effnoise::LifetimeOptions options;
        options.tol = tol;
        effnoise::ChannelFamily family;
        if (code == nullptr || code->code.m == 1) {
            family = [noise](double p) { return physical_noise(noise, p); };
        } else {
            const auto *c = &code->code;
            family = [c, noise](double p) { return effnoise::derive_effective(*c, physical_noise(noise, p)).projected(); };
        }
        write_lifetime(effnoise::lifetime_pcrit(family, n, options), out);
    });
}

effnoise_status effnoise_lifetime_concat_compare(size_t n, size_t m1, size_t m2, double tol,
                                                 effnoise_lifetime_result *one_level, effnoise_lifetime_result *two_level) {
    return guarded([&] {
        require(one_level != nullptr && two_level != nullptr, "out");
        auto r = effnoise::lifetime_concat_compare(n, m1, m2, tol);
        write_lifetime(r.one_level, one_level);
        write_lifetime(r.two_level, two_level);
    });
}

effnoise_status effnoise_critical_rate(size_t m1, size_t m2, double tol, size_t max_qubits, unsigned jobs,
                                       effnoise_critical_rate_result *out, double *brackets, size_t bracket_capacity) {
    return guarded([&] {
        require(out != nullptr, "out");
        auto r = effnoise::critical_rate(m1, m2, tol, enumeration(max_qubits, jobs));
        out->has_p_c = r.p_c.has_value() ? 1 : 0;
        out->p_c = r.p_c.value_or(0.0);
        out->grid_checked = r.grid_checked ? 1 : 0;
        out->iterations = r.iterations;
        out->num_brackets = r.brackets.size();
        for (size_t k = 0; brackets != nullptr && k < r.brackets.size() && k < bracket_capacity; ++k) {
            brackets[2 * k] = r.brackets[k].first;
            brackets[2 * k + 1] = r.brackets[k].second;
        }
    });
}

}  // extern "C"
