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

#include "effnoise/codes.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "effnoise/errors.hpp"
#include "json.hpp"

namespace effnoise {

const char *alphabet_name(RecoveryAlphabet alphabet) {
    switch (alphabet) {
        case RecoveryAlphabet::x_only:
            return "x_only";
        case RecoveryAlphabet::z_only:
            return "z_only";
        case RecoveryAlphabet::full:
            return "full";
    }
    return "unknown";
}

RecoveryAlphabet alphabet_from_name(std::string_view name) {
    if (name == "x_only") {
        return RecoveryAlphabet::x_only;
    }
    if (name == "z_only") {
        return RecoveryAlphabet::z_only;
    }
    if (name == "full") {
        return RecoveryAlphabet::full;
    }
    fail(ErrorKind::invalid_argument, "unknown recovery alphabet '" + std::string(name) + "'");
}

GraphSpec ring_graph(std::size_t m) {
    GraphSpec g;
    g.m = m;
    for (std::size_t a = 0; a < m; ++a) {
        g.edges.emplace_back(a, (a + 1) % m);
    }
    return g;
}

std::vector<PauliString> graph_stabilizers(const GraphSpec &graph) {
    if (graph.m == 0 || graph.m > PauliString::kMaxQubits) {
        fail(ErrorKind::invalid_argument, "graph vertex count out of range");
    }
    std::vector<std::uint64_t> neighbours(graph.m, 0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : graph.edges) {
        if (a >= graph.m || b >= graph.m) {
            fail(ErrorKind::invalid_argument, "graph edge refers to a missing vertex");
        }
        if (a == b) {
            fail(ErrorKind::invalid_argument, "graph has a self-loop");
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            fail(ErrorKind::invalid_argument, "graph has a repeated edge");
        }
        neighbours[a] |= std::uint64_t{1} << b;
        neighbours[b] |= std::uint64_t{1} << a;
    }
    std::vector<PauliString> out;
    out.reserve(graph.m);
    for (std::size_t a = 0; a < graph.m; ++a) {
        out.emplace_back(graph.m, std::uint64_t{1} << a, neighbours[a]);
    }
    return out;
}

namespace {

struct SyndromeTable {
    // Syndrome flipped by an X (resp. Z) component on each qubit.
    std::vector<Syndrome> from_x;
    std::vector<Syndrome> from_z;

    SyndromeTable(const std::vector<PauliString> &generators, std::size_t m) : from_x(m, 0), from_z(m, 0) {
        for (std::size_t a = 0; a < generators.size(); ++a) {
            for (std::size_t q = 0; q < m; ++q) {
                Syndrome bit = Syndrome{1} << a;
                if ((generators[a].z_mask() >> q) & 1) {
                    from_x[q] |= bit;
                }
                if ((generators[a].x_mask() >> q) & 1) {
                    from_z[q] |= bit;
                }
            }
        }
    }

    Syndrome of(std::uint64_t x, std::uint64_t z) const {
        Syndrome s = 0;
        for (std::size_t q = 0; q < from_x.size(); ++q) {
            if ((x >> q) & 1) {
                s ^= from_x[q];
            }
            if ((z >> q) & 1) {
                s ^= from_z[q];
            }
        }
        return s;
    }
};

// Advances `idx` (strictly increasing, values < n) to the next combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

void check_code_shape(std::size_t m) {
    if (m == 0 || m > kMaxCodeQubits) {
        fail(ErrorKind::unsupported_parameter,
             "code size m must lie in [1, " + std::to_string(kMaxCodeQubits) + "], got " + std::to_string(m));
    }
}

void require_odd(std::size_t m, std::size_t min_m, const char *family) {
    if (m < min_m || m % 2 == 0) {
        fail(ErrorKind::unsupported_parameter, std::string(family) + " code needs odd m >= " +
                                                   std::to_string(min_m) + ", got " + std::to_string(m));
    }
}

}  // namespace

std::vector<PauliString> min_weight_recovery(const std::vector<PauliString> &generators, std::size_t m,
                                             RecoveryAlphabet alphabet) {
    check_code_shape(m);
    for (const auto &g : generators) {
        if (g.size() != m) {
            fail(ErrorKind::invalid_argument, "generator length differs from m");
        }
    }
    if (generators.size() >= 63) {
        fail(ErrorKind::unsupported_parameter, "too many generators");
    }
    SyndromeTable table(generators, m);
    std::size_t total = std::size_t{1} << generators.size();
    std::vector<PauliString> recovery(total, PauliString(m));
    std::vector<bool> found(total, false);
    std::size_t remaining = total;

    for (std::size_t w = 0; w <= m && remaining > 0; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) {
            support[i] = i;
        }
        do {
            // Letter codes per support site: 1 = X, 2 = Y, 3 = Z.
            std::vector<unsigned> letters(w, alphabet == RecoveryAlphabet::z_only ? 3u : 1u);
            while (true) {
                std::uint64_t x = 0;
                std::uint64_t z = 0;
                for (std::size_t i = 0; i < w; ++i) {
                    std::uint64_t bit = std::uint64_t{1} << support[i];
                    if (letters[i] == 1 || letters[i] == 2) {
                        x |= bit;
                    }
                    if (letters[i] == 2 || letters[i] == 3) {
                        z |= bit;
                    }
                }
                Syndrome s = table.of(x, z);
                if (!found[s]) {
                    found[s] = true;
                    recovery[s] = PauliString(m, x, z);
                    if (--remaining == 0) {
                        return recovery;
                    }
                }
                if (alphabet != RecoveryAlphabet::full) {
                    break;
                }
                std::size_t i = w;
                while (i > 0 && letters[i - 1] == 3) {
                    letters[i - 1] = 1;
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++letters[i - 1];
            }
        } while (w > 0 && next_combination(support, m));
    }
    fail(ErrorKind::construction_failure, std::string("recovery search over the ") + alphabet_name(alphabet) +
                                              " alphabet reaches only " + std::to_string(total - remaining) +
                                              " of " + std::to_string(total) + " syndromes");
}

StabilizerCode trivial_code() {
    StabilizerCode code;
    code.label = "trivial";
    code.m = 1;
    code.logical_x = PauliString::parse("X");
    code.logical_z = PauliString::parse("Z");
    code.recovery = {PauliString(1)};
    return code;
}

StabilizerCode repetition_code(std::size_t m) {
    require_odd(m, 3, "repetition");
    check_code_shape(m);
    std::vector<PauliString> gens;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        gens.emplace_back(m, 0, (std::uint64_t{3} << i));
    }
    std::uint64_t all = (std::uint64_t{1} << m) - 1;
    return make_code("repetition", std::move(gens), PauliString(m, all, 0), PauliString(m, 0, 1),
                     RecoveryAlphabet::x_only);
}

StabilizerCode ghz_code(std::size_t m) {
    StabilizerCode code = repetition_code(m);
    code.label = "ghz";
    std::swap(code.logical_x, code.logical_z);
    return code;
}

StabilizerCode cluster_ring_code(std::size_t m) {
    require_odd(m, 5, "cluster-ring");
    check_code_shape(m);
    auto k = graph_stabilizers(ring_graph(m));
    std::vector<PauliString> gens;
    for (std::size_t a = 0; a + 1 < m; ++a) {
        gens.push_back(k[a] * k[a + 1]);
    }
    std::uint64_t all = (std::uint64_t{1} << m) - 1;
    return make_code("cluster_ring", std::move(gens), PauliString(m, 0, all), k[0], RecoveryAlphabet::full);
}

StabilizerCode make_code(std::string label, std::vector<PauliString> generators, PauliString logical_x,
                         PauliString logical_z, RecoveryAlphabet alphabet) {
    StabilizerCode code;
    code.label = std::move(label);
    code.m = logical_x.size();
    check_code_shape(code.m);
    if (logical_z.size() != code.m) {
        fail(ErrorKind::invalid_argument, "logical operators have different lengths");
    }
    code.generators = std::move(generators);
    code.logical_x = std::move(logical_x);
    code.logical_z = std::move(logical_z);
    code.recovery = min_weight_recovery(code.generators, code.m, alphabet);
    return code;
}

Syndrome syndrome(const StabilizerCode &code, const PauliString &error) {
    if (error.size() != code.m) {
        fail(ErrorKind::invalid_argument, "error length " + std::to_string(error.size()) +
                                              " does not match code size " + std::to_string(code.m));
    }
    Syndrome s = 0;
    for (std::size_t a = 0; a < code.generators.size(); ++a) {
        if (!commutes(code.generators[a], error)) {
            s |= Syndrome{1} << a;
        }
    }
    return s;
}

Pauli logical_action(const StabilizerCode &code, const PauliString &error) {
    Syndrome s = syndrome(code, error);
    if (s >= code.recovery.size()) {
        fail(ErrorKind::invalid_argument, "recovery table has no entry for syndrome " + std::to_string(s));
    }
    PauliString corrected = code.recovery[s] * error;
    return pauli_from_bits(!commutes(corrected, code.logical_z), !commutes(corrected, code.logical_x));
}

std::size_t symplectic_rank(const std::vector<PauliString> &rows) {
    // XOR basis over the 128-bit vectors (x, z), one slot per pivot bit.
    struct Row {
        std::uint64_t x = 0;
        std::uint64_t z = 0;
    };
    std::vector<Row> pivots(128);
    std::vector<bool> used(128, false);
    std::size_t rank = 0;
    for (const auto &r : rows) {
        Row v{r.x_mask(), r.z_mask()};
        while (v.x || v.z) {
            std::size_t bit = v.x ? 64 + std::bit_width(v.x) - 1 : std::bit_width(v.z) - 1;
            if (!used[bit]) {
                used[bit] = true;
                pivots[bit] = v;
                ++rank;
                break;
            }
            v.x ^= pivots[bit].x;
            v.z ^= pivots[bit].z;
        }
    }
    return rank;
}

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

ValidationReport validate(const StabilizerCode &code) {
    ValidationReport report;
    report.label = code.label;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    bool shape_ok = code.m >= 1 && code.m <= kMaxCodeQubits && code.logical_x.size() == code.m &&
                    code.logical_z.size() == code.m && code.generators.size() + 1 == code.m;
    std::string shape_detail;
    for (const auto &g : code.generators) {
        if (g.size() != code.m) {
            shape_ok = false;
            shape_detail = "generator " + g.str() + " has the wrong length";
        }
    }
    if (shape_ok) {
        add("shape", true);
    } else {
        add("shape", false, shape_detail.empty() ? "need m - 1 generators and logicals of length m" : shape_detail);
        // Everything below assumes consistent lengths.
        return report;
    }

    auto hermitian = [](const PauliString &p) { return p.phase() % 2 == 0; };
    bool herm = hermitian(code.logical_x) && hermitian(code.logical_z) &&
                std::all_of(code.generators.begin(), code.generators.end(), hermitian);
    add("hermitian", herm, herm ? "" : "operators must carry a real sign");

    std::string detail;
    bool gens_commute = true;
    for (std::size_t a = 0; a < code.generators.size() && gens_commute; ++a) {
        for (std::size_t b = a + 1; b < code.generators.size(); ++b) {
            if (!commutes(code.generators[a], code.generators[b])) {
                gens_commute = false;
                detail = code.generators[a].str() + " anticommutes with " + code.generators[b].str();
                break;
            }
        }
    }
    add("generators_commute", gens_commute, detail);

    std::size_t rank = symplectic_rank(code.generators);
    add("generators_independent", rank == code.generators.size(),
        "rank " + std::to_string(rank) + " of " + std::to_string(code.generators.size()));

    bool logicals_commute = true;
    detail.clear();
    for (const auto &g : code.generators) {
        for (const auto *l : {&code.logical_x, &code.logical_z}) {
            if (!commutes(g, *l)) {
                logicals_commute = false;
                detail = l->str() + " anticommutes with " + g.str();
            }
        }
    }
    add("logicals_commute_with_generators", logicals_commute, detail);
    add("logicals_anticommute", !commutes(code.logical_x, code.logical_z));

    auto with = [&](std::initializer_list<const PauliString *> extra) {
        auto rows = code.generators;
        for (const auto *e : extra) {
            rows.push_back(*e);
        }
        return symplectic_rank(rows);
    };
    bool independent = with({&code.logical_x}) == rank + 1 && with({&code.logical_z}) == rank + 1 &&
                       with({&code.logical_x, &code.logical_z}) == rank + 2;
    add("logicals_independent", independent, independent ? "" : "a logical operator lies in the stabilizer group");

    std::size_t total = code.num_syndromes();
    add("recovery_coverage", code.recovery.size() == total,
        std::to_string(code.recovery.size()) + " of " + std::to_string(total) + " syndromes");

    bool consistent = true;
    detail.clear();
    for (std::size_t s = 0; s < code.recovery.size(); ++s) {
        if (code.recovery[s].size() != code.m) {
            consistent = false;
            detail = "entry " + std::to_string(s) + " has the wrong length";
            break;
        }
        if (syndrome(code, code.recovery[s]) != s) {
            consistent = false;
            detail = "entry " + std::to_string(s) + " (" + code.recovery[s].str() + ") has another syndrome";
            break;
        }
    }
    add("recovery_syndromes", consistent, detail);
    return report;
}

StabilizerCode parse_code_definition(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        fail(ErrorKind::parse_error, std::string("code definition: ") + e.what());
    }
    auto schema = [](const std::string &msg) -> void { fail(ErrorKind::parse_error, "code definition: " + msg); };
    if (!doc.is_object()) {
        schema("top level must be an object");
    }
    for (const char *key : {"label", "m", "generators", "logical_x", "logical_z", "recovery_alphabet"}) {
        if (!doc.contains(key)) {
            schema(std::string("missing field '") + key + "'");
        }
    }
    if (!doc["label"].is_string()) {
        schema("'label' must be a string");
    }
    if (!doc["m"].is_number_unsigned()) {
        schema("'m' must be a positive integer");
    }
    if (!doc["generators"].is_array()) {
        schema("'generators' must be a list of Pauli strings");
    }
    auto m = doc["m"].get<std::size_t>();
    if (m == 0) {
        schema("'m' must be a positive integer");
    }
    check_code_shape(m);
    auto read = [&](const nlohmann::json &v, const std::string &what) {
        if (!v.is_string()) {
            schema(what + " must be a Pauli string");
        }
        PauliString p(1);
        try {
            p = PauliString::parse(v.get<std::string>());
        } catch (const Error &e) {
            schema(what + ": " + e.what());
        }
        if (p.size() != m) {
            schema(what + " has length " + std::to_string(p.size()) + ", expected m = " + std::to_string(m));
        }
        return p;
    };
    std::vector<PauliString> gens;
    for (std::size_t a = 0; a < doc["generators"].size(); ++a) {
        gens.push_back(read(doc["generators"][a], "generator " + std::to_string(a)));
    }
    if (gens.size() + 1 != m) {
        schema("expected m - 1 = " + std::to_string(m - 1) + " generators, got " + std::to_string(gens.size()));
    }
    auto lx = read(doc["logical_x"], "logical_x");
    auto lz = read(doc["logical_z"], "logical_z");
    if (!doc["recovery_alphabet"].is_string()) {
        schema("'recovery_alphabet' must be a string");
    }
    RecoveryAlphabet alphabet{};
    try {
        alphabet = alphabet_from_name(doc["recovery_alphabet"].get<std::string>());
    } catch (const Error &e) {
        schema(e.what());
    }

    StabilizerCode code;
    code.label = doc["label"].get<std::string>();
    code.m = m;
    code.generators = std::move(gens);
    code.logical_x = std::move(lx);
    code.logical_z = std::move(lz);
    // Structural problems are reported before the recovery search so that a
    // bad generator set reads as such rather than as a search failure.
    code.recovery.assign(code.num_syndromes(), PauliString(m));
    auto report = validate(code);
    for (const auto &c : report.checks) {
        if (!c.passed && c.name != "recovery_syndromes") {
            fail(ErrorKind::construction_failure,
                 "code '" + code.label + "' fails " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
        }
    }
    code.recovery = min_weight_recovery(code.generators, m, alphabet);
    return code;
}

}  // namespace effnoise
