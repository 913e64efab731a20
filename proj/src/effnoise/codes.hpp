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

#ifndef EFFNOISE_CODES_HPP
#define EFFNOISE_CODES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "effnoise/pauli.hpp"

namespace effnoise {

/// Bit a is set iff the error anticommutes with generator a.
using Syndrome = std::uint64_t;

/// Letters tried by the increasing-weight recovery search.
enum class RecoveryAlphabet { x_only, z_only, full };

const char *alphabet_name(RecoveryAlphabet alphabet);
RecoveryAlphabet alphabet_from_name(std::string_view name);

/// Simple undirected graph on m vertices (0-based).
struct GraphSpec {
    std::size_t m = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

GraphSpec ring_graph(std::size_t m);

/// Graph-state stabilizers K_a = X_a prod_{b in N(a)} Z_b, one per vertex.
/// Rejects self-loops and repeated edges.
std::vector<PauliString> graph_stabilizers(const GraphSpec &graph);

/// A stabilizer code encoding one logical qubit into m physical qubits.
///
/// `recovery[s]` is the fixed Pauli applied after observing syndrome s; it is
/// indexed by the syndrome integer and must hold 2^(m-1) entries. The struct
/// is a plain value so that hand-built (possibly broken) codes can be handed
/// to validate().
struct StabilizerCode {
    std::string label;
    std::size_t m = 1;
    std::vector<PauliString> generators;
    PauliString logical_x{1};
    PauliString logical_z{1};
    std::vector<PauliString> recovery;

    std::size_t num_syndromes() const { return std::size_t{1} << generators.size(); }
};

/// Largest m accepted by the code constructors (syndromes must fit 63 bits
/// and the recovery table must stay enumerable).
inline constexpr std::size_t kMaxCodeQubits = 24;

/// m = 1, no generators, logical X = X, logical Z = Z.
StabilizerCode trivial_code();

/// Bit-flip repetition code: generators Z_i Z_{i+1}, logical X = X^m,
/// logical Z = Z_0, recovery = minimum-weight X pattern. m odd, m >= 3.
StabilizerCode repetition_code(std::size_t m);

/// Same stabilizer group and recovery table as repetition_code(m), with the
/// logical basis rotated to (|0..0> +- |1..1>)/sqrt2: logical X = Z_0,
/// logical Z = X^m.
StabilizerCode ghz_code(std::size_t m);

/// Ring cluster-state code: generators K_a K_{a+1}, logical Z = K_0,
/// logical X = Z^m, recovery = minimum-weight Pauli over the full alphabet.
/// m odd, m >= 5.
StabilizerCode cluster_ring_code(std::size_t m);

/// Builds a code from generator and logical strings and fills the recovery
/// table by increasing-weight search over `alphabet`. Throws
/// construction_failure when the search cannot reach every syndrome.
StabilizerCode make_code(std::string label, std::vector<PauliString> generators, PauliString logical_x,
                         PauliString logical_z, RecoveryAlphabet alphabet);

/// Minimum-weight recovery table. Within one weight, supports are visited in
/// lexicographic order of their sorted qubit indices and letters in X, Y, Z
/// order; the first pattern reaching a syndrome keeps it.
std::vector<PauliString> min_weight_recovery(const std::vector<PauliString> &generators, std::size_t m,
                                             RecoveryAlphabet alphabet);

Syndrome syndrome(const StabilizerCode &code, const PauliString &error);

/// Residual logical Pauli of `error` after the code's recovery for its
/// syndrome has been applied.
Pauli logical_action(const StabilizerCode &code, const PauliString &error);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::string label;
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

/// Checks every structural invariant of a code. Never throws on a malformed
/// code; failures become report entries.
ValidationReport validate(const StabilizerCode &code);

/// Rank over GF(2) of the symplectic vectors of `rows`.
std::size_t symplectic_rank(const std::vector<PauliString> &rows);

/// Parses a code-definition document (JSON object with `label`, `m`,
/// `generators`, `logical_x`, `logical_z`, `recovery_alphabet`). Syntax errors
/// are reported with their line number.
StabilizerCode parse_code_definition(std::string_view json_text);

}  // namespace effnoise

#endif
