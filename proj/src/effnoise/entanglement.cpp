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

#include "effnoise/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

#include "effnoise/errors.hpp"

namespace effnoise {

DensityMatrix::DensityMatrix(std::size_t n, Eigen::MatrixXcd entries) : n_(n), rho_(std::move(entries)) {
    if (n == 0 || n > 30) {
        fail(ErrorKind::invalid_argument, "density matrix qubit count out of range");
    }
    auto dim = Eigen::Index{1} << n;
    if (rho_.rows() != dim || rho_.cols() != dim) {
        fail(ErrorKind::invalid_argument, "density matrix dimension does not match 2^n");
    }
}

DensityMatrix ghz_state(std::size_t n, std::size_t max_qubits) {
    if (n < 2) {
        fail(ErrorKind::invalid_argument, "GHZ state needs at least 2 qubits");
    }
    if (n > max_qubits) {
        fail(ErrorKind::resource_limit,
             "dense GHZ state on " + std::to_string(n) + " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    rho(0, 0) = rho(0, dim - 1) = rho(dim - 1, 0) = rho(dim - 1, dim - 1) = 0.5;
    return DensityMatrix(n, std::move(rho));
}

DensityMatrix apply_channel(const DensityMatrix &rho, const PauliChannel &channel, std::size_t qubit) {
    if (qubit >= rho.num_qubits()) {
        fail(ErrorKind::invalid_argument, "qubit " + std::to_string(qubit) + " out of range");
    }
    const auto &in = rho.matrix();
    const auto dim = in.rows();
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    Eigen::MatrixXcd out(dim, dim);
    // Z and Y pick up (-1)^(r_q + c_q); X and Y also flip bit q of both indices.
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            double sign = (((r ^ c) & bit) != 0) ? -1.0 : 1.0;
            out(r, c) = (channel[0] + sign * channel[3]) * in(r, c) +
                        (channel[1] + sign * channel[2]) * in(r ^ bit, c ^ bit);
        }
    }
    return DensityMatrix(rho.num_qubits(), std::move(out));
}

DensityMatrix apply_channel_all(const DensityMatrix &rho, const PauliChannel &channel) {
    DensityMatrix out = rho;
    for (std::size_t q = 0; q < rho.num_qubits(); ++q) {
        out = apply_channel(out, channel, q);
    }
    return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, std::uint64_t mask) {
    const auto dim = rho.rows();
    const auto t = static_cast<Eigen::Index>(mask);
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            Eigen::Index swap = (r ^ c) & t;
            out(r, c) = rho(r ^ swap, c ^ swap);
        }
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd &h) {
    if (h.rows() != h.cols()) {
        fail(ErrorKind::invalid_argument, "eigenvalues of a non-square matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::construction_failure, "Hermitian eigenvalue iteration did not converge");
    }
    return solver.eigenvalues();
}

double negativity(const DensityMatrix &rho, const std::vector<std::size_t> &partition) {
    const std::size_t n = rho.num_qubits();
    std::set<std::size_t> seen;
    std::uint64_t mask = 0;
    for (auto q : partition) {
        if (q >= n || !seen.insert(q).second) {
            fail(ErrorKind::invalid_argument, "partition must list distinct qubits below " + std::to_string(n));
        }
        mask |= std::uint64_t{1} << q;
    }
    if (seen.empty() || seen.size() == n) {
        fail(ErrorKind::invalid_argument, "partition must be a nonempty proper subset");
    }
    auto eig = hermitian_eigenvalues(partial_transpose(rho.matrix(), mask));
    double neg = 0;
    for (Eigen::Index k = 0; k < eig.size(); ++k) {
        if (eig[k] < 0) {
            neg -= eig[k];
        }
    }
    return neg;
}

namespace {

// Entries of E^{(x)n}(|GHZ><GHZ|). The state only has support on (x, x) and
// (x, complement of x); both depend on the Hamming weight w of x alone.
struct GhzEntries {
    long double f;   // flip probability lambda_1 + lambda_2
    long double g;   // lambda_1 - lambda_2
    long double h;   // lambda_0 - lambda_3
    std::size_t n;

    explicit GhzEntries(const PauliChannel &channel, std::size_t n_)
        : f(static_cast<long double>(channel[1]) + channel[2]),
          g(static_cast<long double>(channel[1]) - channel[2]),
          h(static_cast<long double>(channel[0]) - channel[3]),
          n(n_) {}

    static long double pw(long double base, std::size_t e) { return e == 0 ? 1.0L : std::pow(base, (long double)e); }

    long double diag(std::size_t w) const {
        return 0.5L * (pw(f, w) * pw(1 - f, n - w) + pw(f, n - w) * pw(1 - f, w));
    }
    long double off(std::size_t w) const { return 0.5L * (pw(g, w) * pw(h, n - w) + pw(g, n - w) * pw(h, w)); }
};

long double binomial(std::size_t n, std::size_t k) {
    return std::exp(std::lgamma((long double)n + 1) - std::lgamma((long double)k + 1) -
                    std::lgamma((long double)(n - k) + 1));
}

constexpr double kNptThreshold = -1e-12;

}  // namespace

double ghz_negativity_fast(std::size_t n, const PauliChannel &channel) {
    if (n < 2) {
        fail(ErrorKind::invalid_argument, "GHZ negativity needs N >= 2");
    }
    GhzEntries e(channel, n);
    // Transposing qubit 0 keeps the X shape: the pair block at (y, ybar) has
    // diagonal diag(|y|) and off-diagonal off(|y xor e_0|), so its small
    // eigenvalue is diag(|y|) - |off(|y xor e_0|)|. Each block is met twice.
    long double total = 0;
    for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
            long double low = e.diag(b + k) - std::fabs(e.off(1 - b + k));
            if (low < 0) {
                total += binomial(n - 1, k) * 0.5L * -low;
            }
        }
    }
    return static_cast<double>(total);
}

NegativityCurve ghz_negativity_curve(const PauliChannel &channel, const std::vector<std::size_t> &sizes) {
    NegativityCurve out;
    out.reserve(sizes.size());
    for (auto n : sizes) {
        out.push_back({n, ghz_negativity_fast(n, channel)});
    }
    return out;
}

Eigen::Matrix4cd distilled_pair(std::size_t n, const PauliChannel &channel, bool dense) {
    if (n < 2) {
        fail(ErrorKind::invalid_argument, "distillation needs N >= 2");
    }
    Eigen::Matrix4cd pair = Eigen::Matrix4cd::Zero();
    if (dense) {
        auto rho = apply_channel_all(ghz_state(n, 10), channel).matrix();
        // <+...+| on qubits 2..n-1 sums every block of the 4x4 tiling.
        const auto blocks = rho.rows() / 4;
        for (Eigen::Index u = 0; u < blocks; ++u) {
            for (Eigen::Index v = 0; v < blocks; ++v) {
                pair += rho.block<4, 4>(4 * u, 4 * v);
            }
        }
    } else {
        GhzEntries e(channel, n);
        for (int a = 0; a < 4; ++a) {
            std::size_t wa = static_cast<std::size_t>((a & 1) + (a >> 1));
            long double d = 0;
            long double o = 0;
            for (std::size_t k = 0; k <= n - 2; ++k) {
                long double c = binomial(n - 2, k);
                d += c * e.diag(wa + k);
                o += c * e.off(wa + k);
            }
            pair(a, a) = static_cast<double>(d);
            pair(a, 3 - a) = static_cast<double>(o);
        }
    }
    double tr = pair.trace().real();
    if (!(tr > 0)) {
        fail(ErrorKind::construction_failure, "measurement branch has zero probability");
    }
    return pair / tr;
}

double min_pt_eigenvalue(const Eigen::Matrix4cd &pair) {
    Eigen::MatrixXcd pt = partial_transpose(pair, 1);
    return hermitian_eigenvalues(pt)[0];
}

const char *lifetime_status_name(LifetimeStatus status) {
    switch (status) {
        case LifetimeStatus::crossing:
            return "crossing";
        case LifetimeStatus::entangled_everywhere:
            return "entangled_everywhere";
        case LifetimeStatus::never_entangled:
            return "never_entangled";
    }
    return "unknown";
}

LifetimeResult lifetime_pcrit(const ChannelFamily &family, std::size_t n, const LifetimeOptions &options) {
    if (!(options.tol > 0)) {
        fail(ErrorKind::invalid_argument, "tolerance must be positive");
    }
    if (options.grid_points < 2) {
        fail(ErrorKind::invalid_argument, "lifetime pre-scan needs at least two grid points");
    }
    auto entangled = [&](double p) {
        return min_pt_eigenvalue(distilled_pair(n, family(p), options.dense)) < kNptThreshold;
    };

    const std::size_t g = options.grid_points;
    std::vector<bool> flags(g);
    for (std::size_t k = 0; k < g; ++k) {
        flags[k] = entangled(static_cast<double>(k) / static_cast<double>(g - 1));
    }

    LifetimeResult result;
    auto first = std::find(flags.begin(), flags.end(), true);
    if (first == flags.end()) {
        result.p_crit = 1;
        result.status = LifetimeStatus::never_entangled;
        return result;
    }
    auto k = static_cast<std::size_t>(first - flags.begin());
    result.monotone = std::all_of(first, flags.end(), [](bool f) { return f; });
    if (k == 0) {
        result.p_crit = 0;
        result.status = LifetimeStatus::entangled_everywhere;
        return result;
    }
    double lo = static_cast<double>(k - 1) / static_cast<double>(g - 1);
    double hi = static_cast<double>(k) / static_cast<double>(g - 1);
    while (hi - lo > options.tol) {
        double mid = 0.5 * (lo + hi);
        (entangled(mid) ? hi : lo) = mid;
        ++result.iterations;
    }
    result.p_crit = 0.5 * (lo + hi);
    result.residual = hi - lo;
    return result;
}

}  // namespace effnoise
