// Copyright 2026 The ketsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The quantum Fourier transform three ways: the Hadamard/rotation/swap gate
 * circuit (production path), the direct sum over basis kets, and the product
 * of single-qubit factors. The three routes agree per amplitude and the two
 * closed forms serve as independent cross-checks of the circuit.
 */

#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "ketsim/gates.hpp"
#include "ketsim/state.hpp"

namespace ketsim {

enum class GateKind { hadamard, rotation, swap };

/// One positioned gate application. Hadamard uses position i only; rotation
/// and swap act on positions (i, j) with i < j, and a rotation's phase
/// distance is j - i.
struct GateApplication {
    GateKind kind;
    int i = 0;
    int j = 0;

    [[nodiscard]] int distance() const { return j - i; }

    friend bool operator==(const GateApplication &, const GateApplication &) = default;
};

/// Text form, one step per line in circuit listings: "H 1", "R 1 3", "SWAP 1 3".
inline std::string to_text(const GateApplication &step) {
    switch (step.kind) {
    case GateKind::hadamard:
        return "H " + std::to_string(step.i);
    case GateKind::rotation:
        return "R " + std::to_string(step.i) + " " + std::to_string(step.j);
    case GateKind::swap:
        return "SWAP " + std::to_string(step.i) + " " + std::to_string(step.j);
    }
    throw std::logic_error("to_text: unknown gate kind");
}

/// An ordered gate sequence over a fixed register width.
struct Circuit {
    int width = 0;
    std::vector<GateApplication> steps;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

inline std::string circuit_text(const Circuit &c) {
    std::string out;
    for (const auto &step : c.steps) {
        out += to_text(step);
        out += '\n';
    }
    return out;
}

/**
 * @brief The QFT gate decomposition on `qubits` qubits.
 *
 * For i = 1..q: H at i, then a rotation at (i, j) for each j = i+1..q; the
 * trailing swap layer (i, q+1-i) for i = 1..floor(q/2) realizes the bit
 * reversal. Step count is q(q+1)/2 H/R gates plus floor(q/2) swaps.
 */
inline Circuit build_qft_circuit(int qubits) {
    if (qubits < 1) {
        throw std::invalid_argument("build_qft_circuit: need at least one qubit");
    }
    Circuit c{qubits, {}};
    for (int i = 1; i <= qubits; ++i) {
        c.steps.push_back({GateKind::hadamard, i, 0});
        for (int j = i + 1; j <= qubits; ++j) {
            c.steps.push_back({GateKind::rotation, i, j});
        }
    }
    for (int i = 1; i <= qubits / 2; ++i) {
        c.steps.push_back({GateKind::swap, i, qubits + 1 - i});
    }
    return c;
}

/// Folds the circuit's steps over the state in order.
inline StateVector run_circuit(const Circuit &c, const StateVector &v) {
    if (c.width != v.width()) {
        throw std::invalid_argument("run_circuit: circuit width " + std::to_string(c.width) +
                                    " does not match state width " +
                                    std::to_string(v.width()));
    }
    StateVector out = v;
    for (const auto &step : c.steps) {
        switch (step.kind) {
        case GateKind::hadamard:
            out = apply_single(hadamard(), step.i, out);
            break;
        case GateKind::rotation:
            out = apply_two(rotation(step.distance()), step.i, step.j, out);
            break;
        case GateKind::swap:
            out = apply_two(swap_gate(), step.i, step.j, out);
            break;
        }
    }
    return out;
}

/// QFT of a basis ket by the defining sum: amplitude exp(2*pi*i*j*k/n)/sqrt(n)
/// on basis index k, n = 2^qubits.
inline StateVector qft_direct(std::uint64_t basis_index, int qubits) {
    if (qubits < 1 || qubits > max_width) {
        throw std::invalid_argument("qft_direct: qubit count out of range");
    }
    const std::uint64_t n = std::uint64_t{1} << qubits;
    if (basis_index >= n) {
        throw std::out_of_range("qft_direct: basis index out of range");
    }
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    StateVector out(qubits);
    for (std::uint64_t k = 0; k < n; ++k) {
        // j*k reduced mod n before the float conversion keeps the phase exact.
        const std::uint64_t jk = (basis_index % n) * (k % n) % n;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(jk) /
                             static_cast<double>(n);
        out.accumulate(k, std::polar(inv_sqrt_n, angle));
    }
    return canonicalize(out);
}

/// QFT of a basis ket as the tensor product of single-qubit factors
/// (e[0] + exp(2*pi*i*j/2^m) e[1]) for m = 1..qubits, scaled by 1/sqrt(2^q).
inline StateVector qft_product_form(std::uint64_t basis_index, int qubits) {
    if (qubits < 1 || qubits > max_width) {
        throw std::invalid_argument("qft_product_form: qubit count out of range");
    }
    const std::uint64_t n = std::uint64_t{1} << qubits;
    if (basis_index >= n) {
        throw std::out_of_range("qft_product_form: basis index out of range");
    }
    StateVector product(1);
    for (int m = 1; m <= qubits; ++m) {
        const std::uint64_t denom = std::uint64_t{1} << m;
        const double angle = 2.0 * std::numbers::pi *
                             static_cast<double>(basis_index % denom) /
                             static_cast<double>(denom);
        StateVector factor(1);
        factor.accumulate(0, Amplitude{1.0, 0.0});
        factor.accumulate(1, std::polar(1.0, angle));
        product = (m == 1) ? factor : tensor(product, factor);
    }
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    return scale(Amplitude{inv_sqrt_n, 0.0}, product);
}

/// Classical discrete Fourier transform with 1/sqrt(n) normalization over a
/// dense length-2^q vector; the linear-extension cross-check for the circuit.
inline std::vector<Amplitude> dft_oracle(const std::vector<Amplitude> &amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("dft_oracle: length must be a power of two");
    }
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Amplitude sum{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t jk = (j * k) % n;
            sum += amplitudes[j] * std::polar(1.0, 2.0 * std::numbers::pi *
                                                       static_cast<double>(jk) /
                                                       static_cast<double>(n));
        }
        out[k] = inv_sqrt_n * sum;
    }
    return out;
}

struct GateCounts {
    std::uint64_t h_and_r = 0;
    std::uint64_t swaps = 0;

    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/// q(q+1)/2 Hadamard-plus-rotation steps and floor(q/2) swaps; equals the
/// step tally of build_qft_circuit(q).
inline GateCounts gate_counts(int qubits) {
    if (qubits < 1) {
        throw std::invalid_argument("gate_counts: need at least one qubit");
    }
    const auto q = static_cast<std::uint64_t>(qubits);
    return {q * (q + 1) / 2, q / 2};
}

} // namespace ketsim
