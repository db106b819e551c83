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
 * Gates as rewrite rules: a gate stores the image of each basis ket, and
 * application rewrites the targeted bit(s) of every term of a sparse state
 * while leaving all other bits unchanged.
 */

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ketsim/state.hpp"

namespace ketsim {

namespace detail {

// Columns orthonormal within tolerance; amplitude(col, row) indexes the
// induced matrix.
template <typename AmplitudeAt>
bool is_unitary(int dim, AmplitudeAt &&amplitude_at, double tol) {
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            Amplitude dot{0.0, 0.0};
            for (int row = 0; row < dim; ++row) {
                dot += std::conj(amplitude_at(a, row)) * amplitude_at(b, row);
            }
            const Amplitude expected = (a == b) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(dot - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

/// A one-qubit gate, stored as the images of e[0] and e[1]. The induced 2x2
/// matrix must be unitary within 1e-12.
class SingleQubitGate {
  public:
    SingleQubitGate(StateVector image0, StateVector image1)
        : images_{std::move(image0), std::move(image1)} {
        for (const auto &img : images_) {
            if (img.width() != 1) {
                throw std::invalid_argument("SingleQubitGate: images must have width 1");
            }
        }
        auto at = [this](int col, int row) {
            return images_[static_cast<std::size_t>(col)].amplitude(
                static_cast<std::uint64_t>(row));
        };
        if (!detail::is_unitary(2, at, 1e-12)) {
            throw std::invalid_argument("SingleQubitGate: images do not form a unitary");
        }
    }

    [[nodiscard]] const StateVector &image(int bit) const {
        return images_[static_cast<std::size_t>(bit)];
    }

  private:
    std::array<StateVector, 2> images_;
};

/// A two-qubit gate, stored as the images of e[0,0], e[0,1], e[1,0], e[1,1]
/// in basis-index order. The induced 4x4 matrix must be unitary within 1e-12.
class TwoQubitGate {
  public:
    explicit TwoQubitGate(std::array<StateVector, 4> images) : images_(std::move(images)) {
        for (const auto &img : images_) {
            if (img.width() != 2) {
                throw std::invalid_argument("TwoQubitGate: images must have width 2");
            }
        }
        auto at = [this](int col, int row) {
            return images_[static_cast<std::size_t>(col)].amplitude(
                static_cast<std::uint64_t>(row));
        };
        if (!detail::is_unitary(4, at, 1e-12)) {
            throw std::invalid_argument("TwoQubitGate: images do not form a unitary");
        }
    }

    [[nodiscard]] const StateVector &image(int high_bit, int low_bit) const {
        return images_[static_cast<std::size_t>(high_bit * 2 + low_bit)];
    }

  private:
    std::array<StateVector, 4> images_;
};

/// H: e[0] -> (e[0]+e[1])/sqrt(2), e[1] -> (e[0]-e[1])/sqrt(2).
inline SingleQubitGate hadamard() {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    StateVector plus(1);
    plus.accumulate(0, Amplitude{inv_sqrt2, 0.0});
    plus.accumulate(1, Amplitude{inv_sqrt2, 0.0});
    StateVector minus(1);
    minus.accumulate(0, Amplitude{inv_sqrt2, 0.0});
    minus.accumulate(1, Amplitude{-inv_sqrt2, 0.0});
    return {plus, minus};
}

/// Controlled phase: multiplies e[1,1] by exp(i*pi/2^distance) and fixes the
/// other three basis kets.
inline TwoQubitGate rotation(int distance) {
    if (distance < 1) {
        throw std::invalid_argument("rotation: distance must be >= 1");
    }
    const Amplitude phase = std::polar(1.0, std::ldexp(std::numbers::pi, -distance));
    return TwoQubitGate({basis_ket(2, 0), basis_ket(2, 1), basis_ket(2, 2),
                         scale(phase, basis_ket(2, 3))});
}

/// Exchanges the two bit values: e[a,b] -> e[b,a].
inline TwoQubitGate swap_gate() {
    return TwoQubitGate({basis_ket(2, 0), basis_ket(2, 2), basis_ket(2, 1), basis_ket(2, 3)});
}

/// Applies `g` to the qubit at 1-based `position` of every term, leaving all
/// other bits unchanged (the positioned operator over the identity elsewhere).
inline StateVector apply_single(const SingleQubitGate &g, int position, const StateVector &v) {
    if (position < 1 || position > v.width()) {
        throw std::out_of_range("apply_single: position " + std::to_string(position) +
                                " outside [1, " + std::to_string(v.width()) + "]");
    }
    const int shift = v.width() - position;
    const std::uint64_t mask = std::uint64_t{1} << shift;
    StateVector out(v.width());
    for (const auto &[index, amp] : v.terms()) {
        const int bit = static_cast<int>((index >> shift) & 1u);
        for (const auto &[image_bit, image_amp] : g.image(bit).terms()) {
            const std::uint64_t rewritten =
                image_bit ? (index | mask) : (index & ~mask);
            out.accumulate(rewritten, amp * image_amp);
        }
    }
    return canonicalize(out);
}

/// Applies `g` jointly to the qubits at positions `pos_i` < `pos_j`, leaving
/// all other bits unchanged.
inline StateVector apply_two(const TwoQubitGate &g, int pos_i, int pos_j,
                             const StateVector &v) {
    if (pos_i < 1 || pos_j > v.width() || pos_i >= pos_j) {
        throw std::out_of_range("apply_two: need 1 <= i < j <= width, got i=" +
                                std::to_string(pos_i) + " j=" + std::to_string(pos_j) +
                                " width=" + std::to_string(v.width()));
    }
    const int shift_i = v.width() - pos_i;
    const int shift_j = v.width() - pos_j;
    const std::uint64_t mask_i = std::uint64_t{1} << shift_i;
    const std::uint64_t mask_j = std::uint64_t{1} << shift_j;
    StateVector out(v.width());
    for (const auto &[index, amp] : v.terms()) {
        const int bit_i = static_cast<int>((index >> shift_i) & 1u);
        const int bit_j = static_cast<int>((index >> shift_j) & 1u);
        for (const auto &[image_index, image_amp] : g.image(bit_i, bit_j).terms()) {
            std::uint64_t rewritten = index & ~mask_i & ~mask_j;
            if (image_index & 2u) {
                rewritten |= mask_i;
            }
            if (image_index & 1u) {
                rewritten |= mask_j;
            }
            out.accumulate(rewritten, amp * image_amp);
        }
    }
    return canonicalize(out);
}

} // namespace ketsim
