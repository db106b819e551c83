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
 * Sparse computational-basis representation of quantum states: basis kets,
 * complex amplitudes, and the canonical term-map state vector, together with
 * tensor product, linear combination, and normalization.
 */

#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ketsim {

using Amplitude = std::complex<double>;

/// Amplitudes with magnitude below this threshold are dropped during
/// canonicalization. Global so that canonical form is consistent everywhere.
inline constexpr double chop_tolerance = 1e-12;

/// Widths are capped so a basis index always fits in a 64-bit word
/// (Shor's two q-qubit registers need up to 2q bits).
inline constexpr int max_width = 62;

/**
 * @brief One computational basis ket over `width` qubits.
 *
 * Bits are numbered from position 1 at the most significant end, so the
 * basis index is x_width * 2^0 + ... + x_1 * 2^(width-1).
 */
class BasisState {
  public:
    BasisState(int width, std::uint64_t index) : width_(width), index_(index) {
        if (width < 1 || width > max_width) {
            throw std::invalid_argument("BasisState: width must be in [1, " +
                                        std::to_string(max_width) + "]");
        }
        if (index >> width != 0) {
            throw std::out_of_range("BasisState: index " + std::to_string(index) +
                                    " does not fit in " + std::to_string(width) + " bits");
        }
    }

    static BasisState from_bits(const std::vector<int> &bits) {
        if (bits.empty() || bits.size() > static_cast<std::size_t>(max_width)) {
            throw std::invalid_argument("BasisState: need between 1 and " +
                                        std::to_string(max_width) + " bits");
        }
        std::uint64_t index = 0;
        for (int b : bits) {
            if (b != 0 && b != 1) {
                throw std::invalid_argument("BasisState: every digit must be 0 or 1");
            }
            index = (index << 1) | static_cast<std::uint64_t>(b);
        }
        return BasisState(static_cast<int>(bits.size()), index);
    }

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] std::uint64_t index() const { return index_; }

    /// Value of the bit at 1-based `position` (position 1 is the MSB).
    [[nodiscard]] int bit(int position) const {
        check_position(position);
        return static_cast<int>((index_ >> (width_ - position)) & 1u);
    }

    [[nodiscard]] BasisState with_bit(int position, int value) const {
        check_position(position);
        if (value != 0 && value != 1) {
            throw std::invalid_argument("BasisState: bit value must be 0 or 1");
        }
        const std::uint64_t mask = std::uint64_t{1} << (width_ - position);
        return BasisState(width_, value ? (index_ | mask) : (index_ & ~mask));
    }

    [[nodiscard]] std::vector<int> bits() const {
        std::vector<int> out(static_cast<std::size_t>(width_));
        for (int i = 1; i <= width_; ++i) {
            out[static_cast<std::size_t>(i - 1)] = bit(i);
        }
        return out;
    }

    /// Bit string x_1...x_n, MSB first, e.g. "101".
    [[nodiscard]] std::string to_string() const {
        std::string s(static_cast<std::size_t>(width_), '0');
        for (int i = 1; i <= width_; ++i) {
            s[static_cast<std::size_t>(i - 1)] = bit(i) ? '1' : '0';
        }
        return s;
    }

    friend bool operator==(const BasisState &, const BasisState &) = default;
    friend auto operator<=>(const BasisState &, const BasisState &) = default;

  private:
    void check_position(int position) const {
        if (position < 1 || position > width_) {
            throw std::out_of_range("BasisState: position " + std::to_string(position) +
                                    " outside [1, " + std::to_string(width_) + "]");
        }
    }

    int width_;
    std::uint64_t index_;
};

/**
 * @brief Sparse superposition over computational basis states.
 *
 * A canonical map from basis index to amplitude: no duplicate basis terms and
 * no amplitude of magnitude below `chop_tolerance`. The empty map is the zero
 * vector, which is a legal intermediate. Values are immutable by contract;
 * all operations below are pure functions.
 */
class StateVector {
  public:
    using TermMap = std::map<std::uint64_t, Amplitude>;

    explicit StateVector(int width) : width_(width) {
        if (width < 1 || width > max_width) {
            throw std::invalid_argument("StateVector: width must be in [1, " +
                                        std::to_string(max_width) + "]");
        }
    }

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Terms in ascending basis-index order.
    [[nodiscard]] const TermMap &terms() const { return terms_; }

    [[nodiscard]] Amplitude amplitude(std::uint64_t index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? Amplitude{0.0, 0.0} : it->second;
    }

    [[nodiscard]] Amplitude amplitude(const BasisState &b) const {
        if (b.width() != width_) {
            throw std::invalid_argument("StateVector: basis state width mismatch");
        }
        return amplitude(b.index());
    }

    /// Adds `a` onto the term at `index`, merging with any existing term.
    /// The result may be non-canonical until canonicalize() is applied.
    void accumulate(std::uint64_t index, const Amplitude &a) {
        if (index >> width_ != 0) {
            throw std::out_of_range("StateVector: index does not fit the register width");
        }
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("StateVector: amplitude must be finite");
        }
        terms_[index] += a;
    }

    void accumulate(const BasisState &b, const Amplitude &a) {
        if (b.width() != width_) {
            throw std::invalid_argument("StateVector: basis state width mismatch");
        }
        accumulate(b.index(), a);
    }

    /// Builds a canonical state from an arbitrary (possibly duplicated)
    /// term list; duplicate basis states merge by amplitude addition.
    static StateVector from_terms(int width,
                                  const std::vector<std::pair<BasisState, Amplitude>> &terms);

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    int width_;
    TermMap terms_;
};

/// Removes terms with |amplitude| below the chop tolerance. Idempotent.
inline StateVector canonicalize(const StateVector &v) {
    StateVector out(v.width());
    for (const auto &[index, amp] : v.terms()) {
        if (std::abs(amp) >= chop_tolerance) {
            out.accumulate(index, amp);
        }
    }
    return out;
}

inline StateVector StateVector::from_terms(
    int width, const std::vector<std::pair<BasisState, Amplitude>> &terms) {
    StateVector out(width);
    for (const auto &[basis, amp] : terms) {
        out.accumulate(basis, amp);
    }
    return canonicalize(out);
}

/// The basis ket |index> over `width` qubits, amplitude exactly 1.
inline StateVector basis_ket(int width, std::uint64_t index) {
    StateVector out(width);
    out.accumulate(BasisState(width, index), Amplitude{1.0, 0.0});
    return out;
}

/// Tensor product: bit strings concatenate (left operand first), amplitudes
/// multiply. Bilinear in both operands.
inline StateVector tensor(const StateVector &a, const StateVector &b) {
    if (a.width() + b.width() > max_width) {
        throw std::invalid_argument("tensor: combined width exceeds " +
                                    std::to_string(max_width));
    }
    StateVector out(a.width() + b.width());
    for (const auto &[ia, aa] : a.terms()) {
        for (const auto &[ib, ab] : b.terms()) {
            out.accumulate((ia << b.width()) | ib, aa * ab);
        }
    }
    return canonicalize(out);
}

/// Termwise sum; like terms collect, cancellations chop away.
inline StateVector add(const StateVector &a, const StateVector &b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument("add: width mismatch (" + std::to_string(a.width()) +
                                    " vs " + std::to_string(b.width()) + ")");
    }
    StateVector out(a.width());
    for (const auto &[index, amp] : a.terms()) {
        out.accumulate(index, amp);
    }
    for (const auto &[index, amp] : b.terms()) {
        out.accumulate(index, amp);
    }
    return canonicalize(out);
}

inline StateVector scale(const Amplitude &s, const StateVector &a) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw std::invalid_argument("scale: scalar must be finite");
    }
    StateVector out(a.width());
    for (const auto &[index, amp] : a.terms()) {
        out.accumulate(index, s * amp);
    }
    return canonicalize(out);
}

/// sqrt of the summed squared magnitudes; 1 for physical states, 0 for the
/// zero vector.
inline double norm(const StateVector &v) {
    double sum = 0.0;
    for (const auto &[index, amp] : v.terms()) {
        sum += std::norm(amp);
    }
    return std::sqrt(sum);
}

} // namespace ketsim
