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

// Test-only oracles, kept independent of the library's per-term rewrite
// path: dense matrix lifts of gates, dense vector views of states, and
// seeded random-state generation.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <ketsim/gates.hpp>
#include <ketsim/state.hpp>

namespace ketsim::testing {

using Matrix = std::vector<std::vector<Amplitude>>; // row-major, square

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<Amplitude>(dim, Amplitude{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = Amplitude{1.0, 0.0};
    }
    return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t an = a.size();
    const std::size_t bn = b.size();
    Matrix m(an * bn, std::vector<Amplitude>(an * bn, Amplitude{0.0, 0.0}));
    for (std::size_t ar = 0; ar < an; ++ar) {
        for (std::size_t ac = 0; ac < an; ++ac) {
            for (std::size_t br = 0; br < bn; ++br) {
                for (std::size_t bc = 0; bc < bn; ++bc) {
                    m[ar * bn + br][ac * bn + bc] = a[ar][ac] * b[br][bc];
                }
            }
        }
    }
    return m;
}

inline Matrix gate_matrix(const SingleQubitGate &g) {
    Matrix m = identity(2);
    for (int col = 0; col < 2; ++col) {
        for (int row = 0; row < 2; ++row) {
            m[row][col] = g.image(col).amplitude(static_cast<std::uint64_t>(row));
        }
    }
    return m;
}

inline Matrix gate_matrix(const TwoQubitGate &g) {
    Matrix m = identity(4);
    for (int col = 0; col < 4; ++col) {
        for (int row = 0; row < 4; ++row) {
            m[row][col] = g.image(col / 2, col % 2).amplitude(static_cast<std::uint64_t>(row));
        }
    }
    return m;
}

// I^(i-1) (x) U (x) I^(n-i), built by explicit Kronecker products.
inline Matrix lift_single(const SingleQubitGate &g, int position, int width) {
    Matrix m = identity(1);
    for (int p = 1; p <= width; ++p) {
        m = kron(m, p == position ? gate_matrix(g) : identity(2));
    }
    return m;
}

// General positioned lift of a two-qubit gate: entries couple the (i, j)
// bits through the 4x4 matrix and are diagonal in every other bit.
inline Matrix lift_two(const TwoQubitGate &g, int pos_i, int pos_j, int width) {
    const Matrix sub = gate_matrix(g);
    const std::size_t dim = std::size_t{1} << width;
    const auto pair_bits = [&](std::size_t x) {
        const int bi = static_cast<int>((x >> (width - pos_i)) & 1u);
        const int bj = static_cast<int>((x >> (width - pos_j)) & 1u);
        return bi * 2 + bj;
    };
    const std::uint64_t mask_other =
        ((std::uint64_t{1} << width) - 1) &
        ~(std::uint64_t{1} << (width - pos_i)) & ~(std::uint64_t{1} << (width - pos_j));
    Matrix m(dim, std::vector<Amplitude>(dim, Amplitude{0.0, 0.0}));
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & mask_other) == (col & mask_other)) {
                m[row][col] = sub[static_cast<std::size_t>(pair_bits(row))]
                                 [static_cast<std::size_t>(pair_bits(col))];
            }
        }
    }
    return m;
}

inline std::vector<Amplitude> dense(const StateVector &v) {
    std::vector<Amplitude> out(std::size_t{1} << v.width(), Amplitude{0.0, 0.0});
    for (const auto &[index, amp] : v.terms()) {
        out[index] = amp;
    }
    return out;
}

inline std::vector<Amplitude> mat_vec(const Matrix &m, const std::vector<Amplitude> &v) {
    std::vector<Amplitude> out(m.size(), Amplitude{0.0, 0.0});
    for (std::size_t row = 0; row < m.size(); ++row) {
        for (std::size_t col = 0; col < v.size(); ++col) {
            out[row] += m[row][col] * v[col];
        }
    }
    return out;
}

inline double max_abs_diff(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs_diff(const StateVector &a, const StateVector &b) {
    return max_abs_diff(dense(a), dense(b));
}

// Dense random normalized state; component distribution is irrelevant to the
// properties under test, uniformity keeps it simple.
inline StateVector random_state(int width, std::mt19937_64 &engine) {
    const auto uniform = [&engine] {
        return static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0; // [-1, 1)
    };
    StateVector out(width);
    const std::uint64_t dim = std::uint64_t{1} << width;
    for (std::uint64_t i = 0; i < dim; ++i) {
        out.accumulate(i, Amplitude{uniform(), uniform()});
    }
    const double n = norm(out);
    return scale(Amplitude{1.0 / n, 0.0}, out);
}

// Sparse random state with up to max_terms terms, not normalized; for
// bilinearity checks.
inline StateVector random_sparse_state(int width, int max_terms, std::mt19937_64 &engine) {
    const auto uniform = [&engine] {
        return static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
    };
    StateVector out(width);
    const std::uint64_t dim = std::uint64_t{1} << width;
    const int terms = 1 + static_cast<int>(engine() % static_cast<std::uint64_t>(max_terms));
    for (int t = 0; t < terms; ++t) {
        out.accumulate(engine() % dim, Amplitude{uniform(), uniform()});
    }
    return canonicalize(out);
}

} // namespace ketsim::testing
