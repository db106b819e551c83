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
 * Shor's factoring algorithm end to end: classical input validation, the
 * two-register order-finding state, QFT and measurement of the first
 * register, continued-fraction recovery of the order, and factor extraction.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ketsim/measurement.hpp"
#include "ketsim/qft.hpp"
#include "ketsim/state.hpp"

namespace ketsim {

/// Why an integer is rejected as a factoring input.
enum class InputFault { too_small, even_input, prime, prime_power };

class InvalidShorInput : public std::invalid_argument {
  public:
    InvalidShorInput(InputFault fault, std::uint64_t n, const std::string &message)
        : std::invalid_argument(message), fault_(fault), n_(n) {}

    [[nodiscard]] InputFault fault() const { return fault_; }
    [[nodiscard]] std::uint64_t input() const { return n_; }

  private:
    InputFault fault_;
    std::uint64_t n_;
};

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd: gcd(0, 0) is undefined");
    }
    return std::gcd(a, b);
}

/// x^c mod N by square-and-multiply; intermediates are 128-bit wide.
inline std::uint64_t mod_pow(std::uint64_t x, std::uint64_t c, std::uint64_t N) {
    if (N < 2) {
        throw std::invalid_argument("mod_pow: modulus must be >= 2");
    }
    unsigned __int128 result = 1;
    unsigned __int128 base = x % N;
    while (c > 0) {
        if (c & 1u) {
            result = result * base % N;
        }
        base = base * base % N;
        c >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

/// Deterministic trial division; intended for desk-scale N.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace detail {

// Largest r with r^exponent <= n, by binary search.
inline std::uint64_t integer_root(std::uint64_t n, int exponent) {
    std::uint64_t lo = 1;
    std::uint64_t hi = n;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        unsigned __int128 pow = 1;
        bool overflow = false;
        for (int i = 0; i < exponent; ++i) {
            pow *= mid;
            if (pow > n) {
                overflow = true;
                break;
            }
        }
        if (overflow) {
            hi = mid - 1;
        } else {
            lo = mid;
        }
    }
    return lo;
}

} // namespace detail

/// If n = p^b with b >= 2, returns (p, b); otherwise absent.
inline std::optional<std::pair<std::uint64_t, int>> prime_power_base(std::uint64_t n) {
    if (n < 4) {
        return std::nullopt;
    }
    const int max_exponent = static_cast<int>(std::floor(std::log2(static_cast<double>(n))));
    for (int b = 2; b <= max_exponent; ++b) {
        const std::uint64_t root = detail::integer_root(n, b);
        unsigned __int128 pow = 1;
        for (int i = 0; i < b; ++i) {
            pow *= root;
        }
        if (pow == n && is_prime(root)) {
            return std::make_pair(root, b);
        }
    }
    return std::nullopt;
}

/**
 * @brief Accepts N only if it is odd, composite, and not a prime power.
 *
 * Rejections carry the specific fault: even inputs should have their factors
 * of two divided out first, primes and prime powers are handled classically.
 * The smallest acceptable input is 15.
 */
inline std::uint64_t validate_input(std::uint64_t N) {
    if (N < 2) {
        throw InvalidShorInput(InputFault::too_small, N,
                               "input " + std::to_string(N) +
                                   " is too small; the smallest factorable input is 15");
    }
    if (N % 2 == 0) {
        throw InvalidShorInput(InputFault::even_input, N,
                               "input " + std::to_string(N) +
                                   " is even; divide out factors of 2 first");
    }
    if (is_prime(N)) {
        throw InvalidShorInput(InputFault::prime, N,
                               "input " + std::to_string(N) + " is prime");
    }
    if (auto pp = prime_power_base(N)) {
        throw InvalidShorInput(InputFault::prime_power, N,
                               "input " + std::to_string(N) + " is a prime power (" +
                                   std::to_string(pp->first) + "^" +
                                   std::to_string(pp->second) +
                                   "); factor it with the classical root check");
    }
    return N;
}

/// Smallest r >= 1 with x^r = 1 (mod N); the classical order oracle.
inline std::uint64_t brute_force_order(std::uint64_t x, std::uint64_t N) {
    if (N < 2 || std::gcd(x, N) != 1) {
        throw std::invalid_argument("brute_force_order: x must be coprime to N");
    }
    const std::uint64_t base = x % N;
    std::uint64_t r = 1;
    std::uint64_t v = base;
    while (v != 1) {
        v = v * base % N;
        ++r;
    }
    return r;
}

/// q = ceil(log2(N^2)): the smallest register size with 2^q >= N^2.
inline int default_qubits(std::uint64_t N) {
    const unsigned __int128 target = static_cast<unsigned __int128>(N) * N;
    int q = 1;
    while ((static_cast<unsigned __int128>(1) << q) < target) {
        ++q;
    }
    return q;
}

/// ceil(160 * ln(ln N) / 9), floored at one attempt. Natural logarithms.
inline int default_attempts(std::uint64_t N) {
    const double bound = std::ceil(160.0 * std::log(std::log(static_cast<double>(N))) / 9.0);
    return bound < 1.0 ? 1 : static_cast<int>(bound);
}

/**
 * @brief The two-register state (1/sqrt(2^q)) sum_c e[c] e[x^c mod N].
 *
 * The first q qubits hold c, the second q qubits hold x^c mod N; one term per
 * c, 2^q terms in total. Both registers are q qubits wide.
 */
inline StateVector prepare_registers(int qubits, std::uint64_t x, std::uint64_t N) {
    if (qubits < 1 || 2 * qubits > max_width) {
        throw std::invalid_argument("prepare_registers: register width out of range");
    }
    if (N < 2 || gcd(x % N, N) != 1) {
        throw std::invalid_argument("prepare_registers: x must be coprime to N");
    }
    const std::uint64_t n = std::uint64_t{1} << qubits;
    if (n <= N - 1) {
        throw std::invalid_argument("prepare_registers: 2^q must exceed N-1 to encode the "
                                    "second register");
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    StateVector out(2 * qubits);
    std::uint64_t f = 1 % N;
    for (std::uint64_t c = 0; c < n; ++c) {
        out.accumulate((c << qubits) | f, Amplitude{amp, 0.0});
        f = f * (x % N) % N;
    }
    return out;
}

/**
 * @brief One quantum order-finding run: returns the measured first-register k.
 *
 * Builds the two-register state, applies the QFT circuit to positions 1..q
 * (the first register), samples the full 2q-qubit state once, and keeps the
 * high q bits. Measuring both registers has the same k-marginal as measuring
 * the first register alone.
 */
inline std::uint64_t order_find_quantum(std::uint64_t N, std::uint64_t x, int qubits,
                                        RandomStream &rng) {
    const StateVector prepared = prepare_registers(qubits, x, N);
    const Circuit qft = build_qft_circuit(qubits);
    const Circuit on_first_register{2 * qubits, qft.steps};
    const StateVector transformed = run_circuit(on_first_register, prepared);
    const BasisState outcome = sample(transformed, rng);
    return outcome.index() >> qubits;
}

/// Denominators (in lowest terms) of the continued-fraction convergents of
/// k/2^q, in expansion order; k = 0 yields {1}.
inline std::vector<std::uint64_t> convergent_denominators(std::uint64_t k, int qubits) {
    if (qubits < 1 || qubits > max_width) {
        throw std::invalid_argument("convergent_denominators: qubit count out of range");
    }
    const std::uint64_t n = std::uint64_t{1} << qubits;
    if (k >= n) {
        throw std::out_of_range("convergent_denominators: k must be below 2^q");
    }
    std::vector<std::uint64_t> denominators;
    std::uint64_t a = k;
    std::uint64_t b = n;
    std::uint64_t d_prev2 = 1; // denominator two convergents back
    std::uint64_t d_prev1 = 0; // denominator one convergent back
    while (b != 0) {
        const std::uint64_t quotient = a / b;
        const std::uint64_t remainder = a % b;
        const std::uint64_t d = quotient * d_prev1 + d_prev2;
        denominators.push_back(d);
        d_prev2 = d_prev1;
        d_prev1 = d;
        a = b;
        b = remainder;
    }
    return denominators;
}

enum class FailureReason { odd_order, trivial_root, no_convergent_worked, gcd_shortcut };

inline std::string_view to_string(FailureReason reason) {
    switch (reason) {
    case FailureReason::odd_order:
        return "OddOrder";
    case FailureReason::trivial_root:
        return "TrivialRoot";
    case FailureReason::no_convergent_worked:
        return "NoConvergentWorked";
    case FailureReason::gcd_shortcut:
        return "GcdShortcut";
    }
    return "Unknown";
}

namespace detail {

struct DenominatorScan {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
    std::optional<std::uint64_t> accepted_r;
    std::optional<FailureReason> failure;
};

// A denominator d qualifies when x^d = 1 (mod N), d is even, and the root
// x^(d/2) is neither N-1 nor 1; both gcds are then proper factors. On
// failure, the first candidate order seen decides the reported reason.
inline DenominatorScan scan_denominators(std::uint64_t N, std::uint64_t x,
                                         const std::vector<std::uint64_t> &denominators) {
    DenominatorScan scan;
    std::optional<std::uint64_t> first_candidate;
    for (const std::uint64_t d : denominators) {
        if (d == 0 || mod_pow(x, d, N) != 1) {
            continue;
        }
        if (!first_candidate) {
            first_candidate = d;
        }
        if (d % 2 != 0) {
            continue;
        }
        const std::uint64_t root = mod_pow(x, d / 2, N);
        if (root == N - 1 || root == 1) {
            continue;
        }
        scan.factors = std::make_pair(gcd(N, root + 1), gcd(N, root - 1));
        scan.accepted_r = d;
        return scan;
    }
    if (!first_candidate) {
        scan.failure = FailureReason::no_convergent_worked;
    } else if (*first_candidate % 2 != 0) {
        scan.failure = FailureReason::odd_order;
    } else {
        scan.failure = FailureReason::trivial_root;
    }
    return scan;
}

} // namespace detail

/// Scans the denominators in order and returns the factor pair from the first
/// qualifying candidate order, or absent when none qualifies. A returned pair
/// always contains two nontrivial divisors of N.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
extract_factors(std::uint64_t N, std::uint64_t x,
                const std::vector<std::uint64_t> &denominators) {
    if (N < 2 || gcd(x % N, N) != 1) {
        throw std::invalid_argument("extract_factors: x must be coprime to N");
    }
    return detail::scan_denominators(N, x, denominators).factors;
}

struct ShorConfig {
    std::optional<int> qubits_override;
    std::optional<int> max_attempts_override;
    std::uint64_t seed = 0;
};

/// Full record of one factoring attempt.
struct ShorTrace {
    std::uint64_t chosen_x = 0;
    std::optional<std::uint64_t> gcd_shortcut;
    std::optional<std::uint64_t> measured_k;
    std::vector<std::uint64_t> convergent_denominators;
    std::optional<std::uint64_t> accepted_r;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
    std::optional<FailureReason> failure_reason;

    friend bool operator==(const ShorTrace &, const ShorTrace &) = default;
};

struct ShorResult {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
    std::vector<ShorTrace> traces;
    int qubits = 0;
    int max_attempts = 0;
};

/**
 * @brief The factoring driver loop.
 *
 * Up to max_attempts times: draw x uniformly from {2, ..., N-1}; a shared
 * factor with N is returned immediately as the gcd shortcut; otherwise one
 * quantum order-finding run, continued fractions, and factor extraction.
 * Stops at the first success. Every attempt appends a trace, and identical
 * (N, seed) reproduce identical traces.
 */
inline ShorResult shor_factor(std::uint64_t N, const ShorConfig &config) {
    validate_input(N);
    ShorResult result;
    result.qubits = config.qubits_override.value_or(default_qubits(N));
    result.max_attempts = config.max_attempts_override.value_or(default_attempts(N));
    if (result.qubits < 1 || result.max_attempts < 1) {
        throw std::invalid_argument("shor_factor: qubit count and attempt count must be "
                                    "positive");
    }
    RandomStream rng(config.seed);
    for (int attempt = 0; attempt < result.max_attempts; ++attempt) {
        ShorTrace trace;
        trace.chosen_x = rng.next_int(2, N - 1);
        const std::uint64_t shared = gcd(trace.chosen_x, N);
        if (shared != 1) {
            trace.gcd_shortcut = shared;
            trace.factors = std::make_pair(shared, N / shared);
            trace.failure_reason = FailureReason::gcd_shortcut;
            result.factors = trace.factors;
            result.traces.push_back(std::move(trace));
            return result;
        }
        trace.measured_k = order_find_quantum(N, trace.chosen_x, result.qubits, rng);
        trace.convergent_denominators =
            convergent_denominators(*trace.measured_k, result.qubits);
        const detail::DenominatorScan scan =
            detail::scan_denominators(N, trace.chosen_x, trace.convergent_denominators);
        trace.accepted_r = scan.accepted_r;
        trace.factors = scan.factors;
        trace.failure_reason = scan.failure;
        const bool success = trace.factors.has_value();
        result.traces.push_back(std::move(trace));
        if (success) {
            result.factors = result.traces.back().factors;
            return result;
        }
    }
    return result;
}

} // namespace ketsim
