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

#include <cmath>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <ketsim/state.hpp>

#include "support/test_support.hpp"

using Catch::Approx;
using ketsim::Amplitude;
using ketsim::BasisState;
using ketsim::StateVector;

namespace {

// Exact term-map equality; amplitudes compared bitwise.
bool same_terms(const StateVector &a, const StateVector &b) {
    return a.width() == b.width() && a.terms() == b.terms();
}

} // namespace

TEST_CASE("BasisState encodes bits with position 1 as the most significant", "[state]") {
    SECTION("width 3, index 5 has bits 1,0,1") {
        const BasisState b(3, 5);
        REQUIRE(b.bits() == std::vector<int>{1, 0, 1});
        REQUIRE(b.bit(1) == 1);
        REQUIRE(b.bit(2) == 0);
        REQUIRE(b.bit(3) == 1);
        REQUIRE(b.to_string() == "101");
    }
    SECTION("from_bits round trip") {
        const BasisState b = BasisState::from_bits({1, 0, 1});
        REQUIRE(b.width() == 3);
        REQUIRE(b.index() == 5);
    }
    SECTION("with_bit rewrites one position") {
        const BasisState b(3, 5);
        REQUIRE(b.with_bit(2, 1).index() == 7);
        REQUIRE(b.with_bit(1, 0).index() == 1);
    }
    SECTION("invalid constructions are rejected") {
        REQUIRE_THROWS_AS(BasisState(0, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(BasisState(2, 4), std::out_of_range);
        REQUIRE_THROWS_AS(BasisState::from_bits({0, 2}), std::invalid_argument);
        REQUIRE_THROWS_AS(BasisState::from_bits({}), std::invalid_argument);
    }
}

TEST_CASE("basis_ket builds a single unit-amplitude term", "[state]") {
    SECTION("width 3, index 5") {
        const StateVector v = ketsim::basis_ket(3, 5);
        REQUIRE(v.width() == 3);
        REQUIRE(v.term_count() == 1);
        REQUIRE(v.amplitude(5) == Amplitude{1.0, 0.0});
    }
    SECTION("width 1, index 0") {
        const StateVector v = ketsim::basis_ket(1, 0);
        REQUIRE(v.term_count() == 1);
        REQUIRE(v.amplitude(0) == Amplitude{1.0, 0.0});
    }
    SECTION("width 2, index 3 is the all-ones ket") {
        const StateVector v = ketsim::basis_ket(2, 3);
        REQUIRE(BasisState(2, 3).bits() == std::vector<int>{1, 1});
        REQUIRE(v.amplitude(3) == Amplitude{1.0, 0.0});
    }
    SECTION("out-of-range index and bad width are rejected") {
        REQUIRE_THROWS_AS(ketsim::basis_ket(2, 4), std::out_of_range);
        REQUIRE_THROWS_AS(ketsim::basis_ket(0, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(ketsim::basis_ket(ketsim::max_width + 1, 0), std::invalid_argument);
    }
}

TEST_CASE("tensor concatenates bits and multiplies amplitudes", "[state]") {
    const StateVector e0 = ketsim::basis_ket(1, 0);
    const StateVector e1 = ketsim::basis_ket(1, 1);

    SECTION("scalar factors pass through") {
        const StateVector v = ketsim::tensor(ketsim::scale(Amplitude{0.5, 0.0}, e0), e1);
        REQUIRE(v.width() == 2);
        REQUIRE(v.term_count() == 1);
        REQUIRE(v.amplitude(1) == Amplitude{0.5, 0.0}); // e[0,1]
    }
    SECTION("distributes over a left-hand sum") {
        const StateVector v = ketsim::tensor(ketsim::add(e0, e1), e0);
        REQUIRE(v.term_count() == 2);
        REQUIRE(v.amplitude(0) == Amplitude{1.0, 0.0}); // e[0,0]
        REQUIRE(v.amplitude(2) == Amplitude{1.0, 0.0}); // e[1,0]
    }
    SECTION("distributes over a right-hand sum") {
        const StateVector v =
            ketsim::tensor(e1, ketsim::add(e0, ketsim::scale(Amplitude{-1.0, 0.0}, e1)));
        REQUIRE(v.term_count() == 2);
        REQUIRE(v.amplitude(2) == Amplitude{1.0, 0.0});  // e[1,0]
        REQUIRE(v.amplitude(3) == Amplitude{-1.0, 0.0}); // e[1,1]
    }
    SECTION("width limit is enforced") {
        const StateVector wide = ketsim::basis_ket(ketsim::max_width, 0);
        REQUIRE_THROWS_AS(ketsim::tensor(wide, e0), std::invalid_argument);
    }
}

TEST_CASE("add collects like terms and cancels to the zero vector", "[state]") {
    const StateVector e0 = ketsim::basis_ket(1, 0);
    const StateVector e1 = ketsim::basis_ket(1, 1);

    SECTION("like terms collect") {
        const StateVector v = ketsim::add(e0, e0);
        REQUIRE(v.term_count() == 1);
        REQUIRE(v.amplitude(0) == Amplitude{2.0, 0.0});
    }
    SECTION("exact cancellation yields the zero vector") {
        const StateVector v = ketsim::add(e0, ketsim::scale(Amplitude{-1.0, 0.0}, e0));
        REQUIRE(v.is_zero());
        REQUIRE(v.term_count() == 0);
    }
    SECTION("distinct terms coexist") {
        const StateVector v = ketsim::add(e0, e1);
        REQUIRE(v.term_count() == 2);
    }
    SECTION("width mismatch is rejected") {
        REQUIRE_THROWS_AS(ketsim::add(e0, ketsim::basis_ket(2, 0)), std::invalid_argument);
    }
}

TEST_CASE("scale multiplies every amplitude", "[state]") {
    const StateVector e0 = ketsim::basis_ket(1, 0);
    const StateVector psi = ketsim::add(e0, ketsim::basis_ket(1, 1));

    SECTION("scale by zero gives the zero vector") {
        REQUIRE(ketsim::scale(Amplitude{0.0, 0.0}, psi).is_zero());
    }
    SECTION("scale by one is the identity") {
        REQUIRE(same_terms(ketsim::scale(Amplitude{1.0, 0.0}, psi), psi));
    }
    SECTION("scale by i rotates the phase") {
        const StateVector v = ketsim::scale(Amplitude{0.0, 1.0}, e0);
        REQUIRE(v.amplitude(0) == Amplitude{0.0, 1.0});
    }
}

TEST_CASE("canonicalize merges duplicates and chops tiny amplitudes", "[state]") {
    SECTION("duplicate accumulation merges") {
        StateVector v(1);
        v.accumulate(0, Amplitude{0.3, 0.0});
        v.accumulate(0, Amplitude{0.7, 0.0});
        const StateVector c = ketsim::canonicalize(v);
        REQUIRE(c.term_count() == 1);
        REQUIRE(c.amplitude(0).real() == Approx(1.0));
    }
    SECTION("amplitudes below the chop tolerance vanish") {
        StateVector v(1);
        v.accumulate(1, Amplitude{1e-15, 0.0});
        REQUIRE(ketsim::canonicalize(v).is_zero());
    }
    SECTION("idempotence") {
        StateVector v(2);
        v.accumulate(0, Amplitude{0.6, 0.0});
        v.accumulate(3, Amplitude{0.8, 0.0});
        v.accumulate(2, Amplitude{1e-14, 0.0});
        const StateVector once = ketsim::canonicalize(v);
        REQUIRE(same_terms(ketsim::canonicalize(once), once));
    }
    SECTION("norm is preserved when nothing falls below chop") {
        std::mt19937_64 engine(11);
        const StateVector v = ketsim::testing::random_state(3, engine);
        REQUIRE(ketsim::norm(ketsim::canonicalize(v)) == Approx(ketsim::norm(v)).margin(1e-12));
    }
}

TEST_CASE("norm is the root of the summed squared magnitudes", "[state]") {
    const StateVector e0 = ketsim::basis_ket(1, 0);
    REQUIRE(ketsim::norm(e0) == Approx(1.0));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const StateVector plus = ketsim::scale(Amplitude{inv_sqrt2, 0.0},
                                           ketsim::add(e0, ketsim::basis_ket(1, 1)));
    REQUIRE(ketsim::norm(plus) == Approx(1.0));

    REQUIRE(ketsim::norm(StateVector(3)) == 0.0);
}

TEST_CASE("amplitudes must stay finite", "[state]") {
    StateVector v(1);
    REQUIRE_THROWS_AS(v.accumulate(0, Amplitude{std::nan(""), 0.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(v.accumulate(0, Amplitude{0.0, HUGE_VAL}), std::invalid_argument);
    REQUIRE_THROWS_AS(v.accumulate(2, Amplitude{1.0, 0.0}), std::out_of_range);
}

TEST_CASE("tensor is bilinear over add and scale", "[state][property]") {
    std::mt19937_64 engine(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const int wa = 1 + static_cast<int>(engine() % 4);
        const int wb = 1 + static_cast<int>(engine() % 4);
        const StateVector a1 = ketsim::testing::random_sparse_state(wa, 4, engine);
        const StateVector a2 = ketsim::testing::random_sparse_state(wa, 4, engine);
        const StateVector b = ketsim::testing::random_sparse_state(wb, 4, engine);
        const Amplitude s{0.3, -0.4};

        const double left = ketsim::testing::max_abs_diff(
            ketsim::tensor(ketsim::add(a1, a2), b),
            ketsim::add(ketsim::tensor(a1, b), ketsim::tensor(a2, b)));
        REQUIRE(left < 1e-12);

        const double right = ketsim::testing::max_abs_diff(
            ketsim::tensor(b, ketsim::add(a1, a2)),
            ketsim::add(ketsim::tensor(b, a1), ketsim::tensor(b, a2)));
        REQUIRE(right < 1e-12);

        const double scalar = ketsim::testing::max_abs_diff(
            ketsim::tensor(ketsim::scale(s, a1), b),
            ketsim::scale(s, ketsim::tensor(a1, b)));
        REQUIRE(scalar < 1e-12);
    }
}

TEST_CASE("tensor is associative on basis kets", "[state][property]") {
    std::mt19937_64 engine(7);
    for (int trial = 0; trial < 32; ++trial) {
        const StateVector a = ketsim::basis_ket(2, engine() % 4);
        const StateVector b = ketsim::basis_ket(3, engine() % 8);
        const StateVector c = ketsim::basis_ket(2, engine() % 4);
        REQUIRE(same_terms(ketsim::tensor(ketsim::tensor(a, b), c),
                           ketsim::tensor(a, ketsim::tensor(b, c))));
    }
}

TEST_CASE("index and bits round-trip for every width up to 8", "[state][property]") {
    for (int width = 1; width <= 8; ++width) {
        for (std::uint64_t index = 0; index < (std::uint64_t{1} << width); ++index) {
            const BasisState b(width, index);
            REQUIRE(BasisState::from_bits(b.bits()) == b);
        }
    }
}

TEST_CASE("from_terms canonicalizes its input", "[state]") {
    const BasisState b0(2, 0);
    const StateVector v = StateVector::from_terms(
        2, {{b0, Amplitude{0.25, 0.0}}, {b0, Amplitude{0.75, 0.0}},
            {BasisState(2, 3), Amplitude{1e-15, 0.0}}});
    REQUIRE(v.term_count() == 1);
    REQUIRE(v.amplitude(0).real() == Approx(1.0));
}
