#pragma once

#include <cstdint>
#include <string>

#include "progrand/gf2_poly.hpp"

namespace progrand {

// Fibonacci-form LFSR: n flip-flops in sequence, feedback = XOR of the tapped
// stages (every nonzero exponent of the characteristic polynomial, including
// stage n), inserted at flip-flop 1. The output bit is the value shifted out
// of flip-flop n.
//
// Stepping mutates the state: single-writer per instance.
class Lfsr {
public:
    // seed bit i-1 loads flip-flop i; must be nonzero and fit in n bits
    Lfsr(GF2Polynomial poly, std::uint64_t seed);

    // advances one clock; returns the output bit
    int step();

    int bit(int i) const;  // flip-flop i, 1-based
    std::uint64_t state() const { return state_; }
    std::uint64_t step_count() const { return step_count_; }
    int degree() const { return poly_.degree(); }
    const GF2Polynomial& polynomial() const { return poly_; }

private:
    GF2Polynomial poly_;
    std::uint64_t state_ = 0;
    std::uint64_t feedback_mask_ = 0;
    std::uint64_t state_mask_ = 0;
    std::uint64_t step_count_ = 0;
};

// Steps from seed 1 until the state first repeats and returns the count.
// Brute force; degree capped at 24 to keep runtime bounded.
std::uint64_t lfsr_period(const GF2Polynomial& poly);

// Seed text: decimal, "0x..." hex, or "0b..." binary. The binary form must
// spell out exactly `degree` digits; all forms must fit in `degree` bits.
std::uint64_t parse_seed(const std::string& text, int degree);

}  // namespace progrand
