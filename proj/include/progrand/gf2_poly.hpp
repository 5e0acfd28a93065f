#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace progrand {

// Characteristic polynomial over GF(2):
//   x^n + a_{n-1} x^{n-1} + ... + a_1 x + 1
// Always monic with constant term 1; degree between 2 and 64.
class GF2Polynomial {
public:
    // exponents with coefficient 1; must contain 0, degree = largest exponent
    explicit GF2Polynomial(std::vector<int> exponents);

    int degree() const { return degree_; }
    // ascending, always starts with 0 and ends with degree()
    const std::vector<int>& exponents() const { return exponents_; }
    // taps feeding the XOR: bit i-1 set iff a_i = 1, for i in 1..n
    std::uint64_t feedback_mask() const { return feedback_mask_; }

    std::string to_caret() const;     // "x^3+x^2+1"
    std::string to_hex_mask() const;  // "0xd" (mask bit i = a_i, bit n always set)

    bool operator==(const GF2Polynomial& other) const = default;

private:
    int degree_ = 0;
    std::vector<int> exponents_;
    std::uint64_t feedback_mask_ = 0;
};

// Accepts caret notation ("x^32+x^22+x^2+x+1") or a hex coefficient mask
// ("0x400400007"). Throws ParseError on malformed text or violated
// polynomial invariants.
GF2Polynomial parse_polynomial(const std::string& text);

bool is_irreducible(const GF2Polynomial& p);

// True iff p is irreducible over GF(2) and x has multiplicative order
// 2^n - 1 modulo p, i.e. an LFSR built on p reaches the maximal period.
// The order test runs against the prime factorization of 2^n - 1.
bool is_primitive(const GF2Polynomial& p);

}  // namespace progrand
