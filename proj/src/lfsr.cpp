#include "progrand/lfsr.hpp"

#include <bit>

#include "progrand/errors.hpp"

namespace progrand {

namespace {

std::uint64_t width_mask(int degree) {
    return degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1;
}

}  // namespace

Lfsr::Lfsr(GF2Polynomial poly, std::uint64_t seed) : poly_(std::move(poly)) {
    state_mask_ = width_mask(poly_.degree());
    feedback_mask_ = poly_.feedback_mask();
    if (seed == 0) {
        throw ZeroSeed("seed must be nonzero: the all-zero state is the LFSR's fixed point");
    }
    if ((seed & ~state_mask_) != 0) {
        throw WidthMismatch("seed does not fit in " + std::to_string(poly_.degree()) + " bits");
    }
    state_ = seed;
}

int Lfsr::step() {
    const int n = poly_.degree();
    const int out = static_cast<int>((state_ >> (n - 1)) & 1u);
    const std::uint64_t fb = static_cast<std::uint64_t>(std::popcount(state_ & feedback_mask_) & 1);
    state_ = ((state_ << 1) | fb) & state_mask_;
    ++step_count_;
    return out;
}

int Lfsr::bit(int i) const {
    if (i < 1 || i > poly_.degree()) {
        throw TapOutOfRange("flip-flop index " + std::to_string(i) + " outside 1.." +
                            std::to_string(poly_.degree()));
    }
    return static_cast<int>((state_ >> (i - 1)) & 1u);
}

std::uint64_t lfsr_period(const GF2Polynomial& poly) {
    if (poly.degree() > 24) {
        throw DegreeTooLarge("brute-force period is capped at degree 24, got degree " +
                             std::to_string(poly.degree()));
    }
    Lfsr lfsr(poly, 1);
    std::uint64_t steps = 0;
    do {
        lfsr.step();
        ++steps;
    } while (lfsr.state() != 1);
    return steps;
}

std::uint64_t parse_seed(const std::string& text, int degree) {
    if (text.empty()) throw ParseError("empty seed");
    std::uint64_t value = 0;
    const std::uint64_t mask = width_mask(degree);
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
        const std::string digits = text.substr(2);
        if (static_cast<int>(digits.size()) != degree) {
            throw WidthMismatch("seed bit string has " + std::to_string(digits.size()) +
                                " digits, expected exactly " + std::to_string(degree));
        }
        for (char c : digits) {
            if (c != '0' && c != '1') throw ParseError("invalid binary digit in seed: " + text);
            value = (value << 1) | static_cast<std::uint64_t>(c - '0');
        }
    } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        for (std::size_t i = 2; i < text.size(); ++i) {
            char c = text[i];
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else throw ParseError("invalid hex digit in seed: " + text);
            if (value >> 60) throw WidthMismatch("seed does not fit in 64 bits: " + text);
            value = (value << 4) | static_cast<std::uint64_t>(d);
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError("invalid decimal digit in seed: " + text);
            if (value > (~std::uint64_t{0} - static_cast<std::uint64_t>(c - '0')) / 10) {
                throw WidthMismatch("seed does not fit in 64 bits: " + text);
            }
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
        }
    }
    if ((value & ~mask) != 0) {
        throw WidthMismatch("seed " + text + " does not fit in " + std::to_string(degree) + " bits");
    }
    return value;
}

}  // namespace progrand
