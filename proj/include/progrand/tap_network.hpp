#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "progrand/lfsr.hpp"

namespace progrand {

// XOR tap positions on the shift register: 1-based flip-flop indices,
// strictly increasing, at least one tap.
struct TapSet {
    std::vector<int> positions;
    bool operator==(const TapSet& other) const = default;
};

// One m-bit sample stream; tap_sets[0] supplies the most significant bit.
struct StreamConfig {
    std::vector<TapSet> tap_sets;
    std::string stream_id;
    bool operator==(const StreamConfig& other) const = default;
};

void validate_tap_set(const TapSet& t);

// Translates the tap pattern so the lowest position is 1.
TapSet normalize(const TapSet& t);

// Two tap sets are shift-equivalent when one is a translation of the other
// (identical gap patterns). Their output streams are time shifts of each
// other and therefore fully correlated.
bool is_shift_equivalent(const TapSet& a, const TapSet& b);

// m-bit sample from the current LFSR state: bit j = XOR of the state bits at
// config.tap_sets[j], assembled MSB-first.
std::uint32_t sample_bits(const Lfsr& state, const StreamConfig& config);

// floor(C(n-1, k-1) / m): how many m-bit streams with k taps per XOR can be
// built with pairwise non-shift-equivalent tap sets.
std::uint64_t capacity(int n, int k, int m);

// Deterministically enumerates `count` StreamConfigs of m tap sets each, all
// pairwise non-shift-equivalent across the whole list. Patterns are taken in
// lexicographic order over normalized (anchored-at-1) tap patterns.
// Throws CapacityExceeded when count * m exceeds C(n-1, k-1).
std::vector<StreamConfig> generate_stream_configs(int n, int k, int m, int count);

TapSet parse_tap_set(const std::string& text);  // "{2,11,19}"
std::string format_tap_set(const TapSet& t);

}  // namespace progrand
