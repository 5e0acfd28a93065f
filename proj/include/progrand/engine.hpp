#pragma once

#include <cstdint>
#include <vector>

#include "progrand/gf2_poly.hpp"
#include "progrand/lfsr.hpp"
#include "progrand/tap_network.hpp"
#include "progrand/threshold.hpp"

namespace progrand {

struct GeneratorConfig {
    GF2Polynomial polynomial;
    std::uint64_t seed = 1;
    int sample_width = 8;  // m
    std::vector<StreamConfig> streams;
    ThresholdSchedule schedule = FixedThreshold{127};
};

// Throws naming the violated invariant: tap range, stream width, duplicate
// gap pattern across the whole stream list, schedule range, seed width.
void validate_config(const GeneratorConfig& config);

// Degree-32 primitive polynomial (verified, not assumed), m = 8, four
// streams with three taps per XOR, seed 0...01, fixed threshold 127.
GeneratorConfig default_config();

// P(1) = ((2^m - 1) - threshold) / 2^m, exact (dyadic rational).
double theoretical_p1(std::uint32_t threshold, int m);

// Strict comparator shared by the generator and the exhaustive checks.
inline bool comparator_bit(std::uint32_t sample, std::uint32_t threshold) {
    return sample > threshold;
}

// Ones produced by one pass of every m-bit sample value at a fixed
// threshold; the uniform-sweep stand-in for the LFSR in combinatorial tests.
std::uint32_t exhaustive_ones_count(int m, std::uint32_t threshold);

struct MultiStreamOutput {
    std::vector<std::vector<std::uint8_t>> bits;  // [stream][step]
    std::vector<std::uint32_t> thresholds;        // threshold used at each step
};

// Shared LFSR + per-stream XOR tap networks + shared threshold comparator.
// Each step: the LFSR advances, every stream samples the same state against
// the same threshold, then the controller advances once.
class MultiStreamGenerator {
public:
    explicit MultiStreamGenerator(const GeneratorConfig& config);

    // appends one bit per stream to `out` (resized to the stream count)
    void next_sample(std::vector<std::uint8_t>& out);
    std::vector<std::uint8_t> next_sample();

    std::uint32_t last_threshold() const { return last_threshold_; }
    std::size_t stream_count() const { return stream_masks_.size(); }
    const Lfsr& lfsr() const { return lfsr_; }

private:
    Lfsr lfsr_;
    ThresholdController controller_;
    std::vector<std::vector<std::uint64_t>> stream_masks_;  // [stream][sample bit]
    int sample_width_;
    std::uint32_t last_threshold_ = 0;
};

// N invocations of next_sample with full bit and threshold traces.
// Deterministic for a fixed config.
MultiStreamOutput run(const GeneratorConfig& config, std::uint64_t n_samples);

}  // namespace progrand
