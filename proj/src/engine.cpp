#include "progrand/engine.hpp"

#include <bit>

#include "progrand/errors.hpp"

namespace progrand {

void validate_config(const GeneratorConfig& config) {
    const int n = config.polynomial.degree();
    const int m = config.sample_width;
    if (m < 1 || m > 32) throw ConfigError("sample width m must be between 1 and 32");
    if (config.seed == 0) {
        throw ZeroSeed("seed must be nonzero: the all-zero state is the LFSR's fixed point");
    }
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if ((config.seed & ~mask) != 0) {
        throw WidthMismatch("seed does not fit in " + std::to_string(n) + " bits");
    }
    if (config.streams.empty()) throw ConfigError("config must declare at least one stream");
    for (const StreamConfig& s : config.streams) {
        if (static_cast<int>(s.tap_sets.size()) != m) {
            throw ConfigError("stream " + s.stream_id + " has " + std::to_string(s.tap_sets.size()) +
                              " tap sets, expected m = " + std::to_string(m));
        }
        for (const TapSet& t : s.tap_sets) {
            validate_tap_set(t);
            if (t.positions.back() > n) {
                throw TapOutOfRange("tap position " + std::to_string(t.positions.back()) +
                                    " in stream " + s.stream_id + " exceeds LFSR degree " +
                                    std::to_string(n));
            }
        }
    }
    // the decorrelation constraint applies across the whole stream list
    for (std::size_t a = 0; a < config.streams.size(); ++a) {
        for (std::size_t b = a; b < config.streams.size(); ++b) {
            const auto& ta = config.streams[a].tap_sets;
            const auto& tb = config.streams[b].tap_sets;
            for (std::size_t i = 0; i < ta.size(); ++i) {
                for (std::size_t j = (a == b ? i + 1 : std::size_t{0}); j < tb.size(); ++j) {
                    if (is_shift_equivalent(ta[i], tb[j])) {
                        throw ConfigError("shift-equivalent tap sets: stream " +
                                          config.streams[a].stream_id + " tap set " +
                                          format_tap_set(ta[i]) + " vs stream " +
                                          config.streams[b].stream_id + " tap set " +
                                          format_tap_set(tb[j]));
                    }
                }
            }
        }
    }
    validate_schedule(config.schedule, m);
}

GeneratorConfig default_config() {
    static const GF2Polynomial poly = [] {
        GF2Polynomial p = parse_polynomial("x^32+x^22+x^2+x+1");
        if (!is_primitive(p)) throw Error("default polynomial failed the primitivity check");
        return p;
    }();
    GeneratorConfig config{poly, 1, 8, generate_stream_configs(32, 3, 8, 4), FixedThreshold{127}};
    return config;
}

double theoretical_p1(std::uint32_t threshold, int m) {
    if (m < 1 || m > 32) throw Error("sample width m must be between 1 and 32");
    const double max = m == 32 ? 4294967295.0 : static_cast<double>((std::uint32_t{1} << m) - 1);
    if (static_cast<double>(threshold) > max) {
        throw ThresholdOutOfRange("threshold " + std::to_string(threshold) + " exceeds 2^m - 1");
    }
    return (max - static_cast<double>(threshold)) / (max + 1.0);
}

std::uint32_t exhaustive_ones_count(int m, std::uint32_t threshold) {
    if (m < 1 || m > 30) throw Error("exhaustive sweep supports m between 1 and 30");
    const std::uint32_t limit = std::uint32_t{1} << m;
    if (threshold >= limit) throw ThresholdOutOfRange("threshold exceeds 2^m - 1");
    std::uint32_t count = 0;
    for (std::uint32_t a = 0; a < limit; ++a) {
        count += comparator_bit(a, threshold) ? 1u : 0u;
    }
    return count;
}

namespace {

Lfsr make_validated_lfsr(const GeneratorConfig& config) {
    validate_config(config);
    return Lfsr(config.polynomial, config.seed);
}

}  // namespace

MultiStreamGenerator::MultiStreamGenerator(const GeneratorConfig& config)
    : lfsr_(make_validated_lfsr(config)),
      controller_(config.schedule, config.sample_width),
      sample_width_(config.sample_width) {
    stream_masks_.reserve(config.streams.size());
    for (const StreamConfig& s : config.streams) {
        std::vector<std::uint64_t> masks;
        masks.reserve(s.tap_sets.size());
        for (const TapSet& t : s.tap_sets) {
            std::uint64_t mask = 0;
            for (int p : t.positions) mask |= std::uint64_t{1} << (p - 1);
            masks.push_back(mask);
        }
        stream_masks_.push_back(std::move(masks));
    }
}

void MultiStreamGenerator::next_sample(std::vector<std::uint8_t>& out) {
    out.resize(stream_masks_.size());
    lfsr_.step();
    const std::uint64_t state = lfsr_.state();
    const std::uint32_t threshold = controller_.current_threshold();
    last_threshold_ = threshold;
    for (std::size_t s = 0; s < stream_masks_.size(); ++s) {
        const auto& masks = stream_masks_[s];
        std::uint32_t sample = 0;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            const std::uint32_t bit = static_cast<std::uint32_t>(std::popcount(state & masks[j]) & 1);
            sample |= bit << (masks.size() - 1 - j);
        }
        out[s] = comparator_bit(sample, threshold) ? 1 : 0;
    }
    controller_.advance();
}

std::vector<std::uint8_t> MultiStreamGenerator::next_sample() {
    std::vector<std::uint8_t> out;
    next_sample(out);
    return out;
}

MultiStreamOutput run(const GeneratorConfig& config, std::uint64_t n_samples) {
    if (n_samples < 1) throw Error("sample count must be >= 1");
    MultiStreamGenerator gen(config);
    MultiStreamOutput output;
    output.bits.resize(gen.stream_count());
    for (auto& stream : output.bits) stream.reserve(n_samples);
    output.thresholds.reserve(n_samples);
    std::vector<std::uint8_t> sample;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        gen.next_sample(sample);
        for (std::size_t s = 0; s < sample.size(); ++s) output.bits[s].push_back(sample[s]);
        output.thresholds.push_back(gen.last_threshold());
    }
    return output;
}

}  // namespace progrand
