#include "progrand/tap_network.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "progrand/errors.hpp"

namespace progrand {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// exact binomial; intermediate products held in 128 bits
u64 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    u128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    }
    return static_cast<u64>(r);
}

}  // namespace

void validate_tap_set(const TapSet& t) {
    if (t.positions.empty()) throw Error("tap set must contain at least one tap");
    for (std::size_t i = 0; i < t.positions.size(); ++i) {
        if (t.positions[i] < 1) throw TapOutOfRange("tap position must be >= 1");
        if (i > 0 && t.positions[i] <= t.positions[i - 1]) {
            throw Error("tap positions must be strictly increasing: " + format_tap_set(t));
        }
    }
}

TapSet normalize(const TapSet& t) {
    validate_tap_set(t);
    const int shift = t.positions.front() - 1;
    TapSet out;
    out.positions.reserve(t.positions.size());
    for (int p : t.positions) out.positions.push_back(p - shift);
    return out;
}

bool is_shift_equivalent(const TapSet& a, const TapSet& b) {
    return normalize(a).positions == normalize(b).positions;
}

std::uint32_t sample_bits(const Lfsr& state, const StreamConfig& config) {
    const int m = static_cast<int>(config.tap_sets.size());
    if (m < 1 || m > 32) throw Error("stream must have between 1 and 32 tap sets");
    std::uint32_t value = 0;
    for (int j = 0; j < m; ++j) {
        const TapSet& taps = config.tap_sets[j];
        validate_tap_set(taps);
        u64 mask = 0;
        for (int p : taps.positions) {
            if (p > state.degree()) {
                throw TapOutOfRange("tap position " + std::to_string(p) + " exceeds LFSR degree " +
                                    std::to_string(state.degree()));
            }
            mask |= u64{1} << (p - 1);
        }
        const std::uint32_t bit = static_cast<std::uint32_t>(std::popcount(state.state() & mask) & 1);
        value |= bit << (m - 1 - j);
    }
    return value;
}

std::uint64_t capacity(int n, int k, int m) {
    if (k < 1 || k > n) throw Error("tap count k must satisfy 1 <= k <= n");
    if (m < 1) throw Error("sample width m must be >= 1");
    return binomial(n - 1, k - 1) / static_cast<u64>(m);
}

std::vector<StreamConfig> generate_stream_configs(int n, int k, int m, int count) {
    if (k < 1 || k > n) throw Error("tap count k must satisfy 1 <= k <= n");
    if (m < 1 || m > 32) throw Error("sample width m must be between 1 and 32");
    if (count < 1) throw Error("stream count must be >= 1");
    const u64 available = binomial(n - 1, k - 1);
    const u64 needed = static_cast<u64>(count) * static_cast<u64>(m);
    if (needed > available) {
        throw CapacityExceeded("request for " + std::to_string(count) + " streams x " +
                               std::to_string(m) + " tap sets = " + std::to_string(needed) +
                               " exceeds the " + std::to_string(available) +
                               " non-shift-equivalent patterns with k=" + std::to_string(k) +
                               ", n=" + std::to_string(n));
    }

    // normalized pattern = {1} plus k-1 positions from [2, n]; walk them in
    // lexicographic order
    std::vector<StreamConfig> configs;
    configs.reserve(static_cast<std::size_t>(count));
    std::vector<int> tail(static_cast<std::size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) tail[static_cast<std::size_t>(i)] = i + 2;

    auto next_tail = [&]() {
        int i = k - 2;
        while (i >= 0) {
            if (tail[static_cast<std::size_t>(i)] < n - (k - 2 - i)) {
                ++tail[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k - 1; ++j) {
                    tail[static_cast<std::size_t>(j)] = tail[static_cast<std::size_t>(j - 1)] + 1;
                }
                return;
            }
            --i;
        }
    };

    for (int c = 0; c < count; ++c) {
        StreamConfig config;
        config.stream_id = "s" + std::to_string(c);
        config.tap_sets.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            TapSet t;
            t.positions.push_back(1);
            t.positions.insert(t.positions.end(), tail.begin(), tail.end());
            config.tap_sets.push_back(std::move(t));
            if (c * m + j + 1 < count * m) next_tail();
        }
        configs.push_back(std::move(config));
    }
    return configs;
}

TapSet parse_tap_set(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() < 3 || s.front() != '{' || s.back() != '}') {
        throw ParseError("tap set must look like {2,11,19}: " + text);
    }
    TapSet t;
    std::size_t start = 1;
    const std::size_t end = s.size() - 1;
    while (start < end) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos || comma > end) comma = end;
        const std::string item = s.substr(start, comma - start);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            throw ParseError("invalid tap position '" + item + "' in " + text);
        }
        t.positions.push_back(std::stoi(item));
        start = comma + 1;
    }
    validate_tap_set(t);
    return t;
}

std::string format_tap_set(const TapSet& t) {
    std::string out = "{";
    for (std::size_t i = 0; i < t.positions.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.positions[i]);
    }
    return out + "}";
}

}  // namespace progrand
