#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace etasch::rng {

// Counter-based generation: every draw is a pure function of
// (stream id, substream id, draw index), so replicas and statistics can be
// added or reordered without perturbing existing streams.

// Philox4x64-10 block cipher core.
std::array<std::uint64_t, 4> philox4x64(std::uint64_t key0, std::uint64_t key1,
                                        std::uint64_t c0, std::uint64_t c1);

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// Stream id for a replica: documented splitting rule, fixed forever.
inline std::uint64_t stream_id(std::uint64_t base_seed, std::uint64_t replica) {
    return base_seed ^ (replica * kGoldenGamma);
}

// Substream roles within one replica.
enum class Substream : std::uint64_t {
    disorder = 0,
    sde_noise = 1,
    phase = 2,
    start_vector = 3,
    energy = 4,
    pick = 5,
    alpha_noise = 6,
    shape_noise = 7,
    tilt_noise = 8,
    // Brownian-bridge refinement passes use noise_refine_base + pass index.
    noise_refine_base = 16,
};

class Stream {
public:
    Stream(std::uint64_t stream, Substream sub)
        : key0_(stream), key1_(static_cast<std::uint64_t>(sub)) {}
    Stream(std::uint64_t stream, std::uint64_t sub) : key0_(stream), key1_(sub) {}

    std::uint64_t u64_at(std::uint64_t index) const {
        auto blk = philox4x64(key0_, key1_, index >> 2, 0);
        return blk[index & 3];
    }

    // Uniform in [0, 1).
    double uniform01_at(std::uint64_t index) const {
        return static_cast<double>(u64_at(index) >> 11) * 0x1.0p-53;
    }
    // Uniform in (0, 1]; safe for log().
    double uniform01_pos_at(std::uint64_t index) const {
        return static_cast<double>((u64_at(index) >> 11) + 1) * 0x1.0p-53;
    }

    // Box-Muller pair, consumes uniform indices 2i and 2i+1.
    std::array<double, 2> normal_pair_at(std::uint64_t i) const {
        const double u1 = uniform01_pos_at(2 * i);
        const double u2 = uniform01_at(2 * i + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925287 * u2;
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

    std::uint64_t key0() const { return key0_; }
    std::uint64_t key1() const { return key1_; }

private:
    std::uint64_t key0_, key1_;
};

// Sequential cursor over a Stream for code that consumes draws in order.
class Sequence {
public:
    explicit Sequence(Stream s) : stream_(s) {}

    std::uint64_t next_u64() { return stream_.u64_at(u64_cursor_++); }
    double next_uniform01() { return stream_.uniform01_at(u64_cursor_++); }
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto z = stream_.normal_pair_at(pair_cursor_++);
        spare_ = z[1];
        have_spare_ = true;
        return z[0];
    }

    const Stream& stream() const { return stream_; }

private:
    Stream stream_;
    std::uint64_t u64_cursor_ = 0;
    // Normals use a separate index space (blocks 2^32 apart from uniforms).
    std::uint64_t pair_cursor_ = (1ull << 32);
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace etasch::rng
