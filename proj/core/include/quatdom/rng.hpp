#pragma once

#include <cstdint>

namespace quatdom {

/// Philox4x32-10 counter-based generator. The stream for a sample depends
/// only on (seed, sample_index, block), so any partition of the sample range
/// across workers reproduces the identical sample set.
class Philox {
public:
    explicit Philox(std::uint64_t seed) : key0_(std::uint32_t(seed)),
                                          key1_(std::uint32_t(seed >> 32)) {}

    struct Block {
        std::uint32_t v[4];
    };

    Block block(std::uint64_t sample_index, std::uint32_t block_index) const {
        std::uint32_t c0 = std::uint32_t(sample_index);
        std::uint32_t c1 = std::uint32_t(sample_index >> 32);
        std::uint32_t c2 = block_index;
        std::uint32_t c3 = 0x243F6A88u;  // domain constant
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * c0;
            const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * c2;
            const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
            const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return {{c0, c1, c2, c3}};
    }

private:
    std::uint32_t key0_, key1_;
};

/// Fills `out` with `count` uniforms in [0, 1), 53-bit resolution, drawn from
/// the per-sample substream.
inline void sample_uniforms(const Philox& rng, std::uint64_t sample_index, double* out,
                            int count) {
    int produced = 0;
    std::uint32_t block_index = 0;
    while (produced < count) {
        const Philox::Block b = rng.block(sample_index, block_index++);
        for (int pair = 0; pair < 2 && produced < count; ++pair) {
            const std::uint64_t bits =
                (std::uint64_t(b.v[2 * pair]) << 32) | b.v[2 * pair + 1];
            out[produced++] = double(bits >> 11) * 0x1.0p-53;
        }
    }
}

}  // namespace quatdom
