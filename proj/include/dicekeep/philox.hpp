#pragma once

#include <array>
#include <cstdint>

namespace dicekeep {

/// Philox4x64 with 10 rounds, the counter-based generator from Salmon et al.,
/// "Parallel Random Numbers: As Easy as 1, 2, 3" (Random123). Constants and
/// round structure match numpy.random.Philox; tests pin the output against
/// numpy-generated vectors bit for bit.
struct Philox4x64 {
    using Block = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static constexpr std::uint64_t mul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t mul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t weyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t weyl1 = 0xBB67AE8584CAA73BULL;

    static Block generate(Block counter, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += weyl0;
                key[1] += weyl1;
            }
            counter = round_once(counter, key);
        }
        return counter;
    }

private:
    static std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
        auto product = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(product >> 64);
        return static_cast<std::uint64_t>(product);
    }

    static Block round_once(const Block& c, const Key& k) {
        std::uint64_t hi0, hi1;
        std::uint64_t lo0 = mulhilo(mul0, c[0], hi0);
        std::uint64_t lo1 = mulhilo(mul1, c[2], hi1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

/// 64-bit word stream for one simulation trial. Counter words are
/// (block_within_trial, trial_index, 0, 0) under key (seed, 0), so the stream
/// depends only on (seed, trial): chunking and scheduling cannot change it.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial)
        : key_{seed, 0}, trial_(trial) {
        refill();
    }

    std::uint64_t next() {
        if (pos_ == buffer_.size())
            refill();
        return buffer_[pos_++];
    }

private:
    void refill() {
        buffer_ = Philox4x64::generate({block_, trial_, 0, 0}, key_);
        ++block_;
        pos_ = 0;
    }

    Philox4x64::Key key_;
    std::uint64_t trial_;
    std::uint64_t block_ = 0;
    Philox4x64::Block buffer_{};
    std::size_t pos_ = 0;
};

}  // namespace dicekeep
