#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace pfdp::numerics {

/// Philox4x64-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Pure: the same counter and key give the same block.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key) noexcept;

inline constexpr std::string_view kGeneratorName = "philox4x64-10";

/**
 * Counter-based random stream keyed by (master_seed, stream_id).
 *
 * The pair is the Philox key, so distinct stream ids give independent
 * sequences and any stream can be reconstructed without replaying others.
 * Satisfies UniformRandomBitGenerator.
 */
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
        : key_{master_seed, stream_id} {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        if (pos_ == 4) {
            block_ = philox4x64({counter_, 0, 0, 0}, key_);
            ++counter_;
            pos_ = 0;
        }
        return block_[pos_++];
    }

    /// Uniform on the open interval (0, 1); 53 bits of resolution.
    double uniform() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    [[nodiscard]] std::uint64_t master_seed() const noexcept { return key_[0]; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept { return key_[1]; }

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 4> block_{};
    int pos_ = 4;
};

}  // namespace pfdp::numerics
