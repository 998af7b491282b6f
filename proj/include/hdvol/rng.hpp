#pragma once

// Counter-based random streams built on Philox4x64-10.
//
// A stream is keyed by (master_seed, stream_index); its n-th 256-bit output
// block is Philox(counter = n, key). Streams with distinct keys are
// independent, and a stream's sequence depends only on its key, never on
// which thread consumes it or in what order other streams are used.

#include <array>
#include <cstdint>
#include <limits>

namespace hdvol {

using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

/// One application of the Philox4x64 bijection with 10 rounds.
PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key);

class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (pos_ == 4) {
            refill();
        }
        return block_[pos_++];
    }

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform_open() {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniformly random sign, ±1.
    double sign() { return ((*this)() >> 63) != 0 ? -1.0 : 1.0; }

    std::uint64_t master_seed() const { return key_[0]; }
    std::uint64_t stream_index() const { return key_[1]; }

private:
    void refill();

    PhiloxKey key_;
    PhiloxCounter counter_{};
    PhiloxCounter block_{};
    unsigned pos_ = 4;
};

}  // namespace hdvol
