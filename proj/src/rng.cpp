#include "corrcp/rng.hpp"

#include <cassert>
#include <cmath>

namespace corrcp::rng {

namespace {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}

inline std::array<std::uint32_t, 2> split_key(std::uint64_t seed) {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

constexpr double kInv2Pow53 = 1.0 / 9007199254740992.0;  // 2^-53

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, counter[0], hi0, lo0);
        mulhilo(kMul1, counter[2], hi1, lo1);
        counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

std::uint64_t stream_id(Domain domain, std::uint64_t a, std::uint64_t b) {
    assert(a < (1ull << 28) && b < (1ull << 28));
    return (static_cast<std::uint64_t>(domain) << 56) | (a << 28) | b;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int rademacher_sign(std::uint64_t seed, std::uint32_t trial, std::uint32_t var,
                    std::uint32_t time) {
    // One Philox block covers four consecutive time indices of one variable.
    std::array<std::uint32_t, 4> counter = {time / 4, var, trial,
                                            static_cast<std::uint32_t>(Domain::Flip) << 24};
    auto block = philox4x32(counter, split_key(seed));
    return (block[time % 4] & 1u) ? 1 : -1;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(split_key(seed)), stream_(stream) {}

void CounterRng::refill() {
    std::array<std::uint32_t, 4> counter = {
        static_cast<std::uint32_t>(position_), static_cast<std::uint32_t>(position_ >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    buffer_ = philox4x32(counter, key_);
    ++position_;
    buffered_ = 4;
}

std::uint32_t CounterRng::next_u32() {
    if (buffered_ == 0) refill();
    return buffer_[4 - buffered_--];
}

std::uint64_t CounterRng::next_u64() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
}

double CounterRng::next_double() { return static_cast<double>(next_u64() >> 11) * kInv2Pow53; }

double CounterRng::next_double_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * kInv2Pow53;
}

double CounterRng::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = next_double_open();
    double u2 = next_double();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586476925286766559 * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

double CounterRng::next_student_t(int df) {
    assert(df >= 1);
    double z = next_gaussian();
    double chi2 = 0.0;
    for (int i = 0; i < df; ++i) {
        double g = next_gaussian();
        chi2 += g * g;
    }
    return z / std::sqrt(chi2 / df);
}

int CounterRng::next_index(int n) {
    assert(n >= 1);
    int k = static_cast<int>(next_double() * n);
    return k >= n ? n - 1 : k;
}

}  // namespace corrcp::rng
