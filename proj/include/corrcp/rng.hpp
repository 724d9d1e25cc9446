#pragma once

#include <array>
#include <cstdint>

namespace corrcp::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).  A keyed
// bijection from a 128-bit counter to 128 random bits: every draw is a pure
// function of (key, counter), which is what makes trials and replications
// reproducible on any number of workers.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Stream-id layout: one domain tag byte plus two 28-bit indices.  Distinct
// (domain, a, b) triples map to distinct streams with no hashing involved.
enum class Domain : std::uint8_t {
    Flip = 1,       // Rademacher sign matrices, one stream per trial
    Sim = 2,        // scenario generation, one stream per replication
    Smote = 3,      // synthetic samples, one stream per sample
    Surrogate = 4,  // threshold calibration for the vech pipeline
    Generic = 5,
};

std::uint64_t stream_id(Domain domain, std::uint64_t a = 0, std::uint64_t b = 0);

// SplitMix64-style derivation of an independent child seed; used to give
// each replication (and each augmentation round) its own master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// The Rademacher sign for entry (var, time) of trial `trial`: +1 or -1 with
// probability 1/2, a pure function of all four arguments.
int rademacher_sign(std::uint64_t seed, std::uint32_t trial, std::uint32_t var,
                    std::uint32_t time);

// A sequential view of one (seed, stream) substream.  Instances walk the
// 64-bit position counter; two instances with the same key and stream always
// produce identical sequences.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    double next_double();       // uniform on [0, 1)
    double next_double_open();  // uniform on (0, 1]
    double next_gaussian();     // standard normal, Box-Muller pair cached
    double next_student_t(int df);
    int next_index(int n);  // uniform on {0, ..., n-1}

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t position_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_ = 0;
    bool has_cached_gaussian_ = false;
    double cached_gaussian_ = 0.0;
};

}  // namespace corrcp::rng
