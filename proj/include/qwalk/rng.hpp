#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace qwalk {

// Anything that yields uniform doubles on [0, 1). Tests substitute forced
// sources; production code uses RngStream.
template <class S>
concept UnitSource = requires(S s) {
    { s.next_unit() } -> std::convertible_to<double>;
};

// Seedable deterministic stream of uniform variates. mt19937_64 is specified
// bit-for-bit by the standard, so identical seeds reproduce identical draws
// on every platform. One stream drives one coin sequence, consumed in
// time-step order; parallel consumers get independently derived streams.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t split_mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

inline constexpr std::uint64_t kRealizationSalt = 0x72656C7A6E73ULL;
inline constexpr std::uint64_t kQubitSalt = 0x717562697473ULL;

// Deterministic substream seed for (base, salt, index); used to split one
// run seed into per-realization and per-qubit streams.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t salt, std::uint64_t index) {
    return detail::split_mix64(detail::split_mix64(base ^ salt) ^ (index + 1));
}

}  // namespace qwalk
