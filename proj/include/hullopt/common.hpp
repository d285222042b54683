#pragma once

#include <Eigen/Dense>

#include <charconv>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace hullopt {

using Point3 = Eigen::Vector3d;

/// FNV-1a over a raw byte range; used for topology/identity hashes.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

template <typename T>
std::uint64_t fnv1a_pod(const T& value, std::uint64_t h = 0xcbf29ce484222325ull) {
    static_assert(std::is_trivially_copyable_v<T>);
    return fnv1a(&value, sizeof(T), h);
}

/// Deterministic 17-significant-digit decimal formatting (round-trips doubles).
inline std::string format_g17(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

}  // namespace hullopt
