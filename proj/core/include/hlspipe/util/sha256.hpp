#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace hlspipe::util {

/// FIPS 180-4 SHA-256. Self-contained so the core library carries no
/// crypto-library dependency for content addressing.
class Sha256 {
public:
    Sha256();

    void update(const void* data, size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }

    /// Finalizes and returns the 32-byte digest. The object must not be
    /// updated afterwards.
    std::array<uint8_t, 32> digest();

private:
    void compress(const uint8_t* block);

    std::array<uint32_t, 8> state_;
    std::array<uint8_t, 64> buffer_;
    uint64_t total_len_ = 0;
    size_t buffer_len_ = 0;
};

/// Hex digest of a byte string.
std::string sha256_hex(std::string_view data);

}  // namespace hlspipe::util
