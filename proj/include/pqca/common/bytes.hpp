#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqca {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view text) noexcept {
    return {reinterpret_cast<const std::uint8_t *>(text.data()), text.size()};
}

inline Bytes to_bytes(std::string_view text) {
    auto view = as_bytes(text);
    return {view.begin(), view.end()};
}

// Standard alphabet with padding, no line breaks.
std::string base64_encode(ByteView data);
// Throws std::invalid_argument on characters outside the alphabet or bad padding.
Bytes base64_decode(std::string_view text);

// RFC 4648 url-safe alphabet, unpadded.
std::string base64url_encode(ByteView data);

Bytes random_bytes(std::size_t count);

std::string to_hex(ByteView data);

}  // namespace pqca
