#pragma once

#include <string>
#include <string_view>

namespace numera {

/// Decodes UTF-8 text into Unicode scalar values. Rejects overlong forms,
/// surrogates and out-of-range code points with BadEncodingError.
std::u32string utf8_decode(std::string_view text);

/// Encodes one scalar value as UTF-8.
std::string utf8_encode(char32_t scalar);

/// Encodes a sequence of scalar values as UTF-8.
std::string utf8_encode(std::u32string_view scalars);

} // namespace numera
