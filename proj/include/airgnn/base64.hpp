#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace airgnn {

std::string base64_encode(const uint8_t* data, size_t len);
std::vector<uint8_t> base64_decode(const std::string& text);

template <typename T>
std::string base64_encode_vec(const std::vector<T>& v) {
  return base64_encode(reinterpret_cast<const uint8_t*>(v.data()),
                       v.size() * sizeof(T));
}

template <typename T>
std::vector<T> base64_decode_vec(const std::string& text) {
  std::vector<uint8_t> raw = base64_decode(text);
  std::vector<T> out(raw.size() / sizeof(T));
  std::copy(raw.begin(), raw.begin() + out.size() * sizeof(T),
            reinterpret_cast<uint8_t*>(out.data()));
  return out;
}

}  // namespace airgnn
