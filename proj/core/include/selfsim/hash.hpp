#pragma once

#include <cstddef>
#include <functional>

namespace selfsim {

template <class T>
std::size_t hash_combine(std::size_t seed, const T& value) noexcept {
  return seed ^ (std::hash<T>{}(value) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace selfsim
