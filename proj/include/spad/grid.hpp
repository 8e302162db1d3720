#pragma once
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spad {

// Sensor geometry. The device runs its timing (histogram) mode on a 64x32
// macropixel half-array; photon-counting mode runs at the native 256x128
// SPAD resolution (4x4 SPADs per macropixel).
inline constexpr int kMacroW = 64;
inline constexpr int kMacroH = 32;
inline constexpr int kSpadW = 256;
inline constexpr int kSpadH = 128;
inline constexpr int kSpadPerMacro = 4;

inline constexpr int kNumBins = 16;     // bins per timing histogram
inline constexpr int kUsableBins = 15;  // bin 16 is unusable and always zero
inline constexpr int kMaxCount = 16383; // 14-bit count registers

inline constexpr int kNumObjectClasses = 6;
inline constexpr int kNumClasses = 7;   // background + 6 object classes

/// Dense row-major H x W grid.
template <typename T>
struct Grid {
  int h = 0;
  int w = 0;
  std::vector<T> v;

  Grid() = default;
  Grid(int h_, int w_, T fill = T{})
      : h(h_), w(w_), v(static_cast<std::size_t>(h_) * static_cast<std::size_t>(w_), fill) {
    if (h_ < 0 || w_ < 0) throw std::invalid_argument("Grid: negative dimension");
  }

  T& at(int r, int c) { return v[static_cast<std::size_t>(r) * w + c]; }
  const T& at(int r, int c) const { return v[static_cast<std::size_t>(r) * w + c]; }

  [[nodiscard]] std::size_t size() const { return v.size(); }
  [[nodiscard]] bool same_shape(const Grid& o) const { return h == o.h && w == o.w; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

} // namespace spad
