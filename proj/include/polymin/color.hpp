#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace polymin {

// A Dynkin node / edge color label such as 3 or 5'. Primed and unprimed
// labels with the same index are distinct.
struct ColorId {
  int index = 0;
  bool primed = false;

  auto operator<=>(const ColorId&) const = default;

  std::string str() const;
  // Accepts "5", "5'" and the Unicode prime "5′".
  static ColorId parse(std::string_view text);
};

inline ColorId color(int index, bool primed = false) { return {index, primed}; }

}  // namespace polymin
