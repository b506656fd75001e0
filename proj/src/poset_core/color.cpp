#include "polymin/color.hpp"

#include <charconv>
#include <stdexcept>

namespace polymin {

std::string ColorId::str() const {
  std::string s = std::to_string(index);
  if (primed) s += '\'';
  return s;
}

ColorId ColorId::parse(std::string_view text) {
  ColorId c;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, c.index);
  if (ec != std::errc() || ptr == begin) throw std::invalid_argument("bad color label: " + std::string(text));
  std::string_view rest(ptr, static_cast<std::size_t>(end - ptr));
  if (rest.empty()) return c;
  if (rest == "'" || rest == "′") {
    c.primed = true;
    return c;
  }
  throw std::invalid_argument("bad color label: " + std::string(text));
}

}  // namespace polymin
