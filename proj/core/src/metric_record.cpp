#include "lshape/metric_record.hpp"

#include <array>
#include <charconv>

namespace lshape {

std::string format_exact(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string format_exact(int x) { return std::to_string(x); }

}  // namespace lshape
