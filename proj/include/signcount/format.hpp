#ifndef SIGNCOUNT_FORMAT_HPP
#define SIGNCOUNT_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <vector>

namespace signcount {

/// Shortest decimal text that round-trips to the same double.
inline std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

template <typename Range>
std::string join_numbers(const Range &values, std::string_view sep = ",") {
  std::string out;
  bool first = true;
  for (const auto &v : values) {
    if (!first) out += sep;
    first = false;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
      out += format_number(v);
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

inline std::string join_names(const std::vector<std::string> &names, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

/// Parses "a,b,c" into doubles; throws std::invalid_argument on malformed input.
inline std::vector<double> parse_vector(std::string_view text) {
  std::vector<double> out;
  if (text.empty()) throw std::invalid_argument("empty vector");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed vector entry '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace signcount

#endif  // SIGNCOUNT_FORMAT_HPP
