#pragma once

#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subpack/error.hpp"

namespace subpack {

/// A non-decreasing sequence of positive integers (a_1, ..., a_k). Class i
/// (1-based) is an a_i-packing: two of its members must be at distance at
/// least a_i + 1.
class PackingSequence {
 public:
  PackingSequence() = default;

  explicit PackingSequence(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(Errc::empty_sequence, "packing sequence has no classes");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] <= 0) throw Error(Errc::nonpositive, "value " + std::to_string(values_[i]));
      if (i > 0 && values_[i] < values_[i - 1]) {
        throw Error(Errc::not_nondecreasing, str_of(values_));
      }
    }
  }

  /// Accepts "1,1,3,3", "1,2^5", "(1^2,2^3)"; spaces are ignored.
  static PackingSequence parse(std::string_view text) {
    std::string clean;
    for (char ch : text) {
      if (ch != ' ' && ch != '(' && ch != ')' && ch != '\t') clean.push_back(ch);
    }
    if (clean.empty()) throw Error(Errc::empty_sequence, "empty sequence text");
    std::vector<int> values;
    std::string_view rest = clean;
    while (true) {
      const auto comma = rest.find(',');
      std::string_view token = rest.substr(0, comma);
      const auto caret = token.find('^');
      const int value = parse_int(token.substr(0, caret), text);
      const int repeat = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), text);
      if (value <= 0 || repeat <= 0) {
        throw Error(Errc::nonpositive, "in '" + std::string(text) + "'");
      }
      values.insert(values.end(), static_cast<std::size_t>(repeat), value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return PackingSequence(std::move(values));
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }

  /// a_cls for a 1-based class index.
  int distance(int cls) const { return values_[static_cast<std::size_t>(cls - 1)]; }
  int max_value() const { return values_.back(); }

  /// Expanded form, e.g. "1,2,2,2,2".
  std::string str() const { return str_of(values_); }

  /// Exponent form, e.g. "1,2^4".
  std::string compact() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size();) {
      std::size_t j = i;
      while (j < values_.size() && values_[j] == values_[i]) ++j;
      if (!out.empty()) out += ",";
      out += std::to_string(values_[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  friend bool operator==(const PackingSequence&, const PackingSequence&) = default;

 private:
  static std::string str_of(const std::vector<int>& values) {
    std::string out;
    for (int v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
  }

  static int parse_int(std::string_view token, std::string_view whole) {
    int value = 0;
    if (token.empty() && whole.find_first_not_of(" ,()") == std::string_view::npos) {
      throw Error(Errc::empty_sequence, "empty sequence text");
    }
    const bool negative = !token.empty() && token.front() == '-';
    const auto digits = negative ? token.substr(1) : token;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(Errc::malformed_sequence, "'" + std::string(whole) + "'");
    }
    return negative ? -value : value;
  }

  std::vector<int> values_;
};

}  // namespace subpack
