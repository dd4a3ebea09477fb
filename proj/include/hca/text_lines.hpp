#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hca/error.hpp"

namespace hca {

/// Whitespace tokenizer shared by the text formats: skips blank lines and
/// `#` comments, tracks line numbers for error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      for (std::string t; ls >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(what_ + " line " + std::to_string(line_) + ": " + msg);
  }

  int to_int(const std::string& s) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail("not an integer: '" + s + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::string what_;
  int line_ = 0;
};

}  // namespace hca
