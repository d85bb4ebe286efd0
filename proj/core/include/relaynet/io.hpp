#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relaynet {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Token scanner for the "format <name> <version> ... end" text family used
// by network, params and config files.  Whitespace-separated tokens, '#'
// starts a comment to end of line.
class TextReader {
 public:
  TextReader(std::string text, std::string source_name);

  // Verifies the leading "format <name> <version>" header.
  void expect_format(const std::string& name, int version);

  bool at_end();                 // only "end" (or nothing) remains
  std::string peek();
  std::string next_token(const std::string& what);
  long next_int(const std::string& what);
  double next_double(const std::string& what);

  [[noreturn]] void fail(const std::string& message) const;

 private:
  void skip_ws();
  std::string text_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace relaynet
