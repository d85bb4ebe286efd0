#include "relaynet/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "relaynet/errors.hpp"

namespace relaynet {

std::string format_double(double v) {
  // 17 significant digits always round-trip; try shorter forms first.
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v || (std::isnan(back) && std::isnan(v))) return buf;
  }
  return buf;
}

TextReader::TextReader(std::string text, std::string source_name)
    : text_(std::move(text)), source_(std::move(source_name)) {}

void TextReader::skip_ws() {
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else if (c == '\n') {
      ++line_;
      ++pos_;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
    } else {
      break;
    }
  }
}

std::string TextReader::peek() {
  skip_ws();
  std::size_t p = pos_;
  std::string tok;
  while (p < text_.size() && !std::isspace(static_cast<unsigned char>(text_[p])) &&
         text_[p] != '#')
    tok.push_back(text_[p++]);
  return tok;
}

std::string TextReader::next_token(const std::string& what) {
  skip_ws();
  std::string tok;
  while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
         text_[pos_] != '#')
    tok.push_back(text_[pos_++]);
  if (tok.empty()) fail("expected " + what + " but reached end of file");
  return tok;
}

long TextReader::next_int(const std::string& what) {
  const std::string tok = next_token(what);
  long value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail("expected integer for " + what + ", got '" + tok + "'");
  return value;
}

double TextReader::next_double(const std::string& what) {
  const std::string tok = next_token(what);
  try {
    std::size_t used = 0;
    const double value = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail("expected number for " + what + ", got '" + tok + "'");
  }
}

void TextReader::expect_format(const std::string& name, int version) {
  if (next_token("'format' keyword") != "format") fail("file does not start with 'format'");
  const std::string got = next_token("format name");
  if (got != name) fail("expected format '" + name + "', got '" + got + "'");
  const long ver = next_int("format version");
  if (ver != version)
    fail("unsupported " + name + " version " + std::to_string(ver) + " (expected " +
         std::to_string(version) + ")");
}

bool TextReader::at_end() {
  const std::string tok = peek();
  return tok.empty() || tok == "end";
}

void TextReader::fail(const std::string& message) const {
  throw io_error(source_ + ":" + std::to_string(line_) + ": " + message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw io_error("error while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("error while writing '" + path + "'");
}

}  // namespace relaynet
