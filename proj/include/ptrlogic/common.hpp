#ifndef PTRLOGIC_COMMON_HPP
#define PTRLOGIC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptrlogic {

// Line-oriented surface syntax error. Token positions are 1-based.
struct parse_error : std::runtime_error {
  parse_error(std::string msg, std::size_t token_pos = 0)
      : std::runtime_error(std::move(msg)), token_pos(token_pos) {}
  std::size_t token_pos;
};

// Well-formed statement whose shape is outside the supported normal form
// (nested conjunction, existential on both sides, ...).
struct normal_form_error : parse_error {
  using parse_error::parse_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_ws(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string strip(std::string_view text);
bool starts_with(std::string_view text, std::string_view prefix);

// FNV-1a; used for hashed fallback embedding buckets and config hashes.
std::uint64_t fnv1a(std::string_view data);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ptrlogic

#endif
