#ifndef TERMEX_TEXT_UTIL_HPP
#define TERMEX_TEXT_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace termex {

// ASCII lower-casing. Bytes outside A-Z pass through untouched, so UTF-8
// input stays valid; case folding beyond ASCII is out of scope.
std::string fold_case(std::string_view s);

// Split on a single separator character; empty fields are preserved.
std::vector<std::string> split_fields(std::string_view line, char sep);

// Split on runs of spaces; empty tokens are dropped.
std::vector<std::string> split_words(std::string_view s);

std::string join_words(const std::vector<std::string>& words);

bool contains_whitespace(std::string_view s);

// 64-bit FNV-1a over raw bytes, lowercase hex. Used to fingerprint input
// files in reports so runs can be attributed to exact inputs.
std::string fnv1a64_hex(std::string_view bytes);

// Whole-file helpers; throw IoError on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

} // namespace termex

#endif
