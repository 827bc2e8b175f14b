#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctxpass {

bool is_ascii_lower(char c);
bool is_ascii_upper(char c);
bool is_ascii_digit(char c);
char ascii_tolower(char c);
char ascii_toupper(char c);

std::string to_lower_ascii(std::string_view s);
std::string to_upper_ascii(std::string_view s);
std::string capitalize_ascii(std::string_view s);
std::string trim(std::string_view s);

// Decodes UTF-8, lowercases ASCII, maps accented Latin letters to their ASCII
// base (possibly two characters: ss, ae, oe, th, ij). Anything else becomes a
// single space so it acts as a token boundary.
std::string fold_to_ascii(std::string_view s);

// Maximal runs of [a-z] / [0-9] in an already folded string.
std::vector<std::string> alpha_runs(std::string_view folded, std::size_t min_len);
std::vector<std::string> digit_runs(std::string_view s, std::size_t min_len);

// Splits on LF, dropping a trailing CR on each line. A final unterminated
// line is kept; a trailing LF does not produce an empty last line.
std::vector<std::string> split_lines(std::string_view s);

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ctxpass
