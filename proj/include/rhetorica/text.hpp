#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace rhetorica {

// Decodes the UTF-8 sequence starting at byte i of s; advances i past it.
// Malformed bytes decode as U+FFFD one byte at a time.
char32_t utf8_next(std::string_view s, std::size_t& i);

void utf8_append(std::string& out, char32_t cp);

// Letter classification covers the Latin scripts the corpora use: ASCII,
// Latin-1 Supplement (minus the multiply/divide signs), Latin Extended-A/B.
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);  // ASCII whitespace plus U+00A0

// Lowercases ASCII, Latin-1 and Latin Extended-A; other code points pass
// through unchanged.
char32_t to_lower(char32_t cp);

// Number of letters in a UTF-8 string. Digits, apostrophes and hyphens do
// not count.
std::size_t letter_count(std::string_view s);

std::string lowercase(std::string_view s);

}  // namespace rhetorica
