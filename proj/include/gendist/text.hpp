#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gendist {

// Decodes UTF-8 into codepoints; throws std::runtime_error on malformed input.
std::vector<char32_t> utf8_decode(std::string_view s);

void utf8_append(std::string& out, char32_t cp);
std::string utf8_encode(const std::vector<char32_t>& cps);

// Unicode whitespace (the usual ASCII set plus NBSP, the U+2000 block, etc).
bool is_unicode_space(char32_t cp);

// Canonical composition for the common Latin base+combining-mark pairs.
// Codepoints outside the built-in table pass through unchanged; ASCII input
// is returned as-is.
std::string nfc(std::string_view s);

// Strips leading/trailing Unicode whitespace.
std::string trim(std::string_view s);

// Splits on runs of Unicode whitespace; no empty words are returned.
std::vector<std::string> split_words(std::string_view s);

// Lowercased (ASCII case fold) maximal runs of letters/digits, for TF-IDF.
std::vector<std::string> word_tokens(std::string_view s);

}  // namespace gendist
