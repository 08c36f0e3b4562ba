#include "gendist/text.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace gendist {

namespace {

bool is_ascii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

}  // namespace

std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw std::runtime_error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > s.size()) {
      throw std::runtime_error("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw std::runtime_error("invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong encodings and surrogates
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      throw std::runtime_error("invalid UTF-8 codepoint at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void utf8_append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(out, cp);
  return out;
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

namespace {

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Latin-1 / Latin Extended-A canonical compositions for the combining marks
// that actually occur in news-style text. Anything else passes through.
constexpr std::array<Composition, 58> kCompositions = {{
    {U'A', 0x300, 0xC0},  {U'A', 0x301, 0xC1},  {U'A', 0x302, 0xC2},
    {U'A', 0x303, 0xC3},  {U'A', 0x308, 0xC4},  {U'A', 0x30A, 0xC5},
    {U'C', 0x327, 0xC7},  {U'E', 0x300, 0xC8},  {U'E', 0x301, 0xC9},
    {U'E', 0x302, 0xCA},  {U'E', 0x308, 0xCB},  {U'I', 0x300, 0xCC},
    {U'I', 0x301, 0xCD},  {U'I', 0x302, 0xCE},  {U'I', 0x308, 0xCF},
    {U'N', 0x303, 0xD1},  {U'O', 0x300, 0xD2},  {U'O', 0x301, 0xD3},
    {U'O', 0x302, 0xD4},  {U'O', 0x303, 0xD5},  {U'O', 0x308, 0xD6},
    {U'U', 0x300, 0xD9},  {U'U', 0x301, 0xDA},  {U'U', 0x302, 0xDB},
    {U'U', 0x308, 0xDC},  {U'Y', 0x301, 0xDD},  {U'a', 0x300, 0xE0},
    {U'a', 0x301, 0xE1},  {U'a', 0x302, 0xE2},  {U'a', 0x303, 0xE3},
    {U'a', 0x308, 0xE4},  {U'a', 0x30A, 0xE5},  {U'c', 0x327, 0xE7},
    {U'e', 0x300, 0xE8},  {U'e', 0x301, 0xE9},  {U'e', 0x302, 0xEA},
    {U'e', 0x308, 0xEB},  {U'i', 0x300, 0xEC},  {U'i', 0x301, 0xED},
    {U'i', 0x302, 0xEE},  {U'i', 0x308, 0xEF},  {U'n', 0x303, 0xF1},
    {U'o', 0x300, 0xF2},  {U'o', 0x301, 0xF3},  {U'o', 0x302, 0xF4},
    {U'o', 0x303, 0xF5},  {U'o', 0x308, 0xF6},  {U'u', 0x300, 0xF9},
    {U'u', 0x301, 0xFA},  {U'u', 0x302, 0xFB},  {U'u', 0x308, 0xFC},
    {U'y', 0x301, 0xFD},  {U'y', 0x308, 0xFF},  {U'S', 0x30C, 0x160},
    {U's', 0x30C, 0x161}, {U'Z', 0x30C, 0x17D}, {U'z', 0x30C, 0x17E},
}};

char32_t compose(char32_t base, char32_t mark) {
  for (const auto& c : kCompositions) {
    if (c.base == base && c.mark == mark) return c.composed;
  }
  return 0;
}

}  // namespace

std::string nfc(std::string_view s) {
  if (is_ascii(s)) return std::string(s);
  const std::vector<char32_t> cps = utf8_decode(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty()) {
      const char32_t composed = compose(out.back(), cp);
      if (composed != 0) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return utf8_encode(out);
}

std::string trim(std::string_view s) {
  const std::vector<char32_t> cps = utf8_decode(s);
  std::size_t lo = 0;
  std::size_t hi = cps.size();
  while (lo < hi && is_unicode_space(cps[lo])) ++lo;
  while (hi > lo && is_unicode_space(cps[hi - 1])) --hi;
  std::string out;
  for (std::size_t i = lo; i < hi; ++i) utf8_append(out, cps[i]);
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::string cur;
  for (char32_t cp : utf8_decode(s)) {
    if (is_unicode_space(cp)) {
      if (!cur.empty()) {
        words.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      utf8_append(cur, cp);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::vector<std::string> word_tokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char32_t cp : utf8_decode(s)) {
    const bool alnum = (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') ||
                       (cp >= U'A' && cp <= U'Z') || cp >= 0x80;
    if (alnum) {
      const char32_t lowered = (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
      utf8_append(cur, lowered);
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

}  // namespace gendist
