#include "ctxpass/text.hpp"

#include <fstream>
#include <sstream>

#include "ctxpass/errors.hpp"

namespace ctxpass {

bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
char ascii_tolower(char c) { return is_ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
char ascii_toupper(char c) { return is_ascii_lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_tolower(c);
  return out;
}

std::string to_upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_toupper(c);
  return out;
}

std::string capitalize_ascii(std::string_view s) {
  std::string out = to_lower_ascii(s);
  if (!out.empty()) out[0] = ascii_toupper(out[0]);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (static_cast<unsigned char>(s[b]) <= ' ')) ++b;
  while (e > b && (static_cast<unsigned char>(s[e - 1]) <= ' ')) --e;
  return std::string(s.substr(b, e - b));
}

namespace {

// Latin-1 Supplement letters 0xC0..0xFF -> ASCII base, "" = not a letter.
const char* latin1_fold(char32_t cp) {
  static const char* kTable[64] = {
      "a", "a", "a", "a", "a", "a", "ae", "c",   // C0-C7
      "e", "e", "e", "e", "i", "i", "i",  "i",   // C8-CF
      "d", "n", "o", "o", "o", "o", "o",  "",    // D0-D7 (D7 = multiplication sign)
      "o", "u", "u", "u", "u", "y", "th", "ss",  // D8-DF
      "a", "a", "a", "a", "a", "a", "ae", "c",   // E0-E7
      "e", "e", "e", "e", "i", "i", "i",  "i",   // E8-EF
      "d", "n", "o", "o", "o", "o", "o",  "",    // F0-F7 (F7 = division sign)
      "o", "u", "u", "u", "u", "y", "th", "y",   // F8-FF
  };
  return kTable[cp - 0xC0];
}

// Latin Extended-A 0x100..0x17F base letters, indexed by cp - 0x100.
// 0x132/0x133 (ij) and 0x152/0x153 (oe) expand to two letters and are
// special-cased by the caller.
constexpr char kLatinExtA[129] =
    "aaaaaa"        // 100-105
    "cccccccc"      // 106-10D
    "dddd"          // 10E-111
    "eeeeeeeeee"    // 112-11B
    "gggggggg"      // 11C-123
    "hhhh"          // 124-127
    "iiiiiiiiii"    // 128-131
    "ii"            // 132-133 (overridden)
    "jj"            // 134-135
    "kkk"           // 136-138
    "llllllllll"    // 139-142
    "nnnnnnnnn"     // 143-14B
    "oooooo"        // 14C-151
    "oo"            // 152-153 (overridden)
    "rrrrrr"        // 154-159
    "ssssssss"      // 15A-161
    "tttttt"        // 162-167
    "uuuuuuuuuuuu"  // 168-173
    "ww"            // 174-175
    "yyy"           // 176-178
    "zzzzzz"        // 179-17E
    "s";            // 17F

// Decodes one UTF-8 code point starting at i; advances i. Invalid sequences
// decode to U+FFFD and advance one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + extra >= s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += 1 + static_cast<std::size_t>(extra);
  return cp;
}

}  // namespace

std::string fold_to_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = decode_utf8(s, i);
    if (cp < 0x80) {
      out += ascii_tolower(static_cast<char>(cp));
    } else if (cp >= 0xC0 && cp <= 0xFF) {
      const char* m = latin1_fold(cp);
      out += (*m != '\0') ? m : " ";
    } else if (cp == 0x132 || cp == 0x133) {
      out += "ij";
    } else if (cp == 0x152 || cp == 0x153) {
      out += "oe";
    } else if (cp >= 0x100 && cp <= 0x17F) {
      out += kLatinExtA[cp - 0x100];
    } else {
      out += ' ';
    }
  }
  return out;
}

std::vector<std::string> alpha_runs(std::string_view folded, std::size_t min_len) {
  std::vector<std::string> runs;
  std::size_t i = 0;
  while (i < folded.size()) {
    if (!is_ascii_lower(folded[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < folded.size() && is_ascii_lower(folded[j])) ++j;
    if (j - i >= min_len) runs.emplace_back(folded.substr(i, j - i));
    i = j;
  }
  return runs;
}

std::vector<std::string> digit_runs(std::string_view s, std::size_t min_len) {
  std::vector<std::string> runs;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_ascii_digit(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && is_ascii_digit(s[j])) ++j;
    if (j - i >= min_len) runs.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return runs;
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n') {
      if (i == s.size() && i == start) break;
      std::size_t end = i;
      if (end > start && s[end - 1] == '\r') --end;
      lines.emplace_back(s.substr(start, end - start));
      start = i + 1;
    }
  }
  return lines;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* kDigits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("read failed: " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace ctxpass
