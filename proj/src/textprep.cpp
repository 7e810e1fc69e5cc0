#include "fairrank/textprep.hpp"

#include <cstdint>

namespace fairrank::textprep {

namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes the codepoint starting at `i`, advancing `i` past it. Malformed
// sequences consume one byte and decode to kInvalid.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kInvalid;
  }
  if (i + len > s.size()) {
    ++i;
    return kInvalid;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char bk = byte(i + k);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return kInvalid;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  // Reject overlong encodings and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    ++i;
    return kInvalid;
  }
  i += len;
  return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
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

// Simple one-to-one case folding for the bicameral scripts common in
// academic metadata. Everything else passes through unchanged.
char32_t fold_codepoint(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 supplement, excluding the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A pairs.
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  // Greek.
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  // Cyrillic.
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

// Token membership: ASCII alphanumerics plus non-ASCII codepoints, with the
// common punctuation and separator blocks carved out.
bool is_token_char(char32_t cp) {
  if (cp == kInvalid) return false;
  if (cp < 0x80) {
    return (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
  }
  if (cp <= 0xBF) {
    // Latin-1 punctuation row; ordinal indicators and micro are letters.
    return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  }
  if (cp == 0xD7 || cp == 0xF7) return false;          // multiply / divide signs
  if (cp >= 0x2000 && cp <= 0x206F) return false;      // general punctuation
  if (cp >= 0x2E00 && cp <= 0x2E7F) return false;      // supplemental punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;      // CJK punctuation
  if (cp >= 0xFF01 && cp <= 0xFF0F) return false;      // fullwidth punctuation
  if (cp >= 0xFF1A && cp <= 0xFF20) return false;
  if (cp >= 0xFF3B && cp <= 0xFF40) return false;
  if (cp >= 0xFF5B && cp <= 0xFF65) return false;
  if (cp == 0xFEFF) return false;                      // BOM / zero-width no-break
  return true;
}

constexpr std::size_t kMinTokenLength = 2;  // codepoints

}  // namespace

TokenStream tokenize(std::string_view text) {
  TokenStream tokens;
  std::string current;
  std::size_t current_len = 0;  // codepoints in `current`

  const auto flush = [&] {
    if (current_len >= kMinTokenLength) {
      tokens.push_back(current);
    }
    current.clear();
    current_len = 0;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = decode_utf8(text, i);
    if (is_token_char(cp)) {
      encode_utf8(fold_codepoint(cp), current);
      ++current_len;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::string doc_text(const PaperDoc& doc) {
  if (doc.title.empty()) return doc.abstract;
  if (doc.abstract.empty()) return doc.title;
  std::string out;
  out.reserve(doc.title.size() + 1 + doc.abstract.size());
  out += doc.title;
  out += ' ';
  out += doc.abstract;
  return out;
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = decode_utf8(text, i);
    if (cp == kInvalid) {
      out.append(text.substr(start, i - start));
    } else {
      encode_utf8(fold_codepoint(cp), out);
    }
  }
  return out;
}

}  // namespace fairrank::textprep
