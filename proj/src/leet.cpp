#include "ctxpass/leet.hpp"

#include "ctxpass/text.hpp"

namespace ctxpass {

std::string leet_transform(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    switch (c) {
      case 'a': c = '4'; break;
      case 'b': c = '8'; break;
      case 'e': c = '3'; break;
      case 'g': c = '9'; break;
      case 'i': c = '1'; break;
      case 'o': c = '0'; break;
      case 's': c = '5'; break;
      case 't': c = '7'; break;
      default: break;
    }
  }
  return out;
}

std::string_view leet_letters_for(char glyph) {
  switch (glyph) {
    case '@': return "a";
    case '4': return "a";
    case '8': return "b";
    case '3': return "e";
    case '6': return "g";
    case '9': return "g";
    case '#': return "h";
    case '1': return "il";
    case '!': return "i";
    case '|': return "il";
    case '0': return "o";
    case '5': return "s";
    case '$': return "s";
    case '7': return "t";
    case '+': return "t";
    case '2': return "z";
    default: return {};
  }
}

bool exact_char_matches(char password_char, char token_char) {
  return ascii_tolower(password_char) == token_char;
}

bool leet_char_matches(char password_char, char token_char) {
  if (exact_char_matches(password_char, token_char)) return true;
  return leet_letters_for(password_char).find(token_char) != std::string_view::npos;
}

}  // namespace ctxpass
