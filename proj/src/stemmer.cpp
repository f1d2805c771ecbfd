#include "massgate/stemmer.hpp"

#include <cctype>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace massgate {

namespace {

// The word being stemmed lives in `b[0..k]`; the rules below shorten or
// rewrite that range exactly as in the 1980 definition (steps 1a-5b).
struct Stem {
  std::string b;
  int k = -1;  // index of last letter
  int j = 0;   // index of last letter of the stem after ends() matched

  bool cons(int i) const {
    switch (b[static_cast<size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // number of VC sequences in b[0..j]
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int i) const {
    if (i < 1) return false;
    if (b[static_cast<size_t>(i)] != b[static_cast<size_t>(i - 1)]) return false;
    return cons(i);
  }

  // consonant-vowel-consonant at i-2..i, final consonant not w, x or y
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b[static_cast<size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    int len = static_cast<int>(s.size());
    if (len > k + 1) return false;
    if (b.compare(static_cast<size_t>(k - len + 1), static_cast<size_t>(len), s) != 0) {
      return false;
    }
    j = k - len;
    return true;
  }

  void set_to(std::string_view s) {
    b.replace(static_cast<size_t>(j + 1), b.size() - static_cast<size_t>(j + 1), s);
    k = j + static_cast<int>(s.size());
  }

  void replace_if_m_positive(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1a() {
    if (b[static_cast<size_t>(k)] == 's') {
      if (ends("sses")) {
        k -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (k >= 1 && b[static_cast<size_t>(k - 1)] != 's') {
        --k;
      } else if (k == 0) {
        --k;  // the bare word "s"
      }
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (m() > 0) --k;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k = j;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k)) {
        char ch = b[static_cast<size_t>(k)];
        if (ch != 'l' && ch != 's' && ch != 'z') --k;
      } else {
        j = k;
        if (m() == 1 && cvc(k)) set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) {
      b[static_cast<size_t>(k)] = 'i';
    }
  }

  void step2() {
    if (k < 1) return;
    switch (b[static_cast<size_t>(k - 1)]) {
      case 'a':
        if (ends("ational")) { replace_if_m_positive("ate"); break; }
        if (ends("tional")) { replace_if_m_positive("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_m_positive("ence"); break; }
        if (ends("anci")) { replace_if_m_positive("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_m_positive("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { replace_if_m_positive("able"); break; }
        if (ends("alli")) { replace_if_m_positive("al"); break; }
        if (ends("entli")) { replace_if_m_positive("ent"); break; }
        if (ends("eli")) { replace_if_m_positive("e"); break; }
        if (ends("ousli")) { replace_if_m_positive("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_m_positive("ize"); break; }
        if (ends("ation")) { replace_if_m_positive("ate"); break; }
        if (ends("ator")) { replace_if_m_positive("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_m_positive("al"); break; }
        if (ends("iveness")) { replace_if_m_positive("ive"); break; }
        if (ends("fulness")) { replace_if_m_positive("ful"); break; }
        if (ends("ousness")) { replace_if_m_positive("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_m_positive("al"); break; }
        if (ends("iviti")) { replace_if_m_positive("ive"); break; }
        if (ends("biliti")) { replace_if_m_positive("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b[static_cast<size_t>(k)]) {
      case 'e':
        if (ends("icate")) { replace_if_m_positive("ic"); break; }
        if (ends("ative")) { replace_if_m_positive(""); break; }
        if (ends("alize")) { replace_if_m_positive("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_m_positive("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_m_positive("ic"); break; }
        if (ends("ful")) { replace_if_m_positive(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_m_positive(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k < 1) return;
    switch (b[static_cast<size_t>(k - 1)]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j >= 0 &&
            (b[static_cast<size_t>(j)] == 's' || b[static_cast<size_t>(j)] == 't')) {
          break;
        }
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k = j;
  }

  void step5() {
    j = k;
    if (b[static_cast<size_t>(k)] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
    }
    if (b[static_cast<size_t>(k)] == 'l' && double_cons(k) && m() > 1) --k;
  }
};

bool is_alpha_lower(const std::string& w) {
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

}  // namespace

std::string porter_stem(const std::string& word) {
  std::string lowered;
  lowered.reserve(word.size());
  for (char c : word) {
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  // Only plain alphabetic words carry English suffixes.
  if (lowered.empty() || !is_alpha_lower(lowered)) {
    return lowered;
  }
  Stem s;
  s.b = lowered;
  s.k = static_cast<int>(lowered.size()) - 1;
  s.step1a();
  if (s.k < 0) return "";
  s.step1b();
  s.step1c();
  s.step2();
  s.step3();
  s.step4();
  s.step5();
  return s.b.substr(0, static_cast<size_t>(s.k + 1));
}

std::string stem_token(const std::string& token) {
  if (token.empty()) {
    throw std::invalid_argument("stem_token: empty token");
  }
  // split on '_', '-' and lower-to-upper camelCase boundaries
  std::vector<std::string> pieces;
  std::string current;
  for (size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (c == '_' || c == '-') {
      if (!current.empty()) {
        pieces.push_back(current);
        current.clear();
      }
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c)) && i > 0 &&
        std::islower(static_cast<unsigned char>(token[i - 1]))) {
      pieces.push_back(current);
      current.clear();
    }
    current.push_back(c);
  }
  if (!current.empty()) {
    pieces.push_back(current);
  }
  if (pieces.empty()) {
    // token consisted solely of separators; keep it verbatim
    return token;
  }
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out += '_';
    std::string stemmed = porter_stem(pieces[i]);
    if (stemmed.empty()) {
      // a piece that strips to nothing (e.g. a bare "s") keeps its letters
      for (char c : pieces[i]) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    } else {
      out += stemmed;
    }
  }
  return out;
}

}  // namespace massgate
