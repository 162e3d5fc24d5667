#include "curvecx/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "curvecx/errors.hpp"

namespace curvecx {

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == inv(w[i + 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inv(w.back());
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0) throw input_error("zero letter in word");
    if (!out.empty() && out.back() == inv(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == inv(w[b - 1])) {
    ++a;
    --b;
  }
  return Word(w.begin() + a, w.begin() + b);
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = inv(x);
  return out;
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

bool word_key_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int a = letter_key(u[i]), b = letter_key(v[i]);
    if (a != b) return a < b;
  }
  return false;
}

static bool key_less(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    int a = letter_key(u[i]), b = letter_key(v[i]);
    if (a != b) return a < b;
  }
  return u.size() < v.size();
}

Word canonical_cyclic(const Word& w0) {
  Word w = cyclic_reduce(w0);
  if (w.empty()) return w;
  Word best = w;
  Word wi = inverse(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word r = rotate(w, k);
    if (key_less(r, best)) best = std::move(r);
    r = rotate(wi, k);
    if (key_less(r, best)) best = std::move(r);
  }
  return best;
}

std::pair<Word, int> primitive_root(const Word& w) {
  if (w.empty()) throw input_error("primitive root of the empty word");
  std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; ok && i < n; ++i) ok = (w[i] == w[i % d]);
    if (ok) return {Word(w.begin(), w.begin() + d), static_cast<int>(n / d)};
  }
  return {w, 1};
}

std::string print_word(const Word& w) {
  std::string s;
  for (Letter x : w) {
    int a = std::abs(static_cast<int>(x));
    if (a == 0) throw input_error("zero letter in word");
    if (a <= 26)
      s += static_cast<char>((x > 0 ? 'a' : 'A') + a - 1);
    else
      s += "[" + std::to_string(static_cast<int>(x)) + "]";
  }
  return s;
}

Word parse_word(const std::string& s, int rank) {
  Word w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == ' ' || c == '\t') continue;
    int v = 0;
    if (c == '[') {
      std::size_t j = s.find(']', i);
      if (j == std::string::npos) throw input_error("unterminated [k] letter");
      try {
        v = std::stoi(s.substr(i + 1, j - i - 1));
      } catch (const std::exception&) {
        throw input_error("bad [k] letter in word: " + s);
      }
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      v = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      v = -(c - 'A' + 1);
    } else {
      throw input_error(std::string("bad letter '") + c + "' in word: " + s);
    }
    if (v == 0 || std::abs(v) > rank)
      throw input_error("letter outside basis in word: " + s);
    w.push_back(static_cast<Letter>(v));
  }
  return w;
}

}  // namespace curvecx
