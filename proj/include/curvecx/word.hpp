#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace curvecx {

// letters of a free group word: +k is the k-th generator (1-based), -k its inverse
using Letter = std::int16_t;
using Word = std::vector<Letter>;

inline Letter inv(Letter x) { return static_cast<Letter>(-x); }

// a < A < b < B < ...; the order used for canonical forms
inline int letter_key(Letter x) {
  int a = x < 0 ? -x : x;
  return 2 * (a - 1) + (x < 0 ? 1 : 0);
}

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse(const Word& w);
Word rotate(const Word& w, std::size_t k);

// lexicographic order under letter_key, shorter words first
bool word_key_less(const Word& u, const Word& v);

// least word, by letter_key, over all rotations of w and of w^-1; cyclically reduces first
Word canonical_cyclic(const Word& w);

// w = root^power with root primitive; w must be cyclically reduced and nonempty
std::pair<Word, int> primitive_root(const Word& w);

// a..z generators 1..26, A..Z their inverses, [k] and [-k] beyond; spaces ignored
std::string print_word(const Word& w);
Word parse_word(const std::string& s, int rank);

}  // namespace curvecx
