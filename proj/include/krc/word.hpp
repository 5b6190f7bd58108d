/*
  word.hpp — letters of the standard crystals (and spin letters) for finite
  types A/B/C/D, and crystal operators on words over them. Words are stored
  with the leftmost display factor first: w = x_M (x) ... (x) x_1 is
  {x_M, ..., x_1}. The tensor rule is the reversed-convention one:
    e_i(a(x)b) = e_i(a)(x)b if eps_i(a) > phi_i(b), else a(x)e_i(b)
    f_i(a(x)b) = f_i(a)(x)b if eps_i(a) >= phi_i(b), else a(x)f_i(b)
*/
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/cartan.hpp"

namespace krc {

// Letter encoding: k > 0 plain, -k barred, 0 the type-B middle letter.
// Spin letters are bitmasks over n positions (bit j set = '+' in slot j+1).
using Letter = int;
using Word = std::vector<Letter>;

struct LetterModel {
  FiniteType type;
  int n = 0;
  bool spin = false;

  std::vector<Letter> alphabet() const;
  int num_colors() const { return n; }  // colors 1..n

  Letter f(Letter x, int color) const;  // 0-result encoded as kNull
  Letter e(Letter x, int color) const;
  // String lengths in the letter crystal (the type-B color-n string has
  // length 2, so these are not mere step indicators).
  int phi(Letter x, int color) const {
    int k = 0;
    for (Letter y = f(x, color); y != kNull; y = f(y, color)) ++k;
    return k;
  }
  int eps(Letter x, int color) const {
    int k = 0;
    for (Letter y = e(x, color); y != kNull; y = e(y, color)) ++k;
    return k;
  }

  static constexpr Letter kNull = -1000000;

  // Position in the standard-crystal order; type D gives n and -n the same
  // index (they are incomparable).
  int order_index(Letter x) const;
  bool strictly_less(Letter x, Letter y) const;   // false for D's {n, -n} pair
  bool weakly_less(Letter x, Letter y) const;

  std::string letter_str(Letter x) const;
  Letter parse_letter(const std::string& s) const;
};

// Whole-word string operations.
int word_eps(const LetterModel& m, const Word& w, int color);
int word_phi(const LetterModel& m, const Word& w, int color);
std::optional<Word> word_f(const LetterModel& m, const Word& w, int color);
std::optional<Word> word_e(const LetterModel& m, const Word& w, int color);

std::string word_str(const LetterModel& m, const Word& w, char sep = ',');

} // namespace krc
