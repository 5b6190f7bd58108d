/*
  kn.hpp — finite-type classical crystals: standard crystals, generalized
  partitions Lambda(gamma), Kashiwara-Nakashima tableau crystals realized
  inside powers of B(omega_1) by column reading, and spin-column crystals.
*/
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/graph.hpp"
#include "krc/word.hpp"

namespace krc {

struct GeneralizedPartition {
  std::vector<int> cols;   // full-width column heights, weakly decreasing
  bool half_column = false;  // one extra width-1/2 column at height n
  int color = 0;             // type D: 1 or 2 when height-n columns exist

  int boxes() const {
    int b = 0;
    for (int c : cols) b += c;
    return b;
  }
  // Area in half-box units (half column included); used for diamond counts.
  int doubled_area(int n) const { return 2 * boxes() + (half_column ? n : 0); }
  bool operator==(const GeneralizedPartition&) const = default;
  std::string str() const;
};

// Definition of Lambda(gamma) per type; gamma in omega coordinates.
GeneralizedPartition lambda_partition(FiniteType type, int n, const FiniteWeight& gamma);
// Inverse: the dominant gamma with Lambda(gamma) equal to the given shape.
FiniteWeight partition_weight(FiniteType type, int n, const GeneralizedPartition& shape);
bool is_spin_weight(FiniteType type, int n, const FiniteWeight& gamma);

struct KNTableau {
  std::vector<std::vector<Letter>> columns;  // letters bottom-to-top, cols left-to-right
};

// Column reading: leftmost display factor first; within a column the reading
// moves bottom to top, columns right to left.
Word tableau_word(const KNTableau& t);
KNTableau column_reading(const Word& w, const std::vector<int>& col_heights);
std::string tableau_label(const LetterModel& m, const KNTableau& t);
KNTableau parse_tableau(const LetterModel& m, const std::string& label);

// Standard crystal B(omega_1) per Figure-2 shape (n+1 / 2n+1 / 2n / 2n vertices).
Generated<Word> standard_crystal(FiniteType type, int n);

// Highest filling of a shape: column j holds 1..height(j).
Word highest_filling(const std::vector<int>& col_heights);

// B(gamma) for non-spin gamma, generated from the highest filling inside
// B(omega_1)^(x)M. Vertex labels are tableau labels.
Generated<Word> kn_crystal(FiniteType type, int n, const FiniteWeight& gamma,
                           const GenerateOptions& opt = {});

// Spin crystals: type B gamma = s*omega_n, type D gamma = s*omega_n or
// s*omega_{n-1}; vertices are s-fold columns of +- vectors.
Generated<Word> spin_crystal(FiniteType type, int n, int node, int s,
                             const GenerateOptions& opt = {});

// Row/column monotonicity of Section-3.1 flavor, for generated-vertex checks.
bool tableau_monotone(const LetterModel& m, const KNTableau& t);

} // namespace krc
