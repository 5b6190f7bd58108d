#include "krc/kn.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace krc {

std::string GeneralizedPartition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  if (half_column) os << (cols.empty() ? "" : ",") << "h";
  os << "]";
  if (color) os << "c" << color;
  return os.str();
}

GeneralizedPartition lambda_partition(FiniteType type, int n, const FiniteWeight& gamma) {
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("lambda_partition: weight length mismatch");
  for (int m : gamma)
    if (m < 0) throw std::invalid_argument("lambda_partition: gamma not dominant");
  GeneralizedPartition p;
  auto add_cols = [&](int count, int height) {
    for (int k = 0; k < count; ++k) p.cols.push_back(height);
  };
  switch (type) {
    case FiniteType::A:
    case FiniteType::C:
      for (int i = n; i >= 1; --i) add_cols(gamma[i - 1], i);
      break;
    case FiniteType::B: {
      add_cols(gamma[n - 1] / 2, n);
      if (gamma[n - 1] % 2) p.half_column = true;
      for (int i = n - 1; i >= 1; --i) add_cols(gamma[i - 1], i);
      break;
    }
    case FiniteType::D: {
      int mn = gamma[n - 1], mn1 = gamma[n - 2];
      int tall = std::abs(mn - mn1);
      add_cols(tall / 2, n);
      if (tall % 2) p.half_column = true;
      if (tall) p.color = mn > mn1 ? 1 : 2;
      add_cols(std::min(mn, mn1), n - 1);
      for (int i = n - 2; i >= 1; --i) add_cols(gamma[i - 1], i);
      break;
    }
  }
  return p;
}

FiniteWeight partition_weight(FiniteType type, int n, const GeneralizedPartition& shape) {
  FiniteWeight w(n, 0);
  std::vector<int> count(n + 1, 0);
  for (int c : shape.cols) {
    if (c < 1 || c > n) throw std::invalid_argument("partition_weight: bad column height");
    count[c]++;
  }
  switch (type) {
    case FiniteType::A:
    case FiniteType::C:
      if (shape.half_column) throw std::invalid_argument("partition_weight: half column");
      for (int i = 1; i <= n; ++i) w[i - 1] = count[i];
      return w;
    case FiniteType::B:
      for (int i = 1; i < n; ++i) w[i - 1] = count[i];
      w[n - 1] = 2 * count[n] + (shape.half_column ? 1 : 0);
      return w;
    case FiniteType::D: {
      for (int i = 1; i <= n - 2; ++i) w[i - 1] = count[i];
      int tall = 2 * count[n] + (shape.half_column ? 1 : 0);
      int both = count[n - 1];
      if (tall == 0) {
        w[n - 2] = w[n - 1] = both;
      } else if (shape.color == 1) {
        w[n - 2] = both;
        w[n - 1] = both + tall;
      } else if (shape.color == 2) {
        w[n - 2] = both + tall;
        w[n - 1] = both;
      } else {
        throw std::invalid_argument("partition_weight: height-n columns need a color");
      }
      return w;
    }
  }
  throw std::logic_error("partition_weight");
}

bool is_spin_weight(FiniteType type, int n, const FiniteWeight& gamma) {
  switch (type) {
    case FiniteType::A:
    case FiniteType::C: return false;
    case FiniteType::B: return gamma[n - 1] % 2 != 0;
    case FiniteType::D: return gamma[n - 1] != gamma[n - 2];
  }
  return false;
}

Word tableau_word(const KNTableau& t) {
  Word w;
  for (const auto& col : t.columns)
    for (auto it = col.rbegin(); it != col.rend(); ++it) w.push_back(*it);
  return w;
}

KNTableau column_reading(const Word& w, const std::vector<int>& col_heights) {
  int M = 0;
  for (int h : col_heights) M += h;
  if (M != static_cast<int>(w.size()))
    throw std::invalid_argument("column_reading: word length does not match shape");
  KNTableau t;
  size_t pos = 0;
  for (int h : col_heights) {
    std::vector<Letter> col(w.begin() + pos, w.begin() + pos + h);
    std::reverse(col.begin(), col.end());  // stored bottom-to-top
    t.columns.push_back(std::move(col));
    pos += h;
  }
  return t;
}

std::string tableau_label(const LetterModel& m, const KNTableau& t) {
  std::ostringstream os;
  for (size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << '/';
    for (size_t r = 0; r < t.columns[c].size(); ++r) {
      if (r) os << ',';
      os << m.letter_str(t.columns[c][r]);
    }
  }
  return os.str();
}

KNTableau parse_tableau(const LetterModel& m, const std::string& label) {
  KNTableau t;
  std::vector<Letter> col;
  std::string cur;
  auto flush_letter = [&]() {
    if (cur.empty()) throw std::invalid_argument("parse_tableau: empty letter in " + label);
    col.push_back(m.parse_letter(cur));
    cur.clear();
  };
  for (char ch : label) {
    if (ch == ',') flush_letter();
    else if (ch == '/') {
      flush_letter();
      t.columns.push_back(col);
      col.clear();
    } else cur += ch;
  }
  flush_letter();
  t.columns.push_back(col);
  return t;
}

namespace {

struct WordModelShape {
  LetterModel m;
  std::vector<int> heights;

  std::string label(const Word& w) const {
    return tableau_label(m, column_reading(w, heights));
  }
  std::optional<Word> act(const Word& w, int color, bool raising) const {
    return raising ? word_e(m, w, color) : word_f(m, w, color);
  }
};

struct SpinWordModel {
  LetterModel m;
  std::string label(const Word& w) const { return word_str(m, w); }
  std::optional<Word> act(const Word& w, int color, bool raising) const {
    return raising ? word_e(m, w, color) : word_f(m, w, color);
  }
};

} // namespace

Generated<Word> standard_crystal(FiniteType type, int n) {
  if (n < 1 || (type == FiniteType::D && n < 2))
    throw unsupported_error("standard_crystal: rank out of range");
  LetterModel m{type, n, false};
  WordModelShape model{m, {1}};
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = i + 1;
  return generate<Word>(model, colors, n, {Word{1}});
}

Word highest_filling(const std::vector<int>& col_heights) {
  KNTableau t;
  for (int h : col_heights) {
    std::vector<Letter> col;
    for (int k = 1; k <= h; ++k) col.push_back(k);
    t.columns.push_back(col);
  }
  return tableau_word(t);
}

Generated<Word> kn_crystal(FiniteType type, int n, const FiniteWeight& gamma,
                           const GenerateOptions& opt) {
  if (is_spin_weight(type, n, gamma))
    throw unsupported_error("kn_crystal: spin weight; use spin_crystal");
  GeneralizedPartition shape = lambda_partition(type, n, gamma);
  LetterModel m{type, n, false};
  WordModelShape model{m, shape.cols};
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = i + 1;
  return generate<Word>(model, colors, n, {highest_filling(shape.cols)}, opt);
}

Generated<Word> spin_crystal(FiniteType type, int n, int node, int s,
                             const GenerateOptions& opt) {
  if (s < 1) throw std::invalid_argument("spin_crystal: s must be positive");
  bool ok = (type == FiniteType::B && node == n) ||
            (type == FiniteType::D && (node == n || node == n - 1));
  if (!ok) throw unsupported_error("spin_crystal: not a spin node for this type");
  LetterModel m{type, n, true};
  Letter top = (1 << n) - 1;
  if (type == FiniteType::D && node == n - 1) top &= ~(1 << (n - 1));
  Word seed(s, top);
  SpinWordModel model{m};
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = i + 1;
  return generate<Word>(model, colors, n, {seed}, opt);
}

bool tableau_monotone(const LetterModel& m, const KNTableau& t) {
  int ncols = static_cast<int>(t.columns.size());
  // rows weakly increase left to right (incomparable D pairs tolerated)
  for (int c = 0; c + 1 < ncols; ++c) {
    const auto& a = t.columns[c];
    const auto& b = t.columns[c + 1];
    if (b.size() > a.size()) return false;
    for (size_t r = 0; r < b.size(); ++r)
      if (m.strictly_less(b[r], a[r])) return false;
  }
  // columns strictly increase upward, ignoring 0 (type B) and n, -n (type D)
  for (const auto& col : t.columns) {
    std::vector<Letter> filtered;
    for (Letter x : col) {
      if (m.type == FiniteType::B && x == 0) continue;
      if (m.type == FiniteType::D && (x == m.n || x == -m.n)) continue;
      filtered.push_back(x);
    }
    for (size_t r = 0; r + 1 < filtered.size(); ++r)
      if (!m.strictly_less(filtered[r], filtered[r + 1])) return false;
  }
  return true;
}

} // namespace krc
