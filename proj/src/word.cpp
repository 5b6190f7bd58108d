#include "krc/word.hpp"

#include <sstream>
#include <stdexcept>

namespace krc {

std::vector<Letter> LetterModel::alphabet() const {
  std::vector<Letter> a;
  if (spin) {
    for (int mask = 0; mask < (1 << n); ++mask) a.push_back(mask);
    return a;
  }
  switch (type) {
    case FiniteType::A:
      for (int k = 1; k <= n + 1; ++k) a.push_back(k);
      break;
    case FiniteType::B:
      for (int k = 1; k <= n; ++k) a.push_back(k);
      a.push_back(0);
      for (int k = n; k >= 1; --k) a.push_back(-k);
      break;
    case FiniteType::C:
    case FiniteType::D:
      for (int k = 1; k <= n; ++k) a.push_back(k);
      for (int k = n; k >= 1; --k) a.push_back(-k);
      break;
  }
  return a;
}

Letter LetterModel::f(Letter x, int color) const {
  int i = color;
  if (spin) {
    // bits 0..n-1; '+' = set.
    if (type == FiniteType::B && i == n) {
      if (x & (1 << (n - 1))) return x & ~(1 << (n - 1));
      return kNull;
    }
    if (type == FiniteType::D && i == n) {
      int hi = 1 << (n - 1), lo = 1 << (n - 2);
      if ((x & hi) && (x & lo)) return x & ~(hi | lo);
      return kNull;
    }
    int a = 1 << (i - 1), b = 1 << i;
    if ((x & a) && !(x & b)) return (x & ~a) | b;
    return kNull;
  }
  switch (type) {
    case FiniteType::A:
      return x == i ? i + 1 : kNull;
    case FiniteType::B:
      if (i < n) {
        if (x == i) return i + 1;
        if (x == -(i + 1)) return -i;
        return kNull;
      }
      if (x == n) return 0;
      if (x == 0) return -n;
      return kNull;
    case FiniteType::C:
      if (i < n) {
        if (x == i) return i + 1;
        if (x == -(i + 1)) return -i;
        return kNull;
      }
      return x == n ? -n : kNull;
    case FiniteType::D:
      if (i < n) {
        if (x == i) return i + 1;
        if (x == -(i + 1)) return -i;
        return kNull;
      }
      if (x == n - 1) return -n;
      if (x == n) return -(n - 1);
      return kNull;
  }
  return kNull;
}

Letter LetterModel::e(Letter x, int color) const {
  int i = color;
  if (spin) {
    if (type == FiniteType::B && i == n) {
      if (!(x & (1 << (n - 1)))) return x | (1 << (n - 1));
      return kNull;
    }
    if (type == FiniteType::D && i == n) {
      int hi = 1 << (n - 1), lo = 1 << (n - 2);
      if (!(x & hi) && !(x & lo)) return x | hi | lo;
      return kNull;
    }
    int a = 1 << (i - 1), b = 1 << i;
    if (!(x & a) && (x & b)) return (x | a) & ~b;
    return kNull;
  }
  switch (type) {
    case FiniteType::A:
      return x == i + 1 ? i : kNull;
    case FiniteType::B:
      if (i < n) {
        if (x == i + 1) return i;
        if (x == -i) return -(i + 1);
        return kNull;
      }
      if (x == 0) return n;
      if (x == -n) return 0;
      return kNull;
    case FiniteType::C:
      if (i < n) {
        if (x == i + 1) return i;
        if (x == -i) return -(i + 1);
        return kNull;
      }
      return x == -n ? n : kNull;
    case FiniteType::D:
      if (i < n) {
        if (x == i + 1) return i;
        if (x == -i) return -(i + 1);
        return kNull;
      }
      if (x == -n) return n - 1;
      if (x == -(n - 1)) return n;
      return kNull;
  }
  return kNull;
}

int LetterModel::order_index(Letter x) const {
  if (spin) throw std::logic_error("order_index: spin letters are unordered");
  switch (type) {
    case FiniteType::A: return x;
    case FiniteType::B:
      if (x > 0) return x;
      if (x == 0) return n + 1;
      return 2 * n + 2 + x;
    case FiniteType::C:
      if (x > 0) return x;
      return 2 * n + 1 + x;
    case FiniteType::D:
      if (x > 0 && x < n) return x;
      if (x == n || x == -n) return n;
      return 2 * n + x;  // -k -> 2n-k for k < n
  }
  return 0;
}

bool LetterModel::strictly_less(Letter x, Letter y) const {
  if (type == FiniteType::D && (x == n || x == -n) && (y == n || y == -n))
    return false;  // incomparable pair
  return order_index(x) < order_index(y);
}

bool LetterModel::weakly_less(Letter x, Letter y) const {
  if (x == y) return true;
  if (type == FiniteType::D && (x == n || x == -n) && (y == n || y == -n))
    return false;
  return order_index(x) <= order_index(y);
}

std::string LetterModel::letter_str(Letter x) const {
  if (spin) {
    std::string s;
    for (int j = 0; j < n; ++j) s += (x & (1 << j)) ? '+' : '-';
    return s;
  }
  return std::to_string(x);
}

Letter LetterModel::parse_letter(const std::string& s) const {
  if (spin) {
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("bad spin letter: " + s);
    int mask = 0;
    for (int j = 0; j < n; ++j)
      if (s[j] == '+') mask |= 1 << j;
      else if (s[j] != '-') throw std::invalid_argument("bad spin letter: " + s);
    return mask;
  }
  return std::stoi(s);
}

namespace {

// Suffix string data for one color: eps/phi of the word tail starting at j.
void suffix_tables(const LetterModel& m, const Word& w, int color,
                   std::vector<int>& eps_s, std::vector<int>& phi_s) {
  int M = static_cast<int>(w.size());
  eps_s.assign(M + 1, 0);
  phi_s.assign(M + 1, 0);
  for (int j = M - 1; j >= 0; --j) {
    int ea = m.eps(w[j], color), pa = m.phi(w[j], color);
    int eb = eps_s[j + 1], pb = phi_s[j + 1];
    eps_s[j] = eb + std::max(0, ea - pb);
    phi_s[j] = pa + std::max(0, pb - ea);
  }
}

} // namespace

int word_eps(const LetterModel& m, const Word& w, int color) {
  std::vector<int> e, p;
  suffix_tables(m, w, color, e, p);
  return e[0];
}

int word_phi(const LetterModel& m, const Word& w, int color) {
  std::vector<int> e, p;
  suffix_tables(m, w, color, e, p);
  return p[0];
}

std::optional<Word> word_f(const LetterModel& m, const Word& w, int color) {
  std::vector<int> eps_s, phi_s;
  suffix_tables(m, w, color, eps_s, phi_s);
  if (phi_s[0] == 0) return std::nullopt;
  int M = static_cast<int>(w.size());
  for (int j = 0; j < M; ++j) {
    if (m.eps(w[j], color) >= phi_s[j + 1]) {
      Letter y = m.f(w[j], color);
      if (y == LetterModel::kNull) return std::nullopt;
      Word out = w;
      out[j] = y;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<Word> word_e(const LetterModel& m, const Word& w, int color) {
  std::vector<int> eps_s, phi_s;
  suffix_tables(m, w, color, eps_s, phi_s);
  if (eps_s[0] == 0) return std::nullopt;
  int M = static_cast<int>(w.size());
  for (int j = 0; j < M; ++j) {
    if (m.eps(w[j], color) > phi_s[j + 1]) {
      Letter y = m.e(w[j], color);
      if (y == LetterModel::kNull) return std::nullopt;
      Word out = w;
      out[j] = y;
      return out;
    }
  }
  return std::nullopt;
}

std::string word_str(const LetterModel& m, const Word& w, char sep) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << sep;
    os << m.letter_str(w[i]);
  }
  return os.str();
}

} // namespace krc
