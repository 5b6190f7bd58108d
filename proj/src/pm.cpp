#include "krc/pm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace krc {

namespace {

bool col_less(const PMDiagram::Col& a, const PMDiagram::Col& b) {
  // lam desc, outer desc, mu desc, zero before plain minus
  if (a.lam != b.lam) return a.lam > b.lam;
  if (a.outer != b.outer) return a.outer > b.outer;
  if (a.mu != b.mu) return a.mu > b.mu;
  return a.zero && !b.zero;
}

} // namespace

std::vector<int> PMDiagram::inner() const {
  std::vector<int> v;
  for (const auto& c : cols)
    if (c.lam > 0) v.push_back(c.lam);
  return v;
}

std::vector<int> PMDiagram::outer() const {
  std::vector<int> v;
  for (const auto& c : cols)
    if (c.outer > 0) v.push_back(c.outer);
  return v;
}

std::string PMDiagram::str() const {
  std::ostringstream os;
  os << "pm[";
  for (size_t i = 0; i < cols.size(); ++i) {
    const auto& c = cols[i];
    if (i) os << "|";
    os << c.lam << "<" << c.mu << "<" << c.outer;
    if (c.zero) os << "z";
  }
  os << "]";
  if (color) os << "c" << color;
  return os.str();
}

PMDiagram make_pm(FiniteType type, int n, std::vector<PMDiagram::Col> cols, int color) {
  PMDiagram P;
  P.type = type;
  P.n = n;
  std::sort(cols.begin(), cols.end(), col_less);
  P.cols = std::move(cols);
  P.color = color;

  int zeros = 0;
  bool has_n1_inner = false, has_empty_n1 = false;
  for (size_t j = 0; j < P.cols.size(); ++j) {
    const auto& c = P.cols[j];
    if (!(0 <= c.lam && c.lam <= c.mu && c.mu <= c.outer))
      throw std::invalid_argument("pm: not nested");
    if (c.mu - c.lam > 1 || c.outer - c.mu > 1)
      throw std::invalid_argument("pm: differences are not horizontal strips");
    if (j) {
      if (c.lam > P.cols[j - 1].lam || c.mu > P.cols[j - 1].mu ||
          c.outer > P.cols[j - 1].outer)
        throw std::invalid_argument("pm: shapes are not partitions");
    }
    if (c.zero) {
      ++zeros;
      if (type != FiniteType::B || c.outer != n || c.mu != c.lam || c.outer - c.lam != 1)
        throw std::invalid_argument("pm: misplaced 0 symbol");
    }
    if ((type == FiniteType::B || type == FiniteType::C) && c.lam >= n)
      throw std::invalid_argument("pm: inner shape has a height-n column");
    if (type == FiniteType::D) {
      if (c.outer > n - 1) throw std::invalid_argument("pm: type D outer too tall");
      if (c.lam == n - 1) {
        has_n1_inner = true;
        if (c.outer == n - 1) has_empty_n1 = true;
      }
    }
  }
  if (zeros > 1) throw std::invalid_argument("pm: more than one 0 symbol");
  if (type == FiniteType::D) {
    if (has_n1_inner) {
      if (color != 1 && color != 2)
        throw std::invalid_argument("pm: type D height-(n-1) inner columns need a color");
      if (!has_empty_n1) P.color = 1;  // color is invisible without empty columns
    } else {
      P.color = 0;
    }
  } else if (color != 0) {
    throw std::invalid_argument("pm: color only applies in type D");
  }
  return P;
}

std::vector<PMDiagram> enumerate_pm(FiniteType type, int n,
                                    const std::vector<int>& outer_heights, int width) {
  for (size_t j = 0; j + 1 < outer_heights.size(); ++j)
    if (outer_heights[j] < outer_heights[j + 1])
      throw std::invalid_argument("enumerate_pm: outer not a partition");
  if (width < 0) width = static_cast<int>(outer_heights.size());
  if (width < static_cast<int>(outer_heights.size()))
    throw std::invalid_argument("enumerate_pm: width too small");

  std::vector<PMDiagram> out;
  std::vector<PMDiagram::Col> cur;
  std::map<std::string, bool> seen;

  std::function<void(int, int, int, bool)> rec = [&](int j, int prev_lam, int prev_mu,
                                                     bool used_zero) {
    if (j == width) {
      auto finish = [&](int color) {
        try {
          PMDiagram P = make_pm(type, n, cur, color);
          if (!seen.count(P.str())) {
            seen[P.str()] = true;
            out.push_back(P);
          }
        } catch (const std::invalid_argument&) {
        }
      };
      bool has_n1 = false, has_empty_n1 = false;
      if (type == FiniteType::D)
        for (const auto& c : cur)
          if (c.lam == n - 1) {
            has_n1 = true;
            if (c.outer == n - 1) has_empty_n1 = true;
          }
      if (type == FiniteType::D && has_n1) {
        finish(1);
        if (has_empty_n1) finish(2);
      } else {
        finish(0);
      }
      return;
    }
    int o = j < static_cast<int>(outer_heights.size()) ? outer_heights[j] : 0;
    auto push = [&](int lam, int mu, bool zero) {
      if (lam < 0 || mu < 0 || lam > prev_lam || mu > prev_mu) return;
      if ((type == FiniteType::B || type == FiniteType::C) && lam >= n) return;
      if (zero && (type != FiniteType::B || o != n || used_zero)) return;
      cur.push_back({lam, mu, o, zero});
      rec(j + 1, lam, mu, used_zero || zero);
      cur.pop_back();
    };
    push(o, o, false);          // no symbol
    push(o - 1, o, false);      // plus on top
    push(o - 1, o - 1, false);  // minus on top
    push(o - 1, o - 1, true);   // type-B zero on top
    push(o - 2, o - 1, false);  // minus over plus
  };
  rec(0, 1 << 20, 1 << 20, false);
  return out;
}

KNTableau pm_to_highest(const PMDiagram& P) {
  int n = P.n;
  std::vector<std::vector<Letter>> cols;  // bottom-to-top entries per visible column
  std::vector<bool> full_column;          // step-(i) columns, skipped in the walk
  std::vector<int> plus_heights;          // the multiset S
  constexpr Letter kBarOne = -1000001;

  for (const auto& c : P.cols) {
    if (c.outer == 0) continue;
    std::vector<Letter> col(c.outer, 0);
    bool is_plus_at_n = (c.outer == n) && (c.mu == c.outer) && (c.mu - c.lam == 1);
    if (is_plus_at_n) {
      for (int h = 1; h <= n; ++h) col[h - 1] = h;
      cols.push_back(col);
      full_column.push_back(true);
      continue;
    }
    int string_top = c.outer;
    if (c.zero) {
      col[c.outer - 1] = 0;
      string_top = c.outer - 1;
    } else if (c.outer - c.mu == 1) {  // minus on top
      col[c.outer - 1] = kBarOne;
      string_top = c.outer - 1;
    }
    for (int h = 1; h <= string_top; ++h) col[h - 1] = h + 1;
    if (c.mu - c.lam == 1) plus_heights.push_back(c.lam + 1);  // all are < n here
    cols.push_back(col);
    full_column.push_back(false);
  }

  std::sort(plus_heights.begin(), plus_heights.end());
  auto take_max = [&]() {
    int h = plus_heights.back();
    plus_heights.pop_back();
    return h;
  };

  for (size_t j = 0; j < cols.size() && !plus_heights.empty(); ++j) {
    if (full_column[j]) continue;
    auto& col = cols[j];
    for (int h = static_cast<int>(col.size()); h >= 1 && !plus_heights.empty(); --h) {
      if (col[h - 1] == kBarOne) {
        col[h - 1] = -(take_max() + 1);
      } else if (h == 1 && col[0] == 2) {
        int k = 1;  // string length: consecutive run 2,3,... from the bottom
        while (k < static_cast<int>(col.size()) && col[k] == col[k - 1] + 1) ++k;
        int hh = take_max();
        for (int t = 0; t < k; ++t) col[t] = (t + 1 <= hh) ? (t + 1) : (t + 2);
      }
    }
  }
  for (auto& col : cols)
    for (auto& x : col)
      if (x == kBarOne) x = -1;

  if (P.type == FiniteType::D && P.color == 2) {
    bool has_empty_n1 = false;
    for (const auto& c : P.cols)
      if (c.lam == n - 1 && c.outer == n - 1) has_empty_n1 = true;
    if (has_empty_n1)
      for (auto& col : cols)
        if (static_cast<int>(col.size()) >= n - 1 && col[n - 2] == n) col[n - 2] = -n;
  }

  KNTableau t;
  t.columns = std::move(cols);
  return t;
}

PMDiagram highest_to_pm(FiniteType type, int n, const KNTableau& t, int width) {
  std::vector<int> outer;
  for (const auto& c : t.columns) outer.push_back(static_cast<int>(c.size()));
  LetterModel m{type, n, false};
  std::string want = tableau_label(m, t);
  for (const auto& P : enumerate_pm(type, n, outer, width))
    if (tableau_label(m, pm_to_highest(P)) == want) return P;
  throw std::invalid_argument("highest_to_pm: tableau is not a branched highest vector");
}

namespace {

std::vector<NestedPair::Sym> symbols_of(const PMDiagram& P) {
  std::vector<NestedPair::Sym> out;
  for (int j = 0; j < P.width(); ++j) {
    const auto& c = P.cols[j];
    if (c.zero) continue;  // the 0 symbol never takes part in the pairing
    if (c.outer - c.lam == 2) {
      out.push_back({j, c.lam + 2, -1, -1});
      out.push_back({j, c.lam + 1, +1, -1});
    } else if (c.outer - c.lam == 1) {
      if (c.mu == c.outer) out.push_back({j, c.lam + 1, +1, -1});
      else out.push_back({j, c.lam + 1, -1, -1});
    }
  }
  auto by_col = [](const NestedPair::Sym& a, const NestedPair::Sym& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.height < b.height;
  };
  std::sort(out.begin(), out.end(), by_col);
  return out;
}

} // namespace

NestedPair pair_symbols(const PMDiagram& P, const PMDiagram& p) {
  if (P.inner() != p.outer())
    throw std::invalid_argument("pair_symbols: shapes are not nested");
  NestedPair np;
  np.P = P;
  np.p = p;
  np.symbols_P = symbols_of(P);
  np.symbols_p = symbols_of(p);

  // rule 1: each + in p, left to right, pairs the leftmost free + of P weakly left
  for (size_t i = 0; i < np.symbols_p.size(); ++i) {
    auto& s = np.symbols_p[i];
    if (s.kind != +1) continue;
    for (size_t k = 0; k < np.symbols_P.size(); ++k) {
      auto& t = np.symbols_P[k];
      if (t.kind == +1 && t.partner < 0 && t.col <= s.col) {
        t.partner = static_cast<int>(i);
        s.partner = static_cast<int>(k);
        break;
      }
    }
  }
  // rule 2: each - in p, left to right, pairs the rightmost free - of P weakly left
  for (size_t i = 0; i < np.symbols_p.size(); ++i) {
    auto& s = np.symbols_p[i];
    if (s.kind != -1) continue;
    int best = -1;
    for (size_t k = 0; k < np.symbols_P.size(); ++k) {
      auto& t = np.symbols_P[k];
      if (t.kind == -1 && t.partner < 0 && t.col <= s.col) best = static_cast<int>(k);
    }
    if (best >= 0) {
      np.symbols_P[best].partner = static_cast<int>(i);
      s.partner = best;
    }
  }
  // rule 3: each still-free + in p pairs the leftmost free - in p
  for (size_t i = 0; i < np.symbols_p.size(); ++i) {
    auto& s = np.symbols_p[i];
    if (s.kind != +1 || s.partner >= 0) continue;
    for (size_t k = 0; k < np.symbols_p.size(); ++k) {
      auto& t = np.symbols_p[k];
      if (t.kind == -1 && t.partner < 0) {
        t.partner = static_cast<int>(i) + (1 << 20);
        s.partner = static_cast<int>(k) + (1 << 20);
        break;
      }
    }
  }
  return np;
}

namespace {

struct RowCounts {
  std::map<int, int> plus, minus;
  int zeros = 0;
};

RowCounts row_counts(const PMDiagram& P) {
  RowCounts rc;
  for (const auto& c : P.cols) {
    if (c.zero) {
      ++rc.zeros;
      continue;
    }
    if (c.outer - c.lam == 2) {
      rc.minus[c.lam + 2]++;
      rc.plus[c.lam + 1]++;
    } else if (c.outer - c.lam == 1) {
      if (c.mu == c.outer) rc.plus[c.lam + 1]++;
      else rc.minus[c.lam + 1]++;
    }
  }
  return rc;
}

// Rebuild the unique diagram with the given outer shape and row counts.
PMDiagram from_row_counts(FiniteType type, int n, int width,
                          const std::vector<int>& outer_heights, RowCounts rc, int color) {
  struct Slot { int outer, mu, lam; bool zero; };
  std::vector<Slot> slots(width);
  for (int j = 0; j < width; ++j) {
    int o = j < static_cast<int>(outer_heights.size()) ? outer_heights[j] : 0;
    slots[j] = {o, o, o, false};
  }
  // minuses (then the zero, which sits just left of them) go on the rightmost
  // columns of each outer height
  for (int j = width - 1; j >= 0; --j) {
    int h = slots[j].outer;
    if (h == 0) continue;
    auto it = rc.minus.find(h);
    if (it != rc.minus.end() && it->second > 0) {
      slots[j].mu = slots[j].lam = h - 1;
      it->second--;
    } else if (rc.zeros > 0 && type == FiniteType::B && h == n) {
      slots[j].mu = slots[j].lam = h - 1;
      slots[j].zero = true;
      --rc.zeros;
    }
  }
  for (auto& [h, c] : rc.minus)
    if (c > 0) throw std::invalid_argument("from_row_counts: minus placement failed");
  if (rc.zeros > 0) throw std::invalid_argument("from_row_counts: zero placement failed");
  // pluses go on the rightmost columns of each mu height
  for (int j = width - 1; j >= 0; --j) {
    if (slots[j].zero) continue;
    int h = slots[j].mu;
    if (h == 0 || slots[j].lam != h) continue;
    auto it = rc.plus.find(h);
    if (it != rc.plus.end() && it->second > 0) {
      slots[j].lam = h - 1;
      it->second--;
    }
  }
  for (auto& [h, c] : rc.plus)
    if (c > 0) throw std::invalid_argument("from_row_counts: plus placement failed");
  std::vector<PMDiagram::Col> cols;
  for (const auto& s : slots) cols.push_back({s.lam, s.mu, s.outer, s.zero});
  return make_pm(type, n, cols, color);
}

// Remove (delta=-1) or add (delta=+1) one box at the given height of a
// column-height multiset.
std::vector<int> adjust_shape(std::vector<int> shape, int height, int delta) {
  if (delta < 0) {
    for (auto& h : shape)
      if (h == height) {
        h -= 1;
        std::sort(shape.rbegin(), shape.rend());
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        return shape;
      }
    throw invariant_error("adjust_shape: no column of the required height");
  }
  for (auto& h : shape)
    if (h == height - 1) {
      h += 1;
      std::sort(shape.rbegin(), shape.rend());
      return shape;
    }
  if (height == 1) {
    shape.push_back(1);
    std::sort(shape.rbegin(), shape.rend());
    return shape;
  }
  throw invariant_error("adjust_shape: no column of the required height");
}

} // namespace

std::optional<NestedPair> e1_nested(const PMDiagram& P, const PMDiagram& p) {
  NestedPair np = pair_symbols(P, p);

  const NestedPair::Sym* plus_p = nullptr;  // rightmost unpaired + in p
  for (const auto& s : np.symbols_p)
    if (s.kind == +1 && s.partner < 0)
      if (!plus_p || s.col > plus_p->col) plus_p = &s;
  const NestedPair::Sym* minus_P = nullptr;  // leftmost unpaired - in P
  for (const auto& s : np.symbols_P)
    if (s.kind == -1 && s.partner < 0)
      if (!minus_P || s.col < minus_P->col) minus_P = &s;

  auto rcP = row_counts(P);
  auto rcp = row_counts(p);
  std::vector<int> inter = P.inner();

  if (plus_p) {
    int k = plus_p->height;
    const auto& pc = p.cols[plus_p->col];
    bool minus_above = (pc.outer - pc.lam == 2 && pc.lam + 1 == k);
    if (minus_above) {
      inter = adjust_shape(inter, k + 1, -1);
      rcP.plus[k + 1]++;
      rcp.minus[k + 1]--;
      rcp.plus[k]--;
      rcp.minus[k]++;
      if (rcp.minus[k + 1] < 0 || rcp.plus[k] < 0) throw invariant_error("e1_nested: counts");
    } else {
      inter = adjust_shape(inter, k, -1);
      rcP.plus[k]++;
      rcp.plus[k]--;
      if (rcp.plus[k] < 0) throw invariant_error("e1_nested: counts");
    }
  } else if (minus_P) {
    int k = minus_P->height;
    const auto& Pc = P.cols[minus_P->col];
    bool plus_below = (Pc.outer - Pc.lam == 2 && Pc.lam + 2 == k);
    if (plus_below) {
      inter = adjust_shape(inter, k - 1, +1);
      rcP.minus[k]--;
      rcP.plus[k]++;
      rcP.plus[k - 1]--;
      rcp.minus[k - 1]++;
      if (rcP.minus[k] < 0 || rcP.plus[k - 1] < 0) throw invariant_error("e1_nested: counts");
    } else {
      inter = adjust_shape(inter, k, +1);
      rcP.minus[k]--;
      rcp.minus[k]++;
      if (rcP.minus[k] < 0) throw invariant_error("e1_nested: counts");
    }
  } else {
    return std::nullopt;
  }

  PMDiagram P2 = from_row_counts(P.type, P.n, P.width(), P.outer(), rcP, P.color);
  PMDiagram p2 = from_row_counts(p.type, p.n, p.width(), inter, rcp, p.color);
  return pair_symbols(P2, p2);
}

PMDiagram sigma_involution(const PMDiagram& P, int r) {
  for (const auto& c : P.cols) {
    if (c.outer % 2 != r % 2 || c.outer > r)
      throw std::invalid_argument("sigma_involution: outer not from the rectangle");
    if (c.zero) throw std::invalid_argument("sigma_involution: unexpected 0 symbol");
  }
  std::map<int, int> cnt_plus, cnt_minus, cnt_pair, cnt_plain;
  for (const auto& c : P.cols) {
    int d = c.outer - c.lam;
    if (d == 0) cnt_plain[c.lam]++;
    else if (d == 2) cnt_pair[c.lam]++;
    else if (c.mu == c.outer) cnt_plus[c.lam]++;
    else cnt_minus[c.lam]++;
  }
  std::vector<PMDiagram::Col> out;
  for (int i = 0; i <= r; ++i) {
    if (i == r) {
      if (cnt_plus[r] || cnt_minus[r] || cnt_pair[r])
        throw std::invalid_argument("sigma_involution: symbols above full columns");
      for (int k = 0; k < cnt_plain[r]; ++k) out.push_back({r, r, r, false});
      continue;
    }
    if ((r - 1 - i) % 2 == 0) {
      if (cnt_plain[i] || cnt_pair[i])
        throw std::invalid_argument("sigma_involution: parity violation");
      int a = cnt_plus[i], b = cnt_minus[i];
      for (int k = 0; k < b; ++k) out.push_back({i, i + 1, i + 1, false});
      for (int k = 0; k < a; ++k) out.push_back({i, i, i + 1, false});
    } else {
      if (cnt_plus[i] || cnt_minus[i])
        throw std::invalid_argument("sigma_involution: parity violation");
      int c = cnt_pair[i], d = cnt_plain[i];
      for (int k = 0; k < d; ++k) out.push_back({i, i + 1, i + 2, false});
      for (int k = 0; k < c; ++k) out.push_back({i, i, i, false});
    }
  }
  return make_pm(P.type, P.n, out, P.color);
}

} // namespace krc
