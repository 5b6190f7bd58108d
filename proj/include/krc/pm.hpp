/*
  pm.hpp — plus-minus diagrams: nested partitions lambda <= mu <= Lambda with
  horizontal-strip differences, the branching bijection onto X_{n-1} highest
  weight tableaux, nested pairs with the e_1 action, and the involution used
  by the automorphism-constructed KR crystals.
*/
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/kn.hpp"

namespace krc {

struct PMDiagram {
  FiniteType type;
  int n = 0;
  // One entry per slot, canonical order; slots where the outer shape already
  // vanished are kept (lam = mu = outer = 0) so the rectangle width survives.
  struct Col {
    int lam = 0, mu = 0, outer = 0;
    bool zero = false;  // type B: the single 0 symbol topping this column
    bool operator==(const Col&) const = default;
  };
  std::vector<Col> cols;
  int color = 0;  // type D: 1 or 2 when lambda has height-(n-1) columns

  int width() const { return static_cast<int>(cols.size()); }
  std::vector<int> inner() const;   // lambda column heights, zeros stripped
  std::vector<int> outer() const;   // Lambda column heights, zeros stripped
  std::string str() const;
  bool operator==(const PMDiagram&) const = default;
};

// Canonicalize slot order and check every structural and type condition.
PMDiagram make_pm(FiniteType type, int n, std::vector<PMDiagram::Col> cols, int color);

// All +- diagrams with the given outer shape, laid out in `width` slots
// (width defaults to the number of outer columns).
std::vector<PMDiagram> enumerate_pm(FiniteType type, int n,
                                    const std::vector<int>& outer_heights,
                                    int width = -1);

// The branching algorithm: diagram -> X_{n-1} highest weight tableau.
KNTableau pm_to_highest(const PMDiagram& P);

// Inverse of pm_to_highest on X_{n-1}-highest tableaux with the given outer
// shape; throws if the tableau is not in the image.
PMDiagram highest_to_pm(FiniteType type, int n, const KNTableau& t, int width = -1);

struct NestedPair {
  PMDiagram P, p;  // outer(p) == inner(P), slot grids aligned
  // pairing results: index of the partner symbol or -1
  struct Sym {
    int col = 0, height = 0;
    int kind = 0;  // +1 or -1
    int partner = -1;
  };
  std::vector<Sym> symbols_P, symbols_p;
};

NestedPair pair_symbols(const PMDiagram& P, const PMDiagram& p);

// Lemma-style e_1 on nested pairs; nullopt when there is no unpaired + in p
// and no unpaired - in P.
std::optional<NestedPair> e1_nested(const PMDiagram& P, const PMDiagram& p);

// Involution on diagrams whose outer shape sits inside the r x s rectangle
// with all column heights congruent to r mod 2 (the case-(AUT) situation).
// Swaps +/- over lambda-columns of height i = r-1 mod 2 and swaps
// pair-topped/empty columns of height i = r mod 2, including height 0;
// full columns of height r are untouched.
PMDiagram sigma_involution(const PMDiagram& P, int r);

} // namespace krc
