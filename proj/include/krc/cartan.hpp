/*
  cartan.hpp — static data and arithmetic for the non-exceptional affine
  families: Kac marks/comarks, c_r, node duality, diagram automorphisms,
  and translation-element decompositions t_lambda = w tau in the extended
  affine Weyl group.
*/
#pragma once

#include <string>
#include <vector>

#include "krc/rat.hpp"

namespace krc {

enum class Family {
  A1,      // A_n^(1)
  B1,      // B_n^(1)
  C1,      // C_n^(1)
  D1,      // D_n^(1)
  A2odd,   // A_{2n-1}^(2)
  A2even,  // A_{2n}^(2)
  D2,      // D_{n+1}^(2)
};

enum class FiniteType { A, B, C, D };

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight on the affine fundamental weights Lambda_0..Lambda_n.
using AffineWeight = std::vector<int>;
// Weight on the finite fundamental weights omega_1..omega_n (index 0 = omega_1).
using FiniteWeight = std::vector<int>;
// Permutation of the affine node set {0..n}.
using DiagramAutomorphism = std::vector<int>;
// Word in simple reflections, letters in application order (first applied first).
using WeylWord = std::vector<int>;

struct CartanSpec {
  Family family;
  int n = 0;                     // rank of the finite part; I = {0..n}
  std::vector<int> marks;        // a_i
  std::vector<int> comarks;      // a_i^vee
  FiniteType finite;             // underlying finite type
  int eps_dim = 0;               // dimension of the epsilon coordinate space

  std::string name() const;
  // Cartan matrix entry <alpha_i^vee, alpha_j> over the affine index set.
  int cartan(int i, int j) const;
  bool is_diagram_automorphism(const DiagramAutomorphism& t) const;
};

CartanSpec make_spec(Family family, int rank);
Family parse_family_name(const std::string& s, int& rank_out); // e.g. "A2(1)", "A5(2)", "D3(2)"

int c_coefficient(const CartanSpec& spec, int r);
int dual_node(const CartanSpec& spec, int r);
int level(const CartanSpec& spec, const AffineWeight& w);

DiagramAutomorphism tau_identity(const CartanSpec& spec);
DiagramAutomorphism tau_compose(const DiagramAutomorphism& a, const DiagramAutomorphism& b); // a after b
DiagramAutomorphism tau_for_kr(const CartanSpec& spec, int r);

// Classical highest weight of the component holding the element u with
// eps(u) = l Lambda_0 (Figure "u" table data).
FiniteWeight u_component_weight(const CartanSpec& spec, int r, int level);

// epsilon-coordinates of finite weights; half-integers appear for spin nodes.
std::vector<Rat> finite_weight_eps(const CartanSpec& spec, const FiniteWeight& w);

struct TranslationDecomposition {
  WeylWord word;              // reduced word for w, application order
  DiagramAutomorphism tau;
};

// Decompose t_lambda = w tau for lambda in the lattice Mtilde = sum Z c_i omega_i.
TranslationDecomposition translation_decompose(const CartanSpec& spec, const FiniteWeight& lambda);

// Affine action of the decomposition on a point in epsilon coordinates
// (used by the group-law tests).
std::vector<Rat> apply_translation_decomposition(const CartanSpec& spec,
                                                 const TranslationDecomposition& d,
                                                 std::vector<Rat> p);

} // namespace krc
