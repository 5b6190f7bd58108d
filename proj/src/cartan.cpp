#include "krc/cartan.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace krc {

namespace {

// Finite simple roots in epsilon coordinates.
std::vector<Rat> simple_root_eps(const CartanSpec& s, int i) {
  std::vector<Rat> a(s.eps_dim, Rat(0));
  switch (s.finite) {
    case FiniteType::A:
      a[i - 1] = 1; a[i] = -1; break;
    case FiniteType::B:
      if (i < s.n) { a[i - 1] = 1; a[i] = -1; } else a[s.n - 1] = 1;
      break;
    case FiniteType::C:
      if (i < s.n) { a[i - 1] = 1; a[i] = -1; } else a[s.n - 1] = 2;
      break;
    case FiniteType::D:
      if (i < s.n) { a[i - 1] = 1; a[i] = -1; }
      else { a[s.n - 2] = 1; a[s.n - 1] = 1; }
      break;
  }
  return a;
}

std::vector<Rat> theta_eps(const CartanSpec& s) {
  std::vector<Rat> t(s.eps_dim, Rat(0));
  switch (s.family) {
    case Family::A1: t[0] = 1; t[s.eps_dim - 1] = -1; break;
    case Family::B1:
    case Family::D1:
    case Family::A2odd: t[0] = 1; t[1] = 1; break;
    case Family::C1:
    case Family::A2even: t[0] = 2; break;
    case Family::D2: t[0] = 1; break;
  }
  return t;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat r(0);
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

// Root of alpha_i including alpha_0 (finite part only; the delta part is
// orthogonal to everything in the finite form).
std::vector<Rat> affine_root_finite_part(const CartanSpec& s, int i) {
  if (i > 0) return simple_root_eps(s, i);
  std::vector<Rat> t = theta_eps(s);
  Rat a0(s.marks[0]);
  for (auto& x : t) x = -(x / a0);
  return t;
}

int a0_of(const CartanSpec& s) { return s.marks[0]; }

Rat pair_alpha_vee(const CartanSpec& s, int i, const std::vector<Rat>& p) {
  // <alpha_i^vee, p> for finite i.
  switch (s.finite) {
    case FiniteType::A: return p[i - 1] - p[i];
    case FiniteType::B:
      if (i < s.n) return p[i - 1] - p[i];
      return p[s.n - 1] * Rat(2);
    case FiniteType::C:
      if (i < s.n) return p[i - 1] - p[i];
      return p[s.n - 1];
    case FiniteType::D:
      if (i < s.n) return p[i - 1] - p[i];
      return p[s.n - 2] + p[s.n - 1];
  }
  throw std::logic_error("pair_alpha_vee");
}

Rat pair_theta_vee(const CartanSpec& s, const std::vector<Rat>& p) {
  switch (s.family) {
    case Family::A1: return p[0] - p[s.eps_dim - 1];
    case Family::B1:
    case Family::D1:
    case Family::A2odd: return p[0] + p[1];
    case Family::C1:
    case Family::A2even: return p[0];
    case Family::D2: return p[0] * Rat(2);
  }
  throw std::logic_error("pair_theta_vee");
}

void apply_simple_reflection(const CartanSpec& s, int i, std::vector<Rat>& p) {
  Rat c = pair_alpha_vee(s, i, p);
  std::vector<Rat> a = simple_root_eps(s, i);
  for (int k = 0; k < s.eps_dim; ++k) p[k] -= c * a[k];
}

void apply_s0(const CartanSpec& s, std::vector<Rat>& p) {
  Rat c = pair_theta_vee(s, p);
  std::vector<Rat> t = theta_eps(s);
  for (int k = 0; k < s.eps_dim; ++k) p[k] -= c * t[k];
  Rat a0(a0_of(s));
  for (int k = 0; k < s.eps_dim; ++k) p[k] += t[k] / a0;
}

// Affine transformation x -> W x + t with the diagram permutation it realizes.
struct AffMap {
  std::vector<std::vector<Rat>> W;
  std::vector<Rat> t;
  DiagramAutomorphism perm;

  std::vector<Rat> apply(const std::vector<Rat>& p) const {
    std::vector<Rat> q(t);
    for (size_t i = 0; i < W.size(); ++i)
      for (size_t j = 0; j < W.size(); ++j)
        if (W[i][j].num != 0) q[i] += W[i][j] * p[j];
    return q;
  }
};

AffMap aff_identity(const CartanSpec& s) {
  AffMap m;
  m.W.assign(s.eps_dim, std::vector<Rat>(s.eps_dim, Rat(0)));
  for (int i = 0; i < s.eps_dim; ++i) m.W[i][i] = 1;
  m.t.assign(s.eps_dim, Rat(0));
  m.perm.resize(s.n + 1);
  for (int i = 0; i <= s.n; ++i) m.perm[i] = i;
  return m;
}

AffMap aff_compose(const AffMap& a, const AffMap& b) {
  AffMap m;
  size_t d = a.W.size();
  m.W.assign(d, std::vector<Rat>(d, Rat(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k)
      if (a.W[i][k].num != 0)
        for (size_t j = 0; j < d; ++j) m.W[i][j] += a.W[i][k] * b.W[k][j];
  m.t = a.t;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m.t[i] += a.W[i][j] * b.t[j];
  m.perm = tau_compose(a.perm, b.perm);
  return m;
}

// Solve W alpha_i = r_i, i=1..n, over the epsilon space (finite B/C/D only,
// where the simple roots form a basis).
std::vector<std::vector<Rat>> solve_linear_map(const CartanSpec& s,
                                               const std::vector<std::vector<Rat>>& images) {
  int d = s.eps_dim;
  // Columns of A are the alpha_i; W = R A^{-1}. Solve A^T W^T = R^T row by row.
  std::vector<std::vector<Rat>> A(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 1; i <= s.n; ++i) {
    auto a = simple_root_eps(s, i);
    for (int k = 0; k < d; ++k) A[k][i - 1] = a[k];
  }
  // Invert A by Gauss-Jordan.
  std::vector<std::vector<Rat>> inv(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i) inv[i][i] = 1;
  auto M = A;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (M[r][col].num != 0) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular root matrix");
    std::swap(M[piv], M[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = M[col][col];
    for (int j = 0; j < d; ++j) { M[col][j] = M[col][j] / f; inv[col][j] = inv[col][j] / f; }
    for (int r = 0; r < d; ++r) {
      if (r == col || M[r][col].num == 0) continue;
      Rat g = M[r][col];
      for (int j = 0; j < d; ++j) {
        M[r][j] -= g * M[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  // W = R * A^{-1} where R has the images as columns.
  std::vector<std::vector<Rat>> W(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < s.n; ++k) W[i][j] += images[k][i] * inv[k][j];
  return W;
}

// Realize a nontrivial tau in Sigma as t_{omega_{tau(0)}} w_tau, with w_tau the
// linear map alpha_i -> iota(tau(i)), iota(0) = -theta.
AffMap aff_from_perm(const CartanSpec& s, const DiagramAutomorphism& perm) {
  AffMap m;
  m.perm = perm;
  bool is_id = true;
  for (int i = 0; i <= s.n; ++i)
    if (perm[i] != i) { is_id = false; break; }
  if (is_id) return aff_identity(s);
  if (!s.is_diagram_automorphism(perm))
    throw invariant_error("Sigma candidate is not a diagram automorphism");

  if (s.family == Family::A1) {
    // pr^k: built by composing the generator, handled by the caller.
    throw std::logic_error("type A Sigma built from pr powers");
  }
  std::vector<std::vector<Rat>> images;
  for (int i = 1; i <= s.n; ++i) {
    int ti = perm[i];
    if (ti > 0) images.push_back(simple_root_eps(s, ti));
    else {
      auto t = theta_eps(s);
      for (auto& x : t) x = -x;
      images.push_back(t);
    }
  }
  m.W = solve_linear_map(s, images);
  m.t = finite_weight_eps(s, [&] {
    FiniteWeight w(s.n, 0);
    w[perm[0] - 1] = 1;
    return w;
  }());
  // Consistency: w_tau(-theta) must be iota(tau(0)).
  {
    auto th = theta_eps(s);
    std::vector<Rat> img(s.eps_dim, Rat(0));
    for (int i = 0; i < s.eps_dim; ++i)
      for (int j = 0; j < s.eps_dim; ++j) img[i] += m.W[i][j] * (-th[j]);
    std::vector<Rat> want = perm[0] > 0 ? simple_root_eps(s, perm[0]) : th;
    if (perm[0] == 0) for (auto& x : want) x = -x;
    if (img != want) throw invariant_error("w_tau image of -theta inconsistent");
  }
  return m;
}

AffMap type_A_pr(const CartanSpec& s) {
  AffMap m = aff_identity(s);
  int d = s.eps_dim;
  m.W.assign(d, std::vector<Rat>(d, Rat(0)));
  for (int j = 0; j < d; ++j) m.W[(j + 1) % d][j] = 1;
  m.t.assign(d, Rat(0));
  m.t[0] = 1; // omega_1
  for (int i = 0; i <= s.n; ++i) m.perm[i] = (i + 1) % (s.n + 1);
  return m;
}

std::vector<AffMap> sigma_table(const CartanSpec& s) {
  std::vector<AffMap> out;
  out.push_back(aff_identity(s));
  if (s.family == Family::A1) {
    AffMap g = type_A_pr(s);
    AffMap cur = g;
    for (int k = 1; k <= s.n; ++k) {
      out.push_back(cur);
      cur = aff_compose(cur, g);
    }
    return out;
  }
  std::vector<DiagramAutomorphism> gens;
  for (int r = 1; r <= s.n; ++r) gens.push_back(tau_for_kr(s, r));
  // Close under composition (all groups here are abelian and tiny).
  std::vector<DiagramAutomorphism> elems = {tau_identity(s)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& g : gens)
      for (size_t i = 0; i < elems.size(); ++i) {
        auto c = tau_compose(g, elems[i]);
        if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
          elems.push_back(c);
          grew = true;
        }
      }
  }
  for (const auto& p : elems) {
    bool is_id = true;
    for (int i = 0; i <= s.n; ++i)
      if (p[i] != i) { is_id = false; break; }
    if (!is_id) out.push_back(aff_from_perm(s, p));
  }
  return out;
}

std::vector<Rat> generic_point(const CartanSpec& s) {
  // Strictly dominant, well inside the fundamental alcove.
  long long K = 16LL * (s.eps_dim + 2) * (s.eps_dim + 2);
  std::vector<Rat> p(s.eps_dim);
  for (int j = 0; j < s.eps_dim; ++j) p[j] = Rat(3 * (s.eps_dim - j) + 1, K);
  return p;
}

// Canonical representative for type A points (defined modulo (1,...,1)).
void canonicalize_A(const CartanSpec& s, std::vector<Rat>& p) {
  if (s.family != Family::A1) return;
  Rat last = p[s.eps_dim - 1];
  for (auto& x : p) x -= last;
}

} // namespace

std::string CartanSpec::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::A1: os << "A" << n << "(1)"; break;
    case Family::B1: os << "B" << n << "(1)"; break;
    case Family::C1: os << "C" << n << "(1)"; break;
    case Family::D1: os << "D" << n << "(1)"; break;
    case Family::A2odd: os << "A" << (2 * n - 1) << "(2)"; break;
    case Family::A2even: os << "A" << (2 * n) << "(2)"; break;
    case Family::D2: os << "D" << (n + 1) << "(2)"; break;
  }
  return os.str();
}

int CartanSpec::cartan(int i, int j) const {
  auto ai = affine_root_finite_part(*this, i);
  auto aj = affine_root_finite_part(*this, j);
  Rat v = dot(ai, aj) * Rat(2) / dot(ai, ai);
  if (v.den != 1) throw std::logic_error("non-integer Cartan entry");
  return static_cast<int>(v.num);
}

bool CartanSpec::is_diagram_automorphism(const DiagramAutomorphism& t) const {
  if (static_cast<int>(t.size()) != n + 1) return false;
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i <= n; ++i) {
    if (t[i] < 0 || t[i] > n || seen[t[i]]) return false;
    seen[t[i]] = true;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (cartan(t[i], t[j]) != cartan(i, j)) return false;
  return true;
}

CartanSpec make_spec(Family family, int rank) {
  CartanSpec s;
  s.family = family;
  s.n = rank;
  auto bad = [&](const char* what) {
    throw unsupported_error(std::string("unsupported family/rank: ") + what);
  };
  switch (family) {
    case Family::A1:
      if (rank < 1) bad("A_n(1) needs n >= 1");
      s.finite = FiniteType::A;
      s.eps_dim = rank + 1;
      s.marks.assign(rank + 1, 1);
      s.comarks.assign(rank + 1, 1);
      break;
    case Family::B1:
      if (rank < 2) bad("B_n(1) needs n >= 2");
      s.finite = FiniteType::B;
      s.eps_dim = rank;
      s.marks.assign(rank + 1, 2);
      s.marks[0] = s.marks[1] = 1;
      s.comarks = s.marks;
      s.comarks[rank] = 1;
      break;
    case Family::C1:
      if (rank < 2) bad("C_n(1) needs n >= 2");
      s.finite = FiniteType::C;
      s.eps_dim = rank;
      s.marks.assign(rank + 1, 2);
      s.marks[0] = s.marks[rank] = 1;
      s.comarks.assign(rank + 1, 1);
      break;
    case Family::D1:
      if (rank < 4) bad("D_n(1) needs n >= 4");
      s.finite = FiniteType::D;
      s.eps_dim = rank;
      s.marks.assign(rank + 1, 2);
      s.marks[0] = s.marks[1] = s.marks[rank - 1] = s.marks[rank] = 1;
      s.comarks = s.marks;
      break;
    case Family::A2odd:
      if (rank < 2) bad("A_{2n-1}(2) needs n >= 2");
      s.finite = FiniteType::C;
      s.eps_dim = rank;
      s.marks.assign(rank + 1, 2);
      s.marks[0] = s.marks[1] = s.marks[rank] = 1;
      s.comarks.assign(rank + 1, 2);
      s.comarks[0] = s.comarks[1] = 1;
      break;
    case Family::A2even:
      if (rank < 2) bad("A_{2n}(2) needs n >= 2");
      s.finite = FiniteType::C;
      s.eps_dim = rank;
      s.marks.assign(rank + 1, 2);
      s.marks[rank] = 1;
      s.comarks.assign(rank + 1, 2);
      s.comarks[0] = 1;
      break;
    case Family::D2:
      if (rank < 2) bad("D_{n+1}(2) needs n >= 2");
      s.finite = FiniteType::B;
      s.eps_dim = rank;
      s.marks.assign(rank + 1, 1);
      s.comarks.assign(rank + 1, 2);
      s.comarks[0] = s.comarks[rank] = 1;
      break;
  }
  // Kac-table consistency: sum_{i>=1} a_i alpha_i = theta in the finite space,
  // and the comarks annihilate the Cartan matrix.
  {
    std::vector<Rat> acc(s.eps_dim, Rat(0));
    for (int i = 1; i <= s.n; ++i) {
      auto a = simple_root_eps(s, i);
      for (int k = 0; k < s.eps_dim; ++k) acc[k] += Rat(s.marks[i]) * a[k];
    }
    if (acc != theta_eps(s)) throw invariant_error("marks inconsistent with theta");
    for (int j = 0; j <= s.n; ++j) {
      long long v = 0;
      for (int i = 0; i <= s.n; ++i) v += static_cast<long long>(s.comarks[i]) * s.cartan(i, j);
      if (v != 0) throw invariant_error("comarks are not the null left vector");
    }
  }
  return s;
}

Family parse_family_name(const std::string& str, int& rank_out) {
  char letter = 0;
  int num = 0, twist = 0;
  size_t i = 0;
  if (i < str.size() && std::isalpha(static_cast<unsigned char>(str[i]))) letter = str[i++];
  while (i < str.size() && std::isdigit(static_cast<unsigned char>(str[i])))
    num = num * 10 + (str[i++] - '0');
  if (i + 2 < str.size() + 1 && str[i] == '(' && str.back() == ')')
    twist = std::atoi(str.substr(i + 1, str.size() - i - 2).c_str());
  if (twist != 1 && twist != 2)
    throw unsupported_error("cannot parse type name: " + str);
  if (twist == 1) {
    rank_out = num;
    switch (letter) {
      case 'A': return Family::A1;
      case 'B': return Family::B1;
      case 'C': return Family::C1;
      case 'D': return Family::D1;
    }
    throw unsupported_error("unsupported family: " + str);
  }
  if (letter == 'A') {
    if (num % 2 == 1) { rank_out = (num + 1) / 2; return Family::A2odd; }
    rank_out = num / 2;
    return Family::A2even;
  }
  if (letter == 'D') { rank_out = num - 1; return Family::D2; }
  throw unsupported_error("unsupported family: " + str);
}

int c_coefficient(const CartanSpec& spec, int r) {
  if (r < 1 || r > spec.n) throw std::invalid_argument("c_coefficient: node out of range");
  int a = spec.marks[r], av = spec.comarks[r];
  return std::max(1, a / av);
}

int dual_node(const CartanSpec& spec, int r) {
  if (r < 1 || r > spec.n) throw std::invalid_argument("dual_node: node out of range");
  if (spec.family == Family::A1) return spec.n + 1 - r;
  if (spec.family == Family::D1 && spec.n % 2 == 1) {
    if (r == spec.n) return spec.n - 1;
    if (r == spec.n - 1) return spec.n;
  }
  return r;
}

int level(const CartanSpec& spec, const AffineWeight& w) {
  if (static_cast<int>(w.size()) != spec.n + 1)
    throw std::invalid_argument("level: weight has wrong length");
  int l = 0;
  for (int i = 0; i <= spec.n; ++i) l += spec.comarks[i] * w[i];
  return l;
}

DiagramAutomorphism tau_identity(const CartanSpec& spec) {
  DiagramAutomorphism t(spec.n + 1);
  for (int i = 0; i <= spec.n; ++i) t[i] = i;
  return t;
}

DiagramAutomorphism tau_compose(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
  DiagramAutomorphism c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

namespace {

DiagramAutomorphism swap_nodes(int n, int i, int j) {
  DiagramAutomorphism t(n + 1);
  for (int k = 0; k <= n; ++k) t[k] = k;
  std::swap(t[i], t[j]);
  return t;
}

DiagramAutomorphism flip_all(int n) {
  DiagramAutomorphism t(n + 1);
  for (int k = 0; k <= n; ++k) t[k] = n - k;
  return t;
}

} // namespace

DiagramAutomorphism tau_for_kr(const CartanSpec& spec, int r) {
  if (r < 1 || r > spec.n) throw std::invalid_argument("tau_for_kr: node out of range");
  int n = spec.n;
  switch (spec.family) {
    case Family::A1: {
      DiagramAutomorphism t(n + 1);
      for (int k = 0; k <= n; ++k) t[k] = (k + r) % (n + 1);
      return t;
    }
    case Family::B1:
    case Family::A2odd:
      return (r % 2 == 1) ? swap_nodes(n, 0, 1) : tau_identity(spec);
    case Family::C1:
    case Family::D2:
      return (r == n) ? flip_all(n) : tau_identity(spec);
    case Family::A2even:
      return tau_identity(spec);
    case Family::D1: {
      if (r <= n - 2)
        return (r % 2 == 1) ? tau_compose(swap_nodes(n, 0, 1), swap_nodes(n, n - 1, n))
                            : tau_identity(spec);
      // In the table products the rightmost map acts first.
      DiagramAutomorphism flip = flip_all(n);
      DiagramAutomorphism sw = swap_nodes(n, n - 1, n);
      DiagramAutomorphism sw_n1 = (n + 1) % 2 == 0 ? tau_identity(spec) : sw;
      DiagramAutomorphism sw_n = n % 2 == 0 ? tau_identity(spec) : sw;
      if (r == n - 1)
        return tau_compose(flip, tau_compose(swap_nodes(n, 0, 1), sw_n1));
      return tau_compose(flip, sw_n);
    }
  }
  throw std::logic_error("tau_for_kr");
}

FiniteWeight u_component_weight(const CartanSpec& spec, int r, int level) {
  FiniteWeight w(spec.n, 0);
  switch (spec.family) {
    case Family::A1: w[r - 1] = level; return w;
    case Family::B1:
    case Family::A2odd:
      if (r % 2 == 1) w[0] = level;
      return w;
    case Family::C1:
    case Family::D2:
      if (r == spec.n) w[spec.n - 1] = level;
      return w;
    case Family::A2even: return w;
    case Family::D1:
      if (r <= spec.n - 2) {
        if (r % 2 == 1) w[0] = level;
      } else {
        w[r - 1] = level;
      }
      return w;
  }
  throw std::logic_error("u_component_weight");
}

std::vector<Rat> finite_weight_eps(const CartanSpec& spec, const FiniteWeight& w) {
  if (static_cast<int>(w.size()) != spec.n)
    throw std::invalid_argument("finite_weight_eps: wrong length");
  std::vector<Rat> p(spec.eps_dim, Rat(0));
  int n = spec.n;
  for (int i = 1; i <= n; ++i) {
    if (w[i - 1] == 0) continue;
    Rat c(w[i - 1]);
    switch (spec.finite) {
      case FiniteType::A:
      case FiniteType::C:
        for (int k = 0; k < i; ++k) p[k] += c;
        break;
      case FiniteType::B:
        if (i < n) for (int k = 0; k < i; ++k) p[k] += c;
        else for (int k = 0; k < n; ++k) p[k] += c / Rat(2);
        break;
      case FiniteType::D:
        if (i <= n - 2) for (int k = 0; k < i; ++k) p[k] += c;
        else if (i == n - 1) {
          for (int k = 0; k < n - 1; ++k) p[k] += c / Rat(2);
          p[n - 1] -= c / Rat(2);
        } else {
          for (int k = 0; k < n; ++k) p[k] += c / Rat(2);
        }
        break;
    }
  }
  return p;
}

TranslationDecomposition translation_decompose(const CartanSpec& spec, const FiniteWeight& lambda) {
  if (static_cast<int>(lambda.size()) != spec.n)
    throw std::invalid_argument("translation_decompose: weight has wrong length");
  for (int i = 1; i <= spec.n; ++i)
    if (lambda[i - 1] % c_coefficient(spec, i) != 0)
      throw std::invalid_argument("translation_decompose: lambda not in Mtilde");

  auto p0 = generic_point(spec);
  auto lam = finite_weight_eps(spec, lambda);
  std::vector<Rat> p = p0;
  for (int k = 0; k < spec.eps_dim; ++k) p[k] += lam[k];

  Rat wall = Rat(1, a0_of(spec));
  std::vector<int> recorded;
  for (int guard = 0; ; ++guard) {
    if (guard > 100000) throw invariant_error("alcove walk did not terminate");
    int move = -1;
    for (int i = 1; i <= spec.n; ++i)
      if (pair_alpha_vee(spec, i, p).sign() < 0) { move = i; break; }
    if (move < 0 && pair_theta_vee(spec, p) > wall) move = 0;
    if (move < 0) break;
    if (move == 0) apply_s0(spec, p);
    else apply_simple_reflection(spec, move, p);
    recorded.push_back(move);
  }

  auto table = sigma_table(spec);
  canonicalize_A(spec, p);
  int hit = -1;
  for (size_t t = 0; t < table.size(); ++t) {
    auto q = table[t].apply(p0);
    canonicalize_A(spec, q);
    if (q == p) {
      if (hit >= 0) throw invariant_error("Sigma match not unique");
      hit = static_cast<int>(t);
    }
  }
  if (hit < 0)
    throw invariant_error("alcove-walk residual not in the derived Sigma table");

  TranslationDecomposition d;
  d.word.assign(recorded.rbegin(), recorded.rend());
  d.tau = table[hit].perm;
  return d;
}

std::vector<Rat> apply_translation_decomposition(const CartanSpec& spec,
                                                 const TranslationDecomposition& d,
                                                 std::vector<Rat> p) {
  auto table = sigma_table(spec);
  const AffMap* tm = nullptr;
  for (const auto& m : table)
    if (m.perm == d.tau) { tm = &m; break; }
  if (!tm) throw std::invalid_argument("tau not in Sigma");
  p = tm->apply(p);
  for (int i : d.word) {
    if (i == 0) apply_s0(spec, p);
    else apply_simple_reflection(spec, i, p);
  }
  return p;
}

} // namespace krc
