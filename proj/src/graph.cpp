#include "krc/graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace krc {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() {
#ifdef _OPENMP
  return g_parallel.load();
#else
  return false;
#endif
}

int CrystalGraph::color_pos(int color) const {
  for (size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == color) return static_cast<int>(i);
  throw std::invalid_argument("graph has no color " + std::to_string(color));
}

bool CrystalGraph::has_color(int color) const {
  return std::find(colors.begin(), colors.end(), color) != colors.end();
}

int CrystalGraph::vertex(const std::string& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return static_cast<int>(it - labels.begin());
}

int CrystalGraph::vertex_checked(const std::string& label) const {
  int v = vertex(label);
  if (v < 0) throw std::invalid_argument("no vertex labeled " + label);
  return v;
}

std::vector<int> CrystalGraph::wt_all(int v) const {
  std::vector<int> w(colors.size());
  for (size_t c = 0; c < colors.size(); ++c) w[c] = phi_tab[c][v] - eps_tab[c][v];
  return w;
}

std::vector<int> CrystalGraph::wt_finite(int v) const {
  std::vector<int> w(finite_rank, 0);
  for (size_t c = 0; c < colors.size(); ++c)
    if (colors[c] >= 1) w[colors[c] - 1] = phi_tab[c][v] - eps_tab[c][v];
  return w;
}

AffineWeight CrystalGraph::wt_affine(int v) const {
  if (!has_color(0)) throw std::invalid_argument("wt_affine: graph has no color 0");
  AffineWeight w(finite_rank + 1, 0);
  for (size_t c = 0; c < colors.size(); ++c) w[colors[c]] = phi_tab[c][v] - eps_tab[c][v];
  return w;
}

bool CrystalGraph::is_connected(const std::vector<int>& use_colors) const {
  if (size() == 0) return true;
  std::vector<char> seen(size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  std::vector<int> cps;
  for (int c : use_colors) cps.push_back(color_pos(c));
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int cp : cps) {
      for (int w : {fmap[cp][v], emap[cp][v]}) {
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == size();
}

std::vector<int> CrystalGraph::classical_highest() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    bool hi = true;
    for (size_t c = 0; c < colors.size() && hi; ++c)
      if (colors[c] >= 1 && emap[c][v] >= 0) hi = false;
    if (hi) out.push_back(v);
  }
  return out;
}

CrystalGraph::Components CrystalGraph::classical_components() const {
  Components comp;
  comp.comp_of.assign(size(), -1);
  int next = 0;
  std::vector<int> cps;
  for (size_t c = 0; c < colors.size(); ++c)
    if (colors[c] >= 1) cps.push_back(static_cast<int>(c));
  for (int start = 0; start < size(); ++start) {
    if (comp.comp_of[start] >= 0) continue;
    int id = next++;
    std::vector<int> stack = {start};
    comp.comp_of[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int cp : cps)
        for (int w : {fmap[cp][v], emap[cp][v]})
          if (w >= 0 && comp.comp_of[w] < 0) {
            comp.comp_of[w] = id;
            stack.push_back(w);
          }
    }
  }
  comp.highest.assign(next, -1);
  for (int v : classical_highest()) {
    int id = comp.comp_of[v];
    if (comp.highest[id] >= 0)
      throw invariant_error("classical component with two highest weight vertices");
    comp.highest[id] = v;
  }
  for (int id = 0; id < next; ++id)
    if (comp.highest[id] < 0)
      throw invariant_error("classical component without a highest weight vertex");
  comp.weight.resize(next);
  for (int id = 0; id < next; ++id) comp.weight[id] = wt_finite(comp.highest[id]);
  return comp;
}

Character CrystalGraph::character(const std::vector<int>& grading) const {
  if (static_cast<int>(grading.size()) != size())
    throw std::invalid_argument("character: grading must be total");
  Character ch;
  for (int v = 0; v < size(); ++v) ch[wt_finite(v)][grading[v]] += 1;
  return ch;
}

CrystalGraph freeze_graph(std::vector<int> colors, int finite_rank,
                          const std::vector<std::string>& labels,
                          const std::vector<std::tuple<std::string, int, std::string>>& f_edges) {
  CrystalGraph g;
  g.colors = std::move(colors);
  g.finite_rank = finite_rank;
  g.labels = labels;
  std::sort(g.labels.begin(), g.labels.end());
  g.labels.erase(std::unique(g.labels.begin(), g.labels.end()), g.labels.end());
  if (g.labels.size() != labels.size())
    throw invariant_error("freeze_graph: duplicate labels");
  int V = g.size();
  size_t C = g.colors.size();
  g.fmap.assign(C, std::vector<int>(V, -1));
  g.emap.assign(C, std::vector<int>(V, -1));
  for (const auto& [from, color, to] : f_edges) {
    int cp = g.color_pos(color);
    int a = g.vertex_checked(from), b = g.vertex_checked(to);
    if (g.fmap[cp][a] >= 0 && g.fmap[cp][a] != b)
      throw invariant_error("freeze_graph: conflicting f-edges at " + from);
    if (g.emap[cp][b] >= 0 && g.emap[cp][b] != a)
      throw invariant_error("freeze_graph: conflicting e-edges at " + to);
    g.fmap[cp][a] = b;
    g.emap[cp][b] = a;
  }
  // eps/phi by walking strings; also certifies local nilpotence (no cycles).
  g.eps_tab.assign(C, std::vector<int>(V, -1));
  g.phi_tab.assign(C, std::vector<int>(V, -1));
  for (size_t c = 0; c < C; ++c) {
    int assigned = 0;
    for (int v = 0; v < V; ++v) {
      if (g.emap[c][v] >= 0) continue;  // not a string head
      // walk down the f-string
      std::vector<int> chain;
      for (int x = v; x >= 0; x = g.fmap[c][x]) {
        chain.push_back(x);
        if (static_cast<int>(chain.size()) > V)
          throw invariant_error("freeze_graph: cyclic string (not nilpotent)");
      }
      int L = static_cast<int>(chain.size());
      for (int k = 0; k < L; ++k) {
        g.eps_tab[c][chain[k]] = k;
        g.phi_tab[c][chain[k]] = L - 1 - k;
        ++assigned;
      }
    }
    if (assigned != V)
      throw invariant_error("freeze_graph: cyclic string (not nilpotent)");
  }
  return g;
}

namespace {

// eps/phi of the suffix of factors starting at position j for a tuple.
struct TensorOps {
  std::vector<const CrystalGraph*> factors;
  std::vector<int> colors;
  long long total = 1;

  explicit TensorOps(std::vector<const CrystalGraph*> fs) : factors(std::move(fs)) {
    if (factors.empty()) throw std::invalid_argument("tensor of zero factors");
    colors = factors[0]->colors;
    for (auto* f : factors)
      if (f->colors != colors)
        throw std::invalid_argument("tensor: index-set mismatch between factors");
    for (auto* f : factors) {
      total *= f->size();
      if (total > (1LL << 32)) throw budget_error("tensor: product too large");
    }
  }

  std::vector<int> coords(long long v) const {
    std::vector<int> c(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      c[i] = static_cast<int>(v % factors[i]->size());
      v /= factors[i]->size();
    }
    return c;
  }
  long long index(const std::vector<int>& c) const {
    long long v = 0;
    for (size_t i = 0; i < factors.size(); ++i) v = v * factors[i]->size() + c[i];
    return v;
  }

  // Where does f (raising=false) or e (raising=true) act? Returns factor
  // position or -1 if the result is null.
  int action_position(const std::vector<int>& c, int cp, bool raising) const {
    int N = static_cast<int>(factors.size());
    // suffix eps/phi from the right
    std::vector<int> eps_s(N + 1, 0), phi_s(N + 1, 0);
    for (int j = N - 1; j >= 0; --j) {
      int ea = factors[j]->eps_tab[cp][c[j]];
      int pa = factors[j]->phi_tab[cp][c[j]];
      eps_s[j] = eps_s[j + 1] + std::max(0, ea - phi_s[j + 1]);
      phi_s[j] = pa + std::max(0, phi_s[j + 1] - ea);
    }
    if (raising ? eps_s[0] == 0 : phi_s[0] == 0) return -1;
    for (int j = 0; j < N; ++j) {
      int ea = factors[j]->eps_tab[cp][c[j]];
      if (raising ? (ea > phi_s[j + 1]) : (ea >= phi_s[j + 1])) return j;
    }
    return -1;
  }
};

} // namespace

CrystalGraph multi_tensor(const std::vector<const CrystalGraph*>& factors) {
  TensorOps ops(factors);
  int N = static_cast<int>(factors.size());
  long long V = ops.total;
  size_t C = ops.colors.size();

  std::vector<std::string> labels(V);
  auto label_of = [&](long long v) {
    auto c = ops.coords(v);
    std::string s;
    for (int j = 0; j < N; ++j) {
      if (j) s += '#';
      s += factors[j]->labels[c[j]];
    }
    return s;
  };

  // Edge tables in tuple indexing, then remapped to sorted label order.
  std::vector<std::vector<long long>> ftup(C, std::vector<long long>(V, -1));

  auto body = [&](long long v) {
    auto c = ops.coords(v);
    labels[v] = label_of(v);
    for (size_t cp = 0; cp < C; ++cp) {
      int pos = ops.action_position(c, static_cast<int>(cp), false);
      if (pos < 0) continue;
      int img = factors[pos]->fmap[cp][c[pos]];
      if (img < 0) continue;  // rule chose a factor whose f vanishes: null
      auto c2 = c;
      c2[pos] = img;
      ftup[cp][v] = ops.index(c2);
    }
  };

#ifdef _OPENMP
  if (parallel_enabled()) {
#pragma omp parallel for schedule(static)
    for (long long v = 0; v < V; ++v) body(v);
  } else {
    for (long long v = 0; v < V; ++v) body(v);
  }
#else
  for (long long v = 0; v < V; ++v) body(v);
#endif

  std::vector<std::tuple<std::string, int, std::string>> f_edges;
  for (size_t cp = 0; cp < C; ++cp)
    for (long long v = 0; v < V; ++v)
      if (ftup[cp][v] >= 0)
        f_edges.emplace_back(labels[v], ops.colors[cp], labels[ftup[cp][v]]);
  return freeze_graph(ops.colors, factors[0]->finite_rank, labels, f_edges);
}

CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b) {
  return multi_tensor({&a, &b});
}

std::vector<int> tensor_coords(const std::vector<const CrystalGraph*>& factors,
                               const CrystalGraph& product, int v) {
  // Factor labels never contain '#', so splitting the product label works.
  const std::string& l = product.labels[v];
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : l) {
    if (ch == '#') { parts.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  parts.push_back(cur);
  if (parts.size() != factors.size())
    throw std::invalid_argument("tensor_coords: factor count mismatch");
  std::vector<int> c(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) c[i] = factors[i]->vertex_checked(parts[i]);
  return c;
}

int tensor_vertex(const std::vector<const CrystalGraph*>& factors,
                  const CrystalGraph& product, const std::vector<int>& coords) {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += '#';
    s += factors[i]->labels[coords[i]];
  }
  return product.vertex_checked(s);
}

RigidResult rigid_isomorphism(const CrystalGraph& a, const CrystalGraph& b,
                              int seed_a, int seed_b) {
  RigidResult r;
  if (a.colors != b.colors) {
    r.conflict = "color sets differ";
    return r;
  }
  r.map.assign(a.size(), -1);
  std::vector<int> inv(b.size(), -1);
  std::vector<int> queue;
  auto bind = [&](int va, int vb) -> bool {
    if (r.map[va] >= 0) return r.map[va] == vb;
    if (inv[vb] >= 0) return false;
    r.map[va] = vb;
    inv[vb] = va;
    queue.push_back(va);
    return true;
  };
  if (!bind(seed_a, seed_b)) {
    r.conflict = "seed binding failed";
    return r;
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int va = queue[qi], vb = r.map[va];
    for (size_t c = 0; c < a.colors.size(); ++c) {
      for (int dir = 0; dir < 2; ++dir) {
        int wa = dir ? a.emap[c][va] : a.fmap[c][va];
        int wb = dir ? b.emap[c][vb] : b.fmap[c][vb];
        if ((wa < 0) != (wb < 0)) {
          r.conflict = "edge mismatch at vertex " + a.labels[va] + " color " +
                       std::to_string(a.colors[c]);
          return r;
        }
        if (wa >= 0 && !bind(wa, wb)) {
          r.conflict = "inconsistent image at vertex " + a.labels[wa] + " color " +
                       std::to_string(a.colors[c]);
          return r;
        }
      }
    }
  }
  if (a.size() != b.size() ||
      static_cast<int>(queue.size()) != a.size()) {
    r.conflict = "graphs not connected onto each other";
    return r;
  }
  r.ok = true;
  return r;
}

} // namespace krc
