/*
  graph.hpp — frozen colored crystal graphs and the generic machinery on
  them: generation by closure, eps/phi caches, weights, classical components,
  tensor products, rigidity-based isomorphism, characters.

  A CrystalGraph is immutable once built; every query is pure, so graphs can
  be shared freely across threads.
*/
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "krc/cartan.hpp"

namespace krc {

// Laurent polynomial in q.
using QPoly = std::map<int, long long>;
// Character: finite weight (omega coordinates) -> Laurent polynomial in q.
using Character = std::map<std::vector<int>, QPoly>;

struct CrystalGraph {
  std::vector<int> colors;            // e.g. {0,1,..,n} or {1,..,n}
  int finite_rank = 0;                // n
  std::vector<std::string> labels;    // canonical, sorted, one per vertex
  // Edge and string data indexed [color position][vertex].
  std::vector<std::vector<int>> fmap, emap;
  std::vector<std::vector<int>> eps_tab, phi_tab;

  int size() const { return static_cast<int>(labels.size()); }
  int color_pos(int color) const;
  bool has_color(int color) const;

  int f(int color, int v) const { return fmap[color_pos(color)][v]; }
  int e(int color, int v) const { return emap[color_pos(color)][v]; }
  int eps(int color, int v) const { return eps_tab[color_pos(color)][v]; }
  int phi(int color, int v) const { return phi_tab[color_pos(color)][v]; }

  int vertex(const std::string& label) const;          // -1 if absent
  int vertex_checked(const std::string& label) const;  // throws if absent

  // phi_i - eps_i over all colors of the graph, ordered as `colors`.
  std::vector<int> wt_all(int v) const;
  // Finite weight in omega coordinates (colors 1..n).
  std::vector<int> wt_finite(int v) const;
  // Affine weight on Lambda_0..Lambda_n; requires color 0.
  AffineWeight wt_affine(int v) const;

  bool is_connected(const std::vector<int>& use_colors) const;
  bool is_connected() const { return is_connected(colors); }

  // Vertices killed by e_i for every i in I \ {0}.
  std::vector<int> classical_highest() const;

  struct Components {
    std::vector<int> comp_of;                 // vertex -> component id
    std::vector<int> highest;                 // component -> highest vertex
    std::vector<std::vector<int>> weight;     // component -> omega coords
    int count() const { return static_cast<int>(highest.size()); }
  };
  // Connected components under the classical colors (drops 0), each with its
  // unique highest weight vertex.
  Components classical_components() const;

  Character character(const std::vector<int>& grading) const;
};

// Finalize a graph from labels and f-edges given as (from-label, color,
// to-label) triples. Sorts vertices by label, derives e, builds caches, and
// checks that e/f are mutually inverse partial injections.
CrystalGraph freeze_graph(std::vector<int> colors, int finite_rank,
                          const std::vector<std::string>& labels,
                          const std::vector<std::tuple<std::string, int, std::string>>& f_edges);

// Generic closure builder. The model supplies:
//   label(state) -> std::string (canonical, injective)
//   act(state, color, raising?) -> std::optional<State>
// Closure runs under f and e for every color. The returned payloads are
// aligned with vertex ids of the frozen graph.
template <class State>
struct Generated {
  CrystalGraph graph;
  std::vector<State> payload;
};

struct GenerateOptions {
  std::int64_t budget = 1000000;
};

template <class State, class Model>
Generated<State> generate(const Model& model, std::vector<int> colors, int finite_rank,
                                 const std::vector<State>& seeds,
                                 const GenerateOptions& opt = {}) {
  if (seeds.empty()) throw std::invalid_argument("generate: empty seed set");
  std::unordered_map<std::string, int> index;
  std::vector<State> states;
  std::vector<std::string> labels;
  std::vector<int> queue;
  auto intern = [&](const State& s) {
    std::string l = model.label(s);
    auto it = index.find(l);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(states.size());
    if (static_cast<std::int64_t>(id) >= opt.budget)
      throw budget_error("generate: vertex budget exceeded");
    index.emplace(l, id);
    states.push_back(s);
    labels.push_back(std::move(l));
    queue.push_back(id);
    return id;
  };
  for (const auto& s : seeds) intern(s);
  std::vector<std::tuple<std::string, int, std::string>> f_edges;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    State cur = states[v];  // copy: states may reallocate
    for (int c : colors) {
      if (auto down = model.act(cur, c, false)) {
        int w = intern(*down);
        f_edges.emplace_back(labels[v], c, labels[w]);
      }
      if (auto up = model.act(cur, c, true)) {
        int w = intern(*up);
        f_edges.emplace_back(labels[w], c, labels[v]);
      }
    }
  }
  Generated<State> out{freeze_graph(colors, finite_rank, labels, f_edges), {}};
  out.payload.resize(states.size());
  for (size_t i = 0; i < states.size(); ++i)
    out.payload[out.graph.vertex_checked(labels[i])] = states[i];
  return out;
}

// Tensor product with the reversed-convention rule; factors listed left to
// right as displayed (factors[0] is the leftmost factor b_N).
CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b);
CrystalGraph multi_tensor(const std::vector<const CrystalGraph*>& factors);

// Decode a product vertex into per-factor vertex ids (leftmost first), and back.
std::vector<int> tensor_coords(const std::vector<const CrystalGraph*>& factors,
                               const CrystalGraph& product, int v);
int tensor_vertex(const std::vector<const CrystalGraph*>& factors,
                  const CrystalGraph& product, const std::vector<int>& coords);

struct RigidResult {
  bool ok = false;
  std::vector<int> map;    // a-vertex -> b-vertex
  std::string conflict;    // first conflicting (vertex, color) when !ok
};

// The unique color-preserving isomorphism extending seed_a -> seed_b, by
// parallel BFS over e- and f-edges. Fails with a witness on mismatch.
RigidResult rigid_isomorphism(const CrystalGraph& a, const CrystalGraph& b,
                              int seed_a, int seed_b);

// Serial/OpenMP toggle for the data-parallel kernels (tensor edge tables,
// verification sweeps).
void set_parallel(bool on);
bool parallel_enabled();

} // namespace krc
