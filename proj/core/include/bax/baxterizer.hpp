#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bax/category.hpp"
#include "bax/rational_function.hpp"

namespace bax {

struct TPEdge {
  Label from = 0;
  Label to = 0;
  bool oriented = false;
};

struct TensorProductGraph {
  Label rho = 0;
  Label phi = 0;
  std::vector<Label> vertices;
  std::vector<TPEdge> edges;

  int components() const;
  int cycle_rank() const { return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + components(); }
  bool is_tree() const { return components() == 1 && cycle_rank() == 0; }
};

enum class Verdict { TREE_UNIQUE, CYCLE_CONSISTENT, UNDERDETERMINED, INCONSISTENT };
std::string to_string(Verdict v);

struct CycleCheck {
  TPEdge closing;                 // the non-tree edge
  std::vector<Label> cycle;       // vertices around the induced cycle
  double residual = 0.0;
  bool consistent = true;
};

struct ConsistencyReport {
  std::vector<CycleCheck> cycles;
  int sample_points = 0;
  double tolerance = 0.0;
};

struct AmplitudeSolution {
  std::string family;
  Label rho = 0;
  Label phi = 0;
  std::vector<Label> channels;
  std::vector<RationalFunction> amplitude;  // parallel to channels
  Label reference = 0;
  std::vector<Label> component_refs;
  Verdict verdict = Verdict::TREE_UNIQUE;
  ConsistencyReport consistency;
  TensorProductGraph graph;

  int index_of(Label chi) const;  // -1 if chi is not a channel
  std::vector<cplx> poles() const;
};

struct SolveOptions {
  std::optional<Label> reference;
  // random depth-first spanning tree instead of BFS; used to test spanning-tree independence
  std::optional<std::uint64_t> shuffle_seed;
  double tolerance = 1e-9;
};

// Channels of rho(x)rho (declared list for twist-only categories).
std::vector<Label> channels(const CategoryData& cat, Label rho);

TensorProductGraph build_tp_graph(const CategoryData& cat, Label rho, Label phi);

// A_b / A_a on the edge a-b: (Omega_b + mu Omega_a) / (Omega_a + mu Omega_b)
cplx edge_ratio(const CategoryData& cat, Label rho, Label a, Label b, cplx mu);
RationalFunction edge_ratio_function(const CategoryData& cat, Label rho, Label a, Label b);

AmplitudeSolution solve_central(const CategoryData& cat, Label rho, Label phi, const SolveOptions& opts = {});

cplx amplitude_at(const AmplitudeSolution& sol, Label chi, cplx mu);

struct ClassificationRow {
  Label rho = 0;
  Label phi = 0;
  Verdict verdict = Verdict::TREE_UNIQUE;
  int vertices = 0;
  int edges = 0;
  int independent_cycles = 0;
  double worst_cycle_residual = 0.0;
};

std::vector<ClassificationRow> classify_pairs(const CategoryData& cat);

// Solution export; mus adds evaluated amplitudes for convenience
std::string solution_to_json(const CategoryData& cat, const AmplitudeSolution& sol,
                             const std::vector<cplx>& mus = {}, bool cleared = false);

}  // namespace bax
