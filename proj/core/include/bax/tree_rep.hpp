#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bax/category.hpp"

namespace bax {

struct AmplitudeSolution;

enum class Boundary { OPEN, OPEN_ALL, PERIODIC };

struct BoundarySpec {
  Boundary kind = Boundary::OPEN_ALL;
  Label left = 0;   // OPEN only
  Label right = 0;  // OPEN only

  static BoundarySpec open(Label l, Label r) { return {Boundary::OPEN, l, r}; }
  static BoundarySpec open_all() { return {Boundary::OPEN_ALL, 0, 0}; }
  static BoundarySpec periodic() { return {Boundary::PERIODIC, 0, 0}; }
};

// Height sequences h_0..h_L (open) or h_0..h_{L-1} with h_L = h_0 (periodic),
// consecutive heights satisfying N_{h_j rho}^{h_{j+1}} > 0, lexicographic order.
struct FusionTreeBasis {
  Label rho = 0;
  int L = 0;
  BoundarySpec bc;
  std::vector<std::vector<Label>> states;

  int size() const { return static_cast<int>(states.size()); }
  int find(const std::vector<Label>& state) const;  // -1 if absent
  Label height(const std::vector<Label>& state, int j) const;  // j mod L for periodic

 private:
  friend FusionTreeBasis enumerate_trees(const CategoryData&, Label, int, BoundarySpec);
  std::map<std::vector<Label>, int> index_;
};

struct LinearOp {
  Eigen::MatrixXcd m;
  int site = 0;
  std::string kind;

  int dim() const { return static_cast<int>(m.rows()); }
  LinearOp operator*(const LinearOp& o) const;
  std::string to_json() const;
};

enum class Crossing { OVER, UNDER };

FusionTreeBasis enumerate_trees(const CategoryData& cat, Label rho, int L, BoundarySpec bc);

// Adjacency matrix on heights: (N~)_{ab} = N_{a rho}^b
Eigen::MatrixXd height_adjacency(const CategoryData& cat, Label rho);

LinearOp projector_op(const CategoryData& cat, Label rho, Label chi, int j, const FusionTreeBasis& basis);
LinearOp braid_op(const CategoryData& cat, Label rho, int j, Crossing sense, const FusionTreeBasis& basis);
LinearOp r_op(const CategoryData& cat, const AmplitudeSolution& sol, cplx mu, int j,
              const FusionTreeBasis& basis);

// Face weight W(l,b,r,t) = sum_chi A_chi(mu) F_{b chi}[rho rho; l r] conj(F_{t chi}[rho rho; l r])
cplx face_weight(const CategoryData& cat, const AmplitudeSolution& sol, cplx mu, Label l, Label b, Label r,
                 Label t);

// Row-to-row transfer matrix on a periodic basis: the staircase R_L ... R_1 closed cyclically,
// T_{h',h} = prod_j W(h'_{j-1}, h_j, h_{j+1}, h'_j).
LinearOp transfer_matrix(const CategoryData& cat, const AmplitudeSolution& sol, cplx mu,
                         const FusionTreeBasis& basis);

}  // namespace bax
