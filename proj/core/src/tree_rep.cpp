#include "bax/tree_rep.hpp"

#include <algorithm>

#include <json.hpp>

#include "bax/baxterizer.hpp"

namespace bax {

int FusionTreeBasis::find(const std::vector<Label>& state) const {
  auto it = index_.find(state);
  return it == index_.end() ? -1 : it->second;
}

Label FusionTreeBasis::height(const std::vector<Label>& state, int j) const {
  if (bc.kind == Boundary::PERIODIC) return state[((j % L) + L) % L];
  return state.at(j);
}

LinearOp LinearOp::operator*(const LinearOp& o) const {
  LinearOp out;
  out.m = m * o.m;
  out.kind = "product";
  return out;
}

std::string LinearOp::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["site"] = site;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto data = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  j["data"] = data;
  return j.dump();
}

namespace {

void require_rules(const CategoryData& cat) {
  if (!cat.rules) throw CapabilityError(cat.name() + " has no fusion tensor; height bases need one");
}

void require_f(const CategoryData& cat) {
  if (!cat.representable()) throw CapabilityError(cat.name() + " has no F-symbols");
}

void check_site(const FusionTreeBasis& basis, int j) {
  if (basis.bc.kind == Boundary::PERIODIC) {
    if (basis.L < 2) throw DomainError("periodic operators need L >= 2");
    if (j < 1 || j > basis.L) throw DomainError("site j out of range 1..L");
  } else if (j < 1 || j > basis.L - 1) {
    throw DomainError("site j out of range 1..L-1");
  }
}

int position(const FusionTreeBasis& basis, int j) { return basis.bc.kind == Boundary::PERIODIC ? j % basis.L : j; }

// Matrix of sum_chi w_chi F_{h chi} conj(F_{h' chi}) acting around h_j.
Eigen::MatrixXcd local_op(const CategoryData& cat, Label rho, const std::vector<Label>& chans,
                          const std::vector<cplx>& weights, int j, const FusionTreeBasis& basis) {
  const FSymbolTable& F = *cat.f;
  const int n = cat.size();
  const int dim = basis.size();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  const int pos = position(basis, j);
  std::vector<Label> t;
  for (int col = 0; col < dim; ++col) {
    const auto& s = basis.states[col];
    Label hm = basis.height(s, j - 1), h = basis.height(s, j), hp = basis.height(s, j + 1);
    t = s;
    for (Label hn = 0; hn < n; ++hn) {
      cplx w = 0.0;
      for (std::size_t c = 0; c < chans.size(); ++c) {
        cplx f1 = F(rho, rho, hm, hp, h, chans[c]);
        if (f1 == cplx(0.0)) continue;
        cplx f2 = F(rho, rho, hm, hp, hn, chans[c]);
        w += weights[c] * f1 * std::conj(f2);
      }
      if (w == cplx(0.0)) continue;
      t[pos] = hn;
      int row = basis.find(t);
      if (row >= 0) M(row, col) += w;
    }
  }
  return M;
}

std::vector<cplx> amplitudes(const AmplitudeSolution& sol, cplx mu) {
  std::vector<cplx> a(sol.channels.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = sol.amplitude[i](mu);
  return a;
}

void check_solution_channels(const CategoryData& cat, Label rho, const AmplitudeSolution& sol) {
  if (sol.rho != rho) throw DomainError("solution was built for a different rho");
  auto ch = fusion_product(cat, rho, rho);
  if (ch != sol.channels) throw DomainError("solution channels differ from rho x rho");
}

}  // namespace

FusionTreeBasis enumerate_trees(const CategoryData& cat, Label rho, int L, BoundarySpec bc) {
  require_rules(cat);
  cat.check_label(rho);
  if (L < 0) throw DomainError("L must be >= 0");
  const FusionRules& N = *cat.rules;
  const int n = cat.size();
  FusionTreeBasis basis;
  basis.rho = rho;
  basis.L = L;
  basis.bc = bc;

  if (bc.kind == Boundary::PERIODIC) {
    if (L < 1) throw DomainError("periodic bases need L >= 1");
  } else if (bc.kind == Boundary::OPEN) {
    cat.check_label(bc.left);
    cat.check_label(bc.right);
  }

  std::vector<Label> h;
  const int len = bc.kind == Boundary::PERIODIC ? L : L + 1;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(h.size()) == len) {
      if (bc.kind == Boundary::PERIODIC && !N(h.back(), rho, h.front())) return;
      if (bc.kind == Boundary::OPEN && h.back() != bc.right) return;
      basis.states.push_back(h);
      return;
    }
    for (Label x = 0; x < n; ++x) {
      if (!N(h.back(), rho, x)) continue;
      h.push_back(x);
      self(self);
      h.pop_back();
    }
  };
  for (Label h0 = 0; h0 < n; ++h0) {
    if (bc.kind == Boundary::OPEN && h0 != bc.left) continue;
    h.assign(1, h0);
    rec(rec);
  }
  for (int i = 0; i < basis.size(); ++i) basis.index_[basis.states[i]] = i;
  return basis;
}

Eigen::MatrixXd height_adjacency(const CategoryData& cat, Label rho) {
  require_rules(cat);
  const int n = cat.size();
  Eigen::MatrixXd A(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) A(a, b) = (*cat.rules)(a, rho, b);
  return A;
}

LinearOp projector_op(const CategoryData& cat, Label rho, Label chi, int j, const FusionTreeBasis& basis) {
  require_f(cat);
  auto ch = fusion_product(cat, rho, rho);
  if (std::find(ch.begin(), ch.end(), chi) == ch.end())
    throw DomainError(cat.display(chi) + " is not a channel of " + cat.display(rho) + " x " + cat.display(rho));
  check_site(basis, j);
  LinearOp op;
  op.m = local_op(cat, rho, {chi}, {1.0}, j, basis);
  op.site = j;
  op.kind = "P(" + cat.display(chi) + ")";
  return op;
}

LinearOp braid_op(const CategoryData& cat, Label rho, int j, Crossing sense, const FusionTreeBasis& basis) {
  require_f(cat);
  check_site(basis, j);
  auto ch = fusion_product(cat, rho, rho);
  std::vector<cplx> w;
  for (Label chi : ch) {
    cplx om = twist_factor(cat, chi, rho, rho);
    w.push_back(sense == Crossing::OVER ? om : 1.0 / om);
  }
  LinearOp op;
  op.m = local_op(cat, rho, ch, w, j, basis);
  op.site = j;
  op.kind = sense == Crossing::OVER ? "B" : "Bbar";
  return op;
}

LinearOp r_op(const CategoryData& cat, const AmplitudeSolution& sol, cplx mu, int j, const FusionTreeBasis& basis) {
  require_f(cat);
  check_site(basis, j);
  check_solution_channels(cat, basis.rho, sol);
  LinearOp op;
  op.m = local_op(cat, basis.rho, sol.channels, amplitudes(sol, mu), j, basis);
  op.site = j;
  op.kind = "R";
  return op;
}

cplx face_weight(const CategoryData& cat, const AmplitudeSolution& sol, cplx mu, Label l, Label b, Label r, Label t) {
  require_f(cat);
  const FSymbolTable& F = *cat.f;
  auto a = amplitudes(sol, mu);
  cplx w = 0.0;
  for (std::size_t c = 0; c < sol.channels.size(); ++c)
    w += a[c] * F(sol.rho, sol.rho, l, r, b, sol.channels[c]) * std::conj(F(sol.rho, sol.rho, l, r, t, sol.channels[c]));
  return w;
}

LinearOp transfer_matrix(const CategoryData& cat, const AmplitudeSolution& sol, cplx mu, const FusionTreeBasis& basis) {
  require_f(cat);
  if (basis.bc.kind != Boundary::PERIODIC) throw DomainError("transfer_matrix needs a periodic basis");
  if (basis.L < 2) throw DomainError("transfer_matrix needs L >= 2");
  check_solution_channels(cat, basis.rho, sol);
  const int n = cat.size();
  const int L = basis.L;
  const FSymbolTable& F = *cat.f;
  auto a = amplitudes(sol, mu);
  const Label rho = basis.rho;

  // W[l][b][r][t]
  std::vector<cplx> W(static_cast<std::size_t>(n) * n * n * n, 0.0);
  auto at = [n](int l, int b, int r, int t) { return ((static_cast<std::size_t>(l) * n + b) * n + r) * n + t; };
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r)
      for (int b = 0; b < n; ++b)
        for (int t = 0; t < n; ++t) {
          cplx w = 0.0;
          for (std::size_t c = 0; c < sol.channels.size(); ++c) {
            cplx f1 = F(rho, rho, l, r, b, sol.channels[c]);
            if (f1 == cplx(0.0)) continue;
            w += a[c] * f1 * std::conj(F(rho, rho, l, r, t, sol.channels[c]));
          }
          W[at(l, b, r, t)] = w;
        }

  const int dim = basis.size();
  LinearOp op;
  op.m = Eigen::MatrixXcd::Zero(dim, dim);
  op.kind = "T";
  for (int row = 0; row < dim; ++row) {
    const auto& hp = basis.states[row];
    for (int col = 0; col < dim; ++col) {
      const auto& h = basis.states[col];
      cplx w = 1.0;
      for (int j = 0; j < L && w != cplx(0.0); ++j)
        w *= W[at(hp[(j + L - 1) % L], h[j], h[(j + 1) % L], hp[j])];
      op.m(row, col) = w;
    }
  }
  return op;
}

}  // namespace bax
