#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bax/errors.hpp"
#include "bax/report.hpp"
#include "bax/spin.hpp"

namespace bax {

using cplx = std::complex<double>;
using Label = int;

class FusionRules {
 public:
  FusionRules() = default;
  explicit FusionRules(int n);

  int n_objects() const { return n_; }
  int operator()(Label a, Label b, Label c) const {
    return table_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  }
  void set(Label a, Label b, Label c, int value);

  std::vector<Label> dual;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_;
};

struct QuantumDims {
  std::vector<double> d;
};

struct TwistData {
  std::vector<std::optional<Rational>> delta;
  // nu[{a,b,c}] = nu_a^{bc}
  std::map<std::array<Label, 3>, int> nu;
};

// F(r,s,a,b,t,tp) = F_{t tp}[r s; a b], stored as the tree move
// [F^{a r s}_b]_{t tp}: t runs over a(x)r, tp over r(x)s.
class FSymbolTable {
 public:
  FSymbolTable() = default;
  explicit FSymbolTable(int n) : n_(n) {}

  cplx operator()(Label r, Label s, Label a, Label b, Label t, Label tp) const;
  void set(Label r, Label s, Label a, Label b, Label t, Label tp, cplx value);
  bool contains(Label r, Label s, Label a, Label b, Label t, Label tp) const;

  std::size_t size() const { return map_.size(); }
  int n_objects() const { return n_; }
  std::vector<std::pair<std::array<Label, 6>, cplx>> entries() const;  // sorted

 private:
  std::uint64_t key(Label r, Label s, Label a, Label b, Label t, Label tp) const;
  int n_ = 0;
  std::unordered_map<std::uint64_t, cplx> map_;
};

// Twist-only families carry the channel list of rho(x)rho and the
// tensor-product graph edges per phi instead of a full fusion tensor.
struct DeclaredChannels {
  Label rho = 0;
  std::vector<Label> channels;
  std::map<Label, std::vector<std::pair<Label, Label>>> graphs;
};

struct CategoryData {
  std::string family = "custom";
  std::string params;
  std::vector<std::string> labels;
  std::optional<FusionRules> rules;
  std::optional<QuantumDims> dims;
  TwistData twists;
  std::optional<FSymbolTable> f;
  std::optional<DeclaredChannels> declared;
  std::vector<std::string> notes;

  int size() const { return static_cast<int>(labels.size()); }
  void check_label(Label a) const;
  Label label(std::string_view display) const;
  const std::string& display(Label a) const;
  Label dual(Label a) const;
  bool self_dual(Label a) const { return dual(a) == a; }

  bool has_fusion() const { return rules.has_value(); }
  bool baxterisable() const;
  bool representable() const { return baxterisable() && rules && dims && f; }

  std::string name() const { return params.empty() ? family : family + "(" + params + ")"; }
};

std::vector<Label> fusion_product(const CategoryData& cat, Label a, Label b);

QuantumDims compute_quantum_dims(const FusionRules& rules);
VerificationReport check_fusion_ring(const FusionRules& rules);

// Omega_a^{bc} = nu_a^{bc} exp(i pi (Delta_b + Delta_c - Delta_a))
cplx twist_factor(const CategoryData& cat, Label a, Label b, Label c);

// Omega_rho^{rho b} / Omega_rho^{rho a} = nu_a^{rho rho} nu_b^{rho rho} exp(i pi (Delta_b - Delta_a))
cplx twist_edge_ratio(const CategoryData& cat, Label rho, Label a, Label b);

VerificationReport check_f_identities(const CategoryData& cat, double tol = 1e-10);
VerificationReport check_twist_data(const CategoryData& cat, double tol = 1e-12);

}  // namespace bax
