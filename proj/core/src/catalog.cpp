#include "bax/catalog.hpp"

#include <cmath>
#include <numbers>

#include "su2_data.hpp"

namespace bax {

std::string family_key(Family f) {
  switch (f) {
    case Family::SU2K: return "su2";
    case Family::MINIMAL_A: return "minimal";
    case Family::TAMBARA_YAMAGAMI: return "ty";
    case Family::SO_N: return "so";
    case Family::SP_2M: return "sp";
    case Family::G2: return "g2";
  }
  return "?";
}

Family parse_family(const std::string& key) {
  for (Family f : {Family::SU2K, Family::MINIMAL_A, Family::TAMBARA_YAMAGAMI, Family::SO_N, Family::SP_2M, Family::G2})
    if (family_key(f) == key) return f;
  throw DomainError("unknown family '" + key + "' (expected su2, minimal, ty, so, sp, g2)");
}

void FamilySpec::validate() const {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
  };
  switch (family) {
    case Family::SU2K:
    case Family::MINIMAL_A:
    case Family::G2: need(k >= 1, "level k must be >= 1"); break;
    case Family::TAMBARA_YAMAGAMI: need(M >= 2, "M must be >= 2"); break;
    case Family::SO_N:
      need(k >= 1, "level k must be >= 1");
      need(n >= 3, "so(n) needs n >= 3");
      break;
    case Family::SP_2M:
      need(k >= 1, "level k must be >= 1");
      need(m >= 2, "sp(2m) needs m >= 2");
      break;
  }
}

std::string FamilySpec::params() const {
  switch (family) {
    case Family::TAMBARA_YAMAGAMI: return "M=" + std::to_string(M);
    case Family::SO_N: return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    case Family::SP_2M: return "m=" + std::to_string(m) + ",k=" + std::to_string(k);
    default: return "k=" + std::to_string(k);
  }
}

cplx family_q(const FamilySpec& spec) {
  int den = 0;
  switch (spec.family) {
    case Family::SU2K:
    case Family::MINIMAL_A: den = spec.k + 2; break;
    case Family::TAMBARA_YAMAGAMI: den = spec.M; break;
    case Family::SO_N: den = spec.n + spec.k - 2; break;
    case Family::SP_2M: den = spec.m + spec.k + 1; break;
    case Family::G2: den = spec.k + 4; break;
  }
  return phase_pi(Rational(1, den));
}

namespace {

std::string spin_display(int color) {
  if (color % 2 == 0) return std::to_string(color / 2);
  return std::to_string(color) + "/2";
}

CategoryData su2_skeleton(int k, const std::string& family) {
  if (k < 1) throw DomainError("level k must be >= 1");
  CategoryData cat;
  cat.family = family;
  cat.params = "k=" + std::to_string(k);
  const int n = k + 1;
  for (int m = 0; m < n; ++m) cat.labels.push_back(spin_display(m));
  FusionRules rules(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (detail::su2_admissible(k, a, b, c)) rules.set(a, b, c, 1);
  cat.rules = rules;
  cat.dims = QuantumDims{detail::su2_dims(k)};
  cat.f = detail::su2_fsymbols(k);
  return cat;
}

}  // namespace

CategoryData build_su2k(int k) {
  CategoryData cat = su2_skeleton(k, "su2");
  const int n = k + 1;
  for (int m = 0; m < n; ++m) cat.twists.delta.emplace_back(Rational(m * (m + 2), 4 * (k + 2)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if ((*cat.rules)(b, c, a)) cat.twists.nu[{a, b, c}] = (((b + c - a) / 2) % 2 == 0) ? 1 : -1;
  return cat;
}

CategoryData build_minimal_A(int k) {
  CategoryData cat = su2_skeleton(k, "minimal");
  const int n = k + 1;
  for (int m = 0; m < n; ++m)
    cat.twists.delta.emplace_back(Rational(m * m, 4) - Rational(m * (m + 2), 4 * (k + 2)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if ((*cat.rules)(b, c, a)) cat.twists.nu[{a, b, c}] = 1;
  return cat;
}

CategoryData build_tambara_yamagami(int M) {
  if (M < 2) throw DomainError("M must be >= 2");
  CategoryData cat;
  cat.family = "ty";
  cat.params = "M=" + std::to_string(M);
  const int n = M + 1;
  const Label X = M;
  for (int a = 0; a < M; ++a) cat.labels.push_back(std::to_string(a));
  cat.labels.push_back("X");

  FusionRules N(n);
  for (int a = 0; a < M; ++a) {
    for (int b = 0; b < M; ++b) N.set(a, b, (a + b) % M, 1);
    N.set(a, X, X, 1);
    N.set(X, a, X, 1);
    N.set(X, X, a, 1);
    N.dual[a] = (M - a) % M;
  }
  N.dual[X] = X;
  cat.rules = N;

  QuantumDims dims;
  dims.d.assign(n, 1.0);
  dims.d[X] = std::sqrt(static_cast<double>(M));
  cat.dims = dims;

  for (int a = 0; a < M; ++a) cat.twists.delta.emplace_back(Rational(a * (M - a), M));
  cat.twists.delta.emplace_back(Rational(1, 16));
  cat.notes.push_back("Delta_X = 1/16 is a placeholder; it cancels in every twist ratio the solver uses");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (N(b, c, a)) cat.twists.nu[{a, b, c}] = 1;

  // tree move [F^{abc}_d]_{ef}; nontrivial only on the X-blocks
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(M));
  auto chi = [M](int a, int b) { return phase_pi(Rational(2 * ((a * b) % M), M)); };
  FSymbolTable F(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            if (!N(a, b, e) || !N(e, c, d)) continue;
            for (int f = 0; f < n; ++f) {
              if (!N(b, c, f) || !N(a, f, d)) continue;
              cplx v = 1.0;
              if (a < M && b == X && c < M && d == X)
                v = chi(a, c);
              else if (a == X && b < M && c == X && d < M)
                v = chi(b, d);
              else if (a == X && b == X && c == X && d == X)
                v = std::conj(chi(e, f)) * inv_sqrt;
              F.set(b, c, a, d, e, f, v);
            }
          }
  cat.f = F;
  return cat;
}

LieFamilyData lie_family_data(const FamilySpec& spec) {
  spec.validate();
  LieFamilyData L;
  switch (spec.family) {
    case Family::SO_N:
      L.dual_coxeter = spec.n - 2;
      L.channels = {"0", "A", "S"};
      L.casimirs = {{"0", Rational(0)}, {"A", Rational(spec.n - 2)}, {"S", Rational(spec.n)}};
      L.signs = {{"0", 1}, {"A", -1}, {"S", 1}};
      L.tp_adjacency = {{"A", {{"0", "A"}, {"A", "S"}}}, {"S", {{"0", "S"}, {"S", "A"}}}};
      break;
    case Family::SP_2M:
      L.dual_coxeter = spec.m + 1;
      L.channels = {"0", "A", "S"};
      L.casimirs = {{"0", Rational(0)}, {"A", Rational(spec.m)}, {"S", Rational(spec.m + 1)}};
      L.signs = {{"0", -1}, {"A", -1}, {"S", 1}};
      L.tp_adjacency = {{"A", {{"0", "A"}, {"A", "S"}}}, {"S", {{"0", "S"}, {"S", "A"}}}};
      break;
    case Family::G2:
      L.dual_coxeter = 4;
      L.channels = {"0", "V", "A", "S"};
      L.casimirs = {{"0", Rational(0)}, {"V", Rational(2)}, {"A", Rational(4)}, {"S", Rational(14, 3)}};
      L.signs = {{"0", 1}, {"V", -1}, {"A", -1}, {"S", 1}};
      L.tp_adjacency = {{"A", {{"0", "A"}, {"A", "S"}, {"S", "V"}}}};
      break;
    default: throw CapabilityError("no twist-only Lie data for family " + family_key(spec.family));
  }
  L.q_exponent_denominator = Rational(spec.k + L.dual_coxeter);
  return L;
}

CategoryData build_lie_twist_data(const FamilySpec& spec) {
  if (spec.family != Family::SO_N && spec.family != Family::SP_2M && spec.family != Family::G2)
    throw CapabilityError("build_lie_twist_data supports so, sp and g2 only");
  LieFamilyData L = lie_family_data(spec);
  CategoryData cat;
  cat.family = family_key(spec.family);
  cat.params = spec.params();
  cat.labels = {"0", "V", "A", "S"};
  const Label V = 1;
  cat.twists.delta.assign(cat.labels.size(), std::nullopt);
  for (const auto& [name, c] : L.casimirs) cat.twists.delta[cat.label(name)] = c / L.q_exponent_denominator;
  if (!cat.twists.delta[V]) cat.notes.push_back("Delta_V is not part of the data; the solver never needs it");

  DeclaredChannels dc;
  dc.rho = V;
  for (const auto& name : L.channels) {
    Label x = cat.label(name);
    dc.channels.push_back(x);
    cat.twists.nu[{x, V, V}] = L.signs.at(name);
  }
  for (const auto& [phi, edges] : L.tp_adjacency) {
    auto& out = dc.graphs[cat.label(phi)];
    for (const auto& [a, b] : edges) out.emplace_back(cat.label(a), cat.label(b));
  }
  cat.declared = dc;
  return cat;
}

CategoryData build(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::SU2K: return build_su2k(spec.k);
    case Family::MINIMAL_A: return build_minimal_A(spec.k);
    case Family::TAMBARA_YAMAGAMI: return build_tambara_yamagami(spec.M);
    default: return build_lie_twist_data(spec);
  }
}

std::vector<FamilyInfo> list_families() {
  return {
      {"su2", "su(2)_k, spins 0..k/2, full data", "--level k (k>=1)", true, true},
      {"minimal", "minimal-model A_{k+1}, su(2)_k fusion with Virasoro spins", "--level k (k>=1)", true, true},
      {"ty", "Z_M Tambara-Yamagami, objects 0..M-1 and X", "--M M (M>=2)", true, true},
      {"so", "so(n)_k vector rho, twist-only", "--n n (n>=3) --level k (k>=1)", true, false},
      {"sp", "sp(2m)_k vector rho, twist-only", "--m m (m>=2) --level k (k>=1)", true, false},
      {"g2", "(G2)_k vector rho, twist-only", "--level k (k>=1)", true, false},
  };
}

}  // namespace bax
