#include "bax/category.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

namespace bax {

// ---- exact spins ----

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw DomainError("bad rational: " + s);
      return Rational(v);
    }
    std::size_t u1 = 0, u2 = 0;
    long long p = std::stoll(s.substr(0, slash), &u1);
    long long q = std::stoll(s.substr(slash + 1), &u2);
    if (u1 != slash || u2 != s.size() - slash - 1 || q == 0) throw DomainError("bad rational: " + s);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw DomainError("bad rational: " + s);
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

cplx phase_pi(const Rational& r) {
  // reduce to [0, 2) exactly
  std::int64_t p = r.numerator(), q = r.denominator();
  std::int64_t m = p % (2 * q);
  if (m < 0) m += 2 * q;
  if (m == 0) return {1.0, 0.0};
  if (m == q) return {-1.0, 0.0};
  if (2 * m == q) return {0.0, 1.0};
  if (2 * m == 3 * q) return {0.0, -1.0};
  double angle = std::numbers::pi * static_cast<double>(m) / static_cast<double>(q);
  return std::polar(1.0, angle);
}

// ---- fusion rules ----

FusionRules::FusionRules(int n) : dual(n, 0), n_(n), table_(static_cast<std::size_t>(n) * n * n, 0) {
  for (int a = 0; a < n; ++a) dual[a] = a;
}

void FusionRules::set(Label a, Label b, Label c, int value) {
  table_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c] = static_cast<std::uint8_t>(value);
}

// ---- F table ----

std::uint64_t FSymbolTable::key(Label r, Label s, Label a, Label b, Label t, Label tp) const {
  std::uint64_t k = 0;
  for (Label v : {r, s, a, b, t, tp}) k = (k << 10) | static_cast<std::uint64_t>(v);
  return k;
}

cplx FSymbolTable::operator()(Label r, Label s, Label a, Label b, Label t, Label tp) const {
  auto it = map_.find(key(r, s, a, b, t, tp));
  return it == map_.end() ? cplx(0.0) : it->second;
}

void FSymbolTable::set(Label r, Label s, Label a, Label b, Label t, Label tp, cplx value) {
  map_[key(r, s, a, b, t, tp)] = value;
}

bool FSymbolTable::contains(Label r, Label s, Label a, Label b, Label t, Label tp) const {
  return map_.count(key(r, s, a, b, t, tp)) != 0;
}

std::vector<std::pair<std::array<Label, 6>, cplx>> FSymbolTable::entries() const {
  std::vector<std::pair<std::array<Label, 6>, cplx>> out;
  out.reserve(map_.size());
  for (const auto& [k, v] : map_) {
    std::array<Label, 6> idx{};
    std::uint64_t x = k;
    for (int i = 5; i >= 0; --i) {
      idx[i] = static_cast<Label>(x & 1023u);
      x >>= 10;
    }
    out.emplace_back(idx, v);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

// ---- category ----

void CategoryData::check_label(Label a) const {
  if (a < 0 || a >= size()) throw DomainError("invalid label id " + std::to_string(a) + " for " + name());
}

Label CategoryData::label(std::string_view display) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == display) return i;
  throw DomainError("unknown label '" + std::string(display) + "' for " + name());
}

const std::string& CategoryData::display(Label a) const {
  check_label(a);
  return labels[a];
}

Label CategoryData::dual(Label a) const {
  check_label(a);
  if (rules) return rules->dual[a];
  return a;
}

bool CategoryData::baxterisable() const {
  bool spins = !twists.delta.empty();
  if (rules && dims && spins) return true;
  return declared.has_value() && spins;
}

std::vector<Label> fusion_product(const CategoryData& cat, Label a, Label b) {
  cat.check_label(a);
  cat.check_label(b);
  if (!cat.rules) throw CapabilityError(cat.name() + " carries no fusion tensor");
  std::vector<Label> out;
  for (Label c = 0; c < cat.size(); ++c)
    if ((*cat.rules)(a, b, c)) out.push_back(c);
  return out;
}

VerificationReport check_fusion_ring(const FusionRules& rules) {
  VerificationReport rep;
  const int n = rules.n_objects();
  auto first = [](std::string& slot, const std::string& s) {
    if (slot.empty()) slot = s;
  };

  double bad_values = 0, ident = 0, comm = 0, duality = 0, assoc = 0;
  std::string dv, di, dc, dd, da;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int v = rules(a, b, c);
        if (v != 0 && v != 1) {
          bad_values = std::max(bad_values, 1.0);
          first(dv, "N(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
        if (rules(a, b, c) != rules(b, a, c)) {
          comm = 1;
          first(dc, "N(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int expect = a == b ? 1 : 0;
      if (rules(a, 0, b) != expect || rules(0, a, b) != expect) {
        ident = 1;
        first(di, "a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
      int dexp = rules.dual.size() == static_cast<std::size_t>(n) && b == rules.dual[a] ? 1 : 0;
      if (rules(a, b, 0) != dexp) {
        duality = 1;
        first(dd, "a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) lhs += rules(a, b, e) * rules(e, c, d);
          for (int f = 0; f < n; ++f) rhs += rules(b, c, f) * rules(a, f, d);
          if (lhs != rhs) {
            assoc = std::max(assoc, static_cast<double>(std::abs(lhs - rhs)));
            first(da, "(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                          "," + std::to_string(d) + ")");
          }
        }
  rep.add("fusion.values01", bad_values, 0.5, n * n * n, dv, "axiom");
  rep.add("fusion.identity", ident, 0.5, n * n, di, "axiom");
  rep.add("fusion.commutativity", comm, 0.5, n * n * n, dc, "axiom");
  rep.add("fusion.duality", duality, 0.5, n * n, dd, "axiom");
  rep.add("fusion.associativity", assoc, 0.5, n * n * n * n, da, "axiom");
  return rep;
}

QuantumDims compute_quantum_dims(const FusionRules& rules) {
  auto ring = check_fusion_ring(rules);
  if (!ring.passed()) {
    for (const auto& c : ring.checks)
      if (!c.pass) throw AxiomError(c.name + " violated at " + c.detail);
  }
  const int n = rules.n_objects();
  QuantumDims out;
  out.d.assign(n, 1.0);
  for (int a = 1; a < n; ++a) {
    Eigen::MatrixXd m(n, n);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m(b, c) = rules(a, b, c);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    double best = 0.0;
    for (int i = 0; i < n; ++i) best = std::max(best, es.eigenvalues()[i].real());
    out.d[a] = best;
  }
  return out;
}

// ---- twists ----

namespace {

int nu_of(const CategoryData& cat, Label a, Label b, Label c) {
  auto it = cat.twists.nu.find({a, b, c});
  if (it == cat.twists.nu.end())
    throw DomainError("no nu entry for (" + cat.display(a) + "; " + cat.display(b) + ", " + cat.display(c) + ") in " +
                      cat.name());
  return it->second;
}

const Rational& delta_of(const CategoryData& cat, Label a) {
  cat.check_label(a);
  if (a >= static_cast<int>(cat.twists.delta.size()) || !cat.twists.delta[a])
    throw DomainError("no topological spin for " + cat.display(a) + " in " + cat.name());
  return *cat.twists.delta[a];
}

}  // namespace

cplx twist_factor(const CategoryData& cat, Label a, Label b, Label c) {
  cat.check_label(a);
  cat.check_label(b);
  cat.check_label(c);
  if (cat.rules && (*cat.rules)(b, c, a) == 0)
    throw DomainError("inadmissible triple for twist factor: " + cat.display(a) + " not in " + cat.display(b) +
                      " x " + cat.display(c));
  int nu = nu_of(cat, a, b, c);
  Rational e = delta_of(cat, b) + delta_of(cat, c) - delta_of(cat, a);
  return static_cast<double>(nu) * phase_pi(e);
}

cplx twist_edge_ratio(const CategoryData& cat, Label rho, Label a, Label b) {
  if (a == b) return {1.0, 0.0};
  int sign = nu_of(cat, a, rho, rho) * nu_of(cat, b, rho, rho);
  return static_cast<double>(sign) * phase_pi(delta_of(cat, b) - delta_of(cat, a));
}

VerificationReport check_twist_data(const CategoryData& cat, double tol) {
  VerificationReport rep;
  rep.family = cat.family;
  rep.params = cat.params;
  if (cat.twists.delta.empty() || !cat.twists.delta[0] || *cat.twists.delta[0] != Rational(0))
    rep.add("twist.delta0", 1.0, tol, 1, "Delta_0 must be 0", "axiom");
  else
    rep.add("twist.delta0", 0.0, tol, 1, {}, "axiom");

  double unimod = 0, nuid = 0, domain = 0;
  int samples = 0;
  std::string detail;
  for (const auto& [key, sign] : cat.twists.nu) {
    auto [a, b, c] = key;
    if (cat.rules && (*cat.rules)(b, c, a) == 0) {
      domain = 1;
      if (detail.empty()) detail = "nu defined off the fusion support";
    }
    bool have = a < static_cast<int>(cat.twists.delta.size()) && b < static_cast<int>(cat.twists.delta.size()) &&
                c < static_cast<int>(cat.twists.delta.size()) && cat.twists.delta[a] && cat.twists.delta[b] &&
                cat.twists.delta[c];
    if (have) {
      unimod = std::max(unimod, std::abs(std::abs(twist_factor(cat, a, b, c)) - 1.0));
      ++samples;
    }
    // nu_0^{cc} = nu_a^{bc} nu_b^{ac}
    auto n0 = cat.twists.nu.find({0, c, c});
    auto nb = cat.twists.nu.find({b, a, c});
    if (n0 != cat.twists.nu.end() && nb != cat.twists.nu.end()) {
      if (n0->second != sign * nb->second) {
        nuid = 1;
        if (detail.empty())
          detail = "nuid fails at (a,b,c)=(" + cat.labels[a] + "," + cat.labels[b] + "," + cat.labels[c] + ")";
      }
    }
  }
  if (cat.rules) {
    const int n = cat.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if ((*cat.rules)(b, c, a) && !cat.twists.nu.count({a, b, c})) {
            domain = 1;
            if (detail.empty()) detail = "nu missing on an admissible triple";
          }
  }
  rep.add("twist.unimodular", unimod, tol, samples, {}, "axiom");
  rep.add("twist.nu_support", domain, 0.5, static_cast<int>(cat.twists.nu.size()), detail, "axiom");
  rep.add("twist.nuid", nuid, 0.5, static_cast<int>(cat.twists.nu.size()), detail, "axiom");
  return rep;
}

// ---- F identities ----

VerificationReport check_f_identities(const CategoryData& cat, double tol) {
  if (!cat.representable()) throw CapabilityError(cat.name() + " has no F-symbols");
  const FusionRules& N = *cat.rules;
  const FSymbolTable& F = *cat.f;
  const auto& d = cat.dims->d;
  const int n = cat.size();

  VerificationReport rep;
  rep.family = cat.family;
  rep.params = cat.params;

  std::vector<std::vector<Label>> prod(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (N(a, b, c)) prod[a * n + b].push_back(c);
  auto fuse = [&](Label a, Label b) -> const std::vector<Label>& { return prod[a * n + b]; };
  // tree form: Ft(a,b,c,d,e,f) = [F^{abc}_d]_{ef}
  auto Ft = [&](Label a, Label b, Label c, Label dd, Label e, Label f) { return F(b, c, a, dd, e, f); };
  auto tuple = [&](std::initializer_list<Label> xs) {
    std::string s = "(";
    bool firstx = true;
    for (Label x : xs) {
      if (!firstx) s += ",";
      s += cat.labels[x];
      firstx = false;
    }
    return s + ")";
  };

  // pentagon
  double pent = 0;
  int pent_n = 0;
  std::string pent_at;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd)
          for (Label f : fuse(a, b))
            for (Label g : fuse(f, c))
              for (Label e : fuse(g, dd))
                for (Label l : fuse(c, dd))
                  for (Label k : fuse(b, l)) {
                    if (!N(a, k, e)) continue;
                    cplx lhs = Ft(f, c, dd, e, g, l) * Ft(a, b, l, e, f, k);
                    cplx rhs = 0;
                    for (Label h : fuse(b, c)) rhs += Ft(a, b, c, g, f, h) * Ft(a, h, dd, e, g, k) * Ft(b, c, dd, k, h, l);
                    double r = std::abs(lhs - rhs);
                    ++pent_n;
                    if (r > pent) {
                      pent = r;
                      pent_at = "a,b,c,d,e,f,g,k,l=" + tuple({a, b, c, (Label)dd, e, f, g, k, l});
                    }
                  }
  rep.add("f.pentagon", pent, tol, pent_n, pent_at, "axiom");

  // F0: F_{t tp}[r 0; a b] = delta_{tb} delta_{tp r} N_{ar}^b
  double f0a = 0;
  std::string f0a_at;
  for (int r = 0; r < n; ++r)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int t = 0; t < n; ++t)
          for (int tp = 0; tp < n; ++tp) {
            double expect = (t == b && tp == r && N(a, r, b)) ? 1.0 : 0.0;
            double res = std::abs(F(r, 0, a, b, t, tp) - expect);
            if (res > f0a) {
              f0a = res;
              f0a_at = tuple({(Label)r, (Label)a, (Label)b, (Label)t, (Label)tp});
            }
          }
  rep.add("f.F0_unit_leg", f0a, tol, n * n * n * n * n, f0a_at, "axiom");

  // F0: F_{s0}[r rbar; a a] = sqrt(d_s / (d_a d_r)) N_{ar}^s
  double f0b = 0;
  std::string f0b_at;
  for (int r = 0; r < n; ++r) {
    Label rb = N.dual[r];
    for (int a = 0; a < n; ++a)
      for (int s = 0; s < n; ++s) {
        double expect = N(a, r, s) ? std::sqrt(d[s] / (d[a] * d[r])) : 0.0;
        double res = std::abs(F(r, rb, a, a, s, 0) - expect);
        if (res > f0b) {
          f0b = res;
          f0b_at = tuple({(Label)r, (Label)a, (Label)s});
        }
      }
  }
  rep.add("f.F0_vacuum_channel", f0b, tol, n * n * n, f0b_at, "axiom");

  // rotation identity on self-dual labels
  std::vector<Label> sd;
  for (int a = 0; a < n; ++a)
    if (N.dual[a] == a) sd.push_back(a);
  double rot = 0;
  int rot_n = 0;
  std::string rot_at;
  for (Label al : sd)
    for (Label be : sd)
      for (Label ga : sd)
        for (Label a : sd)
          for (Label b : sd)
            for (Label c : sd) {
              cplx x = std::sqrt(d[al] * d[ga] / d[b]) * F(ga, al, a, c, be, b);
              cplx y = std::sqrt(d[al] * d[be] / d[c]) * F(a, b, be, al, ga, c);
              cplx z = std::sqrt(d[ga] * d[be] / d[a]) * F(b, c, ga, be, al, a);
              double r = std::max(std::abs(x - y), std::abs(x - z));
              ++rot_n;
              if (r > rot) {
                rot = r;
                rot_at = tuple({al, be, ga, a, b, c});
              }
            }
  rep.add("f.rotation", rot, tol, rot_n, rot_at, "axiom");

  // unitarity of each block
  double uni = 0;
  int blocks = 0;
  std::string uni_at;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          std::vector<Label> ts, tps;
          for (Label t : fuse(a, r))
            if (N(t, s, b)) ts.push_back(t);
          for (Label tp : fuse(r, s))
            if (N(a, tp, b)) tps.push_back(tp);
          if (ts.empty() && tps.empty()) continue;
          ++blocks;
          if (ts.size() != tps.size()) {
            uni = std::max(uni, 1.0);
            if (uni_at.empty()) uni_at = "non-square block " + tuple({(Label)r, (Label)s, (Label)a, (Label)b});
            continue;
          }
          const int m = static_cast<int>(ts.size());
          Eigen::MatrixXcd M(m, m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) M(i, j) = F(r, s, a, b, ts[i], tps[j]);
          double res = (M * M.adjoint() - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
          if (res > uni) {
            uni = res;
            uni_at = tuple({(Label)r, (Label)s, (Label)a, (Label)b});
          }
        }
  rep.add("f.unitarity", uni, tol, blocks, uni_at, "axiom");

  // dims consistency, d_a d_b = sum_c N_ab^c d_c
  double dabc = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0;
      for (Label c : fuse(a, b)) s += d[c];
      dabc = std::max(dabc, std::abs(d[a] * d[b] - s));
    }
  rep.add("dims.product_rule", dabc, tol, n * n, {}, "axiom");
  return rep;
}

}  // namespace bax
