// One line per acceptance criterion. Exit status is 0 when the failing set
// equals the --known-failure list (empty by default).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "bax/baxterizer.hpp"
#include "bax/catalog.hpp"
#include "bax/verifier.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace bax;
using oracle::rel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

cplx ratio(const AmplitudeSolution& sol, Label top, Label bottom, cplx mu) {
  return amplitude_at(sol, top, mu) / amplitude_at(sol, bottom, mu);
}

CategoryData lie(Family f, int k, int n = 0, int m = 0) {
  FamilySpec s;
  s.family = f;
  s.k = k;
  s.n = n;
  s.m = m;
  return build(s);
}

AmplitudeSolution scaled(AmplitudeSolution sol, Label chi, double factor) {
  int i = sol.index_of(chi);
  sol.amplitude[i] = sol.amplitude[i] * RationalFunction(Polynomial::constant(factor), Polynomial::constant(1.0));
  return sol;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

const std::uint64_t kSeed = 20240611;

Outcome c1_loops() {
  double worst = 0;
  auto mus = sample_mus(kSeed, 20);
  for (int k = 2; k <= 8; ++k) {
    auto s1 = solve_central(build_su2k(k), 1, 2);
    auto s2 = solve_central(build_minimal_A(k), 1, 2);
    for (cplx mu : mus) {
      worst = std::max(worst, rel(ratio(s1, 0, 2, mu), oracle::su2_loop(k, mu)));
      worst = std::max(worst, rel(ratio(s2, 0, 2, mu), oracle::su2_loop(k, mu, true)));
    }
  }
  return {worst < 1e-10, "su2_k and A_{k+1}, k=2..8, 20 mu: max rel err " + fmt(worst)};
}

Outcome c2_lie() {
  double worst = 0;
  auto mus = sample_mus(kSeed, 20);
  const int k = 2;
  for (int n = 4; n <= 7; ++n) {
    auto cat = lie(Family::SO_N, k, n);
    Label O = cat.label("0"), V = cat.label("V"), A = cat.label("A"), S = cat.label("S");
    auto sA = solve_central(cat, V, A), sS = solve_central(cat, V, S);
    for (cplx mu : mus) {
      auto oA = oracle::so_ratios(n, k, true, mu), oS = oracle::so_ratios(n, k, false, mu);
      worst = std::max({worst, rel(ratio(sA, O, A, mu), oA[0]), rel(ratio(sA, S, A, mu), oA[1]),
                        rel(ratio(sS, O, S, mu), oS[0]), rel(ratio(sS, A, S, mu), oS[1])});
    }
  }
  for (int m = 2; m <= 3; ++m) {
    auto cat = lie(Family::SP_2M, k, 0, m);
    Label O = cat.label("0"), V = cat.label("V"), A = cat.label("A"), S = cat.label("S");
    auto sA = solve_central(cat, V, A), sS = solve_central(cat, V, S);
    for (cplx mu : mus) {
      auto oA = oracle::sp_ratios(m, k, true, mu), oS = oracle::sp_ratios(m, k, false, mu);
      worst = std::max({worst, rel(ratio(sA, O, A, mu), oA[0]), rel(ratio(sA, S, A, mu), oA[1]),
                        rel(ratio(sS, O, S, mu), oS[0]), rel(ratio(sS, A, S, mu), oS[1])});
    }
  }
  auto g2 = lie(Family::G2, k);
  Label O = g2.label("0"), V = g2.label("V"), A = g2.label("A"), S = g2.label("S");
  auto sg = solve_central(g2, V, A);
  for (cplx mu : mus) {
    auto o = oracle::g2_ratios(k, mu);
    worst = std::max({worst, rel(ratio(sg, O, A, mu), o[0]), rel(ratio(sg, S, A, mu), o[1]),
                      rel(ratio(sg, V, S, mu), o[2])});
  }
  return {worst < 1e-10, "so(4..7)_2, sp(4,6)_2 phi=A,S; G2_2: max rel err " + fmt(worst)};
}

Outcome c3_higher_spin() {
  double worst = 0;
  auto mus = sample_mus(kSeed, 20);
  for (int k = 4; k <= 10; ++k) {
    auto sol = solve_central(build_su2k(k), 2, 2);
    for (cplx mu : mus)
      for (int a = 0; 2 * (a + 1) <= std::min(k, 4); ++a)
        worst = std::max(worst, rel(ratio(sol, 2 * (a + 1), 2 * a, mu), oracle::su2_higher(k, a, mu)));
  }
  return {worst < 1e-10, "su2_k rho=1 phi=1, k=4..10: max rel err " + fmt(worst)};
}

Outcome c4_parafermions() {
  double worst = 0, cyc = 0;
  bool verdicts = true;
  auto mus = sample_mus(kSeed, 20);
  for (int M = 3; M <= 8; ++M) {
    auto cat = build_tambara_yamagami(M);
    auto sol = solve_central(cat, cat.label("X"), 1);
    verdicts = verdicts && sol.verdict == Verdict::CYCLE_CONSISTENT;
    for (const auto& c : sol.consistency.cycles) cyc = std::max(cyc, c.residual);
    for (cplx mu : mus)
      for (int a = 0; a < M; ++a) worst = std::max(worst, rel(ratio(sol, (a + 1) % M, a, mu), oracle::para(M, a, mu)));
  }
  return {verdicts && cyc < 1e-10 && worst < 1e-10,
          std::string("TY_3..8 verdicts ") + (verdicts ? "CYCLE_CONSISTENT" : "wrong") + ", cycle residual " + fmt(cyc) +
              ", ratio err " + fmt(worst)};
}

Outcome c5_negative() {
  Outcome o;
  std::ostringstream d;
  for (int k : {6, 8, 10}) {
    auto cat = build_su2k(k);
    auto sol = solve_central(cat, 3, 4);
    double res = 0;
    bool cycle = false;
    for (const auto& c : sol.consistency.cycles) {
      std::set<Label> vs(c.cycle.begin(), c.cycle.end());
      if (vs == std::set<Label>{2, 4, 6}) {
        cycle = true;
        res = c.residual;
      }
    }
    bool ok = sol.verdict == Verdict::INCONSISTENT && cycle && res > 1e-3;
    bool tree = solve_central(cat, 3, 2).verdict == Verdict::TREE_UNIQUE;
    o.pass = o.pass && ok && tree;
    d << "k=" << k << " " << to_string(sol.verdict) << (cycle ? " cycle 1-2-3 residual " + fmt(res) : " no 1-2-3 cycle")
      << (tree ? "" : " phi=1 not TREE_UNIQUE") << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome c6_current() {
  double worst = 0;
  auto add = [&](const CategoryData& cat, Label rho, Label phi) {
    worst = std::max(worst, verify_current_vertex(cat, rho, phi, solve_central(cat, rho, phi)).residual("current.vertex"));
  };
  for (int k = 2; k <= 5; ++k) add(build_su2k(k), 1, 2);
  add(build_su2k(4), 2, 2);
  for (int M = 3; M <= 6; ++M) {
    auto ty = build_tambara_yamagami(M);
    add(ty, M, 1);
  }
  auto cat = build_su2k(3);
  auto sol = scaled(solve_central(cat, 1, 2), 2, 1.0 + 1e-3);
  double mutated = verify_current_vertex(cat, 1, 2, sol).residual("current.vertex");
  return {worst < 1e-10 && mutated > 1e-4,
          "max residual " + fmt(worst) + ", mutated amplitude residual " + fmt(mutated)};
}

Outcome c7_ybe() {
  double worst = 0;
  for (int k = 2; k <= 4; ++k) {
    auto cat = build_su2k(k);
    worst = std::max(worst, verify_ybe(cat, 1, solve_central(cat, 1, 2)).residual("ybe"));
  }
  auto c4 = build_su2k(4);
  worst = std::max(worst, verify_ybe(c4, 2, solve_central(c4, 2, 2)).residual("ybe"));
  for (int M : {3, 4}) {
    auto ty = build_tambara_yamagami(M);
    worst = std::max(worst, verify_ybe(ty, M, solve_central(ty, M, 1)).residual("ybe"));
  }
  auto su = build_su2k(3);
  double neg = verify_ybe(su, 1, scaled(solve_central(su, 1, 2), 0, 2.0)).residual("ybe");
  return {worst < 1e-8 && neg > 1e-1, "max residual " + fmt(worst) + ", negative control " + fmt(neg)};
}

Outcome c8_transfer() {
  auto cat = build_su2k(3);
  auto sol = solve_central(cat, 1, 2);
  double worst = 0;
  for (int L : {4, 6}) worst = std::max(worst, verify_commuting_transfer(cat, 1, sol, L).residual("transfer.commute"));
  // two channels always commute (any ratio is on the TL curve), so perturb a three-channel weight
  auto c4 = build_su2k(4);
  double neg = verify_commuting_transfer(c4, 2, scaled(solve_central(c4, 2, 2), 4, 1.3), 4).residual("transfer.commute");
  return {worst < 1e-8 && neg >= 1e-3,
          "su2_3 L=4,6 relative commutator " + fmt(worst) + ", negative control " + fmt(neg)};
}

Outcome c9_algebra() {
  double proj = 0, tl = 0, braid = 0, r1 = 0;
  std::vector<std::pair<CategoryData, Label>> cases;
  for (int k = 2; k <= 5; ++k) cases.push_back({build_su2k(k), 1});
  cases.push_back({build_su2k(4), 2});
  cases.push_back({build_tambara_yamagami(3), 3});
  cases.push_back({build_tambara_yamagami(4), 4});
  bool tl_seen = false;
  for (auto& [cat, rho] : cases) {
    auto p = verify_projector_algebra(cat, rho, 4);
    proj = std::max({proj, p.residual("projector.orthogonality"), p.residual("projector.completeness")});
    if (p.find("tl.e_squared")) {
      tl_seen = true;
      tl = std::max({tl, p.residual("tl.e_squared"), p.residual("tl.eee"), p.residual("tl.far_commute")});
    }
    auto b = verify_braid_relations(cat, rho, 4);
    braid = std::max({braid, b.residual("braid.reidemeister2"), b.residual("braid.reidemeister3")});
    Label phi = cat.family == "ty" ? 1 : 2;
    auto l = verify_braid_limits(cat, rho, solve_central(cat, rho, phi));
    r1 = std::max(r1, l.residual("braid_limit.R1_identity"));
  }
  bool ok = proj < 1e-10 && tl_seen && tl < 1e-10 && braid < 1e-9 && r1 < 1e-12;
  return {ok, "projectors " + fmt(proj) + ", TL " + fmt(tl) + ", Reidemeister II/III " + fmt(braid) + ", R(1)~1 " +
                  fmt(r1)};
}

Outcome c10_loop() {
  double fe = 0, routes = 0;
  for (int k = 2; k <= 6; ++k) {
    cplx q = std::polar(1.0, oracle::kPi / (k + 2));
    fe = std::max(fe, loop_functional_check(q, 50, kSeed).residual("loop.functional_equation"));
    for (cplx mu : sample_mus(kSeed + k, 3, {q * q})) {
      auto w = loop_weights(q, mu);
      cplx a = loop_partition_enumeration(w, 2, 2), b = loop_partition_transfer(w, 2, 2);
      routes = std::max(routes, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  return {fe < 1e-10 && routes < 1e-10, "functional equation " + fmt(fe) + " (50 samples), 2x2 routes " + fmt(routes)};
}

Outcome c11_determinism() {
  auto capture = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::to_string(code) + out.str();
  };
  std::vector<std::vector<std::string>> runs{
      {"verify", "ybe", "--family", "ty", "--M", "4", "--L", "3", "--samples", "25", "--seed", "7", "--format", "json"},
      {"verify", "transfer", "--family", "su2", "--level", "3", "--L", "4", "--format", "json"},
      {"baxterize", "--family", "su2", "--level", "8", "--rho", "3/2", "--phi", "1", "--mu", "2", "--format", "json"},
      {"classify", "--family", "su2", "--level", "8", "--format", "json"}};
  bool same = true;
  for (const auto& r : runs) same = same && capture(r) == capture(r);

  double worst = 0;
  std::vector<std::tuple<CategoryData, Label, Label>> cases;
  cases.emplace_back(build_tambara_yamagami(7), 7, 1);
  cases.emplace_back(build_su2k(9), 4, 2);
  cases.emplace_back(lie(Family::G2, 3), 1, 2);
  for (auto& [cat, rho, phi] : cases) {
    auto base = solve_central(cat, rho, phi);
    for (std::uint64_t s = 1; s <= 10; ++s) {
      SolveOptions o;
      o.shuffle_seed = s;
      auto other = solve_central(cat, rho, phi, o);
      for (cplx mu : sample_mus(s, 5))
        for (Label c : base.channels)
          worst = std::max(worst, rel(ratio(other, c, base.reference, mu), ratio(base, c, base.reference, mu)));
    }
  }
  return {same && worst < 1e-10,
          std::string(same ? "byte-identical reruns" : "reruns differ") + ", spanning-tree spread " + fmt(worst)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-failure" && i + 1 < argc) known.insert(std::stoi(argv[++i]));
  }
  std::vector<std::function<Outcome()>> criteria{c1_loops,   c2_lie,       c3_higher_spin, c4_parafermions,
                                                 c5_negative, c6_current, c7_ybe,          c8_transfer,
                                                 c9_algebra, c10_loop,    c11_determinism};
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int n = static_cast<int>(i) + 1;
    if (!o.pass) failed.insert(n);
    std::printf("criterion %2d: %s  %s [%.1fs]%s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                !o.pass && known.count(n) ? " (known failure)" : "");
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  return failed == known ? 0 : 1;
}
