#include "bax/baxterizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>

#include <json.hpp>

namespace bax {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TREE_UNIQUE: return "TREE_UNIQUE";
    case Verdict::CYCLE_CONSISTENT: return "CYCLE_CONSISTENT";
    case Verdict::UNDERDETERMINED: return "UNDERDETERMINED";
    case Verdict::INCONSISTENT: return "INCONSISTENT";
  }
  return "?";
}

int TensorProductGraph::components() const {
  std::vector<int> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto idx = [&](Label x) {
    return static_cast<int>(std::find(vertices.begin(), vertices.end(), x) - vertices.begin());
  };
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    int a = root(idx(e.from)), b = root(idx(e.to));
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

int AmplitudeSolution::index_of(Label chi) const {
  auto it = std::find(channels.begin(), channels.end(), chi);
  return it == channels.end() ? -1 : static_cast<int>(it - channels.begin());
}

std::vector<cplx> AmplitudeSolution::poles() const {
  std::vector<cplx> out;
  for (const auto& a : amplitude)
    for (cplx p : a.poles()) {
      bool seen = std::any_of(out.begin(), out.end(), [&](cplx q) { return std::abs(p - q) < 1e-9; });
      if (!seen) out.push_back(p);
    }
  std::sort(out.begin(), out.end(),
            [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return out;
}

std::vector<Label> channels(const CategoryData& cat, Label rho) {
  cat.check_label(rho);
  if (cat.declared && cat.declared->rho == rho) return cat.declared->channels;
  if (cat.rules) return fusion_product(cat, rho, rho);
  throw CapabilityError(cat.name() + " declares no channels for rho = " + cat.display(rho));
}

TensorProductGraph build_tp_graph(const CategoryData& cat, Label rho, Label phi) {
  cat.check_label(rho);
  cat.check_label(phi);
  TensorProductGraph g;
  g.rho = rho;
  g.phi = phi;
  g.vertices = channels(cat, rho);

  if (cat.declared && cat.declared->rho == rho) {
    auto it = cat.declared->graphs.find(phi);
    if (it == cat.declared->graphs.end())
      throw DomainError("no declared tensor-product graph for phi = " + cat.display(phi) + " in " + cat.name());
    for (const auto& [a, b] : it->second) g.edges.push_back({a, b, false});
    return g;
  }

  const FusionRules& N = *cat.rules;
  if (!N(phi, rho, rho))
    throw DomainError("current cannot terminate: " + cat.display(rho) + " is not in " + cat.display(phi) + " x " +
                      cat.display(rho));
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      Label a = g.vertices[i], b = g.vertices[j];
      bool fwd = N(a, phi, b) != 0, bwd = N(b, phi, a) != 0;
      if (fwd && bwd)
        g.edges.push_back({a, b, false});
      else if (fwd)
        g.edges.push_back({a, b, true});
      else if (bwd)
        g.edges.push_back({b, a, true});
    }
  return g;
}

namespace {

constexpr double kDegenerate = 1e-13;

bool degenerate(cplx r, double sign) { return std::abs(r - sign) < kDegenerate; }

}  // namespace

cplx edge_ratio(const CategoryData& cat, Label rho, Label a, Label b, cplx mu) {
  cplx r = twist_edge_ratio(cat, rho, a, b);
  if (degenerate(r, 1.0)) return 1.0;
  if (degenerate(r, -1.0)) return -1.0;
  cplx den = 1.0 + mu * r;
  if (std::abs(den) < 1e-14 * (1.0 + std::abs(mu))) throw SingularityError("edge ratio at a pole", -1.0 / r);
  return (r + mu) / den;
}

RationalFunction edge_ratio_function(const CategoryData& cat, Label rho, Label a, Label b) {
  cplx r = twist_edge_ratio(cat, rho, a, b);
  if (degenerate(r, 1.0)) return RationalFunction::one();
  if (degenerate(r, -1.0)) return {Polynomial::constant(-1.0), Polynomial::constant(1.0)};
  return {Polynomial({r, 1.0}), Polynomial({1.0, r})};
}

namespace {

// Amplitude kept in factored form while propagating, so zeros and poles that meet cancel exactly.
struct Factored {
  cplx lead = 1.0;
  std::vector<cplx> zeros;
  std::vector<cplx> poles;

  void mul_edge(cplx r) {
    if (degenerate(r, 1.0)) return;
    if (degenerate(r, -1.0)) {
      lead = -lead;
      return;
    }
    // (r + mu)/(1 + r mu) = (1/r)(mu + r)/(mu + 1/r)
    lead /= r;
    add(zeros, poles, -r);
    add(poles, zeros, -1.0 / r);
  }

  static void add(std::vector<cplx>& into, std::vector<cplx>& other, cplx root) {
    for (auto it = other.begin(); it != other.end(); ++it)
      if (std::abs(*it - root) < 1e-12) {
        other.erase(it);
        return;
      }
    into.push_back(root);
  }

  RationalFunction expand() const {
    Polynomial num = Polynomial::constant(lead);
    for (cplx z : zeros) num = num * Polynomial({-z, 1.0});
    Polynomial den = Polynomial::constant(1.0);
    for (cplx p : poles) den = den * Polynomial({-p, 1.0});
    return {num, den};
  }
};

// Deterministic points alternating inside and outside the unit circle, where unimodular poles live.
std::vector<cplx> cycle_points(int count) {
  std::vector<cplx> pts;
  const double golden = 0.6180339887498949;
  for (int i = 0; i < count; ++i) {
    double theta = 2.0 * std::numbers::pi * std::fmod(0.3 + i * golden, 1.0);
    double radius = (i % 2 == 0) ? 0.55 : 1.8;
    pts.push_back(std::polar(radius, theta));
  }
  return pts;
}

}  // namespace

AmplitudeSolution solve_central(const CategoryData& cat, Label rho, Label phi, const SolveOptions& opts) {
  AmplitudeSolution sol;
  sol.family = cat.name();
  sol.rho = rho;
  sol.phi = phi;
  sol.graph = build_tp_graph(cat, rho, phi);
  const auto& V = sol.graph.vertices;
  const auto& E = sol.graph.edges;
  sol.channels = V;
  const int nv = static_cast<int>(V.size());
  auto vidx = [&](Label x) { return static_cast<int>(std::find(V.begin(), V.end(), x) - V.begin()); };

  Label ref = V.empty() ? 0 : (std::find(V.begin(), V.end(), 0) != V.end() ? 0 : *std::min_element(V.begin(), V.end()));
  if (opts.reference) {
    if (vidx(*opts.reference) == nv) throw DomainError("reference is not a channel of rho x rho");
    ref = *opts.reference;
  }
  sol.reference = ref;

  // adjacency: (neighbour index, edge index)
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (int e = 0; e < static_cast<int>(E.size()); ++e) {
    int a = vidx(E[e].from), b = vidx(E[e].to);
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    for (auto& nb : adj) std::shuffle(nb.begin(), nb.end(), rng);
  }

  std::vector<Factored> amp(nv);
  std::vector<int> parent(nv, -1), depth(nv, -1), tree_edge(nv, -1);
  std::vector<bool> used(E.size(), false);
  std::vector<int> order;
  order.push_back(vidx(ref));
  for (int i = 0; i < nv; ++i)
    if (i != vidx(ref)) order.push_back(i);

  for (int start : order) {
    if (depth[start] >= 0) continue;
    sol.component_refs.push_back(V[start]);
    depth[start] = 0;
    auto attach = [&](int u, int v, int e) {
      depth[v] = depth[u] + 1;
      parent[v] = u;
      tree_edge[v] = e;
      used[e] = true;
      amp[v] = amp[u];
      amp[v].mul_edge(twist_edge_ratio(cat, rho, V[u], V[v]));
    };
    if (!opts.shuffle_seed) {
      std::queue<int> bfs;
      bfs.push(start);
      while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (auto [v, e] : adj[u]) {
          if (depth[v] >= 0) continue;
          attach(u, v, e);
          bfs.push(v);
        }
      }
    } else {
      // depth-first on shuffled neighbours, so cycles close at a seed-dependent edge
      std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
      while (!stack.empty()) {
        auto& [u, next] = stack.back();
        if (next == adj[u].size()) {
          stack.pop_back();
          continue;
        }
        auto [v, e] = adj[u][next++];
        if (depth[v] >= 0) continue;
        attach(u, v, e);
        stack.push_back({v, 0});
      }
    }
  }
  for (int i = 0; i < nv; ++i) sol.amplitude.push_back(amp[i].expand());

  const int npts = 2 * static_cast<int>(E.size()) + 1;
  auto pts = cycle_points(npts);
  sol.consistency.sample_points = npts;
  sol.consistency.tolerance = opts.tolerance;
  bool inconsistent = false;
  for (int e = 0; e < static_cast<int>(E.size()); ++e) {
    if (used[e]) continue;
    int u = vidx(E[e].from), v = vidx(E[e].to);
    CycleCheck cc;
    cc.closing = E[e];
    // tree path u .. lca .. v
    std::vector<int> left, right;
    int a = u, b = v;
    while (depth[a] > depth[b]) left.push_back(a), a = parent[a];
    while (depth[b] > depth[a]) right.push_back(b), b = parent[b];
    while (a != b) {
      left.push_back(a), a = parent[a];
      right.push_back(b), b = parent[b];
    }
    left.push_back(a);
    for (auto it = right.rbegin(); it != right.rend(); ++it) left.push_back(*it);
    for (int x : left) cc.cycle.push_back(V[x]);

    RationalFunction f = edge_ratio_function(cat, rho, V[u], V[v]);
    double worst = 0.0;
    for (cplx mu : pts) {
      try {
        cplx lhs = sol.amplitude[u](mu) * f(mu);
        cplx rhs = sol.amplitude[v](mu);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
      } catch (const SingularityError&) {
        // sample landed on a pole; the remaining points still exceed the degree bound
      }
    }
    cc.residual = worst;
    cc.consistent = worst < opts.tolerance;
    inconsistent = inconsistent || !cc.consistent;
    sol.consistency.cycles.push_back(cc);
  }

  if (inconsistent)
    sol.verdict = Verdict::INCONSISTENT;
  else if (sol.component_refs.size() > 1)
    sol.verdict = Verdict::UNDERDETERMINED;
  else if (!sol.consistency.cycles.empty())
    sol.verdict = Verdict::CYCLE_CONSISTENT;
  else
    sol.verdict = Verdict::TREE_UNIQUE;
  return sol;
}

cplx amplitude_at(const AmplitudeSolution& sol, Label chi, cplx mu) {
  int i = sol.index_of(chi);
  if (i < 0) throw DomainError("label is not a channel of this solution");
  return sol.amplitude[i](mu);
}

std::vector<ClassificationRow> classify_pairs(const CategoryData& cat) {
  if (!cat.baxterisable()) throw CapabilityError(cat.name() + " is not baxterisable");
  std::vector<std::pair<Label, Label>> pairs;
  if (cat.declared) {
    for (const auto& [phi, edges] : cat.declared->graphs) pairs.emplace_back(cat.declared->rho, phi);
  } else {
    const FusionRules& N = *cat.rules;
    for (Label rho = 0; rho < cat.size(); ++rho)
      for (Label phi = 1; phi < cat.size(); ++phi)
        if (N(phi, rho, rho)) pairs.emplace_back(rho, phi);
  }
  std::vector<ClassificationRow> rows;
  for (auto [rho, phi] : pairs) {
    auto sol = solve_central(cat, rho, phi);
    ClassificationRow row;
    row.rho = rho;
    row.phi = phi;
    row.verdict = sol.verdict;
    row.vertices = static_cast<int>(sol.graph.vertices.size());
    row.edges = static_cast<int>(sol.graph.edges.size());
    row.independent_cycles = sol.graph.cycle_rank();
    for (const auto& c : sol.consistency.cycles) row.worst_cycle_residual = std::max(row.worst_cycle_residual, c.residual);
    rows.push_back(row);
  }
  return rows;
}

namespace {

using json = nlohmann::ordered_json;

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json poly_json(const Polynomial& p) {
  json a = json::array();
  for (cplx c : p.coeffs()) a.push_back(cjson(c));
  return a;
}

}  // namespace

std::string solution_to_json(const CategoryData& cat, const AmplitudeSolution& sol, const std::vector<cplx>& mus,
                             bool cleared) {
  json j;
  j["family"] = cat.family;
  j["params"] = cat.params;
  j["rho"] = cat.display(sol.rho);
  j["phi"] = cat.display(sol.phi);
  j["verdict"] = to_string(sol.verdict);
  j["reference"] = cat.display(sol.reference);
  if (sol.component_refs.size() > 1) {
    json refs = json::array();
    for (Label r : sol.component_refs) refs.push_back(cat.display(r));
    j["component_references"] = refs;
  }

  // common denominator from the union of pole multisets
  std::vector<cplx> common;
  if (cleared) {
    for (const auto& a : sol.amplitude) {
      std::vector<cplx> pool = common;
      for (cplx p : a.den().roots()) {
        auto it = std::find_if(pool.begin(), pool.end(), [&](cplx q) { return std::abs(p - q) < 1e-9; });
        if (it != pool.end())
          pool.erase(it);
        else
          common.push_back(p);
      }
    }
  }

  json chans = json::array();
  for (std::size_t i = 0; i < sol.channels.size(); ++i) {
    json c;
    c["label"] = cat.display(sol.channels[i]);
    c["num"] = poly_json(sol.amplitude[i].num());
    c["den"] = poly_json(sol.amplitude[i].den());
    if (cleared) {
      std::vector<cplx> extra = common;
      for (cplx p : sol.amplitude[i].den().roots()) {
        auto it = std::find_if(extra.begin(), extra.end(), [&](cplx q) { return std::abs(p - q) < 1e-9; });
        if (it != extra.end()) extra.erase(it);
      }
      Polynomial poly = sol.amplitude[i].num() * (1.0 / sol.amplitude[i].den().coeffs().back());
      for (cplx p : extra) poly = poly * Polynomial({-p, 1.0});
      c["cleared"] = poly_json(poly);
    }
    chans.push_back(c);
  }
  j["channels"] = chans;

  json edges = json::array();
  for (const auto& e : sol.graph.edges)
    edges.push_back({{"from", cat.display(e.from)}, {"to", cat.display(e.to)}, {"oriented", e.oriented}});
  j["edges"] = edges;

  json poles = json::array();
  for (cplx p : sol.poles()) poles.push_back(cjson(p));
  j["poles"] = poles;

  json cycles = json::array();
  for (const auto& c : sol.consistency.cycles) {
    json cyc;
    json ed = json::array();
    for (std::size_t i = 0; i < c.cycle.size(); ++i) {
      Label a = c.cycle[i], b = c.cycle[(i + 1) % c.cycle.size()];
      ed.push_back({cat.display(a), cat.display(b)});
    }
    cyc["edges"] = ed;
    cyc["closing_edge"] = {cat.display(c.closing.from), cat.display(c.closing.to)};
    cyc["residual"] = c.residual;
    cyc["consistent"] = c.consistent;
    cycles.push_back(cyc);
  }
  j["cycles"] = cycles;
  j["cycle_sample_points"] = sol.consistency.sample_points;
  j["tolerance"] = sol.consistency.tolerance;

  if (!mus.empty()) {
    json vals = json::array();
    for (cplx mu : mus) {
      json v;
      v["mu"] = cjson(mu);
      json amps = json::object();
      for (std::size_t i = 0; i < sol.channels.size(); ++i) amps[cat.display(sol.channels[i])] = cjson(sol.amplitude[i](mu));
      v["amplitudes"] = amps;
      json ratios = json::array();
      for (const auto& e : sol.graph.edges) {
        cplx af = sol.amplitude[sol.index_of(e.from)](mu), at = sol.amplitude[sol.index_of(e.to)](mu);
        ratios.push_back({{"ratio", "A_" + cat.display(e.to) + "/A_" + cat.display(e.from)}, {"value", cjson(at / af)}});
        ratios.push_back({{"ratio", "A_" + cat.display(e.from) + "/A_" + cat.display(e.to)}, {"value", cjson(af / at)}});
      }
      v["edge_ratios"] = ratios;
      vals.push_back(v);
    }
    j["values"] = vals;
  }
  return j.dump(2);
}

}  // namespace bax
