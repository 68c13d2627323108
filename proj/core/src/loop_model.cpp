#include <algorithm>
#include <cmath>
#include <map>

#include "bax/verifier.hpp"

namespace bax {

cplx loop_c_ratio(cplx q, cplx mu) { return (mu - 1.0) / (q - mu / q); }

LoopWeights loop_weights(cplx q, cplx mu) { return {q + 1.0 / q, 1.0, loop_c_ratio(q, mu)}; }

double loop_functional_residual(cplx q, cplx mu, cplx mu2, double perturb) {
  const cplx d = q + 1.0 / q;
  const cplx a = 1.0, ap = 1.0, aa = 1.0;  // A_1(u), A_1(u'), A_1(u+u')
  const cplx c = loop_c_ratio(q, mu) + perturb;
  const cplx cp = loop_c_ratio(q, mu2) + perturb;
  const cplx cc = loop_c_ratio(q, mu * mu2) + perturb;
  cplx lhs = a * cc * ap;
  cplx t1 = d * cp * aa * c, t2 = ap * aa * c, t3 = cp * aa * a, t4 = c * cc * cp;
  double scale = std::abs(lhs) + std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4);
  return std::abs(lhs - (t1 + t2 + t3 + t4)) / std::max(scale, 1.0);
}

VerificationReport loop_functional_check(cplx q, int samples, std::uint64_t seed, double tolerance, double perturb) {
  VerificationReport rep;
  rep.family = "loop";
  char buf[64];
  std::snprintf(buf, sizeof buf, "q=%.17g%+.17gi", q.real(), q.imag());
  rep.params = buf;
  rep.seed = seed;
  const cplx pole = q * q;  // C/A_1 blows up at mu = q^2
  auto mus = sample_mus(seed, 4 * samples, {pole});
  double worst = 0, first = 0, second = 0;
  int used = 0;
  for (std::size_t i = 0; i + 1 < mus.size() && used < samples; i += 2) {
    cplx mu = mus[i], mu2 = mus[i + 1];
    if (std::abs(mu * mu2 - pole) < 1e-3) continue;
    ++used;
    worst = std::max(worst, loop_functional_residual(q, mu, mu2, perturb));
    // diagrams one to three, in the cleared normalization A_1(u) = q - mu/q, C(u) = mu - 1
    auto a1 = [q](cplx m) { return q - m / q; };
    auto cl = [](cplx m) { return m - 1.0; };
    cplx mm = mu * mu2;
    first = std::max(first, std::abs(a1(mu) * a1(mm) * a1(mu2) - a1(mu2) * a1(mm) * a1(mu)));
    // read homogeneously: C(u) C(u+u') A_1(u') on both sides
    second = std::max(second, std::abs(cl(mu) * cl(mm) * a1(mu2) - a1(mu2) * cl(mm) * cl(mu)) /
                                  std::max(1.0, std::abs(cl(mu) * cl(mm) * a1(mu2))));
  }
  rep.add("loop.functional_equation", worst, tolerance, used);
  rep.add("loop.first_diagram", first, tolerance, used);
  rep.add("loop.second_third_diagram", second, tolerance, used);
  return rep;
}

namespace {

// legs of vertex v: N=0, E=1, S=2, W=3
constexpr int kN = 0, kE = 1, kS = 2, kW = 3;

}  // namespace

cplx loop_partition_enumeration(const LoopWeights& w, int Lx, int Ly) {
  if (Lx < 1 || Ly < 1) throw DomainError("torus sizes must be positive");
  const int V = Lx * Ly;
  if (V > 16) throw DomainError("loop enumeration is capped at 16 vertices");
  auto vid = [Lx, Ly](int x, int y) { return ((y + Ly) % Ly) * Lx + ((x + Lx) % Lx); };

  std::vector<int> ext(4 * V);
  for (int y = 0; y < Ly; ++y)
    for (int x = 0; x < Lx; ++x) {
      int v = vid(x, y);
      ext[4 * v + kE] = 4 * vid(x + 1, y) + kW;
      ext[4 * vid(x + 1, y) + kW] = 4 * v + kE;
      ext[4 * v + kN] = 4 * vid(x, y + 1) + kS;
      ext[4 * vid(x, y + 1) + kS] = 4 * v + kN;
    }

  cplx Z = 0.0;
  std::vector<int> in(4 * V);
  std::vector<char> seen(4 * V);
  for (std::uint32_t mask = 0; mask < (1u << V); ++mask) {
    int ne = 0;
    for (int v = 0; v < V; ++v) {
      bool e = (mask >> v) & 1u;
      ne += e;
      int base = 4 * v;
      if (!e) {  // A_1: S-W, E-N
        in[base + kS] = base + kW, in[base + kW] = base + kS;
        in[base + kE] = base + kN, in[base + kN] = base + kE;
      } else {  // e: S-E, W-N
        in[base + kS] = base + kE, in[base + kE] = base + kS;
        in[base + kW] = base + kN, in[base + kN] = base + kW;
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = 0;
    for (int start = 0; start < 4 * V; ++start) {
      if (seen[start]) continue;
      ++loops;
      int p = start;
      do {
        seen[p] = 1;
        int q = in[p];
        seen[q] = 1;
        p = ext[q];
      } while (p != start);
    }
    Z += std::pow(w.a1, V - ne) * std::pow(w.c, ne) * std::pow(w.d, loops);
  }
  return Z;
}

cplx loop_partition_enumeration(cplx q, cplx mu, int Lx, int Ly) {
  return loop_partition_enumeration(loop_weights(q, mu), Lx, Ly);
}

namespace {

// Small degree <= 2 graph; endpoints have degree 1.
struct PathGraph {
  explicit PathGraph(int n) : adj(n) {}
  void link(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // follow from endpoint a, return the other endpoint
  int walk(int a, std::vector<char>& seen) const {
    int prev = -1, cur = a;
    seen[cur] = 1;
    while (true) {
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) {
          next = x;
          break;
        }
      if (next < 0) return cur;
      prev = cur;
      cur = next;
      seen[cur] = 1;
      if (adj[cur].size() == 1) return cur;
    }
  }
  int closed_loops(std::vector<char>& seen) const {
    int loops = 0;
    for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
      if (seen[s] || adj[s].empty()) continue;
      ++loops;
      int prev = -1, cur = s;
      do {
        seen[cur] = 1;
        int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        if (adj[cur][0] == adj[cur][1]) next = adj[cur][0];  // two-node loop
        prev = cur;
        cur = next;
      } while (cur != s);
    }
    return loops;
  }
  std::vector<std::vector<int>> adj;
};

}  // namespace

cplx loop_partition_transfer(const LoopWeights& w, int Lx, int Ly) {
  if (Lx < 1 || Ly < 1) throw DomainError("torus sizes must be positive");
  if (Lx > 6) throw DomainError("loop transfer matrix is capped at Lx = 6");
  // state: pairing of 2Lx points, bottom ends 0..Lx-1 and top ends Lx..2Lx-1
  using Pairing = std::vector<int>;
  std::map<Pairing, cplx> state;
  Pairing id(2 * Lx);
  for (int x = 0; x < Lx; ++x) id[x] = Lx + x, id[Lx + x] = x;
  state[id] = 1.0;

  for (int row = 0; row < Ly; ++row) {
    std::map<Pairing, cplx> next;
    for (const auto& [pairing, amp] : state) {
      for (std::uint32_t mask = 0; mask < (1u << Lx); ++mask) {
        // nodes: bottom 0..Lx-1, old top Lx..2Lx-1, legs 2Lx + 4x + leg
        PathGraph g(2 * Lx + 4 * Lx);
        auto leg = [Lx](int x, int l) { return 2 * Lx + 4 * ((x + Lx) % Lx) + l; };
        for (int i = 0; i < 2 * Lx; ++i)
          if (i < pairing[i]) g.link(i, pairing[i]);
        int ne = 0;
        for (int x = 0; x < Lx; ++x) {
          g.link(Lx + x, leg(x, kS));
          g.link(leg(x, kE), leg(x + 1, kW));
          if ((mask >> x) & 1u) {
            ++ne;
            g.link(leg(x, kS), leg(x, kE));
            g.link(leg(x, kW), leg(x, kN));
          } else {
            g.link(leg(x, kS), leg(x, kW));
            g.link(leg(x, kE), leg(x, kN));
          }
        }
        std::vector<char> seen(g.adj.size(), 0);
        Pairing out(2 * Lx);
        auto slot = [&](int node) { return node < Lx ? node : Lx + (node - 2 * Lx - kN) / 4; };
        std::vector<int> ends;
        for (int x = 0; x < Lx; ++x) ends.push_back(x);
        for (int x = 0; x < Lx; ++x) ends.push_back(leg(x, kN));
        for (int e : ends) {
          if (seen[e]) continue;
          int other = g.walk(e, seen);
          out[slot(e)] = slot(other);
          out[slot(other)] = slot(e);
        }
        int loops = g.closed_loops(seen);
        next[out] += amp * std::pow(w.a1, Lx - ne) * std::pow(w.c, ne) * std::pow(w.d, loops);
      }
    }
    state = std::move(next);
  }

  cplx Z = 0.0;
  for (const auto& [pairing, amp] : state) {
    PathGraph g(2 * Lx);
    for (int i = 0; i < 2 * Lx; ++i)
      if (i < pairing[i]) g.link(i, pairing[i]);
    for (int x = 0; x < Lx; ++x) g.link(Lx + x, x);
    std::vector<char> seen(2 * Lx, 0);
    Z += amp * std::pow(w.d, g.closed_loops(seen));
  }
  return Z;
}

}  // namespace bax
