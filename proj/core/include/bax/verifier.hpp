#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bax/baxterizer.hpp"
#include "bax/category.hpp"
#include "bax/report.hpp"
#include "bax/tree_rep.hpp"

namespace bax {

// Seeded mu samples on the annulus 0.2 < |mu| < 5, at least 1e-3 away from every pole.
std::vector<cplx> sample_mus(std::uint64_t seed, int count, const std::vector<cplx>& poles = {});

struct VerifyOptions {
  int samples = 10;
  std::uint64_t seed = 20240611;
  double tolerance = 1e-10;
};

VerificationReport verify_current_vertex(const CategoryData& cat, Label rho, Label phi,
                                         const AmplitudeSolution& sol, VerifyOptions opts = {});

VerificationReport verify_ybe(const CategoryData& cat, Label rho, const AmplitudeSolution& sol, int L = 3,
                              VerifyOptions opts = {25, 20240611, 1e-8});

VerificationReport verify_commuting_transfer(const CategoryData& cat, Label rho, const AmplitudeSolution& sol,
                                             int L, VerifyOptions opts = {10, 20240611, 1e-8});

// compare_to: a second category whose braid generators (same rho, same heights and projectors)
// are matched against this solution's limits, e.g. minimal models against su(2)_k.
VerificationReport verify_braid_limits(const CategoryData& cat, Label rho, const AmplitudeSolution& sol,
                                       int L = 3, const CategoryData* compare_to = nullptr,
                                       double tolerance = 1e-6);

VerificationReport verify_projector_algebra(const CategoryData& cat, Label rho, int L, double tolerance = 1e-10);

// Reidemeister II / III for the braid generators on an OPEN_ALL basis.
VerificationReport verify_braid_relations(const CategoryData& cat, Label rho, int L, double tolerance = 1e-9);

// Completely packed loop model

struct LoopWeights {
  cplx d;   // loop weight d_rho
  cplx a1;  // A_1
  cplx c;   // C = (A_0 - A_1) / d_rho
};

// C(u)/A_1(u) = (e^u - 1)/(q - q^{-1} e^u), with A_1 = 1 and mu = e^u
cplx loop_c_ratio(cplx q, cplx mu);
LoopWeights loop_weights(cplx q, cplx mu);

// Residual of the fourth-diagram functional equation at (mu, mu2); perturb is added to C/A_1.
double loop_functional_residual(cplx q, cplx mu, cplx mu2, double perturb = 0.0);
VerificationReport loop_functional_check(cplx q, int samples = 50, std::uint64_t seed = 20240611,
                                         double tolerance = 1e-10, double perturb = 0.0);

// Torus Lx x Ly, brute force over 2^(Lx Ly) resolutions with loop tracing.
cplx loop_partition_enumeration(const LoopWeights& w, int Lx, int Ly);
cplx loop_partition_enumeration(cplx q, cplx mu, int Lx, int Ly);
// Same torus via a row transfer matrix on connectivity states.
cplx loop_partition_transfer(const LoopWeights& w, int Lx, int Ly);

}  // namespace bax
