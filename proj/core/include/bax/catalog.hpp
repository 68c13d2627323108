#pragma once

#include <map>
#include <string>
#include <vector>

#include "bax/category.hpp"

namespace bax {

enum class Family { SU2K, MINIMAL_A, TAMBARA_YAMAGAMI, SO_N, SP_2M, G2 };

struct FamilySpec {
  Family family = Family::SU2K;
  int k = 1;
  int n = 0;  // so(n)
  int m = 0;  // sp(2m)
  int M = 0;  // Z_M Tambara-Yamagami

  void validate() const;  // DomainError when out of range
  std::string params() const;
};

std::string family_key(Family f);     // "su2", "minimal", "ty", "so", "sp", "g2"
Family parse_family(const std::string& key);

struct LieFamilyData {
  int dual_coxeter = 0;
  std::vector<std::string> channels;            // rho(x)rho, rho = V
  std::map<std::string, Rational> casimirs;     // C_g(a)
  std::map<std::string, int> signs;             // nu_a^{VV}
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> tp_adjacency;  // by phi
  Rational q_exponent_denominator;              // q = exp(i pi / (k + h))
};

LieFamilyData lie_family_data(const FamilySpec& spec);

CategoryData build_su2k(int k);
CategoryData build_minimal_A(int k);
CategoryData build_tambara_yamagami(int M);
CategoryData build_lie_twist_data(const FamilySpec& spec);
CategoryData build(const FamilySpec& spec);

// exp(i pi / (k + h)) for the family
cplx family_q(const FamilySpec& spec);

struct FamilyInfo {
  std::string key;
  std::string description;
  std::string parameters;
  bool baxterisable = false;
  bool representable = false;
};
std::vector<FamilyInfo> list_families();

}  // namespace bax
