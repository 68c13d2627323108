#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bax {

// Bad label, inadmissible triple, parameter out of range.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operation needs data the category does not carry (e.g. F-symbols).
struct CapabilityError : std::logic_error {
  using std::logic_error::logic_error;
};

// Input tables violate a fusion-category axiom.
struct AxiomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
  SingularityError(const std::string& what, std::complex<double> where)
      : std::runtime_error(what), pole(where) {}
  std::complex<double> pole;
};

}  // namespace bax
