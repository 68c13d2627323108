#pragma once

#include <vector>

#include "bax/category.hpp"

namespace bax::detail {

// Labels are colors 0..k (twice the spin).
bool su2_admissible(int k, int a, int b, int c);
std::vector<double> su2_dims(int k);
FSymbolTable su2_fsymbols(int k);

}  // namespace bax::detail
