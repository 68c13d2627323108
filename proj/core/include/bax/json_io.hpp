#pragma once

#include <string>

#include "bax/category.hpp"

namespace bax {

// {labels, dual, N, Delta, nu, F, ...}; lossless for rationals, bit-stable for doubles.
std::string category_to_json(const CategoryData& cat);
CategoryData category_from_json(const std::string& text);

}  // namespace bax
