#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bax::cli {

// Exit codes: 0 success, 1 verdict failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bax::cli
