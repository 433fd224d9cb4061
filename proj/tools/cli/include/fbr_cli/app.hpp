#pragma once

#include <ostream>

namespace fbr::cli {

/// Entry point of the fbr tool. Exit codes: 0 success, 1 verification failure,
/// 2 configuration or I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fbr::cli
