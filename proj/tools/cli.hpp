#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "localcross/io.hpp"
#include "localcross/options.hpp"

namespace localcross::cli {

enum ExitCode : int {
    kYes = 0,
    kNo = 1,
    kInputError = 2,  // parse errors, bad parameters, stale certificates
    kResource = 3,
    kMismatch = 4,    // oracle disagreement or failed certificate verification
};

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Empty when `cert` is a valid drawing of `inst` meeting its budget, else the reason.
/// The instance hash is not checked here.
std::string certificate_problem(const Certificate& cert, const InstanceFile& inst);

/// Table cap after applying LOCALCROSS_TABLE_CAP (if set) to `fallback`.
std::int64_t table_cap_from_env(std::int64_t fallback);

}  // namespace localcross::cli
