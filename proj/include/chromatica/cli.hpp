#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "chromatica/io.hpp"
#include "chromatica/random.hpp"

namespace chromatica::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kStructural = 3,
  kNetwork = 4,
};

/// Entry point for the `chromatica` tool. `args` includes the program name.
/// `transport` replaces the HTTP client for `fetch` when non-null.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        io::Transport* transport = nullptr);

/// Seed of benchmark instance (n, p, trial): master, n, the bit pattern of
/// p and trial folded in that order with hash_combine.
std::uint64_t instance_seed(std::uint64_t master, std::size_t n, double p, std::size_t trial);

/// Seed handed to `algorithm` on that instance: the instance seed combined
/// with fnv1a(algorithm name).
std::uint64_t algorithm_seed(std::uint64_t instance, std::string_view algorithm);

}  // namespace chromatica::cli
