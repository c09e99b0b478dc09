#pragma once

#include <complex>
#include <string>
#include <vector>

namespace paramod {

// "0.1+1.05i", "1.3i", "-2", "i" -> complex; throws std::invalid_argument.
std::complex<double> parse_tau(const std::string& s);

// Full command-line driver; returns the process exit code:
//   0 success, 1 verification failed, 2 usage or domain error,
//   3 resource cap refused.
int run_cli(const std::vector<std::string>& args);

}  // namespace paramod
