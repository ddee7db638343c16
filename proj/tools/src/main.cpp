// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cstdio>
#include <exception>

#include "commands.hpp"
#include "config.hpp"
#include "sbhclock/types.hpp"

namespace {

// 0: every check passed.  1: the invocation itself was invalid.  2: the run
// executed but a numerical check or scheme failed.
constexpr int kExitPass = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

}  // namespace

int main(int argc, char** argv) {
  using sbhclock::cli::CheckResult;
  using sbhclock::cli::CommandResult;
  using sbhclock::cli::ConfigError;
  using sbhclock::cli::RunConfig;

  try {
    const RunConfig cfg = sbhclock::cli::parse_command_line(argc, argv);
    std::fputs(cfg.echo().c_str(), stdout);
    const auto start = std::chrono::steady_clock::now();
    const CommandResult result = sbhclock::cli::run_command(cfg);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    for (const auto& artifact : result.artifacts) {
      std::printf("artifact: %s\n", artifact.c_str());
    }
    for (const CheckResult& check : result.checks) {
      std::printf("check %s: %s (%s)\n", check.name.c_str(),
                  check.pass ? "PASS" : "FAIL", check.detail.c_str());
    }
    std::printf("result: %s (wall %.3f s)\n",
                result.all_pass() ? "PASS" : "FAIL", elapsed.count());
    return result.all_pass() ? kExitPass : kExitNumerical;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const sbhclock::ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const sbhclock::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const sbhclock::Error& e) {
    // TruncationError, NumericalError, UnsupportedMeasureError.
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return kExitNumerical;
  }
}
