#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wpi/json_io.hpp"

namespace wpi {

enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 3,
  kExitInput = 4,
  kExitWindow = 5,
};

struct JobSpec {
  std::string command;
  std::optional<std::string> pyramid, relations, tableau, weights;
  std::optional<std::string> triple;  // rr-remove, "k,i,j"
  int radius = 2;
  int budget = 3;
  int depth = 3;
  int instantiations = 3;
  std::uint64_t seed = 0;
  std::string mode = "generic";
};

struct JobResult {
  int exit_code = kExitOk;
  Json report;
};

/// Every input file is parsed before any computation.  Errors come back as
/// a report with an "error" field, never as exceptions.
JobResult run(const JobSpec& job);

}  // namespace wpi
