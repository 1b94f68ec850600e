#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "asymk/errors.hpp"

namespace asymk::cli {

enum class Format { Json, Text };

struct JobSpec {
  std::string command;  // analyze, kpoly, phi, expand, concavity, carries, asymptotic, convergence
  std::string matrixPath;
  std::optional<std::string> polyPath;
  std::optional<std::string> expansionPath;
  std::optional<std::string> orderPath;  // carries index order override
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> rMax;
  std::optional<std::int64_t> r1;
  std::optional<std::int64_t> r2;
  std::optional<std::int64_t> stride;
  std::optional<std::int64_t> order;
  std::optional<std::string> bound;     // series cutoff on the positive functional, "p/q"
  std::string method = "count";         // phi: count | geometric
  bool allowOffStride = false;
  Format format = Format::Json;
  Limits limits;
};

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kDegenerate = 2,
  kSizeLimit = 3,
  kCheckFailed = 4,
};

struct Outcome {
  int exitCode = kOk;
  std::string output;  // one document, newline terminated
};

Outcome run(const JobSpec& spec);

}  // namespace asymk::cli
