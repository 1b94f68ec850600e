#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asymk {

enum class ErrorKind {
  InvalidInput,
  RankDeficient,
  NotAcyclic,
  DegenerateMap,
  SizeLimit,
  EmptyInterior,
};

std::string_view kindName(ErrorKind kind) noexcept;

// Domain error carrying a machine-readable kind and, where one exists, an
// integer witness vector (a kernel vector, a boundary lattice point, ...).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail, std::vector<std::int64_t> witness = {})
      : std::runtime_error(detail), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

private:
  ErrorKind kind_;
  std::vector<std::int64_t> witness_;
};

// Caps that keep desk-scale computations from running away.
struct Limits {
  std::size_t termCap = 1'000'000;        // terms in an expanded product
  std::size_t latticeBoxCap = 10'000'000; // points in a lattice bounding box
  std::size_t minorCap = 2'000'000;       // square minors enumerated for unimodularity
};

}  // namespace asymk
