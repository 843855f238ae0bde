#pragma once

#include <stdexcept>
#include <string>

namespace slocc3 {

// Every failure mode of the toolkit maps to one of these codes so that
// callers (and the CLI exit-code contract) can dispatch without string
// matching.
enum class Errc {
  NonHermitian,
  NoConvergence,
  NotPsd,
  DimensionMismatch,
  NotNormalizable,
  BadPartyCount,
  BadRange,
  BadSubset,
  BadDimension,
  OutOfRange,
  NotGhzClass,
  NotWClass,
  DegenerateRange,
  Inconclusive,
  Annihilated,
  NotEntangled,
  IncompletePovm,
  BadDims,
  ParseError,
  UnknownSuite,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace slocc3
