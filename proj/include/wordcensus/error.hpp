#pragma once

#include <stdexcept>
#include <string>

namespace wordcensus {

// One code per failure mode the toolkit can report. CLI exit codes are
// derived from these (see tools/main.cpp).
enum class Errc {
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderCapExceeded,
  UnknownPreset,
  InvalidParameter,
  SplitFailure,
  NoSuitablePrime,
  InsufficientModuli,
  Inconsistent,
  ParseError,
  ArityMismatch,
  NotASurfaceWord,
  NotOrientable,
  DepthCapExceeded,
  BudgetExceeded,
  GroupMismatch,
  InvalidGenus,
  OracleMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace wordcensus
