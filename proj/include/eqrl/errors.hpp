#pragma once

#include <stdexcept>
#include <string>

namespace eqrl {

// One code per contract violation the toolkit can report. Collisions during
// stepping are data, not errors, and never appear here.
enum class Err {
  UnknownGlyph,
  NoFreeCell,
  UnlinkedPad,
  OpenBorder,
  OutOfBounds,
  GoalInWall,
  RegionNotFree,
  DimensionMismatch,
  VariantDataMismatch,
  NaNDetected,
  UnreachableGoalSample,
  WrongAgentKind,
  NegativeInput,
  BadFormat,
  IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace eqrl
