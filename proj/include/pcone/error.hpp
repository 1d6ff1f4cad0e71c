#pragma once

#include <stdexcept>
#include <string>

namespace pcone {

enum class Errc {
  NotPointed,
  NotFullDimensional,
  EmptyCap,
  DirectionOutsideCap,
  OrthogonalPair,
  NearOrthogonalPair,
  Unbounded,
  EmptySamples,
  SizeLimit,
  DegenerateInput,
  NoConvergence,
  InfeasibleGeometry,
  EmptyTruncation,
  CertificationFailed,
  SchemaError,
  UnsupportedDimension,
  InternalError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace pcone
