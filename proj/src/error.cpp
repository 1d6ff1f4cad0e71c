#include "pcone/error.hpp"

namespace pcone {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPointed: return "NotPointed";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::EmptyCap: return "EmptyCap";
    case Errc::DirectionOutsideCap: return "DirectionOutsideCap";
    case Errc::OrthogonalPair: return "OrthogonalPair";
    case Errc::NearOrthogonalPair: return "NearOrthogonalPair";
    case Errc::Unbounded: return "Unbounded";
    case Errc::EmptySamples: return "EmptySamples";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::InfeasibleGeometry: return "InfeasibleGeometry";
    case Errc::EmptyTruncation: return "EmptyTruncation";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::SchemaError: return "SchemaError";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace pcone
