#include "wordcensus/error.hpp"

namespace wordcensus {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::SplitFailure: return "SplitFailure";
    case Errc::NoSuitablePrime: return "NoSuitablePrime";
    case Errc::InsufficientModuli: return "InsufficientModuli";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::ParseError: return "ParseError";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotASurfaceWord: return "NotASurfaceWord";
    case Errc::NotOrientable: return "NotOrientable";
    case Errc::DepthCapExceeded: return "DepthCapExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::InvalidGenus: return "InvalidGenus";
    case Errc::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace wordcensus
