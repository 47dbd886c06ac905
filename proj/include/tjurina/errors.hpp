#pragma once

#include <stdexcept>
#include <string>

namespace tjurina {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   input errors -> exit 2, math precondition failures -> exit 3,
//   invariant violations -> exit 4.
enum class Errc {
    // input / usage
    ParseError,
    UnknownVariable,
    ContextMismatch,
    ShapeError,
    IoError,
    InputError,
    // math preconditions
    NotIsolated,
    MinorLocusTooBig,
    NonIsolatedTransform,
    SupportEscapesExceptional,
    InfiniteTau,
    WrongType,
    PositiveDimensional,
    // invariant violations
    NegativeH1,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ParseError: return "PARSE_ERROR";
        case Errc::UnknownVariable: return "UNKNOWN_VARIABLE";
        case Errc::ContextMismatch: return "CONTEXT_MISMATCH";
        case Errc::ShapeError: return "SHAPE_ERROR";
        case Errc::IoError: return "IO_ERROR";
        case Errc::InputError: return "INPUT_ERROR";
        case Errc::NotIsolated: return "NOT_ISOLATED";
        case Errc::MinorLocusTooBig: return "MINOR_LOCUS_TOO_BIG";
        case Errc::NonIsolatedTransform: return "NON_ISOLATED_TRANSFORM";
        case Errc::SupportEscapesExceptional: return "SUPPORT_ESCAPES_EXCEPTIONAL";
        case Errc::InfiniteTau: return "INFINITE_TAU";
        case Errc::WrongType: return "WRONG_TYPE";
        case Errc::PositiveDimensional: return "POSITIVE_DIMENSIONAL";
        case Errc::NegativeH1: return "NEGATIVE_H1";
        case Errc::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

// 0 = success is never thrown; 2/3/4 per the CLI contract.
inline int errc_exit_code(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::UnknownVariable:
        case Errc::ContextMismatch:
        case Errc::ShapeError:
        case Errc::IoError:
        case Errc::InputError:
            return 2;
        case Errc::NegativeH1:
        case Errc::Internal:
            return 4;
        default:
            return 3;
    }
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }
    int exit_code() const { return errc_exit_code(code_); }

  private:
    Errc code_;
};

} // namespace tjurina
