#pragma once

#include <stdexcept>
#include <string>

namespace qtab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QTAB_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

QTAB_DEFINE_ERROR(InexactDivision)
QTAB_DEFINE_ERROR(DivisionByZero)
QTAB_DEFINE_ERROR(DimensionMismatch)
QTAB_DEFINE_ERROR(InvalidPartition)
QTAB_DEFINE_ERROR(InvalidPoset)
QTAB_DEFINE_ERROR(UnknownFamily)
QTAB_DEFINE_ERROR(NotGraded)
QTAB_DEFINE_ERROR(InvalidTriple)
QTAB_DEFINE_ERROR(UnsupportedRefinement)
QTAB_DEFINE_ERROR(PosetMismatch)
QTAB_DEFINE_ERROR(WrongShape)
QTAB_DEFINE_ERROR(UnsupportedPoset)
QTAB_DEFINE_ERROR(PNotTogglableOut)
QTAB_DEFINE_ERROR(PNotTogglableIn)
QTAB_DEFINE_ERROR(InvalidEscalation)
QTAB_DEFINE_ERROR(UncoveredCase)
QTAB_DEFINE_ERROR(ParseError)
QTAB_DEFINE_ERROR(SizeLimitExceeded)

#undef QTAB_DEFINE_ERROR

}  // namespace qtab
