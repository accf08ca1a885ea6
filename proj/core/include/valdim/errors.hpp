#ifndef VALDIM_ERRORS_HPP
#define VALDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valdim {

// Base class for all contract violations raised by the library. Outcomes that
// are legitimate answers (an absent join, an infeasible composition, a violated
// preference profile) are returned as values, never thrown.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A relation pair would make the order relation cyclic.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A relation pair or lookup names an element outside the carrier.
class UnknownElement : public Error {
 public:
  using Error::Error;
};

// A carrier (or enumeration bound) exceeds the configured hard cap.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

// A label-merging union received parts with overlapping element labels.
class LabelCollision : public Error {
 public:
  using Error::Error;
};

// An indexed family received the same index symbol twice.
class DuplicateIndex : public Error {
 public:
  using Error::Error;
};

// An index symbol is not part of the indexed family.
class UnknownIndex : public Error {
 public:
  using Error::Error;
};

// An element does not belong to the dimension it was assigned to.
class ValueNotInDimension : public Error {
 public:
  using Error::Error;
};

// A projection asked for an index outside the state's domain.
class NotInDomain : public Error {
 public:
  using Error::Error;
};

// Two states that must share one indexed family do not.
class LrvMismatch : public Error {
 public:
  using Error::Error;
};

// An operation requiring all binary joins was applied to a poset lacking some.
class NotAJoinSemilattice : public Error {
 public:
  using Error::Error;
};

// A staged scenario was driven out of its phase order.
class PhaseError : public Error {
 public:
  using Error::Error;
};

// A preference profile leaves a required comparison undetermined.
class IncompleteProfile : public Error {
 public:
  using Error::Error;
};

// A document declares the same name twice.
class DuplicateName : public Error {
 public:
  using Error::Error;
};

// A document references a name that was never declared.
class UnknownName : public Error {
 public:
  using Error::Error;
};

}  // namespace valdim

#endif  // VALDIM_ERRORS_HPP
