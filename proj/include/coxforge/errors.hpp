#pragma once

#include <stdexcept>
#include <string>

namespace coxforge {

// Every failure raised by the library derives from Error so callers (the CLI,
// the Python bindings) can catch one type and still report the kind.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define COXFORGE_ERROR(Name)                                            \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  }

COXFORGE_ERROR(InvalidArgument);
COXFORGE_ERROR(NotDivisible);
COXFORGE_ERROR(DivisionByZero);
COXFORGE_ERROR(FieldMismatch);
COXFORGE_ERROR(Inconclusive);
COXFORGE_ERROR(IndexOutOfRange);
COXFORGE_ERROR(DuplicateIndices);
COXFORGE_ERROR(Overflow);
COXFORGE_ERROR(NotBasic);
COXFORGE_ERROR(NotCubicFixing);
COXFORGE_ERROR(BadConfiguration);
COXFORGE_ERROR(InadmissibleTau);
COXFORGE_ERROR(NoSalemFactor);
COXFORGE_ERROR(OrbitMismatch);
COXFORGE_ERROR(RelationFailed);
COXFORGE_ERROR(SearchBoundExceeded);
COXFORGE_ERROR(ParseError);

#undef COXFORGE_ERROR

// Indeterminate carries which base point was hit (1-based index into the
// indeterminacy locus of the map that raised it).
class Indeterminate : public Error {
 public:
  Indeterminate(int index, const std::string& what)
      : Error("Indeterminate", what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace coxforge
