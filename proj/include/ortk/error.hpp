#ifndef ORTK_ERROR_HPP
#define ORTK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ortk {

enum class ErrorKind {
  DegreeOverflow,
  RankMismatch,
  SingularBasis,
  NotInSpan,
  UnsupportedFamily,
  NotIsotropicSimple,
  DisconnectedEndpoints,
  InvalidWalk,
  PreconditionViolated,
  UnboundedCone,
  BasisNotStabilized,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ortk

#endif
