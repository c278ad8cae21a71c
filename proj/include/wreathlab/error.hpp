#ifndef WREATHLAB_ERROR_HPP_
#define WREATHLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreathlab {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define WREATHLAB_DEFINE_ERROR(Name)  \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  };

  WREATHLAB_DEFINE_ERROR(InvalidGroup)
  WREATHLAB_DEFINE_ERROR(InvalidArgument)
  WREATHLAB_DEFINE_ERROR(OrderOverflow)
  WREATHLAB_DEFINE_ERROR(NotNormal)
  WREATHLAB_DEFINE_ERROR(NotAbelian)
  WREATHLAB_DEFINE_ERROR(NotGenerating)
  WREATHLAB_DEFINE_ERROR(NotAHomomorphism)
  WREATHLAB_DEFINE_ERROR(NotInvariant)
  WREATHLAB_DEFINE_ERROR(TriangleViolation)
  WREATHLAB_DEFINE_ERROR(MismatchedBase)
  WREATHLAB_DEFINE_ERROR(CapExceeded)
  WREATHLAB_DEFINE_ERROR(InternalInconsistency)
  WREATHLAB_DEFINE_ERROR(Overflow)
  WREATHLAB_DEFINE_ERROR(PermutationInconsistent)
  WREATHLAB_DEFINE_ERROR(UnsupportedKind)
  WREATHLAB_DEFINE_ERROR(ConfigError)

#undef WREATHLAB_DEFINE_ERROR

  /// Thrown by the group-expression and presentation parsers; carries the
  /// zero-based offset of the offending character.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace wreathlab

#endif  // WREATHLAB_ERROR_HPP_
