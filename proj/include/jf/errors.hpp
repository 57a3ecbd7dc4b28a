#ifndef JF_ERRORS_HPP
#define JF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jf {

// Failure classes used across the library:
//   PrecisionError -- a query or solve needs more coefficients than are stored
//   DomainError    -- argument outside an operation's documented domain
//   StructureError -- incompatible ranks/denominators, malformed serialized data
//   InternalError  -- dual constructions disagree or an invariant broke; a bug,
//                     never a user error
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct StructureError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

} // namespace jf

#endif
