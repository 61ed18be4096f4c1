#pragma once

#include <stdexcept>
#include <string>

namespace catalysim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Machine description problems.
class ParseError : public Error { using Error::Error; };
class ValidationError : public Error { using Error::Error; };

// Precondition failures on argument shapes.
class LengthMismatch : public Error { using Error::Error; };
class IndexOutOfRange : public Error { using Error::Error; };
class UnsupportedLength : public Error { using Error::Error; };

// Run-time violations of the machine model.
class SpaceViolation : public Error { using Error::Error; };
class AuxOverrun : public Error { using Error::Error; };
class NonHalting : public Error { using Error::Error; };
class OverflowGuard : public Error { using Error::Error; };

class BudgetExceeded : public Error { using Error::Error; };

// Hashing and restoration.
class NoGoodPrimeBelowCap : public Error { using Error::Error; };
class ResidueNotFound : public Error { using Error::Error; };
class LossExceeded : public Error { using Error::Error; };

} // namespace catalysim
