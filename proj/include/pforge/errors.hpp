#pragma once

#include <stdexcept>
#include <string>

namespace pforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedOrder : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct UnknownChannel : Error { using Error::Error; };
struct InvalidCorrelation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct GroupBudgetExceeded : BudgetExceeded { using BudgetExceeded::BudgetExceeded; };
struct NonFinite : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InvalidGroupSize : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

}  // namespace pforge
