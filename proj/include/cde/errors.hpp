#pragma once

#include <stdexcept>
#include <string>

namespace cde {

// Malformed user input: bad poset file, bad shape literal, precondition violated.
struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured size guard.
struct BudgetExceeded : std::runtime_error {
	using std::runtime_error::runtime_error;
};

}  // namespace cde
