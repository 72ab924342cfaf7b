#pragma once

#include <optional>
#include <vector>

#include "cde/rational.hpp"

namespace cde {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct Echelon {
	Matrix m;                 // reduced row echelon form, zero rows dropped
	std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(Matrix a);

// Some solution of A x = b (free variables set to 0), or nothing when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Basis of {x : A x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& a, int cols);

Rational dot(const Vector& x, const Vector& y);

}  // namespace cde
