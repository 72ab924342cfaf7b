#include "cde/linalg.hpp"

#include <utility>

#include "cde/errors.hpp"

namespace cde {

Echelon rref(Matrix a) {
	Echelon e;
	if(a.empty()) {
		return e;
	}
	std::size_t rows = a.size(), cols = a[0].size();
	std::size_t r = 0;
	for(std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t piv = r;
		while(piv < rows && a[piv][c] == 0) {
			++piv;
		}
		if(piv == rows) {
			continue;
		}
		std::swap(a[r], a[piv]);
		Rational inv = 1 / a[r][c];
		for(std::size_t k = c; k < cols; ++k) {
			a[r][k] *= inv;
		}
		for(std::size_t i = 0; i < rows; ++i) {
			if(i == r || a[i][c] == 0) {
				continue;
			}
			Rational f = a[i][c];
			for(std::size_t k = c; k < cols; ++k) {
				if(a[r][k] != 0) {
					a[i][k] -= f * a[r][k];
				}
			}
		}
		e.pivots.push_back(static_cast<int>(c));
		++r;
	}
	a.resize(r);
	e.m = std::move(a);
	return e;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
	if(a.size() != b.size()) {
		throw InputError("solve: row count mismatch");
	}
	if(a.empty()) {
		return Vector{};
	}
	std::size_t cols = a[0].size();
	Matrix aug = a;
	for(std::size_t i = 0; i < aug.size(); ++i) {
		aug[i].push_back(b[i]);
	}
	Echelon e = rref(std::move(aug));
	Vector x(cols);
	for(std::size_t r = 0; r < e.pivots.size(); ++r) {
		if(e.pivots[r] == static_cast<int>(cols)) {
			return std::nullopt;
		}
		x[e.pivots[r]] = e.m[r][cols];
	}
	return x;
}

std::vector<Vector> nullspace(const Matrix& a, int cols) {
	Echelon e = rref(a);
	std::vector<bool> is_pivot(cols, false);
	for(int c : e.pivots) {
		is_pivot[c] = true;
	}
	std::vector<Vector> basis;
	for(int f = 0; f < cols; ++f) {
		if(is_pivot[f]) {
			continue;
		}
		Vector v(cols);
		v[f] = 1;
		for(std::size_t r = 0; r < e.pivots.size(); ++r) {
			v[e.pivots[r]] = -e.m[r][f];
		}
		basis.push_back(std::move(v));
	}
	return basis;
}

Rational dot(const Vector& x, const Vector& y) {
	if(x.size() != y.size()) {
		throw InputError("dot: length mismatch");
	}
	Rational s = 0;
	for(std::size_t i = 0; i < x.size(); ++i) {
		if(x[i] != 0 && y[i] != 0) {
			s += x[i] * y[i];
		}
	}
	return s;
}

}  // namespace cde
