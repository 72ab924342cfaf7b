#include "cde/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cde/cde.hpp"
#include "cde/distributions.hpp"
#include "cde/errors.hpp"

namespace cde {

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
	std::size_t n = a.size();
	Rational det = 1;
	for(std::size_t c = 0; c < n; ++c) {
		std::size_t piv = c;
		while(piv < n && a[piv][c] == 0) {
			++piv;
		}
		if(piv == n) {
			return 0;
		}
		if(piv != c) {
			std::swap(a[piv], a[c]);
			det = -det;
		}
		det *= a[c][c];
		for(std::size_t r = c + 1; r < n; ++r) {
			if(a[r][c] == 0) {
				continue;
			}
			Rational f = a[r][c] / a[c][c];
			for(std::size_t k = c; k < n; ++k) {
				a[r][k] -= f * a[c][k];
			}
		}
	}
	return det;
}

Integer as_integer(const Rational& q, const char* what) {
	if(q.get_den() != 1) {
		throw std::logic_error(std::string(what) + " is not an integer: " + to_string(q));
	}
	return q.get_num();
}

Rational pow2(long e) {
	Rational r = 1;
	for(long i = 0; i < (e < 0 ? -e : e); ++i) {
		r *= 2;
	}
	if(e < 0) {
		r = 1 / r;
	}
	return r;
}

Rational maxchain_expectation_of(const IdealLattice& L, const Statistic& f) {
	return expectation(maxchain_dist(L), f);
}

// Values 1..N+1 go in increasing order; a box takes its first entry only once everything
// below it is full, so the cover conditions hold by construction and are re-checked at the leaf.
template <class Leaf>
void place_values(const Poset& P, int doubled, bool with_primes, const std::vector<char>& no_prime, Leaf&& leaf) {
	int n = P.size();
	std::vector<int> cap(n, 1);
	cap[doubled] = 2;
	Filling T(n);
	int total = n + 1;
	std::function<void(int)> rec = [&](int v) {
		if(v > total) {
			leaf(T);
			return;
		}
		for(int u = 0; u < n; ++u) {
			if(static_cast<int>(T[u].size()) >= cap[u]) {
				continue;
			}
			bool ready = true;
			for(int w : P.lower_covers(u)) {
				if(static_cast<int>(T[w].size()) < cap[w]) {
					ready = false;
					break;
				}
			}
			if(!ready) {
				continue;
			}
			int variants = with_primes && !no_prime[u] ? 2 : 1;
			for(int pr = 0; pr < variants; ++pr) {
				T[u].push_back(with_primes ? 2 * v + pr : v);
				rec(v + 1);
				T[u].pop_back();
			}
		}
	};
	rec(1);
}

bool standard_barely(const Filling& T, bool encoded, std::size_t boxes) {
	if(T.size() != boxes) {
		return false;
	}
	int doubled = 0;
	std::vector<int> values;
	for(const auto& e : T) {
		if(e.empty() || e.size() > 2) {
			return false;
		}
		doubled += e.size() == 2;
		for(int x : e) {
			values.push_back(encoded ? x / 2 : x);
		}
	}
	if(doubled != 1) {
		return false;
	}
	std::sort(values.begin(), values.end());
	for(std::size_t i = 0; i < values.size(); ++i) {
		if(values[i] != static_cast<int>(i) + 1) {
			return false;
		}
	}
	return true;
}

int max_of(const std::vector<int>& e) {
	return *std::max_element(e.begin(), e.end());
}
int min_of(const std::vector<int>& e) {
	return *std::min_element(e.begin(), e.end());
}

}  // namespace

Integer f_aitken(const SkewShape& s) {
	std::size_t k = s.outer.size();
	std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
	for(std::size_t i = 0; i < k; ++i) {
		for(std::size_t j = 0; j < k; ++j) {
			long arg = long(s.outer[i]) - long(i) - long(s.inner[j]) + long(j);
			m[i][j] = arg < 0 ? Rational(0) : Rational(1) / Rational(factorial(arg));
		}
	}
	return as_integer(determinant(m) * factorial(s.size()), "Aitken determinant");
}

std::vector<int> hook_lengths(const Partition& lambda) {
	if(!is_partition(lambda)) {
		throw InputError("not a partition: " + partition_string(lambda));
	}
	std::vector<int> h;
	for(std::size_t i = 0; i < lambda.size(); ++i) {
		for(int j = 0; j < lambda[i]; ++j) {
			int below = 0;
			for(std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) {
				++below;
			}
			h.push_back(lambda[i] - j - 1 + below + 1);
		}
	}
	return h;
}

Integer f_hook(const Partition& lambda) {
	Integer prod = 1;
	for(int h : hook_lengths(lambda)) {
		prod *= h;
	}
	return factorial(partition_size(lambda)) / prod;
}

std::vector<int> shifted_hook_lengths(const Partition& lambda) {
	if(!is_strict(lambda)) {
		throw InputError("not a strict partition: " + partition_string(lambda));
	}
	ShiftedShape s = make_shifted(lambda);
	std::vector<int> h;
	for(const Box& u : s.boxes) {
		int count = 1;
		for(const Box& v : s.boxes) {
			if(v.i == u.i && v.j > u.j) {
				++count;
			} else if(v.j == u.j && v.i > u.i) {
				++count;
			} else if(v.i == u.j + 1 && v.j > u.j) {
				++count;
			}
		}
		h.push_back(count);
	}
	return h;
}

Integer g_thrall(const Partition& lambda) {
	Integer prod = 1;
	for(int h : shifted_hook_lengths(lambda)) {
		prod *= h;
	}
	return factorial(partition_size(lambda)) / prod;
}

bool is_barely_set_valued_tableau(const SkewShape& s, const Filling& T) {
	if(!standard_barely(T, false, s.boxes.size())) {
		return false;
	}
	for(std::size_t u = 0; u < s.boxes.size(); ++u) {
		const Box& b = s.boxes[u];
		int right = s.index(b.i, b.j + 1), down = s.index(b.i + 1, b.j);
		if(right >= 0 && max_of(T[u]) > min_of(T[right])) {
			return false;
		}
		if(down >= 0 && max_of(T[u]) >= min_of(T[down])) {
			return false;
		}
	}
	return true;
}

bool is_shifted_barely_set_valued_tableau(const ShiftedShape& s, const Filling& T, bool diagonally_unprimed) {
	if(!standard_barely(T, true, s.boxes.size())) {
		return false;
	}
	for(std::size_t u = 0; u < s.boxes.size(); ++u) {
		const Box& b = s.boxes[u];
		for(int x : T[u]) {
			if(diagonally_unprimed && b.i == b.j && x % 2 == 1) {
				return false;
			}
		}
		int right = s.index(b.i, b.j + 1), down = s.index(b.i + 1, b.j);
		for(int v : {right, down}) {
			if(v >= 0 && max_of(T[u]) > min_of(T[v])) {
				return false;
			}
		}
	}
	// unprimed at most once per column, primed at most once per row
	for(std::size_t u = 0; u < s.boxes.size(); ++u) {
		for(std::size_t v = 0; v < s.boxes.size(); ++v) {
			for(int x : T[u]) {
				for(int y : T[v]) {
					if((u == v && &x == &y) || x != y) {
						continue;
					}
					bool same_col = s.boxes[u].j == s.boxes[v].j, same_row = s.boxes[u].i == s.boxes[v].i;
					if(u != v && x % 2 == 0 && same_col) {
						return false;
					}
					if(u != v && x % 2 == 1 && same_row) {
						return false;
					}
				}
			}
		}
	}
	return true;
}

Integer enumerate_barely(const SkewShape& s, int budget) {
	if(s.size() > budget) {
		throw BudgetExceeded("barely set-valued enumeration limited to " + std::to_string(budget) + " boxes");
	}
	if(s.size() == 0) {
		return 0;
	}
	Poset P = skew_poset(s);
	Integer count = 0;
	std::vector<char> none(s.size(), 0);
	for(int d = 0; d < s.size(); ++d) {
		place_values(P, d, false, none, [&](const Filling& T) {
			if(is_barely_set_valued_tableau(s, T)) {
				++count;
			}
		});
	}
	return count;
}

Integer enumerate_shifted_barely(const ShiftedShape& s, bool diagonally_unprimed, int budget) {
	if(s.size() > budget) {
		throw BudgetExceeded("shifted barely set-valued enumeration limited to " + std::to_string(budget) + " boxes");
	}
	if(s.size() == 0) {
		return 0;
	}
	Poset P = shifted_poset(s);
	std::vector<char> no_prime(s.size(), 0);
	if(diagonally_unprimed) {
		for(int u = 0; u < s.size(); ++u) {
			no_prime[u] = s.boxes[u].i == s.boxes[u].j;
		}
	}
	Integer count = 0;
	for(int d = 0; d < s.size(); ++d) {
		place_values(P, d, true, no_prime, [&](const Filling& T) {
			if(is_shifted_barely_set_valued_tableau(s, T, diagonally_unprimed)) {
				++count;
			}
		});
	}
	return count;
}

std::vector<Filling> list_barely(const SkewShape& s, int budget) {
	if(s.size() > budget) {
		throw BudgetExceeded("listing limited to " + std::to_string(budget) + " boxes");
	}
	std::vector<Filling> out;
	Poset P = skew_poset(s);
	std::vector<char> none(s.size(), 0);
	for(int d = 0; d < s.size(); ++d) {
		place_values(P, d, false, none, [&](const Filling& T) {
			if(is_barely_set_valued_tableau(s, T)) {
				out.push_back(T);
			}
		});
	}
	return out;
}

std::vector<Filling> list_shifted_barely(const ShiftedShape& s, bool diagonally_unprimed, int budget) {
	if(s.size() > budget) {
		throw BudgetExceeded("listing limited to " + std::to_string(budget) + " boxes");
	}
	std::vector<Filling> out;
	Poset P = shifted_poset(s);
	std::vector<char> no_prime(s.size(), 0);
	for(int u = 0; u < s.size(); ++u) {
		no_prime[u] = diagonally_unprimed && s.boxes[u].i == s.boxes[u].j;
	}
	for(int d = 0; d < s.size(); ++d) {
		place_values(P, d, true, no_prime, [&](const Filling& T) {
			if(is_shifted_barely_set_valued_tableau(s, T, diagonally_unprimed)) {
				out.push_back(T);
			}
		});
	}
	return out;
}

Integer count_barely_formula(const SkewShape& s) {
	IdealLattice L = IdealLattice::build(skew_poset(s));
	Rational e = maxchain_expectation_of(L, ddeg_statistic(L));
	return as_integer(Rational(s.size() + 1) * f_aitken(s) * e, "barely set-valued formula");
}

Rational diagonal_removal_expectation(const ShiftedShape& s) {
	IdealLattice L = IdealLattice::build(shifted_poset(s));
	Statistic f(L.size(), Rational(0));
	for(int i = 1; i <= s.length(); ++i) {
		int p = s.index(i, i);
		for(std::size_t x = 0; x < L.size(); ++x) {
			if(L.toggle_out(p, x)) {
				f[x] += 1;
			}
		}
	}
	return maxchain_expectation_of(L, f);
}

Integer count_shifted_barely_formula(const ShiftedShape& s, bool diagonally_unprimed) {
	IdealLattice L = IdealLattice::build(shifted_poset(s));
	Statistic f = ddeg_statistic(L);
	long N = s.size();
	Integer g = g_thrall(s.lambda);
	if(!diagonally_unprimed) {
		Rational e = maxchain_expectation_of(L, f);
		return as_integer(Rational(N + 1) * pow2(N + 1) * g * e, "shifted barely set-valued formula");
	}
	for(auto& x : f) {
		x *= 2;
	}
	for(int i = 1; i <= s.length(); ++i) {
		int p = s.index(i, i);
		for(std::size_t x = 0; x < L.size(); ++x) {
			if(L.toggle_out(p, x)) {
				f[x] -= 1;
			}
		}
	}
	Rational e = maxchain_expectation_of(L, f);
	return as_integer(Rational(N + 1) * pow2(N - s.length()) * g * e, "diagonally unprimed formula");
}

Integer balanced_barely_product(const SkewShape& s) {
	Rational q(s.a * s.b, s.a + s.b);
	q.canonicalize();
	return as_integer(q * (s.size() + 1) * f_aitken(s), "balanced product formula");
}

Integer shifted_barely_product(const Partition& lambda) {
	long N = partition_size(lambda);
	return as_integer(Rational(lambda.at(0) + 1) * (N + 1) * pow2(N - 1) * g_thrall(lambda), "shifted product formula");
}

Integer shifted_diag_barely_product(const Partition& lambda) {
	long N = partition_size(lambda), l = static_cast<long>(lambda.size());
	return as_integer(Rational(lambda.at(0)) * (N + 1) * pow2(N - l - 1) * g_thrall(lambda),
	                  "diagonally unprimed product formula");
}

}  // namespace cde
