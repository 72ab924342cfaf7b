#include "cde/distributions.hpp"

#include <set>

#include "cde/errors.hpp"

namespace cde {

namespace {

using Table = std::vector<std::vector<Integer>>;

// ends[t][p]: strict chains c_0 < ... < c_t = p.  starts[t][p]: p = c_0 < ... < c_t.
void strict_tables(const Poset& P, int k, Table& ends, Table& starts) {
	int n = P.size();
	ends.assign(k + 1, std::vector<Integer>(n, 0));
	starts.assign(k + 1, std::vector<Integer>(n, 0));
	for(int p = 0; p < n; ++p) {
		ends[0][p] = 1;
		starts[0][p] = 1;
	}
	for(int t = 1; t <= k; ++t) {
		for(int p = 0; p < n; ++p) {
			const Bits& lo = P.below(p);
			for(auto q = lo.find_first(); q != Bits::npos; q = lo.find_next(q)) {
				ends[t][p] += ends[t - 1][q];
			}
			const Bits& hi = P.above(p);
			for(auto q = hi.find_first(); q != Bits::npos; q = hi.find_next(q)) {
				starts[t][p] += starts[t - 1][q];
			}
		}
	}
}

// Weakly increasing sequences with t entries: wend[t][p] ends at p, wstart[t][p] starts at p (t >= 1).
void weak_tables(const Poset& P, int len, Table& wend, Table& wstart) {
	int n = P.size();
	wend.assign(len + 1, std::vector<Integer>(n, 0));
	wstart.assign(len + 1, std::vector<Integer>(n, 0));
	if(len < 1) {
		return;
	}
	for(int p = 0; p < n; ++p) {
		wend[1][p] = 1;
		wstart[1][p] = 1;
	}
	for(int t = 2; t <= len; ++t) {
		for(int p = 0; p < n; ++p) {
			Integer e = wend[t - 1][p], s = wstart[t - 1][p];
			const Bits& lo = P.below(p);
			for(auto q = lo.find_first(); q != Bits::npos; q = lo.find_next(q)) {
				e += wend[t - 1][q];
			}
			const Bits& hi = P.above(p);
			for(auto q = hi.find_first(); q != Bits::npos; q = hi.find_next(q)) {
				s += wstart[t - 1][q];
			}
			wend[t][p] = e;
			wstart[t][p] = s;
		}
	}
}

Distribution normalize(const std::vector<Integer>& w) {
	Integer total = 0;
	for(const auto& x : w) {
		total += x;
	}
	if(total == 0) {
		throw InputError("cannot normalize an all-zero weight vector");
	}
	Distribution mu(w.size());
	for(std::size_t i = 0; i < w.size(); ++i) {
		mu[i] = fraction(w[i], total);
		mu[i].canonicalize();
	}
	return mu;
}

Distribution combine(const Poset& P, const std::vector<Integer>& coeff) {
	Distribution mu(P.size(), 0);
	Integer total = 0;
	for(std::size_t k = 0; k < coeff.size(); ++k) {
		if(coeff[k] == 0) {
			continue;
		}
		total += coeff[k];
		Distribution ck = chain_dist(P, static_cast<int>(k));
		for(int p = 0; p < P.size(); ++p) {
			mu[p] += coeff[k] * ck[p];
		}
	}
	for(auto& x : mu) {
		x /= total;
	}
	return mu;
}

}  // namespace

bool is_distribution(const Distribution& mu) {
	Rational s = 0;
	for(const auto& x : mu) {
		if(x < 0) {
			return false;
		}
		s += x;
	}
	return s == 1;
}

Rational expectation(const Distribution& mu, const Statistic& f) {
	if(mu.size() != f.size()) {
		throw InputError("expectation: distribution has " + std::to_string(mu.size()) +
		                 " entries but statistic has " + std::to_string(f.size()));
	}
	Rational s = 0;
	for(std::size_t i = 0; i < mu.size(); ++i) {
		if(mu[i] != 0 && f[i] != 0) {
			s += mu[i] * f[i];
		}
	}
	return s;
}

Distribution uniform(std::size_t n) {
	if(n == 0) {
		throw InputError("uniform distribution on an empty set");
	}
	return Distribution(n, fraction(1, static_cast<long>(n)));
}

Distribution uniform(const IdealLattice& L) {
	return uniform(L.size());
}

Distribution rank_dist(const IdealLattice& L) {
	RankInfo ri = rank_info(L.base());
	if(!ri.is_graded) {
		throw InputError("rank distribution needs a graded base poset");
	}
	int r = ri.top_rank;
	Distribution mu(L.size(), 0);
	for(int i = -1; i <= r; ++i) {
		Mask m = 0;
		for(int p = 0; p < L.base().size(); ++p) {
			if(ri.rank[p] <= i) {
				m |= bit(p);
			}
		}
		mu[L.index_of(m)] += fraction(1, r + 2);
	}
	return mu;
}

std::vector<ChainCounts> chain_counts_upto(const Poset& P, int kmax) {
	if(kmax < 0) {
		throw InputError("chain length must be nonnegative");
	}
	Table ends, starts;
	strict_tables(P, kmax, ends, starts);
	std::vector<ChainCounts> out(kmax + 1);
	for(int k = 0; k <= kmax; ++k) {
		ChainCounts& c = out[k];
		c.through.assign(P.size(), 0);
		c.total = 0;
		for(int p = 0; p < P.size(); ++p) {
			for(int t = 0; t <= k; ++t) {
				c.through[p] += ends[t][p] * starts[k - t][p];
			}
			c.total += ends[k][p];
		}
	}
	return out;
}

ChainCounts chain_counts(const Poset& P, int k) {
	if(k < 0) {
		throw InputError("chain length must be nonnegative");
	}
	return std::move(chain_counts_upto(P, k)[k]);
}

ChainCounts maxchain_counts(const Poset& P) {
	int n = P.size();
	std::vector<Integer> from_bottom(n, 0), to_top(n, 0);
	const auto& order = P.linear_extension();
	for(int p : order) {
		if(P.lower_covers(p).empty()) {
			from_bottom[p] = 1;
		}
		for(int q : P.lower_covers(p)) {
			from_bottom[p] += from_bottom[q];
		}
	}
	for(auto it = order.rbegin(); it != order.rend(); ++it) {
		int p = *it;
		if(P.upper_covers(p).empty()) {
			to_top[p] = 1;
		}
		for(int q : P.upper_covers(p)) {
			to_top[p] += to_top[q];
		}
	}
	ChainCounts c;
	c.through.resize(n);
	c.total = 0;
	for(int p = 0; p < n; ++p) {
		c.through[p] = from_bottom[p] * to_top[p];
		if(P.upper_covers(p).empty()) {
			c.total += from_bottom[p];
		}
	}
	return c;
}

std::vector<Integer> multichain_through_counts(const Poset& P, int m) {
	if(m < 0) {
		throw InputError("multichain length must be nonnegative");
	}
	int n = P.size();
	Table wend, wstart;
	weak_tables(P, m, wend, wstart);
	// lt[t][p]: t-entry weak sequences ending strictly below p; gt likewise above.
	Table lt(m + 1, std::vector<Integer>(n, 0)), gt(m + 1, std::vector<Integer>(n, 0));
	for(int p = 0; p < n; ++p) {
		lt[0][p] = 1;
		gt[0][p] = 1;
		for(int t = 1; t <= m; ++t) {
			const Bits& lo = P.below(p);
			for(auto q = lo.find_first(); q != Bits::npos; q = lo.find_next(q)) {
				lt[t][p] += wend[t][q];
			}
			const Bits& hi = P.above(p);
			for(auto q = hi.find_first(); q != Bits::npos; q = hi.find_next(q)) {
				gt[t][p] += wstart[t][q];
			}
		}
	}
	std::vector<Integer> through(n, 0);
	for(int p = 0; p < n; ++p) {
		// p fills positions i..j.
		for(int i = 0; i <= m; ++i) {
			for(int j = i; j <= m; ++j) {
				through[p] += lt[i][p] * gt[m - j][p];
			}
		}
	}
	return through;
}

std::vector<Integer> multichain_occurrence_counts(const Poset& P, int m) {
	if(m < 0) {
		throw InputError("multichain length must be nonnegative");
	}
	Table wend, wstart;
	weak_tables(P, m + 1, wend, wstart);
	std::vector<Integer> occ(P.size(), 0);
	for(int p = 0; p < P.size(); ++p) {
		for(int i = 0; i <= m; ++i) {
			occ[p] += wend[i + 1][p] * wstart[m - i + 1][p];
		}
	}
	return occ;
}

Integer multichain_count(const Poset& P, int m) {
	Table wend, wstart;
	weak_tables(P, m + 1, wend, wstart);
	Integer total = 0;
	for(int p = 0; p < P.size(); ++p) {
		total += wend[m + 1][p];
	}
	return total;
}

Distribution chain_dist(const Poset& P, int k) {
	ChainCounts c = chain_counts(P, k);
	if(c.total == 0) {
		throw InputError("no chains of length " + std::to_string(k) + " (longest is " +
		                 std::to_string(longest_chain_length(P)) + ")");
	}
	return normalize(c.through);
}

Distribution maxchain_dist(const Poset& P) {
	return normalize(maxchain_counts(P).through);
}

Distribution mchain_dist(const Poset& P, int m) {
	return normalize(multichain_through_counts(P, m));
}

Distribution mmchain_dist(const Poset& P, int m) {
	return normalize(multichain_occurrence_counts(P, m));
}

Distribution chain_dist(const IdealLattice& L, int k) { return chain_dist(L.as_poset(), k); }
Distribution maxchain_dist(const IdealLattice& L) { return maxchain_dist(L.as_poset()); }
Distribution mchain_dist(const IdealLattice& L, int m) { return mchain_dist(L.as_poset(), m); }
Distribution mmchain_dist(const IdealLattice& L, int m) { return mmchain_dist(L.as_poset(), m); }

bool is_toggle_symmetric(const IdealLattice& L, const Distribution& mu) {
	if(mu.size() != L.size()) {
		throw InputError("distribution length does not match the lattice");
	}
	for(int p = 0; p < L.base().size(); ++p) {
		Rational s = 0;
		for(std::size_t i = 0; i < L.size(); ++i) {
			if(mu[i] == 0) {
				continue;
			}
			if(L.toggle_in(p, i)) {
				s += mu[i];
			}
			if(L.toggle_out(p, i)) {
				s -= mu[i];
			}
		}
		if(s != 0) {
			return false;
		}
	}
	return true;
}

namespace {

Mask zeta(Mask S, int n) {
	std::vector<int> s = members(S);
	if(s.empty()) {
		return 0;
	}
	// Elements are 1-based: bit i stands for i+1.
	int k = static_cast<int>(s.size());
	int shift = n + 1 - (s[k - 1] + 1);
	Mask out = bit(shift - 1);
	for(int t = 0; t + 1 < k; ++t) {
		out |= bit(shift + s[t] + 1 - 1);
	}
	return out;
}

}  // namespace

std::vector<int> necklace_orbit_sizes(int n, int k) {
	if(k < 0 || k > n || n > 30) {
		throw InputError("necklace_count needs 0 <= k <= n <= 30");
	}
	std::set<Mask> seen;
	std::vector<int> sizes;
	std::vector<int> comb(k);
	for(int i = 0; i < k; ++i) {
		comb[i] = i;
	}
	while(true) {
		Mask S = 0;
		for(int c : comb) {
			S |= bit(c);
		}
		if(!seen.count(S)) {
			int len = 0;
			Mask T = S;
			do {
				seen.insert(T);
				T = zeta(T, n);
				++len;
			} while(T != S);
			sizes.push_back(len);
		}
		int i = k - 1;
		while(i >= 0 && comb[i] == n - k + i) {
			--i;
		}
		if(i < 0) {
			break;
		}
		++comb[i];
		for(int j = i + 1; j < k; ++j) {
			comb[j] = comb[j - 1] + 1;
		}
	}
	return sizes;
}

Integer necklace_count(int n, int k) {
	return static_cast<unsigned long>(necklace_orbit_sizes(n, k).size());
}

Distribution convert_chain_to_mchain(const Poset& P, int m) {
	if(m < 0) {
		throw InputError("multichain length must be nonnegative");
	}
	int top = std::min(m, longest_chain_length(P));
	std::vector<Integer> coeff(top + 1);
	for(int k = 0; k <= top; ++k) {
		coeff[k] = (k + 1) * chain_counts(P, k).total * binomial(m, k);
	}
	return combine(P, coeff);
}

Distribution convert_chain_to_mmchain(const Poset& P, int m) {
	if(m < 0) {
		throw InputError("multichain length must be nonnegative");
	}
	int top = std::min(m, longest_chain_length(P));
	std::vector<Integer> coeff(top + 1);
	for(int k = 0; k <= top; ++k) {
		// Summing a part of the rotated compositions over all binom(m,k) of them
		// gives (m+1)/(k+1) * binom(m,k), whatever the orbit sizes are.
		coeff[k] = chain_counts(P, k).total * binomial(m, k);
	}
	return combine(P, coeff);
}

}  // namespace cde
