#pragma once

#include <random>
#include <string>
#include <vector>

#include "cde/distributions.hpp"
#include "cde/lattice.hpp"
#include "cde/poset.hpp"

namespace testing {

inline std::string fixture(const std::string& name) {
	return std::string(FIXTURE_DIR) + "/" + name;
}

// Random poset on n elements: each pair i<j related with probability p (ids already topological).
inline cde::Poset random_poset(int n, double p, std::mt19937_64& rng) {
	std::bernoulli_distribution coin(p);
	std::vector<cde::Relation> rel;
	for(int i = 0; i < n; ++i) {
		for(int j = i + 1; j < n; ++j) {
			if(coin(rng)) {
				rel.emplace_back(i, j);
			}
		}
	}
	return cde::Poset::from_relations(n, rel);
}

// All down-closed subsets by exhaustive search.
inline std::vector<cde::Mask> brute_ideals(const cde::Poset& P) {
	std::vector<cde::Mask> out;
	int n = P.size();
	for(cde::Mask m = 0; m < (cde::Mask(1) << n); ++m) {
		bool ok = true;
		for(int q = 0; q < n && ok; ++q) {
			if(m >> q & 1) {
				for(int p = 0; p < n; ++p) {
					if(P.less(p, q) && !(m >> p & 1)) {
						ok = false;
						break;
					}
				}
			}
		}
		if(ok) {
			out.push_back(m);
		}
	}
	return out;
}

// Strict chains c_0 < ... < c_k by recursion over the order relation.
inline void brute_chains(const cde::Poset& P, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
	if(static_cast<int>(cur.size()) == k + 1) {
		out.push_back(cur);
		return;
	}
	for(int q = 0; q < P.size(); ++q) {
		if(cur.empty() || P.less(cur.back(), q)) {
			cur.push_back(q);
			brute_chains(P, k, cur, out);
			cur.pop_back();
		}
	}
}

inline std::vector<std::vector<int>> brute_chains(const cde::Poset& P, int k) {
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	brute_chains(P, k, cur, out);
	return out;
}

// Distribution proportional to how often each element occurs in the given tuples.
inline cde::Distribution occurrence_dist(int n, const std::vector<std::vector<int>>& tuples) {
	cde::Distribution d(n, cde::Rational(0));
	long total = 0;
	for(const auto& t : tuples) {
		for(int x : t) {
			d[x] += 1;
			++total;
		}
	}
	for(auto& x : d) {
		x /= total;
	}
	return d;
}

}  // namespace testing
