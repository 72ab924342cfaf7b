#include <doctest.h>

#include <algorithm>

#include "cde/cde.hpp"
#include "cde/distributions.hpp"
#include "cde/errors.hpp"
#include "helpers.hpp"

using namespace cde;
using testing::fixture;

namespace {

// Weakly increasing tuples of length m+1.
void multichains(const Poset& P, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
	if(static_cast<int>(cur.size()) == m + 1) {
		out.push_back(cur);
		return;
	}
	for(int q = 0; q < P.size(); ++q) {
		if(cur.empty() || P.leq(cur.back(), q)) {
			cur.push_back(q);
			multichains(P, m, cur, out);
			cur.pop_back();
		}
	}
}

std::vector<std::vector<int>> multichains(const Poset& P, int m) {
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	multichains(P, m, cur, out);
	return out;
}

std::vector<std::vector<int>> distinct(std::vector<std::vector<int>> v) {
	for(auto& t : v) {
		t.erase(std::unique(t.begin(), t.end()), t.end());
	}
	return v;
}

}  // namespace

TEST_CASE("FIX-A chain(1) expectation is 13/14") {
	Poset P = load_poset(fixture("fix-a.json"));
	CHECK(expectation(chain_dist(P, 1), poset_ddeg(P)) == fraction(13, 14));
	CHECK(expectation(chain_dist(P, 0), poset_ddeg(P)) == 1);
	CHECK(expectation(chain_dist(P, 2), poset_ddeg(P)) == 1);
	CHECK_THROWS_AS(chain_dist(P, 3), InputError);
}

TEST_CASE("FIX-B maxchain expectation is 17/16") {
	Poset P = load_poset(fixture("fix-b.json"));
	CHECK(expectation(maxchain_dist(P), poset_ddeg(P)) == fraction(17, 16));
}

TEST_CASE("J(FIX-C): chain(1) 83/52, uniform = chain(6) = 8/5") {
	IdealLattice L = IdealLattice::build(load_poset(fixture("fix-c.json")));
	Statistic dd = ddeg_statistic(L);
	CHECK(expectation(chain_dist(L, 1), dd) == fraction(83, 52));
	CHECK(expectation(uniform(L), dd) == fraction(8, 5));
	CHECK(expectation(chain_dist(L, 6), dd) == fraction(8, 5));
}

TEST_CASE("dual(FIX-D) chain(2) is 7/6 against uniform 1") {
	Poset P = dual(load_poset(fixture("fix-d.json")));
	CHECK(expectation(chain_dist(P, 2), poset_ddeg(P)) == fraction(7, 6));
	CHECK(expectation(uniform(P.size()), poset_ddeg(P)) == 1);
}

TEST_CASE("chain and multichain distributions against brute force") {
	std::mt19937_64 rng(21);
	for(int trial = 0; trial < 25; ++trial) {
		Poset P = testing::random_poset(5, 0.45, rng);
		for(int k = 0; k <= longest_chain_length(P); ++k) {
			CHECK(chain_dist(P, k) == testing::occurrence_dist(P.size(), testing::brute_chains(P, k)));
		}
		for(int m = 0; m <= 3; ++m) {
			auto mc = multichains(P, m);
			CHECK(multichain_count(P, m) == Integer(static_cast<unsigned long>(mc.size())));
			CHECK(mmchain_dist(P, m) == testing::occurrence_dist(P.size(), mc));
			CHECK(mchain_dist(P, m) == testing::occurrence_dist(P.size(), distinct(mc)));
			CHECK(convert_chain_to_mchain(P, m) == mchain_dist(P, m));
			CHECK(convert_chain_to_mmchain(P, m) == mmchain_dist(P, m));
		}
		auto maxc = enumerate_chains(P, 0, true);
		CHECK(maxchain_dist(P) == testing::occurrence_dist(P.size(), maxc));
	}
}

TEST_CASE("chain distributions on J(P) are toggle-symmetric") {
	std::mt19937_64 rng(17);
	for(int trial = 0; trial < 15; ++trial) {
		IdealLattice L = IdealLattice::build(testing::random_poset(5, 0.4, rng));
		const Poset& Q = L.as_poset();
		for(int k = 0; k <= longest_chain_length(Q); ++k) {
			CHECK(is_toggle_symmetric(L, chain_dist(L, k)));
		}
		for(int m = 0; m <= 3; ++m) {
			CHECK(is_toggle_symmetric(L, mchain_dist(L, m)));
			CHECK(is_toggle_symmetric(L, mmchain_dist(L, m)));
		}
		CHECK(is_toggle_symmetric(L, maxchain_dist(L)));
		CHECK(is_toggle_symmetric(L, uniform(L)));
	}
}

TEST_CASE("a point mass is not toggle-symmetric") {
	IdealLattice L = IdealLattice::build(chain_poset(2));
	Distribution d(L.size(), 0);
	d[0] = 1;
	CHECK_FALSE(is_toggle_symmetric(L, d));
}

TEST_CASE("rank distribution") {
	CHECK_THROWS_AS(rank_dist(IdealLattice::build(load_poset(fixture("fix-a.json")))), InputError);
	// chain of two elements: ideals {}, {0}, {0,1} each 1/3
	IdealLattice C = IdealLattice::build(chain_poset(2));
	CHECK(rank_dist(C) == Distribution{fraction(1, 3), fraction(1, 3), fraction(1, 3)});
	Poset D = load_poset(fixture("fix-d.json"));
	IdealLattice L = IdealLattice::build(D);
	Distribution r = rank_dist(L);
	CHECK(is_toggle_symmetric(L, r));
	CHECK(expectation(r, ddeg_statistic(L)) == fraction(D.size(), rank_info(D).top_rank + 2));
}

TEST_CASE("expectation and uniform guards") {
	CHECK_THROWS_AS(expectation(uniform(3), Statistic(4, Rational(1))), InputError);
	CHECK_THROWS_AS(uniform(0), InputError);
	CHECK(is_distribution(uniform(7)));
	CHECK_FALSE(is_distribution(Distribution{fraction(1, 2)}));
}

TEST_CASE("necklaces") {
	// rotations of compositions of 7 into 4 parts: 20 subsets, every orbit of size 4
	CHECK(necklace_count(6, 3) == 5);
	CHECK(necklace_count(4, 2) == 2);
	CHECK(necklace_count(5, 0) == 1);
	auto sizes = necklace_orbit_sizes(6, 2);
	int total = 0;
	for(int s : sizes) {
		total += s;
	}
	CHECK(total == 15);
}
