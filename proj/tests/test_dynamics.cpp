#include <doctest.h>

#include <algorithm>

#include "cde/cde.hpp"
#include "cde/dynamics.hpp"
#include "cde/errors.hpp"
#include "cde/shapes.hpp"
#include "helpers.hpp"

using namespace cde;

namespace {

template <class Shape>
std::vector<std::string> orbit_names(const IdealLattice& L, const Shape& s, const IdealMap& m, Mask start) {
	std::vector<std::string> out;
	std::size_t i = L.index_of(start);
	do {
		out.push_back(ideal_string(s, L.ideal(i)));
		i = m[i];
	} while(i != L.index_of(start));
	return out;
}

IdealLattice square() {
	return IdealLattice::build(direct_product(chain_poset(2), chain_poset(2)));
}

}  // namespace

TEST_CASE("rowmotion on shifted (3,2,1)") {
	ShiftedShape s = make_shifted({3, 2, 1});
	IdealLattice L = IdealLattice::build(shifted_poset(s));
	IdealMap m = rowmotion_map(L);
	CHECK(orbit_names(L, s, m, 0) ==
	      std::vector<std::string>{"()", "(1)", "(2)", "(3,1)", "(3,2)", "(3,2,1)"});
	auto orbits = orbit_decomposition(m);
	CHECK(orbit_sizes(orbits) == std::vector<std::size_t>{2, 6});
	for(const auto& o : orbits) {
		if(o.size() == 2) {
			std::vector<std::string> names{ideal_string(s, L.ideal(o[0])), ideal_string(s, L.ideal(o[1]))};
			std::sort(names.begin(), names.end());
			CHECK(names == std::vector<std::string>{"(2,1)", "(3)"});
		}
	}
	CHECK(rowmotion(L, L.full()) == 0);
}

TEST_CASE("rowmotion agrees with every linear-extension toggle word") {
	std::mt19937_64 rng(13);
	for(int trial = 0; trial < 20; ++trial) {
		Poset P = testing::random_poset(6, 0.35, rng);
		IdealLattice L = IdealLattice::build(P);
		IdealMap m = rowmotion_map(L);
		for(const auto& ext : all_linear_extensions(P, 200)) {
			CHECK(word_map(L, rowmotion_word(ext)) == m);
		}
		CHECK(word_map(L, rowmotion_word(L)) == m);
	}
}

TEST_CASE("identity rank order is rowmotion") {
	for(const char* lit : {"straight:4,2", "shifted:3,2,1", "skew:4,3,3,3/2,2"}) {
		IdealLattice L = IdealLattice::build(parse_shape_literal(lit).poset());
		CHECK(rank_permuted_rowmotion(L, identity_order(base_top_rank(L))) == rowmotion_map(L));
	}
	IdealLattice L = square();
	CHECK(rank_permuted_rowmotion(L, {0, 1, 2}) == rowmotion_map(L));
}

TEST_CASE("gyration on (4,2)") {
	SkewShape s = make_skew({4, 2});
	IdealLattice L = IdealLattice::build(skew_poset(s));
	CHECK(gyration_order(4) == std::vector<int>{1, 3, 0, 2, 4});
	CHECK(orbit_names(L, s, gyration_map(L), 0) ==
	      std::vector<std::string>{"()", "(2,1)", "(4,2)", "(3)", "(1,1)", "(2)", "(4,1)", "(3,2)", "(1)"});
	CHECK(orbit_names(L, s, rowmotion_map(L), 0) ==
	      std::vector<std::string>{"()", "(1)", "(2,1)", "(3,2)", "(4)", "(1,1)", "(2)", "(3,1)", "(4,2)"});
}

TEST_CASE("all rank-permuted rowmotions are conjugate") {
	IdealLattice L = IdealLattice::build(skew_poset(make_skew({4, 2})));
	std::vector<int> sigma = identity_order(base_top_rank(L));
	auto want = orbit_sizes(orbit_decomposition(rowmotion_map(L)));
	do {
		CHECK(orbit_sizes(orbit_decomposition(rank_permuted_rowmotion(L, sigma))) == want);
	} while(std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("rank orders are validated") {
	IdealLattice L = square();
	CHECK_THROWS_AS(rank_permuted_rowmotion(L, {0, 1}), InputError);
	CHECK_THROWS_AS(rank_permuted_rowmotion(L, {0, 0, 2}), InputError);
	CHECK_THROWS_AS(parse_map(L, "sigma:0,x"), InputError);
	IdealLattice U = IdealLattice::build(Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}}));
	CHECK_THROWS_AS(gyration_map(U), InputError);
	CHECK(parse_map(L, "2,1,0") == rank_permuted_rowmotion(L, {2, 1, 0}));
}

TEST_CASE("orbits of J(2x2) and antichain cardinality") {
	IdealLattice L = square();
	auto orbits = orbit_decomposition(rowmotion_map(L));
	CHECK(orbit_sizes(orbits) == std::vector<std::size_t>{2, 4});
	HomomesyReport h = homomesy_report(orbits, ddeg_statistic(L));
	CHECK(h.homomesic);
	CHECK(*h.constant == 1);
	CHECK(h.averages == std::vector<Rational>{1, 1});
}

TEST_CASE("rowmotion order on J(a x b) is a + b") {
	for(int a = 1; a <= 4; ++a) {
		for(int b = 1; b <= 4; ++b) {
			IdealLattice L = IdealLattice::build(direct_product(chain_poset(a), chain_poset(b)));
			CHECK(map_order(orbit_decomposition(rowmotion_map(L))) == a + b);
		}
	}
}

TEST_CASE("orbit decomposition contract") {
	auto orbits = orbit_decomposition({0, 1, 2});
	CHECK(orbits.size() == 3);
	CHECK(map_order(orbits) == 1);
	CHECK_THROWS_AS(orbit_decomposition({1, 1, 0}), InputError);
	CHECK_THROWS_AS(orbit_decomposition({3, 0, 1}), InputError);
}

TEST_CASE("orbit distributions are toggle-symmetric") {
	for(const char* lit : {"shifted:3,2,1", "straight:4,2", "straight:2,2", "shifted:5,3,1"}) {
		IdealLattice L = IdealLattice::build(parse_shape_literal(lit).poset());
		std::vector<int> sigma = identity_order(base_top_rank(L));
		do {
			for(const auto& o : orbit_decomposition(rank_permuted_rowmotion(L, sigma))) {
				CHECK(is_toggle_symmetric(L, orbit_distribution(L.size(), o)));
			}
		} while(std::next_permutation(sigma.begin(), sigma.end()));
	}
}

TEST_CASE("shifted (3,2,1): every rank order is 1-mesic") {
	IdealLattice L = IdealLattice::build(shifted_poset(make_shifted({3, 2, 1})));
	std::vector<int> sigma = identity_order(base_top_rank(L));
	do {
		HomomesyReport h = homomesy_report(orbit_decomposition(rank_permuted_rowmotion(L, sigma)), ddeg_statistic(L));
		CHECK(h.homomesic);
		CHECK(*h.constant == 1);
	} while(std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("a Coxeter element whose orbits are not toggle-symmetric") {
	// a, b < c
	Poset V = Poset::from_covers(3, {{0, 2}, {1, 2}}, {"a", "b", "c"});
	IdealLattice L = IdealLattice::build(V);
	IdealMap m = word_map(L, {1, 2, 0});  // tau_b o tau_c o tau_a
	auto orbits = orbit_decomposition(m);
	bool found = false;
	for(const auto& o : orbits) {
		if(o.size() == 2 && L.ideal(o[0]) == 0 && L.ideal(o[1]) == 0b011) {
			found = true;
			CHECK_FALSE(is_toggle_symmetric(L, orbit_distribution(L.size(), o)));
		}
	}
	CHECK(found);
	auto [plus, minus] = toggleability(L, 2);
	Statistic signed_c(L.size());
	for(std::size_t i = 0; i < L.size(); ++i) {
		signed_c[i] = plus[i] - minus[i];
	}
	CHECK_FALSE(homomesy_report(orbits, signed_c).homomesic);
}
