#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cde/distributions.hpp"
#include "cde/lattice.hpp"

namespace cde {

// A bijection (or not) on ideal indices: map[i] is the image of ideal i.
using IdealMap = std::vector<std::size_t>;
// Elements of the base poset; the rightmost toggle is applied first.
using ToggleWord = std::vector<int>;

// Down-closure of the minimal elements of P \ I.
Mask rowmotion(const IdealLattice& L, Mask I);
std::size_t rowmotion_index(const IdealLattice& L, std::size_t i);
IdealMap rowmotion_map(const IdealLattice& L);

Mask apply_word(const IdealLattice& L, const ToggleWord& w, Mask I);
IdealMap word_map(const IdealLattice& L, const ToggleWord& w);
// tau_{p_1} o ... o tau_{p_n} for the given linear extension (default: the base poset's own).
ToggleWord rowmotion_word(const IdealLattice& L);
ToggleWord rowmotion_word(const std::vector<int>& linear_extension);

// Base poset ranks 0..r; throws InputError when the base is not ranked.
int base_top_rank(const IdealLattice& L);
// sigma(0),...,sigma(r) as rank toggles, sigma(r) applied first. Throws InputError unless sigma permutes 0..r.
ToggleWord rank_word(const IdealLattice& L, const std::vector<int>& sigma);
IdealMap rank_permuted_rowmotion(const IdealLattice& L, const std::vector<int>& sigma);
// (1,3,5,...,0,2,4,...)
std::vector<int> gyration_order(int top_rank);
IdealMap gyration_map(const IdealLattice& L);
std::vector<int> identity_order(int top_rank);

// "rowmotion", "gyration", "sigma:1,3,0,2" (bare "1,3,0,2" also accepted).
IdealMap parse_map(const IdealLattice& L, const std::string& spec);

using Orbit = std::vector<std::size_t>;
// Orbits in order of their smallest member, each starting there. Throws InputError unless map is a bijection.
std::vector<Orbit> orbit_decomposition(const IdealMap& map);
Integer map_order(const std::vector<Orbit>& orbits);
std::vector<std::size_t> orbit_sizes(const std::vector<Orbit>& orbits);  // sorted
Distribution orbit_distribution(std::size_t n, const Orbit& orbit);

struct HomomesyReport {
	std::vector<Rational> averages;  // one per orbit
	bool homomesic = false;
	std::optional<Rational> constant;
};
HomomesyReport homomesy_report(const std::vector<Orbit>& orbits, const Statistic& f);

}  // namespace cde
