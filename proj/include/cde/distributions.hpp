#pragma once

#include <vector>

#include "cde/lattice.hpp"
#include "cde/poset.hpp"
#include "cde/rational.hpp"

namespace cde {

// Exact probability weight per element (per ideal index when taken on a lattice).
using Distribution = std::vector<Rational>;

bool is_distribution(const Distribution& mu);
Rational expectation(const Distribution& mu, const Statistic& f);

Distribution uniform(std::size_t n);
Distribution uniform(const IdealLattice& L);

// Weight 1/(r+2) on each P_{<=i}, i = -1..r. Base poset must be graded.
Distribution rank_dist(const IdealLattice& L);

// Per-element count of k-chains through the element, plus the total number of k-chains.
struct ChainCounts {
	std::vector<Integer> through;
	Integer total;
};
ChainCounts chain_counts(const Poset& P, int k);
// chain_counts for every k = 0..kmax from one pass.
std::vector<ChainCounts> chain_counts_upto(const Poset& P, int kmax);
ChainCounts maxchain_counts(const Poset& P);
// Through-count and occurrence count of m-multichains (weak chains with m+1 entries).
std::vector<Integer> multichain_through_counts(const Poset& P, int m);
std::vector<Integer> multichain_occurrence_counts(const Poset& P, int m);
Integer multichain_count(const Poset& P, int m);

Distribution chain_dist(const Poset& P, int k);
Distribution maxchain_dist(const Poset& P);
Distribution mchain_dist(const Poset& P, int m);
Distribution mmchain_dist(const Poset& P, int m);

Distribution chain_dist(const IdealLattice& L, int k);
Distribution maxchain_dist(const IdealLattice& L);
Distribution mchain_dist(const IdealLattice& L, int m);
Distribution mmchain_dist(const IdealLattice& L, int m);

bool is_toggle_symmetric(const IdealLattice& L, const Distribution& mu);

// Orbits of the rotation zeta on k-subsets of [n], by explicit enumeration.
Integer necklace_count(int n, int k);
std::vector<int> necklace_orbit_sizes(int n, int k);

// Convex combinations of chain(k), k = 0..min(m, longest chain).
// mchain weights:      (k+1) * #k-chains * binom(m,k)
// m-hat-chain weights:         #k-chains * binom(m,k)
Distribution convert_chain_to_mchain(const Poset& P, int m);
Distribution convert_chain_to_mmchain(const Poset& P, int m);

}  // namespace cde
