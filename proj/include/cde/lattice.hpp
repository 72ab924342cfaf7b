#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cde/poset.hpp"
#include "cde/rational.hpp"

namespace cde {

using Mask = std::uint64_t;
using Statistic = std::vector<Rational>;

inline constexpr std::size_t kDefaultIdealBudget = std::size_t(1) << 24;

inline Mask bit(int p) { return Mask(1) << p; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
std::vector<int> members(Mask m);

// J(P) enumerated explicitly. Ideals are bitmasks over the base poset
// (so #P <= 64), indexed in canonical order: by cardinality, then
// lexicographically on the sorted member lists.
class IdealLattice {
public:
	static IdealLattice build(const Poset& P, std::size_t budget = kDefaultIdealBudget);

	const Poset& base() const { return base_; }
	std::size_t size() const { return ideals_.size(); }
	Mask ideal(std::size_t i) const { return ideals_[i]; }
	const std::vector<Mask>& ideals() const { return ideals_; }
	bool is_ideal(Mask m) const { return index_.count(m) != 0; }
	// Throws InputError when m is not an order ideal.
	std::size_t index_of(Mask m) const;
	Mask full() const { return full_; }

	// Cover pairs (i, j, p): ideal j = ideal i plus element p.
	struct Edge {
		std::size_t lower, upper;
		int element;
	};
	const std::vector<Edge>& hasse() const { return hasse_; }

	Mask addable(std::size_t i) const { return addable_[i]; }
	Mask removable(std::size_t i) const { return removable_[i]; }
	int ddeg(std::size_t i) const { return popcount(removable_[i]); }
	bool toggle_in(int p, std::size_t i) const { return addable_[i] >> p & 1; }
	bool toggle_out(int p, std::size_t i) const { return removable_[i] >> p & 1; }

	Mask lower_cover_mask(int p) const { return need_[p]; }
	Mask upper_cover_mask(int p) const { return blocked_[p]; }

	// The lattice as a poset on ideal indices; built once on first use.
	const Poset& as_poset() const;

private:
	Poset base_;
	Mask full_ = 0;
	std::vector<Mask> ideals_;
	std::unordered_map<Mask, std::size_t> index_;
	std::vector<Edge> hasse_;
	std::vector<Mask> addable_, removable_;
	std::vector<Mask> need_, blocked_;
	struct Cache {
		std::once_flag once;
		std::unique_ptr<Poset> poset;
	};
	std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// tau_p as a function on ideals: add p, remove p, or leave unchanged.
Mask toggle(const IdealLattice& L, Mask I, int p);

// (T+_p, T-_p) as 0/1 statistics.
std::pair<Statistic, Statistic> toggleability(const IdealLattice& L, int p);
Statistic ddeg_statistic(const IdealLattice& L);
Statistic constant_statistic(const IdealLattice& L, const Rational& c);

}  // namespace cde
