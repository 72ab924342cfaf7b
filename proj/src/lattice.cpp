#include "cde/lattice.hpp"

#include <algorithm>

#include "cde/errors.hpp"

namespace cde {

std::vector<int> members(Mask m) {
	std::vector<int> r;
	while(m) {
		r.push_back(__builtin_ctzll(m));
		m &= m - 1;
	}
	return r;
}

namespace {

// Same cardinality assumed: the smaller sorted list owns the lowest differing element.
bool canonical_less(Mask a, Mask b) {
	int ca = popcount(a), cb = popcount(b);
	if(ca != cb) {
		return ca < cb;
	}
	Mask x = a ^ b;
	return x && (a & (x & (~x + 1)));
}

}  // namespace

IdealLattice IdealLattice::build(const Poset& P, std::size_t budget) {
	int n = P.size();
	if(n > 64) {
		throw InputError("ideal lattice supports base posets with at most 64 elements, got " +
		                 std::to_string(n));
	}
	IdealLattice L;
	L.base_ = P;
	L.full_ = n == 64 ? ~Mask(0) : bit(n) - 1;
	L.need_.assign(n, 0);
	L.blocked_.assign(n, 0);
	for(auto [p, q] : P.covers()) {
		L.need_[q] |= bit(p);
		L.blocked_[p] |= bit(q);
	}

	std::vector<Mask> found{0};
	std::unordered_map<Mask, std::size_t> seen{{0, 0}};
	for(std::size_t h = 0; h < found.size(); ++h) {
		Mask I = found[h];
		for(int p = 0; p < n; ++p) {
			if(!(I >> p & 1) && (L.need_[p] & ~I) == 0) {
				Mask J = I | bit(p);
				if(seen.emplace(J, found.size()).second) {
					found.push_back(J);
					if(found.size() > budget) {
						throw BudgetExceeded("J(P) has more than " + std::to_string(budget) + " ideals");
					}
				}
			}
		}
	}
	std::sort(found.begin(), found.end(), canonical_less);
	L.ideals_ = std::move(found);
	L.index_.reserve(L.ideals_.size());
	for(std::size_t i = 0; i < L.ideals_.size(); ++i) {
		L.index_.emplace(L.ideals_[i], i);
	}
	L.addable_.resize(L.ideals_.size());
	L.removable_.resize(L.ideals_.size());
	for(std::size_t i = 0; i < L.ideals_.size(); ++i) {
		Mask I = L.ideals_[i];
		Mask add = 0, rem = 0;
		for(int p = 0; p < n; ++p) {
			if(I >> p & 1) {
				if((L.blocked_[p] & I) == 0) {
					rem |= bit(p);
				}
			} else if((L.need_[p] & ~I) == 0) {
				add |= bit(p);
			}
		}
		L.addable_[i] = add;
		L.removable_[i] = rem;
		for(int p : members(add)) {
			L.hasse_.push_back({i, L.index_.at(I | bit(p)), p});
		}
	}
	return L;
}

std::size_t IdealLattice::index_of(Mask m) const {
	auto it = index_.find(m);
	if(it == index_.end()) {
		throw InputError("not an order ideal of the base poset");
	}
	return it->second;
}

const Poset& IdealLattice::as_poset() const {
	std::call_once(cache_->once, [this] {
		std::vector<Relation> covers;
		covers.reserve(hasse_.size());
		for(const Edge& e : hasse_) {
			covers.emplace_back(static_cast<int>(e.lower), static_cast<int>(e.upper));
		}
		cache_->poset = std::make_unique<Poset>(Poset::from_covers(static_cast<int>(size()), covers));
	});
	return *cache_->poset;
}

Mask toggle(const IdealLattice& L, Mask I, int p) {
	if(I >> p & 1) {
		return (L.upper_cover_mask(p) & I) == 0 ? I & ~bit(p) : I;
	}
	return (L.lower_cover_mask(p) & ~I) == 0 ? I | bit(p) : I;
}

std::pair<Statistic, Statistic> toggleability(const IdealLattice& L, int p) {
	Statistic plus(L.size()), minus(L.size());
	for(std::size_t i = 0; i < L.size(); ++i) {
		plus[i] = L.toggle_in(p, i) ? 1 : 0;
		minus[i] = L.toggle_out(p, i) ? 1 : 0;
	}
	return {plus, minus};
}

Statistic ddeg_statistic(const IdealLattice& L) {
	Statistic s(L.size());
	for(std::size_t i = 0; i < L.size(); ++i) {
		s[i] = L.ddeg(i);
	}
	return s;
}

Statistic constant_statistic(const IdealLattice& L, const Rational& c) {
	return Statistic(L.size(), c);
}

}  // namespace cde
