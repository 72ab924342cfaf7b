#include "cde/dynamics.hpp"

#include <algorithm>
#include <sstream>

#include "cde/errors.hpp"

namespace cde {

namespace {

Mask down_closure(const Poset& P, Mask m) {
	Mask out = m;
	for(int p : members(m)) {
		const Bits& b = P.below(p);
		for(auto q = b.find_first(); q != Bits::npos; q = b.find_next(q)) {
			out |= bit(static_cast<int>(q));
		}
	}
	return out;
}

Mask minimal_outside(const IdealLattice& L, Mask I) {
	Mask m = 0;
	for(int p = 0; p < L.base().size(); ++p) {
		if(!(I >> p & 1) && (L.lower_cover_mask(p) & ~I) == 0) {
			m |= bit(p);
		}
	}
	return m;
}

}  // namespace

Mask rowmotion(const IdealLattice& L, Mask I) {
	return down_closure(L.base(), minimal_outside(L, I));
}

std::size_t rowmotion_index(const IdealLattice& L, std::size_t i) {
	return L.index_of(down_closure(L.base(), L.addable(i)));
}

IdealMap rowmotion_map(const IdealLattice& L) {
	IdealMap m(L.size());
	for(std::size_t i = 0; i < L.size(); ++i) {
		m[i] = rowmotion_index(L, i);
	}
	return m;
}

Mask apply_word(const IdealLattice& L, const ToggleWord& w, Mask I) {
	for(auto it = w.rbegin(); it != w.rend(); ++it) {
		I = toggle(L, I, *it);
	}
	return I;
}

IdealMap word_map(const IdealLattice& L, const ToggleWord& w) {
	for(int p : w) {
		if(p < 0 || p >= L.base().size()) {
			throw InputError("toggle word mentions element " + std::to_string(p) + " outside the poset");
		}
	}
	IdealMap m(L.size());
	for(std::size_t i = 0; i < L.size(); ++i) {
		m[i] = L.index_of(apply_word(L, w, L.ideal(i)));
	}
	return m;
}

ToggleWord rowmotion_word(const IdealLattice& L) {
	return rowmotion_word(L.base().linear_extension());
}

ToggleWord rowmotion_word(const std::vector<int>& linear_extension) {
	// tau_{p_1} o ... o tau_{p_n}: the top of the extension is toggled first
	return linear_extension;
}

int base_top_rank(const IdealLattice& L) {
	RankInfo ri = rank_info(L.base());
	if(!ri.is_ranked) {
		throw InputError("rank toggles need a ranked poset");
	}
	return ri.top_rank;
}

ToggleWord rank_word(const IdealLattice& L, const std::vector<int>& sigma) {
	RankInfo ri = rank_info(L.base());
	if(!ri.is_ranked) {
		throw InputError("rank toggles need a ranked poset");
	}
	int r = ri.top_rank;
	std::vector<int> seen(std::max(r + 1, 0), 0);
	if(static_cast<int>(sigma.size()) != r + 1) {
		throw InputError("sigma must permute 0.." + std::to_string(r));
	}
	for(int s : sigma) {
		if(s < 0 || s > r || seen[s]++) {
			throw InputError("sigma must permute 0.." + std::to_string(r));
		}
	}
	ToggleWord w;
	for(int s : sigma) {
		for(int p = 0; p < L.base().size(); ++p) {
			if(ri.rank[p] == s) {
				w.push_back(p);
			}
		}
	}
	return w;
}

IdealMap rank_permuted_rowmotion(const IdealLattice& L, const std::vector<int>& sigma) {
	return word_map(L, rank_word(L, sigma));
}

std::vector<int> gyration_order(int top_rank) {
	std::vector<int> s;
	for(int i = 1; i <= top_rank; i += 2) {
		s.push_back(i);
	}
	for(int i = 0; i <= top_rank; i += 2) {
		s.push_back(i);
	}
	return s;
}

std::vector<int> identity_order(int top_rank) {
	std::vector<int> s(std::max(top_rank + 1, 0));
	for(int i = 0; i <= top_rank; ++i) {
		s[i] = i;
	}
	return s;
}

IdealMap gyration_map(const IdealLattice& L) {
	return rank_permuted_rowmotion(L, gyration_order(base_top_rank(L)));
}

IdealMap parse_map(const IdealLattice& L, const std::string& spec) {
	if(spec == "rowmotion") {
		return rowmotion_map(L);
	}
	if(spec == "gyration") {
		return gyration_map(L);
	}
	std::string list = spec.rfind("sigma:", 0) == 0 ? spec.substr(6) : spec;
	if(list.empty()) {
		throw InputError("empty map spec");
	}
	std::vector<int> sigma;
	std::stringstream ss(list);
	std::string item;
	while(std::getline(ss, item, ',')) {
		try {
			std::size_t used = 0;
			sigma.push_back(std::stoi(item, &used));
			if(used != item.size()) {
				throw InputError("");
			}
		} catch(const std::exception&) {
			throw InputError("map must be rowmotion, gyration or sigma:LIST, got '" + spec + "'");
		}
	}
	return rank_permuted_rowmotion(L, sigma);
}

std::vector<Orbit> orbit_decomposition(const IdealMap& map) {
	std::size_t n = map.size();
	std::vector<char> hit(n, 0);
	for(std::size_t x : map) {
		if(x >= n || hit[x]) {
			throw InputError("map is not a bijection on ideals");
		}
		hit[x] = 1;
	}
	std::vector<char> done(n, 0);
	std::vector<Orbit> orbits;
	for(std::size_t s = 0; s < n; ++s) {
		if(done[s]) {
			continue;
		}
		Orbit o;
		for(std::size_t x = s; !done[x]; x = map[x]) {
			done[x] = 1;
			o.push_back(x);
		}
		orbits.push_back(std::move(o));
	}
	return orbits;
}

Integer map_order(const std::vector<Orbit>& orbits) {
	Integer o = 1;
	for(const auto& orb : orbits) {
		o = lcm(o, Integer(static_cast<unsigned long>(orb.size())));
	}
	return o;
}

std::vector<std::size_t> orbit_sizes(const std::vector<Orbit>& orbits) {
	std::vector<std::size_t> s;
	for(const auto& o : orbits) {
		s.push_back(o.size());
	}
	std::sort(s.begin(), s.end());
	return s;
}

Distribution orbit_distribution(std::size_t n, const Orbit& orbit) {
	Distribution mu(n, Rational(0));
	Rational w = fraction(1, static_cast<long>(orbit.size()));
	for(std::size_t i : orbit) {
		mu[i] = w;
	}
	return mu;
}

HomomesyReport homomesy_report(const std::vector<Orbit>& orbits, const Statistic& f) {
	HomomesyReport r;
	for(const auto& o : orbits) {
		Rational s = 0;
		for(std::size_t i : o) {
			if(i >= f.size()) {
				throw InputError("statistic shorter than the ideal count");
			}
			s += f[i];
		}
		s /= static_cast<long>(o.size());
		r.averages.push_back(s);
	}
	r.homomesic = !r.averages.empty() &&
	              std::all_of(r.averages.begin(), r.averages.end(), [&](const Rational& x) { return x == r.averages[0]; });
	if(r.homomesic) {
		r.constant = r.averages[0];
	}
	return r;
}

}  // namespace cde
