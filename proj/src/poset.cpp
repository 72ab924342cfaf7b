#include "cde/poset.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "cde/errors.hpp"

namespace cde {

namespace {

// Kahn's algorithm, smallest id first. Returns fewer than n ids on a cycle.
std::vector<int> topo_sort(int n, const std::vector<std::vector<int>>& succ) {
	std::vector<int> indeg(n, 0);
	for(int p = 0; p < n; ++p) {
		for(int q : succ[p]) {
			++indeg[q];
		}
	}
	std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
	for(int p = 0; p < n; ++p) {
		if(indeg[p] == 0) {
			ready.push(p);
		}
	}
	std::vector<int> order;
	while(!ready.empty()) {
		int p = ready.top();
		ready.pop();
		order.push_back(p);
		for(int q : succ[p]) {
			if(--indeg[q] == 0) {
				ready.push(q);
			}
		}
	}
	return order;
}

std::string describe_cycle(int n, const std::vector<std::vector<int>>& succ) {
	std::vector<int> state(n, 0), parent(n, -1);
	std::vector<int> cycle;
	std::function<bool(int)> dfs = [&](int p) {
		state[p] = 1;
		for(int q : succ[p]) {
			if(state[q] == 1) {
				cycle.push_back(q);
				for(int r = p; r != q; r = parent[r]) {
					cycle.push_back(r);
				}
				cycle.push_back(q);
				std::reverse(cycle.begin(), cycle.end());
				return true;
			}
			if(state[q] == 0) {
				parent[q] = p;
				if(dfs(q)) {
					return true;
				}
			}
		}
		state[p] = 2;
		return false;
	};
	for(int p = 0; p < n && cycle.empty(); ++p) {
		if(state[p] == 0) {
			dfs(p);
		}
	}
	std::string s;
	for(std::size_t i = 0; i < cycle.size(); ++i) {
		s += (i ? " -> " : "") + std::to_string(cycle[i]);
	}
	return s;
}

}  // namespace

std::string Poset::label(int p) const {
	if(p >= 0 && p < static_cast<int>(labels_.size()) && !labels_[p].empty()) {
		return labels_[p];
	}
	return std::to_string(p);
}

Poset Poset::from_relations(int n, const std::vector<Relation>& relations,
                            std::vector<std::string> labels) {
	if(n < 0) {
		throw InputError("negative element count");
	}
	std::vector<std::vector<int>> succ(n);
	for(auto [p, q] : relations) {
		if(p < 0 || q < 0 || p >= n || q >= n) {
			throw InputError("relation (" + std::to_string(p) + "," + std::to_string(q) +
			                 ") references an id outside 0.." + std::to_string(n - 1));
		}
		if(p == q) {
			throw InputError("cycle detected: " + std::to_string(p) + " -> " + std::to_string(p));
		}
		succ[p].push_back(q);
	}
	std::vector<int> order = topo_sort(n, succ);
	if(static_cast<int>(order.size()) < n) {
		throw InputError("cycle detected: " + describe_cycle(n, succ));
	}
	// Strict upper sets, filled in reverse topological order.
	std::vector<Bits> above(n, Bits(n));
	for(auto it = order.rbegin(); it != order.rend(); ++it) {
		int p = *it;
		for(int q : succ[p]) {
			above[p].set(q);
			above[p] |= above[q];
		}
	}
	std::vector<Bits> below(n, Bits(n));
	for(int p = 0; p < n; ++p) {
		for(auto q = above[p].find_first(); q != Bits::npos; q = above[p].find_next(q)) {
			below[q].set(p);
		}
	}
	std::vector<Relation> covers;
	for(int p = 0; p < n; ++p) {
		for(auto q = above[p].find_first(); q != Bits::npos; q = above[p].find_next(q)) {
			if(!above[p].intersects(below[q])) {
				covers.emplace_back(p, static_cast<int>(q));
			}
		}
	}
	return from_covers(n, covers, std::move(labels));
}

Poset Poset::from_covers(int n, const std::vector<Relation>& covers, std::vector<std::string> labels) {
	Poset P;
	P.n_ = n;
	P.covers_ = covers;
	std::sort(P.covers_.begin(), P.covers_.end());
	P.covers_.erase(std::unique(P.covers_.begin(), P.covers_.end()), P.covers_.end());
	P.labels_ = std::move(labels);
	if(!P.labels_.empty() && static_cast<int>(P.labels_.size()) != n) {
		throw InputError("label count " + std::to_string(P.labels_.size()) + " differs from n=" +
		                 std::to_string(n));
	}
	P.finish();
	return P;
}

void Poset::finish() {
	up_.assign(n_, {});
	down_.assign(n_, {});
	for(auto [p, q] : covers_) {
		up_[p].push_back(q);
		down_[q].push_back(p);
	}
	topo_ = topo_sort(n_, up_);
	if(static_cast<int>(topo_.size()) < n_) {
		throw InputError("cycle detected: " + describe_cycle(n_, up_));
	}
	above_.assign(n_, Bits(n_));
	below_.assign(n_, Bits(n_));
	for(auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
		for(int q : up_[*it]) {
			above_[*it].set(q);
			above_[*it] |= above_[q];
		}
	}
	for(int p : topo_) {
		for(int q : down_[p]) {
			below_[p].set(q);
			below_[p] |= below_[q];
		}
	}
}

std::vector<int> Poset::minimal_elements() const {
	std::vector<int> r;
	for(int p = 0; p < n_; ++p) {
		if(down_[p].empty()) {
			r.push_back(p);
		}
	}
	return r;
}

std::vector<int> Poset::maximal_elements() const {
	std::vector<int> r;
	for(int p = 0; p < n_; ++p) {
		if(up_[p].empty()) {
			r.push_back(p);
		}
	}
	return r;
}

int Poset::component_count() const {
	std::vector<int> parent(n_);
	std::iota(parent.begin(), parent.end(), 0);
	std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
	int count = n_;
	for(auto [p, q] : covers_) {
		int a = find(p), b = find(q);
		if(a != b) {
			parent[a] = b;
			--count;
		}
	}
	return count;
}

RankInfo rank_info(const Poset& P) {
	int n = P.size();
	RankInfo info;
	std::vector<int> rank(n, 0);
	std::vector<bool> seen(n, false);
	bool ok = true;
	for(int s = 0; s < n && ok; ++s) {
		if(seen[s]) {
			continue;
		}
		std::vector<int> comp{s};
		seen[s] = true;
		rank[s] = 0;
		for(std::size_t h = 0; h < comp.size() && ok; ++h) {
			int p = comp[h];
			auto visit = [&](int q, int r) {
				if(!seen[q]) {
					seen[q] = true;
					rank[q] = r;
					comp.push_back(q);
				} else if(rank[q] != r) {
					ok = false;
				}
			};
			for(int q : P.upper_covers(p)) {
				visit(q, rank[p] + 1);
			}
			for(int q : P.lower_covers(p)) {
				visit(q, rank[p] - 1);
			}
		}
		int lo = rank[s];
		for(int p : comp) {
			lo = std::min(lo, rank[p]);
		}
		for(int p : comp) {
			rank[p] -= lo;
		}
	}
	if(!ok) {
		return info;
	}
	info.is_ranked = true;
	info.rank = rank;
	info.top_rank = n ? *std::max_element(rank.begin(), rank.end()) : -1;
	info.is_graded = true;
	for(int p : P.minimal_elements()) {
		info.is_graded = info.is_graded && rank[p] == 0;
	}
	for(int p : P.maximal_elements()) {
		info.is_graded = info.is_graded && rank[p] == info.top_rank;
	}
	return info;
}

std::vector<Chain> enumerate_chains(const Poset& P, int k, bool maximal_only) {
	std::vector<Chain> out;
	Chain cur;
	if(maximal_only) {
		std::function<void(int)> walk = [&](int p) {
			cur.push_back(p);
			if(P.upper_covers(p).empty()) {
				out.push_back(cur);
			}
			for(int q : P.upper_covers(p)) {
				walk(q);
			}
			cur.pop_back();
		};
		for(int p : P.minimal_elements()) {
			walk(p);
		}
		return out;
	}
	if(k < 0) {
		return out;
	}
	std::function<void(int)> extend = [&](int p) {
		cur.push_back(p);
		if(static_cast<int>(cur.size()) == k + 1) {
			out.push_back(cur);
		} else {
			const Bits& up = P.above(p);
			for(auto q = up.find_first(); q != Bits::npos; q = up.find_next(q)) {
				extend(static_cast<int>(q));
			}
		}
		cur.pop_back();
	};
	for(int p = 0; p < P.size(); ++p) {
		extend(p);
	}
	return out;
}

int longest_chain_length(const Poset& P) {
	if(P.size() == 0) {
		return -1;
	}
	std::vector<int> len(P.size(), 0);
	int best = 0;
	for(int p : P.linear_extension()) {
		for(int q : P.lower_covers(p)) {
			len[p] = std::max(len[p], len[q] + 1);
		}
		best = std::max(best, len[p]);
	}
	return best;
}

Poset chain_poset(int n) {
	std::vector<Relation> c;
	for(int i = 0; i + 1 < n; ++i) {
		c.emplace_back(i, i + 1);
	}
	return Poset::from_covers(n, c);
}

Poset antichain_poset(int n) {
	return Poset::from_covers(n, {});
}

Poset dual(const Poset& P) {
	std::vector<Relation> c;
	for(auto [p, q] : P.covers()) {
		c.emplace_back(q, p);
	}
	return Poset::from_covers(P.size(), c, P.labels());
}

Poset disjoint_union(const Poset& P, const Poset& Q) {
	std::vector<Relation> c = P.covers();
	for(auto [p, q] : Q.covers()) {
		c.emplace_back(p + P.size(), q + P.size());
	}
	return Poset::from_covers(P.size() + Q.size(), c);
}

Poset direct_product(const Poset& P, const Poset& Q) {
	int m = Q.size();
	std::vector<Relation> c;
	for(int p = 0; p < P.size(); ++p) {
		for(auto [a, b] : Q.covers()) {
			c.emplace_back(p * m + a, p * m + b);
		}
	}
	for(auto [a, b] : P.covers()) {
		for(int q = 0; q < m; ++q) {
			c.emplace_back(a * m + q, b * m + q);
		}
	}
	return Poset::from_covers(P.size() * m, c);
}

bool is_isomorphic(const Poset& P, const Poset& Q) {
	int n = P.size();
	if(n != Q.size() || P.covers().size() != Q.covers().size()) {
		return false;
	}
	auto signature = [](const Poset& X, int p) {
		return std::array<std::size_t, 4>{X.below(p).count(), X.above(p).count(),
		                                  X.lower_covers(p).size(), X.upper_covers(p).size()};
	};
	std::vector<std::array<std::size_t, 4>> sp(n), sq(n);
	for(int p = 0; p < n; ++p) {
		sp[p] = signature(P, p);
		sq[p] = signature(Q, p);
	}
	{
		auto a = sp, b = sq;
		std::sort(a.begin(), a.end());
		std::sort(b.begin(), b.end());
		if(a != b) {
			return false;
		}
	}
	const std::vector<int>& order = P.linear_extension();
	std::vector<int> image(n, -1);
	std::vector<bool> used(n, false);
	std::function<bool(int)> place = [&](int idx) {
		if(idx == n) {
			return true;
		}
		int p = order[idx];
		for(int q = 0; q < n; ++q) {
			if(used[q] || sq[q] != sp[p]) {
				continue;
			}
			bool ok = true;
			for(int j = 0; j < idx && ok; ++j) {
				int u = order[j];
				ok = P.less(u, p) == Q.less(image[u], q) && P.less(p, u) == Q.less(q, image[u]);
			}
			if(!ok) {
				continue;
			}
			image[p] = q;
			used[q] = true;
			if(place(idx + 1)) {
				return true;
			}
			used[q] = false;
			image[p] = -1;
		}
		return false;
	};
	return place(0);
}

Integer count_linear_extensions(const Poset& P) {
	int n = P.size();
	if(n > 64) {
		throw InputError("linear extension count supports at most 64 elements");
	}
	using Mask = std::uint64_t;
	std::vector<Mask> need(n, 0);
	for(int p = 0; p < n; ++p) {
		for(int q : P.lower_covers(p)) {
			need[p] |= Mask(1) << q;
		}
	}
	Mask full = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
	std::unordered_map<Mask, Integer> memo;
	std::function<Integer(Mask)> count = [&](Mask I) -> Integer {
		if(I == full) {
			return 1;
		}
		auto it = memo.find(I);
		if(it != memo.end()) {
			return it->second;
		}
		Integer total = 0;
		for(int p = 0; p < n; ++p) {
			if(!(I >> p & 1) && (need[p] & ~I) == 0) {
				total += count(I | Mask(1) << p);
			}
		}
		memo.emplace(I, total);
		return total;
	};
	return count(0);
}

std::vector<std::vector<int>> all_linear_extensions(const Poset& P, std::size_t limit) {
	int n = P.size();
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	std::vector<int> missing(n);
	for(int p = 0; p < n; ++p) {
		missing[p] = static_cast<int>(P.lower_covers(p).size());
	}
	std::vector<bool> done(n, false);
	std::function<void()> rec = [&]() {
		if(out.size() >= limit) {
			return;
		}
		if(static_cast<int>(cur.size()) == n) {
			out.push_back(cur);
			return;
		}
		for(int p = 0; p < n; ++p) {
			if(done[p] || missing[p] != 0) {
				continue;
			}
			done[p] = true;
			cur.push_back(p);
			for(int q : P.upper_covers(p)) {
				--missing[q];
			}
			rec();
			for(int q : P.upper_covers(p)) {
				++missing[q];
			}
			cur.pop_back();
			done[p] = false;
		}
	};
	rec();
	return out;
}

}  // namespace cde
