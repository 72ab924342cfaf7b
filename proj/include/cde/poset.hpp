#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cde/rational.hpp"

namespace cde {

using Bits = boost::dynamic_bitset<>;
using Relation = std::pair<int, int>;

// Finite poset on 0..n-1, stored as its Hasse diagram plus the strict
// comparability relation in both directions. Immutable once built.
class Poset {
public:
	Poset() = default;

	// Any order relations; reduced to covers. Throws InputError naming a cycle.
	static Poset from_relations(int n, const std::vector<Relation>& relations,
	                            std::vector<std::string> labels = {});
	// Caller guarantees the pairs are already a transitive reduction of an acyclic relation.
	static Poset from_covers(int n, const std::vector<Relation>& covers,
	                         std::vector<std::string> labels = {});

	int size() const { return n_; }
	const std::vector<Relation>& covers() const { return covers_; }
	const std::vector<int>& upper_covers(int p) const { return up_[p]; }
	const std::vector<int>& lower_covers(int p) const { return down_[p]; }
	const Bits& above(int p) const { return above_[p]; }
	const Bits& below(int p) const { return below_[p]; }
	bool less(int p, int q) const { return above_[p][q]; }
	bool leq(int p, int q) const { return p == q || above_[p][q]; }
	bool comparable(int p, int q) const { return leq(p, q) || leq(q, p); }
	// Some linear extension (smallest available id first).
	const std::vector<int>& linear_extension() const { return topo_; }
	const std::vector<std::string>& labels() const { return labels_; }
	std::string label(int p) const;

	std::vector<int> minimal_elements() const;
	std::vector<int> maximal_elements() const;
	int component_count() const;
	bool is_connected() const { return component_count() <= 1; }

private:
	void finish();

	int n_ = 0;
	std::vector<Relation> covers_;
	std::vector<std::vector<int>> up_, down_;
	std::vector<Bits> above_, below_;
	std::vector<int> topo_;
	std::vector<std::string> labels_;
};

struct RankInfo {
	bool is_ranked = false;
	bool is_graded = false;
	std::vector<int> rank;
	int top_rank = -1;
};

RankInfo rank_info(const Poset& P);

using Chain = std::vector<int>;

// All k-chains c_0 < ... < c_k; with maximal_only, all maximal chains (k ignored).
std::vector<Chain> enumerate_chains(const Poset& P, int k, bool maximal_only = false);
int longest_chain_length(const Poset& P);

Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset dual(const Poset& P);
Poset disjoint_union(const Poset& P, const Poset& Q);
// Element (p,q) gets id p*|Q| + q.
Poset direct_product(const Poset& P, const Poset& Q);

bool is_isomorphic(const Poset& P, const Poset& Q);

Integer count_linear_extensions(const Poset& P);
// Stops after `limit` extensions.
std::vector<std::vector<int>> all_linear_extensions(const Poset& P, std::size_t limit = 100000);

// JSON: {"n": int, "labels": [str]?, "relations": [[int,int],...]}
Poset load_poset(const std::string& path);
Poset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const Poset& P);

}  // namespace cde
