// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cde/cde.hpp"
#include "cde/distributions.hpp"
#include "cde/dynamics.hpp"
#include "cde/errors.hpp"
#include "cde/minuscule.hpp"
#include "cde/shapes.hpp"
#include "cde/tableaux.hpp"

using namespace cde;

namespace {

std::string fixture(const std::string& name) {
	return std::string(FIXTURE_DIR) + "/" + name;
}

// Collects failed expectations for one criterion.
struct Check {
	std::vector<std::string> failures;
	std::vector<std::string> notes;
	int count = 0;

	void expect(bool ok, const std::string& what) {
		++count;
		if(!ok) {
			failures.push_back(what);
		}
	}
	template <class A, class B>
	void equal(const A& got, const B& want, const std::string& what) {
		++count;
		if(!(got == want)) {
			std::ostringstream os;
			os << what << ": got " << show(got) << ", want " << show(want);
			failures.push_back(os.str());
		}
	}
	static std::string show(const Rational& q) { return to_string(q); }
	static std::string show(const Integer& z) { return z.get_str(); }
	template <class T>
	static std::string show(const T& x) {
		std::ostringstream os;
		os << x;
		return os.str();
	}
	void note(const std::string& s) { notes.push_back(s); }
};

Rational ab_density(const SkewShape& s) {
	return fraction(s.a * s.b, s.a + s.b);
}

// Lattices certified by criteria 3, 4 and 6, reused by criterion 8.
struct Certified {
	std::string name;
	Poset base;
	Rational c;
};
std::vector<Certified> certified;

template <class T>
std::vector<T> take(const std::vector<T>& v, std::size_t n) {
	return std::vector<T>(v.begin(), v.begin() + std::min(n, v.size()));
}

// 1 ------------------------------------------------------------------------
void counterexamples(Check& c) {
	Poset A = load_poset(fixture("fix-a.json"));
	c.equal(expectation(chain_dist(A, 1), poset_ddeg(A)), fraction(13, 14), "FIX-A chain(1)");
	CdeReport ra = cde_report(A);
	c.expect(ra.is_cde && !ra.is_mcde, "FIX-A is CDE, not mCDE");

	Poset B = load_poset(fixture("fix-b.json"));
	c.equal(expectation(maxchain_dist(B), poset_ddeg(B)), fraction(17, 16), "FIX-B maxchain");
	CdeReport rb = cde_report(B);
	c.expect(!rb.is_cde && rb.is_mcde, "FIX-B is mCDE, not CDE");

	IdealLattice C = IdealLattice::build(load_poset(fixture("fix-c.json")));
	Statistic dc = ddeg_statistic(C);
	c.equal(expectation(chain_dist(C, 1), dc), fraction(83, 52), "J(FIX-C) chain(1)");
	c.equal(expectation(uniform(C), dc), fraction(8, 5), "J(FIX-C) uniform");
	c.equal(expectation(chain_dist(C, 6), dc), fraction(8, 5), "J(FIX-C) chain(6)");

	Poset D = dual(load_poset(fixture("fix-d.json")));
	c.equal(expectation(chain_dist(D, 2), poset_ddeg(D)), fraction(7, 6), "dual(FIX-D) chain(2)");
	c.equal(expectation(uniform(D.size()), poset_ddeg(D)), Rational(1), "dual(FIX-D) uniform");
}

// 2 ------------------------------------------------------------------------
void motivating(Check& c) {
	SkewShape s = make_skew({2, 2});
	IdealLattice L = IdealLattice::build(skew_poset(s));
	CdeReport r = cde_report(L);
	c.equal(r.edge_density, Rational(1), "edge density");
	c.equal(r.maxchain_expectation, Rational(1), "maxchain expectation");
	// a maximal chain of J(2x2) has 4 edges; the path of the ideal turns twice in expectation
	c.equal(r.maxchain_expectation * 2, Rational(2), "expected turns");
	Distribution want;
	for(int w : {2, 2, 1, 1, 2, 2}) {
		want.push_back(fraction(w, 10));
	}
	c.equal(maxchain_dist(L) == want, true, "SYT-weighted probabilities (2,2,1,1,2,2)/10");
	std::string order;
	for(std::size_t i = 0; i < L.size(); ++i) {
		order += (i ? " " : "") + ideal_string(s, L.ideal(i));
	}
	c.note("path order: " + order);
}

// 3 ------------------------------------------------------------------------
void balanced_shapes(Check& c) {
	int shapes = 0;
	for(const auto& s : skew_shapes_up_to(10, true)) {
		if(!is_balanced(s)) {
			continue;
		}
		++shapes;
		IdealLattice L = IdealLattice::build(skew_poset(s));
		auto cert = certify_tcde(L);
		c.expect(cert.has_value(), s.literal() + " certified");
		if(cert) {
			c.equal(cert->c, ab_density(s), s.literal() + " constant");
			c.expect(!check_certificate(L, *cert), s.literal() + " certificate re-checks");
			certified.push_back({s.literal(), skew_poset(s), cert->c});
		}
	}
	c.note(std::to_string(shapes) + " connected balanced shapes with at most 10 boxes");
	for(SkewShape s : {make_skew({4, 3, 3, 3}, {2, 2}), make_skew(rectangle(2, 5)), make_skew(staircase(4)),
	                   make_skew(stretch(staircase(2), 2, 2))}) {
		c.expect(is_balanced(s), s.literal() + " is balanced");
		auto cert = certify_tcde(IdealLattice::build(skew_poset(s)));
		c.expect(cert && cert->c == ab_density(s), s.literal() + " certified with ab/(a+b)");
	}
	struct Pair {
		Partition lambda;
		Rational uni, maxc;
	};
	for(const Pair& p : {Pair{{3, 1}, fraction(8, 7), fraction(17, 15)}, Pair{{3, 2}, fraction(11, 9), fraction(37, 30)}}) {
		SkewShape s = make_skew(p.lambda);
		IdealLattice L = IdealLattice::build(skew_poset(s));
		c.expect(!certify_tcde(L), s.literal() + " not certified");
		CdeReport r = cde_report(L, false);
		c.equal(r.edge_density, p.uni, s.literal() + " uniform");
		c.equal(r.maxchain_expectation, p.maxc, s.literal() + " maxchain");
		auto w = find_witness(L);
		c.expect(w && is_valid_witness(L, w->mu), s.literal() + " witness");
	}
}

// 4 ------------------------------------------------------------------------
void shifted_shapes(Check& c) {
	int shapes = 0;
	for(int n = 1; n <= 10; ++n) {
		for(const auto& l : strict_partitions_of(n)) {
			ShiftedClass cls = classify_shifted_balanced(l);
			if(cls.type != ShiftedType::Type1 && cls.type != ShiftedType::Type2) {
				continue;
			}
			++shapes;
			ShiftedShape s = make_shifted(l);
			std::string name = s.literal();
			Rational want = cls.type == ShiftedType::Type1 ? fraction(cls.n + 1 + cls.k, 4) : fraction(cls.n, 2);
			c.equal(*predicted_density(cls, l), want, name + " predicted density");
			IdealLattice L = IdealLattice::build(shifted_poset(s));
			auto cert = certify_tcde(L);
			c.expect(cert.has_value(), name + " certified");
			if(cert) {
				c.equal(cert->c, want, name + " constant");
				certified.push_back({name, shifted_poset(s), cert->c});
			}
			RookPlacement r = shifted_rook_placement(s, cls);
			ShiftedPlacementCheck chk = check_shifted_placement(s, r);
			c.expect(chk.a, name + " placement (a)");
			c.expect(chk.b, name + " placement (b)");
			c.expect(chk.c, name + " placement (c)");
			c.equal(chk.total, Rational(l[0] + 1), name + " placement total");
		}
	}
	c.note(std::to_string(shapes) + " Type1/Type2 strict partitions with at most 10 boxes");
	long checked = 0;
	for(Partition l : {Partition{3, 2, 1}, Partition{4, 3, 1}, Partition{3, 2}}) {
		ShiftedShape s = make_shifted(l);
		IdealLattice L = IdealLattice::build(shifted_poset(s));
		for(const Box& u : s.boxes) {
			Statistic r = rook(L, s, u.i, u.j), k = corner_count(L, s, u.i, u.j);
			for(std::size_t x = 0; x < L.size(); ++x) {
				++checked;
				c.expect(r[x] - k[x] == 1, s.literal() + " rook identity at [" + std::to_string(u.i) + "," +
				                               std::to_string(u.j) + "]");
			}
		}
	}
	c.note(std::to_string(checked) + " (ideal, box) rook evaluations");
}

// 5 ------------------------------------------------------------------------
void trapezoids(Check& c) {
	for(int n = 3; n <= 6; ++n) {
		ShiftedShape s = make_shifted({n, n - 2});
		IdealLattice L = IdealLattice::build(shifted_poset(s));
		CdeReport r = cde_report(L);
		c.equal(r.edge_density, fraction(2 * (n - 1), n + 1), s.literal() + " edge density");
		c.expect(r.is_mcde, s.literal() + " mCDE");
	}
	ShiftedShape s = make_shifted({4, 2});
	IdealLattice L = IdealLattice::build(shifted_poset(s));
	c.expect(!certify_tcde(L), "shifted:4,2 not tCDE");
	auto w = find_witness(L);
	c.expect(w && is_valid_witness(L, w->mu), "shifted:4,2 witness found and valid");
	if(w) {
		c.note("found witness expectation " + to_string(w->expectation));
	}
	std::ifstream f(fixture("witness-shifted-4-2.json"));
	auto j = nlohmann::json::parse(f);
	Distribution mu(L.size(), Rational(0));
	for(std::size_t r = 0; r < j["ideals"].size(); ++r) {
		std::string name = j["ideals"][r];
		for(std::size_t i = 0; i < L.size(); ++i) {
			if(ideal_string(s, L.ideal(i)) == name) {
				mu[i] = parse_rational(j["mu"][r].get<std::string>());
			}
		}
	}
	c.expect(is_valid_witness(L, mu), "explicit table is a valid witness");
	c.equal(expectation(mu, ddeg_statistic(L)), fraction(13, 11), "explicit table expectation");
	c.equal(cde_report(L, false).edge_density, fraction(6, 5), "shifted:4,2 edge density");
}

// 6 ------------------------------------------------------------------------
void minuscule(Check& c) {
	KappaReport e6 = verify_e6_certificate(), e7 = verify_e7_certificate();
	c.expect(e6.holds, "E6 identity (first failure: " + e6.failing_ideal + ")");
	c.expect(e7.holds, "E7 identity (first failure: " + e7.failing_ideal + ")");
	c.equal(e6.c, fraction(4, 3), "E6 constant");
	c.equal(e7.c, fraction(3, 2), "E7 constant");
	int rows = 0;
	for(const auto& r : verify_minuscule_cases()) {
		++rows;
		c.expect(r.ok(), r.name + (r.of_lattice ? " J(P)" : " P") + " certified with the expected constant");
		if(r.of_lattice && r.c) {
			certified.push_back({r.name, build_minuscule(parse_minuscule_literal(r.name)), *r.c});
		}
	}
	c.note(std::to_string(rows) + " minuscule rows");
	Poset E6 = e6_poset(), E7 = e7_poset();
	IdealLattice J6 = IdealLattice::build(E6);
	c.equal(J6.size(), std::size_t(27), "J(P(E6)) size");
	c.expect(is_isomorphic(J6.as_poset(), E7), "J(P(E6)) isomorphic to P(E7)");
	Poset staircase4 = shifted_poset(make_shifted(staircase(4)));
	c.expect(is_isomorphic(build_interval_b2(3), staircase4), "[0,3^2] isomorphic to shifted staircase (4,3,2,1)");
	c.expect(is_isomorphic(IdealLattice::build(staircase4).as_poset(), E6), "J(shifted (4,3,2,1)) isomorphic to P(E6)");
	c.expect(is_isomorphic(IdealLattice::build(build_interval_b2(3)).as_poset(), E6), "J([0,3^2]) isomorphic to P(E6)");
	Poset b4 = build_interval_b2(4);
	c.note("as literally written, [0,4^2] has " + std::to_string(b4.size()) + " elements and shifted (4,3,2,1) has " +
	       std::to_string(staircase4.size()) + "; isomorphic: " + (is_isomorphic(b4, staircase4) ? "yes" : "no") +
	       "; checked [0,3^2] instead");
}

// 7 ------------------------------------------------------------------------
void toggle_symmetry(Check& c) {
	std::mt19937_64 rng(20160101);
	std::uniform_int_distribution<int> size(1, 6);
	std::uniform_real_distribution<double> density(0.1, 0.7);
	int graded = 0;
	for(int trial = 0; trial < 100; ++trial) {
		int n = size(rng);
		std::bernoulli_distribution coin(density(rng));
		std::vector<Relation> rel;
		for(int i = 0; i < n; ++i) {
			for(int j = i + 1; j < n; ++j) {
				if(coin(rng)) {
					rel.emplace_back(i, j);
				}
			}
		}
		Poset P = Poset::from_relations(n, rel);
		IdealLattice L = IdealLattice::build(P);
		const Poset& Q = L.as_poset();
		std::string tag = "trial " + std::to_string(trial);
		for(int k = 0; k <= longest_chain_length(Q); ++k) {
			c.expect(is_toggle_symmetric(L, chain_dist(L, k)), tag + " chain(" + std::to_string(k) + ")");
		}
		for(int m = 0; m <= 4; ++m) {
			Distribution mc = mchain_dist(L, m), mm = mmchain_dist(L, m);
			c.expect(is_toggle_symmetric(L, mc), tag + " mchain(" + std::to_string(m) + ")");
			c.expect(is_toggle_symmetric(L, mm), tag + " m-hat-chain(" + std::to_string(m) + ")");
			c.expect(convert_chain_to_mchain(Q, m) == mc, tag + " chain to mchain conversion");
			c.expect(convert_chain_to_mmchain(Q, m) == mm, tag + " chain to m-hat-chain conversion");
		}
		RankInfo ri = rank_info(P);
		if(ri.is_graded) {
			++graded;
			Distribution r = rank_dist(L);
			c.expect(is_toggle_symmetric(L, r), tag + " rank_dist");
			c.equal(expectation(r, ddeg_statistic(L)), fraction(P.size(), ri.top_rank + 2), tag + " rank_dist expectation");
		}
	}
	c.note(std::to_string(graded) + " of 100 random posets graded");
}

// 8 ------------------------------------------------------------------------
std::vector<std::vector<int>> rank_orders(int r, std::mt19937_64& rng, bool& exhaustive) {
	std::vector<int> s = identity_order(r);
	std::vector<std::vector<int>> out;
	long fact = 1;
	for(int i = 2; i <= r + 1; ++i) {
		fact *= i;
	}
	exhaustive = fact <= 40320;
	if(exhaustive) {
		do {
			out.push_back(s);
		} while(std::next_permutation(s.begin(), s.end()));
		return out;
	}
	out.push_back(s);
	out.push_back(gyration_order(r));
	for(int t = 0; t < 30; ++t) {
		std::shuffle(s.begin(), s.end(), rng);
		out.push_back(s);
	}
	return out;
}

void dynamics(Check& c) {
	std::mt19937_64 rng(8);
	for(const char* lit : {"shifted:3,2,1", "straight:4,2", "straight:2,2"}) {
		IdealLattice L = IdealLattice::build(parse_shape_literal(lit).poset());
		bool all = false;
		for(const auto& sigma : rank_orders(base_top_rank(L), rng, all)) {
			for(const auto& o : orbit_decomposition(rank_permuted_rowmotion(L, sigma))) {
				c.expect(is_toggle_symmetric(L, orbit_distribution(L.size(), o)),
				         std::string(lit) + " orbit toggle-symmetric");
			}
		}
		c.expect(all, std::string(lit) + " all rank orders enumerated");
	}
	for(int a = 1; a <= 4; ++a) {
		for(int b = 1; b <= 4; ++b) {
			IdealLattice L = IdealLattice::build(direct_product(chain_poset(a), chain_poset(b)));
			c.equal(map_order(orbit_decomposition(rowmotion_map(L))), Integer(a + b),
			        "rowmotion order on J(" + std::to_string(a) + "x" + std::to_string(b) + ")");
		}
	}
	int exhaustive = 0, sampled = 0;
	long maps = 0;
	for(const auto& cert : certified) {
		IdealLattice L = IdealLattice::build(cert.base);
		Statistic dd = ddeg_statistic(L);
		bool all = false;
		RankInfo ri = rank_info(cert.base);
		if(!ri.is_ranked) {
			c.expect(false, cert.name + " base not ranked");
			continue;
		}
		for(const auto& sigma : rank_orders(ri.top_rank, rng, all)) {
			++maps;
			HomomesyReport h = homomesy_report(orbit_decomposition(rank_permuted_rowmotion(L, sigma)), dd);
			c.expect(h.homomesic && *h.constant == cert.c, cert.name + " antichain cardinality c-mesic");
		}
		(all ? exhaustive : sampled) += 1;
	}
	c.note(std::to_string(certified.size()) + " certified lattices, " + std::to_string(maps) + " maps; every rank order on " +
	       std::to_string(exhaustive) + ", rowmotion + gyration + 30 random orders on the " + std::to_string(sampled) +
	       " with more than 8 ranks");
	Poset V = Poset::from_covers(3, {{0, 2}, {1, 2}}, {"a", "b", "c"});
	IdealLattice L = IdealLattice::build(V);
	auto orbits = orbit_decomposition(word_map(L, {1, 2, 0}));
	bool found = false;
	for(const auto& o : orbits) {
		if(o.size() == 2 && L.ideal(o[0]) == 0 && L.ideal(o[1]) == 0b011) {
			found = true;
			c.expect(!is_toggle_symmetric(L, orbit_distribution(L.size(), o)), "V poset orbit not toggle-symmetric");
		}
	}
	c.expect(found, "V poset orbit {0,{a,b}}");
}

// 9 ------------------------------------------------------------------------
void tableaux(Check& c) {
	for(int n = 0; n <= 8; ++n) {
		for(const auto& l : n ? partitions_of(n) : std::vector<Partition>{Partition{}}) {
			SkewShape s = make_skew(l);
			Integer le = n ? count_linear_extensions(skew_poset(s)) : Integer(1);
			c.equal(f_aitken(s), le, s.literal() + " Aitken");
			c.equal(f_hook(l), le, s.literal() + " hook length");
		}
	}
	for(int n = 1; n <= 8; ++n) {
		for(const auto& l : strict_partitions_of(n)) {
			c.equal(g_thrall(l), count_linear_extensions(shifted_poset(make_shifted(l))),
			        make_shifted(l).literal() + " Thrall");
		}
	}
	c.equal(g_thrall({3, 2, 1}), Integer(2), "g(3,2,1)");
	int skews = 0;
	for(const auto& s : skew_shapes_up_to(7, false)) {
		++skews;
		c.equal(count_barely_formula(s), enumerate_barely(s), s.literal() + " barely formula vs brute force");
	}
	c.note(std::to_string(skews) + " skew shapes with at most 7 boxes");
	c.equal(enumerate_barely(make_skew({2, 2})), Integer(10), "2x2 barely count");
	for(int n = 1; n <= 6; ++n) {
		for(const auto& l : strict_partitions_of(n)) {
			ShiftedShape s = make_shifted(l);
			c.equal(count_shifted_barely_formula(s, false), enumerate_shifted_barely(s, false),
			        s.literal() + " shifted formula vs brute force");
			c.equal(count_shifted_barely_formula(s, true), enumerate_shifted_barely(s, true),
			        s.literal() + " diagonally unprimed formula vs brute force");
		}
	}
	c.equal(enumerate_shifted_barely(make_shifted({2, 1}), false), Integer(48), "shifted (2,1)");
	c.equal(enumerate_shifted_barely(make_shifted({2, 1}), true), Integer(8), "shifted (2,1) diagonally unprimed");
	c.equal(enumerate_shifted_barely(make_shifted({3, 2, 1}), false), Integer(1792), "shifted (3,2,1)");
	c.equal(enumerate_shifted_barely(make_shifted({3, 2, 1}), true), Integer(168), "shifted (3,2,1) diagonally unprimed");
	c.equal(shifted_barely_product({3, 2, 1}), Integer(1792), "product formula (3,2,1)");
	c.equal(shifted_diag_barely_product({3, 2, 1}), Integer(168), "diagonal product formula (3,2,1)");
	int type1 = 0;
	for(int n = 1; n <= 10; ++n) {
		for(const auto& l : strict_partitions_of(n)) {
			if(classify_shifted_balanced(l).type != ShiftedType::Type1) {
				continue;
			}
			++type1;
			ShiftedShape s = make_shifted(l);
			c.equal(diagonal_removal_expectation(s), fraction(1, 2), s.literal() + " E(maxchain; diagonal T-)");
			c.equal(count_shifted_barely_formula(s, true), shifted_diag_barely_product(l),
			        s.literal() + " diagonal product formula");
			c.equal(count_shifted_barely_formula(s, false), shifted_barely_product(l), s.literal() + " product formula");
		}
	}
	c.note(std::to_string(type1) + " Type1 shapes with at most 10 boxes");
}

// 10 -----------------------------------------------------------------------
void scans(Check& c) {
	int straight = 0, cde_straight = 0;
	for(int n = 1; n <= 12; ++n) {
		for(const auto& l : partitions_of(n)) {
			SkewShape s = make_skew(l);
			IdealLattice L = IdealLattice::build(skew_poset(s));
			bool cde = cde_report(L, false).is_cde;
			++straight;
			cde_straight += cde;
			c.equal(cde, is_balanced(s), s.literal() + " CDE iff balanced");
		}
	}
	int strict = 0, cde_strict = 0;
	for(int n = 1; n <= 12; ++n) {
		for(const auto& l : strict_partitions_of(n)) {
			ShiftedShape s = make_shifted(l);
			IdealLattice L = IdealLattice::build(shifted_poset(s));
			bool cde = cde_report(L, false).is_cde;
			++strict;
			cde_strict += cde;
			c.equal(cde, classify_shifted_balanced(l).type != ShiftedType::None,
			        s.literal() + " CDE iff Type1/Type2/trapezoid");
		}
	}
	c.note(std::to_string(cde_straight) + " of " + std::to_string(straight) + " straight shapes CDE; " +
	       std::to_string(cde_strict) + " of " + std::to_string(strict) + " strict partitions CDE");
}

}  // namespace

int main() {
	struct Criterion {
		int id;
		const char* title;
		std::function<void(Check&)> run;
	};
	std::vector<Criterion> all = {
		{1, "counterexample regressions", counterexamples},
		{2, "J(2x2) motivating example", motivating},
		{3, "balanced skew shapes are tCDE", balanced_shapes},
		{4, "shifted-balanced shapes are tCDE", shifted_shapes},
		{5, "trapezoids", trapezoids},
		{6, "minuscule posets and lattices", minuscule},
		{7, "toggle-symmetry of chain distributions", toggle_symmetry},
		{8, "rowmotion, gyration and homomesy", dynamics},
		{9, "tableau formulas against brute force", tableaux},
		{10, "CDE scans", scans},
	};
	int failed = 0;
	for(const auto& cr : all) {
		Check c;
		auto t0 = std::chrono::steady_clock::now();
		try {
			cr.run(c);
		} catch(const std::exception& e) {
			c.failures.push_back(std::string("exception: ") + e.what());
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		bool ok = c.failures.empty();
		failed += !ok;
		std::cout << (ok ? "PASS" : "FAIL") << " " << cr.id << " " << cr.title << " (" << c.count << " checks, "
		          << std::fixed << std::setprecision(1) << secs << "s)\n";
		for(const auto& n : c.notes) {
			std::cout << "     note: " << n << "\n";
		}
		for(const auto& f : take(c.failures, 10)) {
			std::cout << "     fail: " << f << "\n";
		}
		if(c.failures.size() > 10) {
			std::cout << "     ... " << c.failures.size() - 10 << " more\n";
		}
	}
	return failed ? 1 : 0;
}
