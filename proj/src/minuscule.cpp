#include "cde/minuscule.hpp"


#include "cde/cde.hpp"
#include "cde/errors.hpp"
#include "cde/shapes.hpp"

namespace cde {

namespace {

// Node numbers are 1-based as drawn; the lower endpoint comes first.
const std::vector<Relation> kE6Edges = {
	{1, 2},   {2, 3},   {3, 4},   {4, 5},   {3, 6},   {4, 7},   {5, 8},   {6, 7},   {7, 8},   {7, 9},
	{8, 10},  {9, 10},  {10, 11}, {9, 12},  {10, 13}, {11, 14}, {12, 13}, {13, 14}, {14, 15}, {15, 16},
};
const std::vector<int> kE6Kappa = {-4, -5, -6, -4, -2, -3, -3, -1, -2, 0, 0, -1, 1, 3, 2, 1};

const std::vector<Relation> kE7Edges = {
	{1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {4, 7},   {5, 8},   {6, 9},   {7, 8},
	{8, 9},   {8, 10},  {9, 11},  {10, 11}, {11, 12}, {10, 13}, {11, 14}, {12, 15}, {13, 14},
	{14, 15}, {15, 16}, {16, 17}, {13, 18}, {14, 19}, {15, 20}, {16, 21}, {17, 22}, {18, 19},
	{19, 20}, {20, 21}, {21, 22}, {21, 23}, {22, 24}, {23, 24}, {24, 25}, {25, 26}, {26, 27},
};
const std::vector<int> kE7Kappa = {-3, -4, -5, -6, -4, -2, -3, -4, -2, -3, -2, -1, -2, -1,
                                   0,  0,  0,  -1, 0,  1,  2,  2,  1,  4,  3,  2,  1};

Poset from_drawing(int n, const std::vector<Relation>& edges) {
	std::vector<Relation> covers;
	for(auto [lo, hi] : edges) {
		covers.emplace_back(lo - 1, hi - 1);
	}
	std::vector<std::string> labels;
	for(int i = 1; i <= n; ++i) {
		labels.push_back(std::to_string(i));
	}
	return Poset::from_covers(n, covers, labels);
}

std::string ideal_labels(const Poset& P, Mask m) {
	std::string s = "{";
	bool first = true;
	for(int p : members(m)) {
		s += first ? "" : ",";
		s += P.label(p);
		first = false;
	}
	return s + "}";
}

KappaReport verify_kappa(const std::string& name, const Poset& P, const std::vector<int>& kappa, int scale,
                         int constant) {
	IdealLattice L = IdealLattice::build(P);
	KappaReport r;
	r.name = name;
	r.c = fraction(constant, scale);
	r.first_failure = check_kappa_identity(L, kappa, scale, constant);
	r.holds = !r.first_failure;
	if(r.first_failure) {
		r.failing_ideal = ideal_labels(P, L.ideal(*r.first_failure));
		if(auto cert = certify_tcde(L)) {
			r.recovered_kappa = cert->kappa;
		}
	}
	return r;
}

void check_positive(std::initializer_list<int> xs) {
	for(int x : xs) {
		if(x < 1) {
			throw InputError("minuscule parameters must be positive");
		}
	}
}

int graded_top_rank(const Poset& P) {
	RankInfo ri = rank_info(P);
	if(!ri.is_graded) {
		throw InputError("minuscule poset is not graded");
	}
	return ri.top_rank;
}

}  // namespace

std::string MinusculeCase::name() const {
	switch(kind) {
	case MinusculeKind::ChainProduct:
		return "minuscule:axb:" + std::to_string(a) + "x" + std::to_string(b);
	case MinusculeKind::ShiftedStaircaseJ:
		return "minuscule:b2:" + std::to_string(b);
	case MinusculeKind::Pabcd:
		if(b == 1 && c == 1 && a == d) {
			return "minuscule:pa11a:" + std::to_string(a);
		}
		return "minuscule:pabcd:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
		       std::to_string(d);
	case MinusculeKind::E6:
		return "minuscule:E6";
	case MinusculeKind::E7:
		return "minuscule:E7";
	}
	return "?";
}

Poset build_pabcd(int a, int b, int c, int d) {
	check_positive({a, b, c, d});
	std::vector<std::string> labels;
	std::vector<Relation> covers;
	auto chain = [&](char letter, int len, int below) {
		int first = static_cast<int>(labels.size());
		for(int i = 1; i <= len; ++i) {
			int id = static_cast<int>(labels.size());
			labels.push_back(std::string(1, letter) + std::to_string(i));
			if(i > 1) {
				covers.emplace_back(id - 1, id);
			} else if(below >= 0) {
				covers.emplace_back(below, id);
			}
		}
		return first;
	};
	int w = chain('w', a, -1);
	int wa = w + a - 1;
	int x = chain('x', b, wa);
	int y = chain('y', c, wa);
	int z = chain('z', d, x + b - 1);
	covers.emplace_back(y + c - 1, z);
	return Poset::from_covers(static_cast<int>(labels.size()), covers, labels);
}

Poset build_interval_b2(int b) {
	check_positive({b});
	SkewShape s = make_skew(rectangle(2, b));
	IdealLattice L = IdealLattice::build(skew_poset(s));
	std::vector<Relation> covers;
	for(const auto& e : L.hasse()) {
		covers.emplace_back(static_cast<int>(e.lower), static_cast<int>(e.upper));
	}
	std::vector<std::string> labels;
	for(std::size_t i = 0; i < L.size(); ++i) {
		labels.push_back(ideal_string(s, L.ideal(i)));
	}
	return Poset::from_covers(static_cast<int>(L.size()), covers, labels);
}

Poset e6_poset() {
	return from_drawing(16, kE6Edges);
}

Poset e7_poset() {
	return from_drawing(27, kE7Edges);
}

const std::vector<int>& e6_kappa() {
	return kE6Kappa;
}

const std::vector<int>& e7_kappa() {
	return kE7Kappa;
}

Poset build_minuscule(const MinusculeCase& mc) {
	switch(mc.kind) {
	case MinusculeKind::ChainProduct:
		check_positive({mc.a, mc.b});
		return direct_product(chain_poset(mc.a), chain_poset(mc.b));
	case MinusculeKind::ShiftedStaircaseJ:
		return build_interval_b2(mc.b);
	case MinusculeKind::Pabcd:
		return build_pabcd(mc.a, mc.b, mc.c, mc.d);
	case MinusculeKind::E6:
		return e6_poset();
	case MinusculeKind::E7:
		return e7_poset();
	}
	throw InputError("unknown minuscule case");
}

std::optional<std::size_t> check_kappa_identity(const IdealLattice& L, const std::vector<int>& kappa, int scale,
                                                int constant) {
	int n = L.base().size();
	if(static_cast<int>(kappa.size()) != n) {
		throw InputError("kappa has " + std::to_string(kappa.size()) + " entries for " + std::to_string(n) +
		                 " elements");
	}
	for(std::size_t i = 0; i < L.size(); ++i) {
		long v = long(scale) * L.ddeg(i);
		for(int p = 0; p < n; ++p) {
			if(L.toggle_out(p, i)) {
				v += kappa[p];
			}
			if(L.toggle_in(p, i)) {
				v -= kappa[p];
			}
		}
		if(v != constant) {
			return i;
		}
	}
	return std::nullopt;
}

KappaReport verify_e6_certificate() {
	return verify_kappa("E6", e6_poset(), kE6Kappa, 3, 4);
}

KappaReport verify_e7_certificate() {
	return verify_kappa("E7", e7_poset(), kE7Kappa, 2, 3);
}

Poset minuscule_as_lattice_of(const MinusculeCase& mc) {
	switch(mc.kind) {
	case MinusculeKind::ChainProduct:
		check_positive({mc.a, mc.b});
		return disjoint_union(chain_poset(mc.a - 1), chain_poset(mc.b - 1));
	case MinusculeKind::ShiftedStaircaseJ:
		check_positive({mc.b});
		return skew_poset(make_skew(rectangle(2, mc.b)));
	case MinusculeKind::Pabcd:
		if(mc.b != 1 || mc.c != 1 || mc.a != mc.d) {
			throw InputError(mc.name() + " is not minuscule");
		}
		check_positive({mc.a});
		if(mc.a == 1) {
			return antichain_poset(2);
		}
		return build_pabcd(mc.a - 1, 1, 1, mc.a - 1);
	case MinusculeKind::E6:
		return shifted_poset(make_shifted(staircase(4)));
	case MinusculeKind::E7:
		return e6_poset();
	}
	throw InputError("unknown minuscule case");
}

std::vector<MinusculeRow> verify_minuscule_cases(std::size_t budget, const MinusculeLimits& lim) {
	std::vector<MinusculeCase> cases;
	for(int a = 1; a <= lim.ab; ++a) {
		for(int b = a; b <= lim.ab; ++b) {
			cases.push_back(MinusculeCase::chain_product(a, b));
		}
	}
	for(int b = 1; b <= lim.b2; ++b) {
		cases.push_back(MinusculeCase::interval_b2(b));
	}
	for(int a = 1; a <= lim.pa11a; ++a) {
		cases.push_back(MinusculeCase::pa11a(a));
	}
	cases.push_back(MinusculeCase::e6());
	if(lim.e7) {
		cases.push_back(MinusculeCase::e7());
	}

	std::vector<MinusculeRow> rows;
	for(const auto& mc : cases) {
		Poset P = build_minuscule(mc);
		// J(P): constant must be #P/(r+2)
		MinusculeRow r1;
		r1.name = mc.name();
		r1.of_lattice = true;
		r1.expected = Rational(P.size(), graded_top_rank(P) + 2);
		r1.expected.canonicalize();
		try {
			IdealLattice L = IdealLattice::build(P, budget);
			r1.ideals = L.size();
			if(auto cert = certify_tcde(L)) {
				r1.c = cert->c;
			}
		} catch(const BudgetExceeded&) {
			r1.budget_exceeded = true;
		}
		rows.push_back(r1);

		// P itself, realized as J(Q)
		MinusculeRow r2;
		r2.name = mc.name();
		r2.of_lattice = false;
		r2.expected = cde_report(P, false).edge_density;
		try {
			IdealLattice L = IdealLattice::build(minuscule_as_lattice_of(mc), budget);
			r2.ideals = L.size();
			r2.isomorphic = is_isomorphic(L.as_poset(), P);
			if(auto cert = certify_tcde(L)) {
				r2.c = cert->c;
			}
		} catch(const BudgetExceeded&) {
			r2.budget_exceeded = true;
		}
		rows.push_back(r2);
	}
	return rows;
}

MinusculeCase parse_minuscule_literal(const std::string& text) {
	const std::string prefix = "minuscule:";
	if(text.rfind(prefix, 0) != 0) {
		throw InputError("family literal must start with 'minuscule:': " + text);
	}
	std::string rest = text.substr(prefix.size());
	if(rest == "E6" || rest == "e6") {
		return MinusculeCase::e6();
	}
	if(rest == "E7" || rest == "e7") {
		return MinusculeCase::e7();
	}
	auto colon = rest.find(':');
	if(colon == std::string::npos) {
		throw InputError("bad minuscule literal: " + text);
	}
	std::string tag = rest.substr(0, colon), args = rest.substr(colon + 1);
	auto num = [&](const std::string& s) {
		try {
			std::size_t used = 0;
			int v = std::stoi(s, &used);
			if(used != s.size()) {
				throw InputError("");
			}
			return v;
		} catch(const std::exception&) {
			throw InputError("bad number '" + s + "' in " + text);
		}
	};
	if(tag == "axb") {
		auto x = args.find('x');
		if(x == std::string::npos) {
			throw InputError("expected AxB in " + text);
		}
		int a = num(args.substr(0, x)), b = num(args.substr(x + 1));
		check_positive({a, b});
		return MinusculeCase::chain_product(a, b);
	}
	if(tag == "b2") {
		int b = num(args);
		check_positive({b});
		return MinusculeCase::interval_b2(b);
	}
	if(tag == "pa11a") {
		int a = num(args);
		check_positive({a});
		return MinusculeCase::pa11a(a);
	}
	if(tag == "pabcd") {
		Partition v = parse_parts(args);
		if(v.size() != 4) {
			throw InputError("pabcd needs four parameters: " + text);
		}
		check_positive({v[0], v[1], v[2], v[3]});
		return MinusculeCase::pabcd(v[0], v[1], v[2], v[3]);
	}
	throw InputError("unknown minuscule family '" + tag + "'");
}

}  // namespace cde
