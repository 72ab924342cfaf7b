#include "cde/cde.hpp"

#include <algorithm>

#include "cde/errors.hpp"

namespace cde {

namespace {

Rational ratio(const Integer& a, const Integer& b) {
	Rational q(a, b);
	q.canonicalize();
	return q;
}

Rational through_expectation(const std::vector<Integer>& through, const Statistic& f) {
	Integer total = 0;
	Rational s = 0;
	for(std::size_t i = 0; i < through.size(); ++i) {
		total += through[i];
		if(f[i] != 0) {
			s += through[i] * f[i];
		}
	}
	return s / total;
}

void fill_chains(CdeReport& r, const Poset& P, const Statistic& dd) {
	int top = longest_chain_length(P);
	for(const ChainCounts& c : chain_counts_upto(P, top)) {
		r.chain_expectations.push_back(through_expectation(c.through, dd));
	}
	r.is_mcde = std::all_of(r.chain_expectations.begin(), r.chain_expectations.end(),
	                        [&](const Rational& x) { return x == r.edge_density; });
}

// Rows: 1, T_p for each p, optionally e_empty - e_full.  Columns: ideals.
Matrix constraint_rows(const IdealLattice& L, const TcdeOptions& opts) {
	std::size_t N = L.size();
	int n = L.base().size();
	Matrix A;
	A.emplace_back(N, Rational(1));
	for(int p = 0; p < n; ++p) {
		Vector row(N);
		for(std::size_t i = 0; i < N; ++i) {
			row[i] = int(L.toggle_in(p, i)) - int(L.toggle_out(p, i));
		}
		A.push_back(std::move(row));
	}
	if(opts.equal_empty_full && N > 1) {
		Vector row(N);
		row[0] = 1;
		row[N - 1] = -1;
		A.push_back(std::move(row));
	}
	return A;
}

Vector free_direction(const Echelon& e, const std::vector<int>& pivot_of, int f) {
	std::size_t N = pivot_of.size();
	Vector v(N);
	v[f] = 1;
	for(std::size_t r = 0; r < e.pivots.size(); ++r) {
		if(e.m[r][f] != 0) {
			v[e.pivots[r]] = -e.m[r][f];
		}
	}
	return v;
}

Distribution step_from_uniform(std::size_t N, const Vector& v, const Rational& share) {
	Rational u = fraction(1, static_cast<long>(N));
	Rational tmax = -1;
	for(const auto& x : v) {
		if(x < 0) {
			Rational t = u / -x;
			if(tmax < 0 || t < tmax) {
				tmax = t;
			}
		}
	}
	Distribution mu(N, u);
	if(tmax < 0) {
		return mu;
	}
	Rational eps = tmax * share;
	for(std::size_t i = 0; i < N; ++i) {
		mu[i] += eps * v[i];
	}
	return mu;
}

}  // namespace

Statistic poset_ddeg(const Poset& P) {
	Statistic s(P.size());
	for(int p = 0; p < P.size(); ++p) {
		s[p] = static_cast<long>(P.lower_covers(p).size());
	}
	return s;
}

CdeReport cde_report(const Poset& P, bool with_chains) {
	if(P.size() == 0) {
		throw InputError("empty poset");
	}
	CdeReport r;
	Statistic dd = poset_ddeg(P);
	r.edge_density = expectation(uniform(P.size()), dd);
	r.maxchain_expectation = through_expectation(maxchain_counts(P).through, dd);
	r.is_cde = r.maxchain_expectation == r.edge_density;
	if(with_chains) {
		fill_chains(r, P, dd);
	}
	return r;
}

CdeReport cde_report(const IdealLattice& L, bool with_chains) {
	std::size_t N = L.size();
	CdeReport r;
	Statistic dd = ddeg_statistic(L);
	r.edge_density = ratio(static_cast<unsigned long>(L.hasse().size()), static_cast<unsigned long>(N));
	// Maximal chains of J(P) go from the empty ideal to P; ideal order is a topological order.
	std::vector<Integer> up(N, 0), down(N, 0);
	up[0] = 1;
	down[N - 1] = 1;
	for(const auto& e : L.hasse()) {
		up[e.upper] += up[e.lower];
	}
	for(auto it = L.hasse().rbegin(); it != L.hasse().rend(); ++it) {
		down[it->lower] += down[it->upper];
	}
	std::vector<Integer> through(N);
	for(std::size_t i = 0; i < N; ++i) {
		through[i] = up[i] * down[i];
	}
	r.maxchain_expectation = through_expectation(through, dd);
	r.is_cde = r.maxchain_expectation == r.edge_density;
	if(with_chains) {
		fill_chains(r, L.as_poset(), dd);
	}
	return r;
}

std::optional<TcdeCertificate> certify_tcde(const IdealLattice& L, const TcdeOptions& opts) {
	std::size_t N = L.size();
	int n = L.base().size();
	Matrix rows = constraint_rows(L, opts);
	std::size_t unknowns = rows.size();
	// Transpose: one equation per ideal.
	Matrix A(N, Vector(unknowns));
	for(std::size_t u = 0; u < unknowns; ++u) {
		for(std::size_t i = 0; i < N; ++i) {
			A[i][u] = rows[u][i];
		}
	}
	auto x = solve(A, ddeg_statistic(L));
	if(!x) {
		return std::nullopt;
	}
	TcdeCertificate cert;
	cert.c = (*x)[0];
	cert.kappa.assign(x->begin() + 1, x->begin() + 1 + n);
	cert.extra = unknowns > static_cast<std::size_t>(n + 1) ? (*x)[n + 1] : Rational(0);
	return cert;
}

std::optional<std::size_t> check_certificate(const IdealLattice& L, const TcdeCertificate& cert,
                                             const TcdeOptions& opts) {
	int n = L.base().size();
	if(static_cast<int>(cert.kappa.size()) != n) {
		throw InputError("certificate has " + std::to_string(cert.kappa.size()) + " coefficients, poset has " +
		                 std::to_string(n) + " elements");
	}
	std::size_t N = L.size();
	for(std::size_t i = 0; i < N; ++i) {
		Rational rhs = cert.c;
		for(int p = 0; p < n; ++p) {
			if(L.toggle_in(p, i)) {
				rhs += cert.kappa[p];
			}
			if(L.toggle_out(p, i)) {
				rhs -= cert.kappa[p];
			}
		}
		if(opts.equal_empty_full && N > 1) {
			if(i == 0) {
				rhs += cert.extra;
			} else if(i == N - 1) {
				rhs -= cert.extra;
			}
		}
		if(rhs != L.ddeg(i)) {
			return i;
		}
	}
	return std::nullopt;
}

std::optional<TcdeWitness> find_witness(const IdealLattice& L, const TcdeOptions& opts) {
	std::size_t N = L.size();
	Echelon e = rref(constraint_rows(L, opts));
	std::vector<int> pivot_of(N, -1);
	for(std::size_t r = 0; r < e.pivots.size(); ++r) {
		pivot_of[e.pivots[r]] = static_cast<int>(r);
	}
	Statistic dd = ddeg_statistic(L);
	for(std::size_t f = 0; f < N; ++f) {
		if(pivot_of[f] >= 0) {
			continue;
		}
		Rational d = dd[f];
		for(std::size_t r = 0; r < e.pivots.size(); ++r) {
			if(e.m[r][f] != 0) {
				d -= dd[e.pivots[r]] * e.m[r][f];
			}
		}
		if(d == 0) {
			continue;
		}
		Vector v = free_direction(e, pivot_of, static_cast<int>(f));
		TcdeWitness w;
		w.mu = step_from_uniform(N, v, fraction(1, 2));
		w.expectation = expectation(w.mu, dd);
		return w;
	}
	return std::nullopt;
}

bool is_valid_witness(const IdealLattice& L, const Distribution& mu, const TcdeOptions& opts) {
	if(mu.size() != L.size() || !is_distribution(mu) || !is_toggle_symmetric(L, mu)) {
		return false;
	}
	if(opts.equal_empty_full && mu.front() != mu.back()) {
		return false;
	}
	Rational density = ratio(static_cast<unsigned long>(L.hasse().size()), static_cast<unsigned long>(L.size()));
	return expectation(mu, ddeg_statistic(L)) != density;
}

std::vector<Vector> toggle_symmetric_directions(const IdealLattice& L, const TcdeOptions& opts,
                                                std::size_t limit) {
	std::size_t N = L.size();
	Echelon e = rref(constraint_rows(L, opts));
	std::vector<int> pivot_of(N, -1);
	for(std::size_t r = 0; r < e.pivots.size(); ++r) {
		pivot_of[e.pivots[r]] = static_cast<int>(r);
	}
	std::vector<Vector> out;
	for(std::size_t f = 0; f < N && out.size() < limit; ++f) {
		if(pivot_of[f] < 0) {
			out.push_back(free_direction(e, pivot_of, static_cast<int>(f)));
		}
	}
	return out;
}

Distribution random_toggle_symmetric(const IdealLattice& L, const std::vector<Vector>& directions,
                                     std::mt19937_64& rng) {
	std::size_t N = L.size();
	Vector v(N);
	std::uniform_int_distribution<int> coef(-3, 3), sixteenths(1, 16);
	for(const auto& d : directions) {
		int a = coef(rng);
		if(a == 0) {
			continue;
		}
		for(std::size_t i = 0; i < N; ++i) {
			if(d[i] != 0) {
				v[i] += a * d[i];
			}
		}
	}
	return step_from_uniform(N, v, fraction(sixteenths(rng), 16));
}

Predicate parse_predicate(const std::string& s) {
	if(s == "cde" || s == "CDE") {
		return Predicate::CDE;
	}
	if(s == "mcde" || s == "mCDE") {
		return Predicate::MCDE;
	}
	if(s == "tcde" || s == "tCDE") {
		return Predicate::TCDE;
	}
	throw InputError("unknown predicate '" + s + "' (expected cde, mcde or tcde)");
}

std::string predicate_name(Predicate p) {
	switch(p) {
	case Predicate::CDE:
		return "cde";
	case Predicate::MCDE:
		return "mcde";
	case Predicate::TCDE:
		return "tcde";
	}
	return "?";
}

std::vector<ScanRow> scan_family(const std::vector<ScanInput>& inputs, Predicate pred, std::size_t budget) {
	std::vector<ScanRow> rows;
	rows.reserve(inputs.size());
	for(const auto& in : inputs) {
		ScanRow row;
		row.name = in.name;
		try {
			IdealLattice L = IdealLattice::build(in.base, budget);
			row.ideals = L.size();
			row.report = cde_report(L, pred == Predicate::MCDE);
			switch(pred) {
			case Predicate::CDE:
				row.holds = row.report.is_cde;
				break;
			case Predicate::MCDE:
				row.holds = row.report.is_mcde;
				break;
			case Predicate::TCDE:
				if(auto cert = certify_tcde(L)) {
					row.tcde = cert->c;
				}
				row.holds = row.tcde.has_value();
				break;
			}
		} catch(const BudgetExceeded&) {
			row.budget_exceeded = true;
		}
		rows.push_back(std::move(row));
	}
	return rows;
}

}  // namespace cde
