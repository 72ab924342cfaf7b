#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cde/distributions.hpp"
#include "cde/lattice.hpp"
#include "cde/linalg.hpp"
#include "cde/poset.hpp"

namespace cde {

struct CdeReport {
	Rational edge_density;
	Rational maxchain_expectation;
	std::vector<Rational> chain_expectations;  // k = 0..longest chain
	bool is_cde = false;
	bool is_mcde = false;
};

// ddeg on a raw poset is the number of lower covers.
Statistic poset_ddeg(const Poset& P);
CdeReport cde_report(const Poset& P, bool with_chains = true);
CdeReport cde_report(const IdealLattice& L, bool with_chains = true);

struct TcdeOptions {
	// Also allow distributions constrained by P(empty) = P(full): adds e_empty - e_full to the span.
	bool equal_empty_full = false;
};

// ddeg = c + sum_p kappa_p (T+_p - T-_p) [+ extra (e_empty - e_full)] pointwise.
struct TcdeCertificate {
	Rational c;
	std::vector<Rational> kappa;
	Rational extra;
};

struct TcdeWitness {
	Distribution mu;
	Rational expectation;
};

std::optional<TcdeCertificate> certify_tcde(const IdealLattice& L, const TcdeOptions& opts = {});
// First failing ideal index, or nothing when the identity holds everywhere.
std::optional<std::size_t> check_certificate(const IdealLattice& L, const TcdeCertificate& cert,
                                             const TcdeOptions& opts = {});

std::optional<TcdeWitness> find_witness(const IdealLattice& L, const TcdeOptions& opts = {});
// Toggle-symmetric (and, with the option, empty/full balanced) and E(ddeg) differs from the edge density.
bool is_valid_witness(const IdealLattice& L, const Distribution& mu, const TcdeOptions& opts = {});

// Basis of the directions v with sum v = 0 and <T_p, v> = 0, at most `limit` vectors.
std::vector<Vector> toggle_symmetric_directions(const IdealLattice& L, const TcdeOptions& opts = {},
                                                std::size_t limit = 64);
// Uniform plus a random combination of directions, scaled to stay nonnegative.
Distribution random_toggle_symmetric(const IdealLattice& L, const std::vector<Vector>& directions,
                                     std::mt19937_64& rng);

enum class Predicate { CDE, MCDE, TCDE };
Predicate parse_predicate(const std::string& s);
std::string predicate_name(Predicate p);

struct ScanRow {
	std::string name;
	std::size_t ideals = 0;
	CdeReport report;
	std::optional<Rational> tcde;
	bool holds = false;
	bool budget_exceeded = false;
};

struct ScanInput {
	std::string name;
	Poset base;
};

// One row per input, analysing J(base).
std::vector<ScanRow> scan_family(const std::vector<ScanInput>& inputs, Predicate pred,
                                 std::size_t budget = kDefaultIdealBudget);

}  // namespace cde
