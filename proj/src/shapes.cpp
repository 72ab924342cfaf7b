#include "cde/shapes.hpp"

#include <algorithm>
#include <sstream>

#include "cde/errors.hpp"
#include "cde/linalg.hpp"

namespace cde {

namespace {

Partition trim(Partition p) {
	while(!p.empty() && p.back() == 0) {
		p.pop_back();
	}
	return p;
}

bool has_step(const LatticePath& path, const Step& s) {
	return std::find(path.begin(), path.end(), s) != path.end();
}

// Corners of the given path whose first step has direction `first` and second `second`.
std::vector<Corner> turns(const LatticePath& path, Dir first, Dir second, CornerKind kind) {
	std::vector<Corner> out;
	for(std::size_t t = 0; t + 1 < path.size(); ++t) {
		if(path[t].dir == first && path[t + 1].dir == second) {
			out.push_back({kind, path[t + 1].i, path[t + 1].j});
		}
	}
	return out;
}

template <class Shape>
Statistic corner_count_impl(const IdealLattice& L, const Shape& s, int i, int j) {
	auto cs = attacked_corners(s, i, j);
	Statistic out(L.size());
	if(cs.empty()) {
		return out;
	}
	for(std::size_t t = 0; t < L.size(); ++t) {
		LatticePath path = lattice_path(s, ideal_partition(s, L.ideal(t)));
		long n = 0;
		for(const auto& c : cs) {
			n += path_contains(path, c);
		}
		out[t] = n;
	}
	return out;
}

void require_box(int idx, int i, int j) {
	if(idx < 0) {
		throw InputError("[" + std::to_string(i) + "," + std::to_string(j) + "] is not a box of the shape");
	}
}

bool balanced_square(const Partition& nu, int k) {
	if(!is_partition(nu)) {
		return false;
	}
	Partition t = trim(nu);
	if(k == 0) {
		return t.empty();
	}
	if(static_cast<int>(t.size()) != k || t[0] != k) {
		return false;
	}
	return is_balanced(make_skew(t));
}

}  // namespace

bool is_partition(const Partition& p) {
	for(std::size_t i = 0; i < p.size(); ++i) {
		if(p[i] < 0 || (i > 0 && p[i] > p[i - 1])) {
			return false;
		}
	}
	return true;
}

bool is_strict(const Partition& p) {
	Partition t = trim(p);
	for(std::size_t i = 0; i < t.size(); ++i) {
		if(t[i] <= 0 || (i > 0 && t[i] >= t[i - 1])) {
			return false;
		}
	}
	return true;
}

int partition_size(const Partition& p) {
	int s = 0;
	for(int x : p) {
		s += x;
	}
	return s;
}

std::string partition_string(const Partition& p) {
	Partition t = trim(p);
	std::string s = "(";
	for(std::size_t i = 0; i < t.size(); ++i) {
		if(i) {
			s += ",";
		}
		s += std::to_string(t[i]);
	}
	return s + ")";
}

Partition staircase(int d) {
	Partition p;
	for(int x = d; x >= 1; --x) {
		p.push_back(x);
	}
	return p;
}

Partition rectangle(int a, int b) {
	return b > 0 ? Partition(a, b) : Partition{};
}

Partition stretch(const Partition& p, int a, int b) {
	Partition out;
	for(int x : trim(p)) {
		for(int r = 0; r < a; ++r) {
			out.push_back(x * b);
		}
	}
	return out;
}

SkewShape make_skew(Partition outer, Partition inner) {
	outer = trim(outer);
	inner = trim(inner);
	if(!is_partition(outer) || !is_partition(inner)) {
		throw InputError("not a partition: " + partition_string(outer) + "/" + partition_string(inner));
	}
	if(inner.size() > outer.size()) {
		throw InputError("inner shape is not contained in outer shape");
	}
	inner.resize(outer.size(), 0);
	for(std::size_t r = 0; r < outer.size(); ++r) {
		if(inner[r] > outer[r]) {
			throw InputError("inner shape is not contained in outer shape");
		}
	}
	std::size_t lo = 0, hi = outer.size();
	while(lo < hi && outer[lo] == inner[lo]) {
		++lo;
	}
	while(hi > lo && outer[hi - 1] == inner[hi - 1]) {
		--hi;
	}
	SkewShape s;
	s.outer.assign(outer.begin() + lo, outer.begin() + hi);
	s.inner.assign(inner.begin() + lo, inner.begin() + hi);
	s.a = static_cast<int>(s.outer.size());
	if(s.a == 0) {
		s.connected = true;
		return s;
	}
	int shift = s.inner.back();
	for(int r = 0; r < s.a; ++r) {
		s.outer[r] -= shift;
		s.inner[r] -= shift;
	}
	s.b = s.outer[0];
	s.connected = true;
	for(int r = 0; r < s.a; ++r) {
		if(s.outer[r] == s.inner[r] || (r + 1 < s.a && s.outer[r + 1] < s.inner[r] + 1)) {
			s.connected = false;
		}
		s.row_start_.push_back(static_cast<int>(s.boxes.size()));
		for(int j = s.inner[r] + 1; j <= s.outer[r]; ++j) {
			s.boxes.push_back({r + 1, j});
		}
	}
	return s;
}

int SkewShape::index(int i, int j) const {
	if(i < 1 || i > a || j <= inner[i - 1] || j > outer[i - 1]) {
		return -1;
	}
	return row_start_[i - 1] + (j - inner[i - 1] - 1);
}

std::string SkewShape::literal() const {
	auto parts = [](const Partition& p) {
		std::string s;
		for(int x : trim(p)) {
			s += (s.empty() ? "" : ",") + std::to_string(x);
		}
		return s;
	};
	if(trim(inner).empty()) {
		return "straight:" + parts(outer);
	}
	return "skew:" + parts(outer) + "/" + parts(inner);
}

ShiftedShape make_shifted(Partition lambda) {
	lambda = trim(lambda);
	if(!is_strict(lambda)) {
		throw InputError("not a strict partition: " + partition_string(lambda));
	}
	ShiftedShape s;
	s.lambda = lambda;
	for(int r = 1; r <= static_cast<int>(lambda.size()); ++r) {
		s.row_start_.push_back(static_cast<int>(s.boxes.size()));
		for(int j = r; j < r + lambda[r - 1]; ++j) {
			s.boxes.push_back({r, j});
		}
	}
	return s;
}

int ShiftedShape::index(int i, int j) const {
	if(i < 1 || i > length() || j < i || j >= i + lambda[i - 1]) {
		return -1;
	}
	return row_start_[i - 1] + (j - i);
}

std::string ShiftedShape::literal() const {
	std::string s = "shifted:";
	for(std::size_t i = 0; i < lambda.size(); ++i) {
		s += (i ? "," : "") + std::to_string(lambda[i]);
	}
	return s;
}

namespace {

template <class Shape>
Poset box_poset(const Shape& s) {
	std::vector<Relation> covers;
	std::vector<std::string> labels;
	for(int p = 0; p < s.size(); ++p) {
		auto [i, j] = s.boxes[p];
		labels.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]");
		if(int q = s.index(i, j + 1); q >= 0) {
			covers.emplace_back(p, q);
		}
		if(int q = s.index(i + 1, j); q >= 0) {
			covers.emplace_back(p, q);
		}
	}
	return Poset::from_covers(s.size(), covers, labels);
}

template <class Shape>
std::string render(const Shape& s, Mask ideal, int rows, int cols) {
	std::string out;
	for(int i = 1; i <= rows; ++i) {
		std::string line;
		for(int j = 1; j <= cols; ++j) {
			int p = s.index(i, j);
			line += p < 0 ? ' ' : (ideal >> p & 1 ? '#' : '.');
		}
		while(!line.empty() && line.back() == ' ') {
			line.pop_back();
		}
		out += line + "\n";
	}
	return out;
}

}  // namespace

Poset skew_poset(const SkewShape& s) { return box_poset(s); }
Poset shifted_poset(const ShiftedShape& s) { return box_poset(s); }

Partition ideal_partition(const SkewShape& s, Mask ideal) {
	Partition rho = s.inner;
	for(int p : members(ideal)) {
		++rho[s.boxes[p].i - 1];
	}
	return rho;
}

Partition ideal_partition(const ShiftedShape& s, Mask ideal) {
	Partition rho(s.length(), 0);
	for(int p : members(ideal)) {
		++rho[s.boxes[p].i - 1];
	}
	return trim(rho);
}

std::string ideal_string(const SkewShape& s, Mask ideal) {
	Partition rho = ideal_partition(s, ideal);
	if(trim(s.inner).empty()) {
		return partition_string(rho);
	}
	return partition_string(rho) + "/" + partition_string(s.inner);
}

std::string ideal_string(const ShiftedShape& s, Mask ideal) {
	return partition_string(ideal_partition(s, ideal));
}

std::string render_ideal(const SkewShape& s, Mask ideal) { return render(s, ideal, s.a, s.b); }

std::string render_ideal(const ShiftedShape& s, Mask ideal) {
	return render(s, ideal, s.length(), s.lambda.empty() ? 0 : s.lambda[0]);
}

LatticePath lattice_path(const SkewShape& s, const Partition& rho) {
	LatticePath path;
	int i = s.a, j = 0;
	for(int r = s.a; r >= 1; --r) {
		int target = r - 1 < static_cast<int>(rho.size()) ? rho[r - 1] : 0;
		for(; j < target; ++j) {
			path.push_back({i, j, Dir::E});
		}
		path.push_back({i, j, Dir::N});
		--i;
	}
	for(; j < s.b; ++j) {
		path.push_back({i, j, Dir::E});
	}
	return path;
}

LatticePath lattice_path(const ShiftedShape& s, const Partition& rho) {
	LatticePath path;
	int l = s.length();
	int i = l, j = l;
	for(int r = l; r >= 1; --r) {
		int v = r - 1 < static_cast<int>(rho.size()) ? rho[r - 1] : 0;
		if(v == 0) {
			path.push_back({i, j, Dir::W});
			--j;
		} else {
			for(; j < r + v - 1; ++j) {
				path.push_back({i, j, Dir::E});
			}
		}
		path.push_back({i, j, Dir::N});
		--i;
	}
	int width = l ? s.lambda[0] : 0;
	for(; j < width; ++j) {
		path.push_back({i, j, Dir::E});
	}
	return path;
}

std::vector<Corner> corners(const SkewShape& s) {
	auto out = turns(lattice_path(s, s.inner), Dir::E, Dir::N, CornerKind::NW);
	auto se = turns(lattice_path(s, s.outer), Dir::N, Dir::E, CornerKind::SE);
	out.insert(out.end(), se.begin(), se.end());
	return out;
}

std::vector<Corner> corners(const ShiftedShape& s) {
	return turns(lattice_path(s, s.lambda), Dir::N, Dir::E, CornerKind::SE);
}

bool path_contains(const LatticePath& path, const Corner& c) {
	if(c.kind == CornerKind::NW) {
		return has_step(path, {c.i, c.j - 1, Dir::E}) && has_step(path, {c.i, c.j, Dir::N});
	}
	return has_step(path, {c.i + 1, c.j, Dir::N}) && has_step(path, {c.i, c.j, Dir::E});
}

std::vector<Corner> attacked_corners(const SkewShape& s, int i, int j) {
	std::vector<Corner> out;
	for(const auto& c : corners(s)) {
		if((c.i <= i - 1 && c.j <= j - 1) || (c.i >= i && c.j >= j)) {
			out.push_back(c);
		}
	}
	return out;
}

std::vector<Corner> attacked_corners(const ShiftedShape& s, int i, int j) {
	std::vector<Corner> out;
	for(const auto& c : corners(s)) {
		if(c.i >= i && c.j >= j) {
			out.push_back(c);
		}
	}
	return out;
}

bool is_balanced(const SkewShape& s) {
	if(!s.connected) {
		throw InputError("balancedness is only defined for connected skew shapes");
	}
	for(const auto& c : corners(s)) {
		if(s.b * c.i + s.a * c.j != s.a * s.b) {
			return false;
		}
	}
	return true;
}

Statistic rook(const IdealLattice& L, const SkewShape& s, int i, int j) {
	require_box(s.index(i, j), i, j);
	Statistic out(L.size());
	for(std::size_t t = 0; t < L.size(); ++t) {
		long v = 0;
		for(int p = 0; p < s.size(); ++p) {
			auto [x, y] = s.boxes[p];
			bool in = L.toggle_in(p, t), rm = L.toggle_out(p, t);
			if(x <= i && y <= j) v += in;
			if(x >= i && y >= j) v += rm;
			if(x < i && y < j) v -= rm;
			if(x > i && y > j) v -= in;
		}
		out[t] = v;
	}
	return out;
}

Statistic corner_count(const IdealLattice& L, const SkewShape& s, int i, int j) {
	require_box(s.index(i, j), i, j);
	return corner_count_impl(L, s, i, j);
}

Statistic rook(const IdealLattice& L, const ShiftedShape& s, int i, int j) {
	require_box(s.index(i, j), i, j);
	Statistic out(L.size());
	for(std::size_t t = 0; t < L.size(); ++t) {
		long v = 0;
		for(int p = 0; p < s.size(); ++p) {
			auto [x, y] = s.boxes[p];
			bool in = L.toggle_in(p, t), rm = L.toggle_out(p, t);
			if(x <= i && y <= j) v += in;
			if(x >= i && y >= j) v += rm;
			if(x < i && y < j && x < y) v -= rm;
			if(x > i && y > j && x < y) v -= in;
		}
		out[t] = v;
	}
	return out;
}

Statistic corner_count(const IdealLattice& L, const ShiftedShape& s, int i, int j) {
	require_box(s.index(i, j), i, j);
	return corner_count_impl(L, s, i, j);
}

std::string shifted_type_name(ShiftedType t) {
	switch(t) {
	case ShiftedType::Type1:
		return "type1";
	case ShiftedType::Type2:
		return "type2";
	case ShiftedType::Trapezoid:
		return "trapezoid";
	case ShiftedType::None:
		break;
	}
	return "none";
}

ShiftedClass classify_shifted_balanced(const Partition& lambda_in) {
	Partition lambda = trim(lambda_in);
	if(!is_strict(lambda)) {
		throw InputError("not a strict partition: " + partition_string(lambda));
	}
	ShiftedClass out;
	int n = static_cast<int>(lambda.size());
	if(n == 0) {
		return out;
	}
	Partition base(n);
	for(int i = 0; i < n; ++i) {
		base[i] = lambda[i] - (n - i);
	}
	for(int k = 0; k < n; ++k) {
		if(balanced_square(base, k)) {
			out = {ShiftedType::Type1, n, k, trim(base)};
			return out;
		}
	}
	for(int k = 0; k < n; ++k) {
		Partition nu = base;
		for(int& x : nu) {
			x -= n - 1 - k;
		}
		if(balanced_square(nu, k)) {
			out = {ShiftedType::Type2, n, k, trim(nu)};
			return out;
		}
	}
	// (m, m-2, ..., m-2k) with k < m/2
	int m = lambda[0];
	bool trap = 2 * (n - 1) < m;
	for(int i = 0; i < n && trap; ++i) {
		trap = lambda[i] == m - 2 * i;
	}
	if(trap) {
		out = {ShiftedType::Trapezoid, m, n - 1, {}};
	}
	return out;
}

std::optional<Rational> predicted_density(const ShiftedClass& c, const Partition& lambda) {
	switch(c.type) {
	case ShiftedType::Type1:
		return fraction(c.n + 1 + c.k, 4);
	case ShiftedType::Type2:
		return fraction(c.n, 2);
	case ShiftedType::Trapezoid: {
		Rational q(partition_size(lambda), c.n + 1);
		q.canonicalize();
		return q;
	}
	case ShiftedType::None:
		break;
	}
	return std::nullopt;
}

std::optional<RookPlacement> rook_placement(const SkewShape& s) {
	if(!s.connected) {
		throw InputError("rook placement needs a connected skew shape");
	}
	int N = s.size();
	Matrix A;
	Vector rhs;
	for(int i = 1; i <= s.a; ++i) {
		Vector row(N);
		for(int p = 0; p < N; ++p) {
			row[p] = s.boxes[p].i == i ? 1 : 0;
		}
		A.push_back(std::move(row));
		rhs.push_back(s.b);
	}
	for(int j = 1; j <= s.b; ++j) {
		Vector row(N);
		for(int p = 0; p < N; ++p) {
			row[p] = s.boxes[p].j == j ? 1 : 0;
		}
		A.push_back(std::move(row));
		rhs.push_back(s.a);
	}
	if(is_balanced(s)) {
		for(const auto& c : corners(s)) {
			Vector row(N);
			for(int p = 0; p < N; ++p) {
				auto cs = attacked_corners(s, s.boxes[p].i, s.boxes[p].j);
				row[p] = std::find(cs.begin(), cs.end(), c) != cs.end() ? 1 : 0;
			}
			A.push_back(std::move(row));
			rhs.push_back(0);
		}
	}
	auto x = solve(A, rhs);
	if(!x) {
		return std::nullopt;
	}
	return *x;
}

PlacementCheck check_rook_placement(const SkewShape& s, const RookPlacement& r) {
	if(static_cast<int>(r.size()) != s.size()) {
		throw InputError("placement size does not match the shape");
	}
	PlacementCheck out;
	std::vector<Rational> rows(s.a + 1), cols(s.b + 1);
	for(int p = 0; p < s.size(); ++p) {
		rows[s.boxes[p].i] += r[p];
		cols[s.boxes[p].j] += r[p];
	}
	out.rows = std::all_of(rows.begin() + 1, rows.end(), [&](const Rational& x) { return x == s.b; });
	out.columns = std::all_of(cols.begin() + 1, cols.end(), [&](const Rational& x) { return x == s.a; });
	out.corners = true;
	for(const auto& c : corners(s)) {
		Rational sum = 0;
		for(int p = 0; p < s.size(); ++p) {
			auto cs = attacked_corners(s, s.boxes[p].i, s.boxes[p].j);
			if(std::find(cs.begin(), cs.end(), c) != cs.end()) {
				sum += r[p];
			}
		}
		out.corners = out.corners && sum == 0;
	}
	return out;
}

RookPlacement shifted_rook_placement(const ShiftedShape& s, const ShiftedClass& c) {
	if(c.type != ShiftedType::Type1 && c.type != ShiftedType::Type2) {
		throw InputError("shifted rook placement needs a Type1 or Type2 shape");
	}
	int n = c.n, k = c.k, l1 = s.lambda[0];
	RookPlacement r(s.size());
	auto add = [&](int i, int j, int v) {
		int p = s.index(i, j);
		require_box(p, i, j);
		r[p] += v;
	};
	for(int i = 1; i <= k; ++i) {
		add(i, i, 1 + 2 * i - l1);
		add(i, i + 1, l1 - 1 - 2 * i);
	}
	for(int i = k + 1; i <= n - 1; ++i) {
		add(i, i, 3 + 2 * k - l1);
		add(i, i + 1, l1 - 1 - 2 * k);
	}
	add(n, n, 3 + 2 * k - l1);
	if(c.type == ShiftedType::Type2) {
		for(int i = 1; i <= n - 1 - k; ++i) {
			add(n, n + i, 2);
		}
	}
	for(int i = 1; i <= k; ++i) {
		add(i, l1 + 1 - i, 2);
	}
	return r;
}

ShiftedPlacementCheck check_shifted_placement(const ShiftedShape& s, const RookPlacement& r) {
	if(static_cast<int>(r.size()) != s.size()) {
		throw InputError("placement size does not match the shape");
	}
	ShiftedPlacementCheck out;
	int width = s.lambda.empty() ? 0 : s.lambda[0];
	std::vector<Rational> rows(s.length() + 2), cols(width + 2);
	for(int p = 0; p < s.size(); ++p) {
		rows[s.boxes[p].i] += r[p];
		cols[s.boxes[p].j] += r[p];
		out.total += r[p];
	}
	out.a = true;
	for(const auto& [i, j] : s.boxes) {
		if(i != j && (rows[i] != 2 || cols[j] != 2)) {
			out.a = false;
		}
	}
	out.b = true;
	for(int d = 1; d <= s.length(); ++d) {
		Rational sum = 0;
		for(int p = 0; p < s.size(); ++p) {
			auto [i, j] = s.boxes[p];
			if(i <= d && j <= d) sum += r[p];
			if(i >= d && j >= d) sum += r[p];
		}
		out.b = out.b && sum == 4;
	}
	out.c = true;
	for(const auto& c : corners(s)) {
		Rational sum = 0;
		for(int p = 0; p < s.size(); ++p) {
			auto cs = attacked_corners(s, s.boxes[p].i, s.boxes[p].j);
			if(std::find(cs.begin(), cs.end(), c) != cs.end()) {
				sum += r[p];
			}
		}
		out.c = out.c && sum == 0;
	}
	return out;
}

namespace {

void partitions_rec(int left, int maxpart, bool strict, Partition& cur, std::vector<Partition>& out) {
	if(left == 0) {
		out.push_back(cur);
		return;
	}
	for(int x = std::min(left, maxpart); x >= 1; --x) {
		cur.push_back(x);
		partitions_rec(left - x, strict ? x - 1 : x, strict, cur, out);
		cur.pop_back();
	}
}

void skew_rec(int left, bool connected_only, Partition& outer, Partition& inner, std::vector<SkewShape>& out) {
	// Last placed row has inner 0: the shape may end here.
	if(!inner.empty() && inner.back() == 0) {
		out.push_back(make_skew(outer, inner));
	}
	if(left == 0) {
		return;
	}
	int first = outer.empty();
	int prev_in = first ? left : inner.back();
	for(int nu = 0; nu <= prev_in; ++nu) {
		int lo = std::max(nu + 1, first ? 1 : prev_in + (connected_only ? 1 : 0));
		int hi = first ? nu + left : std::min(outer.back(), nu + left);
		for(int la = lo; la <= hi; ++la) {
			outer.push_back(la);
			inner.push_back(nu);
			skew_rec(left - (la - nu), connected_only, outer, inner, out);
			outer.pop_back();
			inner.pop_back();
		}
	}
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
	std::vector<Partition> out;
	Partition cur;
	partitions_rec(n, n, false, cur, out);
	return out;
}

std::vector<Partition> strict_partitions_of(int n) {
	std::vector<Partition> out;
	Partition cur;
	partitions_rec(n, n, true, cur, out);
	return out;
}

std::vector<SkewShape> skew_shapes_up_to(int max_boxes, bool connected_only) {
	std::vector<SkewShape> out;
	Partition outer, inner;
	skew_rec(max_boxes, connected_only, outer, inner, out);
	return out;
}

Partition parse_parts(const std::string& text) {
	Partition p;
	if(text.empty()) {
		return p;
	}
	std::stringstream ss(text);
	std::string item;
	while(std::getline(ss, item, ',')) {
		try {
			std::size_t used = 0;
			int v = std::stoi(item, &used);
			if(used != item.size() || v < 0) {
				throw InputError("");
			}
			p.push_back(v);
		} catch(const std::exception&) {
			throw InputError("bad partition part '" + item + "' in '" + text + "'");
		}
	}
	return p;
}

ShapeLiteral parse_shape_literal(const std::string& text) {
	auto colon = text.find(':');
	if(colon == std::string::npos) {
		throw InputError("shape literal needs a kind prefix (skew:, straight:, shifted:), got '" + text + "'");
	}
	std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
	ShapeLiteral lit;
	if(kind == "shifted") {
		lit.shifted = true;
		lit.shift = make_shifted(parse_parts(body));
	} else if(kind == "straight") {
		lit.skew = make_skew(parse_parts(body));
	} else if(kind == "skew") {
		auto slash = body.find('/');
		if(slash == std::string::npos) {
			throw InputError("skew literal needs outer/inner, got '" + text + "'");
		}
		lit.skew = make_skew(parse_parts(body.substr(0, slash)), parse_parts(body.substr(slash + 1)));
	} else {
		throw InputError("unknown shape kind '" + kind + "'");
	}
	return lit;
}

Poset ShapeLiteral::poset() const {
	return shifted ? shifted_poset(shift) : skew_poset(skew);
}

std::string ShapeLiteral::literal() const {
	return shifted ? shift.literal() : skew.literal();
}

std::string ShapeLiteral::ideal_string(Mask m) const {
	return shifted ? cde::ideal_string(shift, m) : cde::ideal_string(skew, m);
}

}  // namespace cde
