#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cde/lattice.hpp"
#include "cde/poset.hpp"
#include "cde/rational.hpp"

namespace cde {

using Partition = std::vector<int>;

// Matrix coordinates, 1-based: [1,1] is the northwestern-most box.
struct Box {
	int i = 0, j = 0;
	bool operator==(const Box&) const = default;
};

bool is_partition(const Partition& p);
bool is_strict(const Partition& p);
int partition_size(const Partition& p);
std::string partition_string(const Partition& p);

Partition staircase(int d);                   // delta_d
Partition rectangle(int a, int b);            // b^a
Partition stretch(const Partition& p, int a, int b);  // each box becomes an a x b block

// Skew shape translated so that its rows are 1..a and its leftmost box sits in column 1.
struct SkewShape {
	Partition outer, inner;  // same length a
	int a = 0, b = 0;
	std::vector<Box> boxes;  // row-major
	bool connected = false;

	int size() const { return static_cast<int>(boxes.size()); }
	int index(int i, int j) const;  // -1 when [i,j] is not a box
	std::string literal() const;

	std::vector<int> row_start_;
};

SkewShape make_skew(Partition outer, Partition inner = {});

struct ShiftedShape {
	Partition lambda;
	std::vector<Box> boxes;  // row-major; row i holds columns i..i+lambda_i-1

	int size() const { return static_cast<int>(boxes.size()); }
	int length() const { return static_cast<int>(lambda.size()); }
	int index(int i, int j) const;
	std::string literal() const;

	std::vector<int> row_start_;
};

ShiftedShape make_shifted(Partition lambda);

// Element ids are box indices; labels "[i,j]".
Poset skew_poset(const SkewShape& s);
Poset shifted_poset(const ShiftedShape& s);

// Row lengths of the ideal as a partition containing the inner shape (skew) or as a strict partition.
Partition ideal_partition(const SkewShape& s, Mask ideal);
Partition ideal_partition(const ShiftedShape& s, Mask ideal);
std::string ideal_string(const SkewShape& s, Mask ideal);
std::string ideal_string(const ShiftedShape& s, Mask ideal);
// Debug picture: '#' inside the ideal, '.' outside, ' ' off the shape.
std::string render_ideal(const SkewShape& s, Mask ideal);
std::string render_ideal(const ShiftedShape& s, Mask ideal);

// Lattice points (i,j): i counts horizontal lines from the top, j vertical lines from the left.
enum class Dir { N, E, W };
struct Step {
	int i, j;  // starting point
	Dir dir;
	bool operator==(const Step&) const = default;
};
using LatticePath = std::vector<Step>;

LatticePath lattice_path(const SkewShape& s, const Partition& rho);
LatticePath lattice_path(const ShiftedShape& s, const Partition& rho);

enum class CornerKind { NW, SE };
struct Corner {
	CornerKind kind;
	int i, j;  // where the two steps meet
	bool operator==(const Corner&) const = default;
};

std::vector<Corner> corners(const SkewShape& s);
std::vector<Corner> corners(const ShiftedShape& s);
bool path_contains(const LatticePath& path, const Corner& c);
// Corners strictly northwest or strictly southeast of the centre of [i,j].
std::vector<Corner> attacked_corners(const SkewShape& s, int i, int j);
// Corners strictly southeast of the centre of [i,j].
std::vector<Corner> attacked_corners(const ShiftedShape& s, int i, int j);

// Throws InputError for disconnected shapes.
bool is_balanced(const SkewShape& s);

// Statistics on J(P) where L was built from skew_poset(s) / shifted_poset(s).
Statistic rook(const IdealLattice& L, const SkewShape& s, int i, int j);
Statistic corner_count(const IdealLattice& L, const SkewShape& s, int i, int j);
Statistic rook(const IdealLattice& L, const ShiftedShape& s, int i, int j);
Statistic corner_count(const IdealLattice& L, const ShiftedShape& s, int i, int j);

enum class ShiftedType { None, Type1, Type2, Trapezoid };
struct ShiftedClass {
	ShiftedType type = ShiftedType::None;
	int n = 0, k = 0;
	Partition nu;
};
std::string shifted_type_name(ShiftedType t);
ShiftedClass classify_shifted_balanced(const Partition& lambda);
// (n+1+k)/4, n/2 or |lambda|/(lambda_1+1); nothing for None.
std::optional<Rational> predicted_density(const ShiftedClass& c, const Partition& lambda);

// r per box index.
using RookPlacement = std::vector<Rational>;
// Rows sum to b, columns to a, and (balanced shapes) every corner sum vanishes. Exact solve.
std::optional<RookPlacement> rook_placement(const SkewShape& s);
struct PlacementCheck {
	bool rows = false, columns = false, corners = false;
	bool ok() const { return rows && columns && corners; }
};
PlacementCheck check_rook_placement(const SkewShape& s, const RookPlacement& r);

// Explicit construction for Type1/Type2 shapes; throws InputError otherwise.
RookPlacement shifted_rook_placement(const ShiftedShape& s, const ShiftedClass& c);
struct ShiftedPlacementCheck {
	bool a = false, b = false, c = false;
	Rational total;
	bool ok() const { return a && b && c; }
};
ShiftedPlacementCheck check_shifted_placement(const ShiftedShape& s, const RookPlacement& r);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> strict_partitions_of(int n);
// Normalized skew shapes with 1..max_boxes boxes and no empty rows or columns.
std::vector<SkewShape> skew_shapes_up_to(int max_boxes, bool connected_only);

// "skew:4,3,3,3/2,2", "straight:3,2", "shifted:3,2,1"
struct ShapeLiteral {
	bool shifted = false;
	SkewShape skew;
	ShiftedShape shift;
	Poset poset() const;
	std::string literal() const;
	std::string ideal_string(Mask m) const;
};
ShapeLiteral parse_shape_literal(const std::string& text);
Partition parse_parts(const std::string& text);

}  // namespace cde
