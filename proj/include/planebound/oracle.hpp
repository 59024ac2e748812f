#pragma once

#include <bitset>
#include <istream>
#include <map>
#include <utility>
#include <vector>

#include "planebound/exact_matrix.hpp"

#include "json.hpp"

namespace planebound {

constexpr std::size_t kMaxOracleEdges = 128;
using EdgeMask = std::bitset<kMaxOracleEdges>;

struct Point {
    Rational x, y;
};

/// Combinatorial model of a structured point set: admissible edges plus a
/// symmetric crossing relation, with optional exact coordinates used only
/// to validate the combinatorics geometrically.
struct PointConfig {
    std::size_t n = 0;
    std::vector<std::pair<int, int>> edges;          // lexicographic, i < j
    std::vector<EdgeMask> conflicts;                 // conflicts[e] = edges crossing e
    std::vector<std::pair<int, int>> pocket_ranges;  // closed index ranges (chain configs)
    std::vector<Point> coords;                       // empty or size n
};

/// n points in convex position; admissible edges are all non-consecutive
/// pairs, which leaves the closing pair {p1, pn} admissible. Crossing iff
/// the index pairs strictly interleave.
PointConfig convex_config(int n);

/// A single pocket: k+2 convex points v0..v_{k+1}, non-consecutive pairs
/// admissible including the chord v0 v_{k+1}.
PointConfig pocket_config(int k);

/// Outer part of a chain with the given pocket sizes: z = 1 + sum(k_i + 1)
/// vertices; an edge is admissible iff non-consecutive and not contained in
/// a single pocket's closed index range.
PointConfig zigzag_outer_config(const std::vector<int>& pocket_sizes);

Integer count_crossing_free(const PointConfig& cfg);
DegreeVector degree_partition(const PointConfig& cfg, int root);

/// Counts p_t of crossing-free pocket graphs covering exactly t inner
/// vertices, where an inner vertex v is covered iff some present edge
/// {i, j} has i < v < j.
struct CoverageCensus {
    int k = 0;
    std::map<int, Integer> counts;  // t -> p_t, t = 0..k
    Integer total() const;
};
CoverageCensus coverage_census(int k);

// Exact geometric predicates on rational coordinates.
int orientation(const Point& a, const Point& b, const Point& c);  // sign of cross product
bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s);

/// True iff the declared crossing relation equals the geometric one on the
/// config's coordinates. Throws if coordinates are missing.
bool verify_coordinates(const PointConfig& cfg);

/// A concrete two-chain instance with exact coordinates.
struct ZigzagInstance {
    std::vector<int> pocket_sizes;
    std::vector<Point> lower, upper;
};

/// Full geometric validation of a chain instance: crossing fidelity of both
/// outer parts, pocket flatness (inner points on the outer side of their
/// chord, pocket convexity, no segment crossing a chain edge), mutual
/// visibility across the chains, and covering-edge semantics.
bool verify_coordinates(const ZigzagInstance& zi);

/// Reads lines of "x_num/x_den y_num/y_den"; '#' starts a comment.
std::vector<Point> parse_rational_points(std::istream& in);

nlohmann::ordered_json to_json(const CoverageCensus& census);

}  // namespace planebound
