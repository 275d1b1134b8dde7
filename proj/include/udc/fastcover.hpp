#pragma once

// FastCover and its two heuristic refinements. All three make a single pass
// over the points in input order, hashing each point to its sqrt(2) grid cell.

#include <span>
#include <unordered_map>

#include "udc/geom.hpp"

namespace udc {

/// Placed grid-disks keyed by cell, with the bounding box of the points
/// assigned to each one.
using DiskTable = std::unordered_map<GridKey, BBox, GridKeyHash>;

enum class Direction { north, south, east, west };

/// One disk per distinct nonempty cell, centered on the cell's grid-disk.
/// Expected O(n) time, O(s) extra space.
Cover fast_cover(std::span<const Point> points);

/// True iff p lies outside the inner square alpha(k) on the side facing
/// `dir`, i.e. the neighbouring grid-disk in that direction could cover p.
/// A false result proves it does not. Requires k == cell_of(p).
bool neighbor_threshold_check(Point p, GridKey k, Direction dir);

/// FastCover with the neighbour test: a point whose own grid-disk is absent
/// is first tried against the E, W, N, S neighbours (in that order).
Cover fast_cover_plus(std::span<const Point> points);

/// The FastCover+ pass recording each placed grid-disk's bounding box. A
/// point covered by a neighbour extends that neighbour's box.
DiskTable fast_cover_plus_table(std::span<const Point> points);

/// Coalesces adjacent grid-disks whose combined box has diagonal <= 2.
///
/// Keys are visited in ascending (i, j) order; each unmerged key scans its
/// eight neighbours in row-major order (di, then dj, each -1..1) and merges
/// with the first one that qualifies. Merged disks are centered on the union
/// box and never take part in a later merge. Output lists merged disks in
/// merge order, followed by the untouched grid-disks in key order.
Cover coalesce_pass(DiskTable table);

/// FastCover+ pass followed by coalesce_pass().
Cover fast_cover_pp(std::span<const Point> points);

}  // namespace udc
