#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "tessellate/geom/ops.hpp"
#include "tessellate/kernels/split_kernel.hpp"
#include "tessellate/measure/driving.hpp"

namespace tessellate::dynamics {

using geom::ConvexPolytope;
using geom::Hyperplane;
using geom::Vec;

inline constexpr std::uint32_t kNoCell = 0xffffffffu;
inline constexpr double kInfTime = std::numeric_limits<double>::infinity();

/// Node of the binary split tree. `death` carries the sampled split time
/// even when it exceeds the horizon (the clock is memoryless, and keeping
/// the pending value makes time restriction reproduce fresh runs exactly).
struct CellNode {
  std::uint32_t id = 0;
  std::uint32_t parent = kNoCell;
  std::array<std::uint32_t, 2> children = {kNoCell, kNoCell};  // plus, minus
  double birth = 0.0;
  double death = kInfTime;
  ConvexPolytope poly;
  std::optional<Hyperplane> split_plane;
  bool frozen = false;

  bool is_leaf() const { return children[0] == kNoCell; }
};

/// (d-1)-dimensional facet inserted by one split, with its birth time.
struct MaximalPolytope {
  ConvexPolytope geometry;
  double birth = 0.0;
  std::uint32_t owner_cell = kNoCell;  // the cell that was split
};

/// Binary split tree of time-marked cells plus the maximal polytopes.
struct NestedTessellation {
  ConvexPolytope window;
  double horizon = 0.0;
  std::vector<CellNode> nodes;
  std::vector<MaximalPolytope> maximal_polytopes;
  std::uint64_t seed = 0;
  std::uint32_t frozen_cells = 0;       // hard-core saturation
  std::uint32_t degenerate_freezes = 0; // resample budget exhausted

  std::vector<std::uint32_t> leaf_ids() const;
};

/// Event-driven recursive split dynamics in the window W up to time t.
/// Each live cell carries an exponential clock with its kernel rate; at
/// expiry the kernel samples the hyperplane and the cell splits. Degenerate
/// cuts are resampled up to 100 times, then the cell freezes.
/// Deterministic given the seed.
NestedTessellation simulate_window(const ConvexPolytope& W,
                                   const kernels::SplitKernelSpec& K,
                                   const measure::DrivingMeasure& L, double t,
                                   std::uint64_t seed);

/// Removes all maximal polytopes and cells born after s; cells alive at s
/// become leaves (their pending death times are preserved).
NestedTessellation time_restrict(const NestedTessellation& Y, double s);

/// Produces i.i.d. tessellation copies for the iteration operation; called
/// once per leaf cell. The copy's window may be the leaf itself or any
/// larger region - facets are clipped to the host cell either way.
using CopyFactory =
    std::function<NestedTessellation(const ConvexPolytope& leaf_cell,
                                     std::size_t leaf_index)>;

/// Local superposition: inserts an independent copy into every leaf cell of
/// the host, clipping copy facets to their host cell and offsetting their
/// birth times by the host horizon.
NestedTessellation iterate(const NestedTessellation& host,
                           const CopyFactory& factory);

/// Leaf containing the probe point; ties on a split plane go to the minus
/// side. Throws OriginOutsideWindow when the probe is not interior.
const CellNode& leaf_containing(const NestedTessellation& Y, const Vec& probe);

/// Leaf containing the origin (window must contain the origin).
const CellNode& zero_cell(const NestedTessellation& Y);

std::vector<const CellNode*> leaf_cells(const NestedTessellation& Y);

}  // namespace tessellate::dynamics
