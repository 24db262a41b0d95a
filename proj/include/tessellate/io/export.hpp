#pragma once

#include <ostream>
#include <string>

#include "tessellate/dynamics/tessellation.hpp"
#include "tessellate/kernels/split_kernel.hpp"

namespace tessellate::io {

/// JSON-lines export: a header record (window, kernel, seed, horizon)
/// followed by one record per maximal polytope
/// {"birth": s, "cell": owner_id, "geometry": [[x,y(,z)],...]}.
void write_jsonl(const dynamics::NestedTessellation& Y,
                 const kernels::SplitKernelSpec& K, std::ostream& os);

/// SVG rendering of a 2D tessellation, maximal segments colored by a
/// birth-time ramp (early blue, late red).
void write_svg(const dynamics::NestedTessellation& Y, std::ostream& os);

void write_jsonl_file(const dynamics::NestedTessellation& Y,
                      const kernels::SplitKernelSpec& K,
                      const std::string& path);
void write_svg_file(const dynamics::NestedTessellation& Y,
                    const std::string& path);

}  // namespace tessellate::io
