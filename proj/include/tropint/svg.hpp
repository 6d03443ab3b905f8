#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropint/intersect.hpp"
#include "tropint/tropical.hpp"

namespace tropint {

struct SvgOptions {
  std::array<Rat, 4> box = {Rat(-10), Rat(10), Rat(-10), Rat(10)};  // xmin xmax ymin ymax
  int size = 760;                                                   // square canvas, px
};

// 2-d curve with its Newton polygon + subdivision inset.
std::string render_hypersurface_svg(const HypersurfaceComplex& h, const SvgOptions& opt);

// Two curves overlaid with stable intersection points scaled by multiplicity.
std::string render_intersection_svg(const HypersurfaceComplex& h1, const HypersurfaceComplex& h2,
                                    const std::vector<IntersectionPoint>& pts,
                                    const SvgOptions& opt);

}  // namespace tropint
