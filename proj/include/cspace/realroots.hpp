// Exact real-point extraction and counting for zero-dimensional ideals, and
// the documented real-dimension probe for positive-dimensional ones.
#pragma once

#include <cstdint>
#include <optional>

#include "cspace/groebner.hpp"

namespace cspace {

struct RationalPoint {
    std::vector<Rat> coords;  // one per ring variable

    bool operator==(const RationalPoint& o) const { return coords == o.coords; }
    std::string str(const RingPtr& ring) const;
};

struct ZeroDimSolution {
    std::vector<RationalPoint> rational_points;  // sorted lexicographically
    int real_count = 0;     // distinct real solutions
    int complex_count = 0;  // dim_Q of the quotient ring (with multiplicity)
    bool irrational_reals = false;  // real solutions with non-rational coordinates exist
    std::uint64_t seed = 0;
};

// Requires dimension(I) == 0 (throws not_zero_dimensional otherwise). Every
// returned point satisfies all generators exactly (re-verified).
ZeroDimSolution solve_zero_dim(const Ideal& I, std::uint64_t seed, Budget budget);

enum class Isolated { Yes, No, Unknown };

struct RealDimProbeResult {
    int complex_dim = 0;
    Isolated real_points_isolated = Isolated::Unknown;
    int slices = 0;
    std::uint64_t seed = 0;
    // heuristic evidence, not a decision procedure; stated in all reports
};

// Slices V(I) with seeded random rational hyperplanes down to dimension zero;
// "isolated" evidence = every slice has positive complex count but no real
// point. 5 slices by default.
RealDimProbeResult real_dim_probe(const Ideal& I, std::uint64_t seed, int slices, Budget budget);

}  // namespace cspace
