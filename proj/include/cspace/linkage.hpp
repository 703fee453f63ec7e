// Mechanism descriptions (DH rows or explicit axes, one or more loops) and
// their constraint ideals: closure polynomial extraction, Rabinowitsch
// saturation, Moebius transformation, multi-loop summation, and the
// line-symmetric 6R constructor.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "cspace/dualquat.hpp"
#include "cspace/groebner.hpp"

namespace cspace {

struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DHRow {
    Rat w;  // tan(phi/2)
    Rat d;  // orthogonal distance (may be negative)
    Rat s;  // offset
};

struct MoebiusMap {
    // joint factor becomes (c t + d) - (a t + b) h
    Rat a, b, c, d;

    bool nondegenerate() const { return !is_zero(a * d - b * c); }
    static MoebiusMap identity() { return MoebiusMap{Rat(1), Rat(0), Rat(0), Rat(1)}; }
    bool is_identity() const {
        return a == Rat(1) && is_zero(b) && is_zero(c) && d == Rat(1);
    }
    // inverse image of a transformed joint value: t with (a t + b)/(c t + d)
    // equal to the given value; empty when the preimage is the 180-degree pole
    std::optional<Rat> preimage(const Rat& value) const;
};

struct Joint {
    std::optional<DHRow> dh;
    std::optional<DQ> axis;  // rotation axis, h^2 == -1 enforced at load
};

struct MechanismSpec {
    std::string name;
    std::vector<Joint> joints;
    std::vector<std::vector<int>> loops;  // 0-based joint indices, cycle order
    std::optional<std::vector<MoebiusMap>> maps;  // per joint when present
    std::uint64_t seed = 0;
    std::string moebius_mode = "none";  // none | explicit | random

    std::size_t njoints() const { return joints.size(); }
    void validate() const;
};

// g_i = (1 - (s/2) eps i)(1 - w k)(1 - (d/2) eps k)
DQ dh_to_g(const DHRow& row);

// Joint-variable ring t1..tn for a spec.
RingPtr spec_ring(const MechanismSpec& spec);

// The closure factor of joint j as a dual quaternion over Q[t]: axis form
// (1 - t h) g?  -- axis joints have no g; DH joints contribute (1 - t i) g.
// Moebius maps replace (1 - t h) by (c t + d) - (a t + b) h.
DQPoly closure_factor(const MechanismSpec& spec, int joint, const RingPtr& ring);

// Components i, j, k, eps*i, eps*j, eps*k of the loop closure product
// (components 2,3,4,6,8 of the 8-vector; the projective scale is free and the
// 5th component is redundant by the Study condition).
std::vector<Polynomial> closure_polynomials(const MechanismSpec& spec, std::size_t loop,
                                            const RingPtr& ring);

// The discarded 5th component (eps-scalar), exposed for the redundancy check.
Polynomial closure_fifth_component(const MechanismSpec& spec, std::size_t loop,
                                   const RingPtr& ring);

// Saturation mask of one joint: the strictly real scalar of
// factor * conj(factor), made primitive ((t^2+1) for an untransformed joint).
Polynomial joint_mask(const MechanismSpec& spec, int joint, const RingPtr& ring);

// Split form of the loop closure: parallelism minors of the half-products
// (same saturated ideal as the closure components, far smaller Groebner
// runs). Exposed for the dual-route equality checks in the tests.
std::vector<Polynomial> split_closure_generators(const MechanismSpec& spec, std::size_t loop,
                                                 const RingPtr& ring);

// Constraint ideal of one loop: closure polynomials saturated at the joint
// masks (Rabinowitsch elimination per factor).
Ideal loop_constraint_ideal(const MechanismSpec& spec, std::size_t loop, const RingPtr& ring,
                            Budget budget);

// Sum over all loops.
Ideal constraint_ideal(const MechanismSpec& spec, Budget budget);

// Returns a copy with per-joint Moebius maps attached (throws on ad-bc == 0).
MechanismSpec apply_moebius(const MechanismSpec& spec, std::vector<MoebiusMap> maps);

// Seeded random maps, coefficients p/q with |p| <= 12, q <= 12, nondegeneracy
// by rejection.
std::vector<MoebiusMap> random_moebius_maps(std::size_t njoints, std::uint64_t seed);

// Bricard line-symmetric 6R: axes h1,h2,h3 plus u with u^2 = -1; the second
// triple is h_{3+i} = -u h_i u.
MechanismSpec construct_line_symmetric(const DQ& h1, const DQ& h2, const DQ& h3, const DQ& u);

// Joint values: rational tangent or the 180-degree marker.
struct HalfTurn {};
using JointValue = std::variant<Rat, HalfTurn>;

// World-frame axes of the loop's joints at a configuration, each transformed
// by the product of the preceding closure factors (exact conjugation).
std::vector<DQ> axes_at_configuration(const MechanismSpec& spec, std::size_t loop,
                                      const std::vector<JointValue>& values);

// Axes in the initial configuration (identity), loop order.
std::vector<DQ> axes_at_identity(const MechanismSpec& spec, std::size_t loop);

// --- spec files (TOML-compatible subset) ---------------------------------

MechanismSpec parse_mechanism(const std::string& text);
MechanismSpec load_mechanism_file(const std::string& path);

// The hard-coded linear transformation of the Goldberg 6R example
// (--moebius paper).
std::vector<MoebiusMap> paper_moebius_maps();

}  // namespace cspace
