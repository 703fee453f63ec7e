#include "cspace/linkage.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cspace {

std::string dq_str(const DQ& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < 8; ++i) {
        if (i) s += ", ";
        s += rat_str(a.c[i]);
    }
    return s + "]";
}

std::optional<Rat> MoebiusMap::preimage(const Rat& value) const {
    // solve (a t + b) / (c t + d) == value  =>  t (a - value c) == value d - b
    Rat denom = a - value * c;
    if (is_zero(denom)) return std::nullopt;
    return (value * d - b) / denom;
}

void MechanismSpec::validate() const {
    if (joints.empty()) throw spec_error(name + ": mechanism has no joints");
    if (loops.empty()) throw spec_error(name + ": mechanism has no loops");
    for (const auto& loop : loops) {
        if (loop.size() < 2) throw spec_error(name + ": loop with fewer than two joints");
        for (int j : loop)
            if (j < 0 || static_cast<std::size_t>(j) >= joints.size())
                throw spec_error(name + ": loop references joint " + std::to_string(j + 1) +
                                 " outside the joint list");
    }
    for (std::size_t j = 0; j < joints.size(); ++j) {
        const Joint& joint = joints[j];
        if (joint.dh.has_value() == joint.axis.has_value())
            throw spec_error(name + ": joint " + std::to_string(j + 1) +
                             " must have exactly one of dh / axis");
        if (joint.axis && !is_rotation_axis(*joint.axis, true))
            throw spec_error(name + ": joint " + std::to_string(j + 1) +
                             " axis is not a normalized rotation axis (h^2 != -1)");
    }
    if (maps) {
        if (maps->size() != joints.size())
            throw spec_error(name + ": moebius map count != joint count");
        for (const auto& m : *maps)
            if (!m.nondegenerate()) throw spec_error(name + ": degenerate moebius map (ad-bc = 0)");
    }
}

DQ dh_to_g(const DHRow& row) {
    DQ f1 = dq_one();  // 1 - (s/2) eps i
    f1.c[5] = -row.s / 2;
    DQ f2 = dq_one();  // 1 - w k
    f2.c[3] = -row.w;
    DQ f3 = dq_one();  // 1 - (d/2) eps k
    f3.c[7] = -row.d / 2;
    return dq_mul(dq_mul(f1, f2), f3);
}

RingPtr spec_ring(const MechanismSpec& spec) { return make_t_ring(spec.njoints()); }

namespace {

DQPoly dq_poly_zero(const RingPtr& ring) {
    DQPoly r;
    for (auto& c : r.c) c = Polynomial::zero(ring);
    return r;
}

// (c t + d) - (a t + b) h  for the joint's rotation part about axis h
DQPoly moebius_factor(const RingPtr& ring, int var, const DQ& h, const MoebiusMap& m) {
    Polynomial t = Polynomial::variable(ring, var);
    Polynomial p = t.scaled(m.c) + Polynomial::constant(ring, m.d);
    Polynomial q = t.scaled(m.a) + Polynomial::constant(ring, m.b);
    DQPoly out = dq_poly_zero(ring);
    out.c[0] = out.c[0] + p;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = out.c[i] - q.scaled(h.c[i]);
    return out;
}

DQ axis_i() {
    DQ h = dq_zero();
    h.c[1] = Rat(1);
    return h;
}

}  // namespace

DQPoly closure_factor(const MechanismSpec& spec, int joint, const RingPtr& ring) {
    const Joint& jt = spec.joints[static_cast<std::size_t>(joint)];
    MoebiusMap m = spec.maps ? (*spec.maps)[static_cast<std::size_t>(joint)]
                             : MoebiusMap::identity();
    if (jt.axis) return moebius_factor(ring, joint, *jt.axis, m);
    DQPoly rot = moebius_factor(ring, joint, axis_i(), m);
    return dq_mul(rot, dq_lift(dh_to_g(*jt.dh), ring));
}

namespace {

DQPoly loop_product(const MechanismSpec& spec, std::size_t loop, const RingPtr& ring) {
    const auto& cycle = spec.loops[loop];
    DQPoly acc = closure_factor(spec, cycle[0], ring);
    for (std::size_t k = 1; k < cycle.size(); ++k)
        acc = dq_mul(acc, closure_factor(spec, cycle[k], ring));
    return acc;
}

}  // namespace

std::vector<Polynomial> closure_polynomials(const MechanismSpec& spec, std::size_t loop,
                                            const RingPtr& ring) {
    if (loop >= spec.loops.size()) throw spec_error("invalid loop index");
    DQPoly F = loop_product(spec, loop, ring);
    // keep components 2,3,4 and 6,7,8 (1-based): i, j, k, eps*i, eps*j, eps*k
    std::vector<Polynomial> out;
    for (std::size_t idx : {1u, 2u, 3u, 5u, 6u, 7u}) out.push_back(F.c[idx]);
    return out;
}

Polynomial closure_fifth_component(const MechanismSpec& spec, std::size_t loop,
                                   const RingPtr& ring) {
    return loop_product(spec, loop, ring).c[4];
}

Polynomial joint_mask(const MechanismSpec& spec, int joint, const RingPtr& ring) {
    DQPoly f = closure_factor(spec, joint, ring);
    DQPoly prod = dq_mul(f, dq_conjugate(f));
    for (std::size_t i = 1; i < 8; ++i)
        if (!prod.c[i].is_zero())
            throw spec_error("joint factor norm is not strictly real");
    return prod.c[0].primitive_part();
}

// Split form of the loop closure: with A the product of the first half of
// the factors and B the rest, A B == scalar is equivalent (away from the
// excluded locus) to the 8-vectors B and conj(A) being parallel. The 2x2
// minors have the two variable blocks separated, which keeps the Buchberger
// runs small; the saturated ideal is the same as from the raw closure
// components (the localizations at the masks agree).
std::vector<Polynomial> split_closure_generators(const MechanismSpec& spec, std::size_t loop,
                                                 const RingPtr& ring) {
    const auto& cycle = spec.loops[loop];
    const std::size_t half = (cycle.size() + 1) / 2;
    DQPoly A = closure_factor(spec, cycle[0], ring);
    for (std::size_t k = 1; k < half; ++k) A = dq_mul(A, closure_factor(spec, cycle[k], ring));
    DQPoly B = closure_factor(spec, cycle[half], ring);
    for (std::size_t k = half + 1; k < cycle.size(); ++k)
        B = dq_mul(B, closure_factor(spec, cycle[k], ring));
    DQPoly Ab = dq_conjugate(A);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            Polynomial m = B.c[i] * Ab.c[j] - B.c[j] * Ab.c[i];
            if (!m.is_zero()) gens.push_back(m.primitive_part());
        }
    }
    return gens;
}

Ideal loop_constraint_ideal(const MechanismSpec& spec, std::size_t loop, const RingPtr& ring,
                            Budget budget) {
    if (loop >= spec.loops.size()) throw spec_error("invalid loop index");
    Ideal I(ring, split_closure_generators(spec, loop, ring));
    // saturate at the excluded locus: the product of the joint masks, handled
    // factor by factor (I : (fg)^inf == (I : f^inf) : g^inf)
    for (int joint : spec.loops[loop]) {
        Polynomial mask = joint_mask(spec, joint, ring);
        if (mask.is_constant()) continue;
        I = saturate(I, mask, budget);
    }
    return I;
}

Ideal constraint_ideal(const MechanismSpec& spec, Budget budget) {
    spec.validate();
    RingPtr ring = spec_ring(spec);
    Ideal acc(ring, {});
    for (std::size_t l = 0; l < spec.loops.size(); ++l)
        acc = ideal_sum(acc, loop_constraint_ideal(spec, l, ring, budget));
    return Ideal(ring, canonical_generators(acc, budget));
}

MechanismSpec apply_moebius(const MechanismSpec& spec, std::vector<MoebiusMap> maps) {
    if (maps.size() != spec.njoints())
        throw spec_error("apply_moebius: need one map per joint");
    for (const auto& m : maps)
        if (!m.nondegenerate()) throw spec_error("apply_moebius: degenerate map (ad-bc = 0)");
    MechanismSpec out = spec;
    out.maps = std::move(maps);
    out.moebius_mode = "explicit";
    return out;
}

std::vector<MoebiusMap> random_moebius_maps(std::size_t njoints, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<MoebiusMap> maps;
    maps.reserve(njoints);
    for (std::size_t j = 0; j < njoints; ++j) {
        while (true) {
            MoebiusMap m{rng.next_rat(), rng.next_rat(), rng.next_rat(), rng.next_rat()};
            if (m.nondegenerate()) {
                maps.push_back(m);
                break;
            }
        }
    }
    return maps;
}

MechanismSpec construct_line_symmetric(const DQ& h1, const DQ& h2, const DQ& h3, const DQ& u) {
    DQ mu = dq_mul(u, u);
    DQ minus_one = dq_scale(dq_one(), Rat(-1));
    if (!dq_equal(mu, minus_one)) throw spec_error("line-symmetric constructor: u^2 != -1");
    for (const DQ* h : {&h1, &h2, &h3})
        if (!is_rotation_axis(*h, true))
            throw spec_error("line-symmetric constructor: input is not a normalized axis");
    auto mirror = [&u](const DQ& h) { return dq_scale(dq_mul(dq_mul(u, h), u), Rat(-1)); };
    MechanismSpec spec;
    spec.name = "line-symmetric-6r";
    for (const DQ& h : {h1, h2, h3, mirror(h1), mirror(h2), mirror(h3)})
        spec.joints.push_back(Joint{std::nullopt, h});
    spec.loops.push_back({0, 1, 2, 3, 4, 5});
    spec.validate();
    return spec;
}

namespace {

// evaluate a closure factor at a joint value; HalfTurn is the projective
// limit t -> inf of the factor divided by t
DQ factor_at(const MechanismSpec& spec, int joint, const JointValue& value) {
    const Joint& jt = spec.joints[static_cast<std::size_t>(joint)];
    MoebiusMap m = spec.maps ? (*spec.maps)[static_cast<std::size_t>(joint)]
                             : MoebiusMap::identity();
    DQ h = jt.axis ? *jt.axis : axis_i();
    DQ rot;
    if (std::holds_alternative<Rat>(value)) {
        Rat t = std::get<Rat>(value);
        Rat p = m.c * t + m.d;
        Rat q = m.a * t + m.b;
        rot = dq_sub(dq_scale(dq_one(), p), dq_scale(h, q));
    } else {
        rot = dq_sub(dq_scale(dq_one(), m.c), dq_scale(h, m.a));  // (c - a h)
    }
    if (jt.axis) return rot;
    return dq_mul(rot, dh_to_g(*jt.dh));
}

}  // namespace

std::vector<DQ> axes_at_configuration(const MechanismSpec& spec, std::size_t loop,
                                      const std::vector<JointValue>& values) {
    if (loop >= spec.loops.size()) throw spec_error("invalid loop index");
    const auto& cycle = spec.loops[loop];
    if (values.size() != cycle.size())
        throw spec_error("axes_at_configuration: one joint value per loop joint required");

    std::vector<DQ> axes;
    DQ disp = dq_one();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const Joint& jt = spec.joints[static_cast<std::size_t>(cycle[k])];
        DQ local = jt.axis ? *jt.axis : axis_i();
        // h' = D h conj(D) / scalar(D conj(D))
        DQ norm = dq_mul(disp, dq_conjugate(disp));
        if (is_zero(norm.c[0]))
            throw spec_error("axes_at_configuration: zero-norm displacement");
        DQ moved = dq_mul(dq_mul(disp, local), dq_conjugate(disp));
        moved = dq_scale(moved, Rat(Rat(1) / norm.c[0]));
        axes.push_back(moved);
        disp = dq_mul(disp, factor_at(spec, cycle[k], values[k]));
    }
    return axes;
}

std::vector<DQ> axes_at_identity(const MechanismSpec& spec, std::size_t loop) {
    std::vector<JointValue> zeros(spec.loops[loop].size(), JointValue{Rat(0)});
    return axes_at_configuration(spec, loop, zeros);
}

// --- TOML-subset parsing ----------------------------------------------------

namespace {

struct TomlTable {
    std::map<std::string, std::string> scalars;               // key -> raw value text
    std::map<std::string, std::vector<std::string>> arrays;   // key -> raw elements
};

struct TomlDoc {
    TomlTable root;
    std::map<std::string, std::vector<TomlTable>> table_arrays;  // [[name]] entries
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_top_level(const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    bool in_str = false;
    for (char ch : body) {
        if (ch == '"') in_str = !in_str;
        if (!in_str) {
            if (ch == '[' || ch == '{') ++depth;
            if (ch == ']' || ch == '}') --depth;
            if (ch == ',' && depth == 0) {
                parts.push_back(trim(cur));
                cur.clear();
                continue;
            }
        }
        cur += ch;
    }
    if (!trim(cur).empty()) parts.push_back(trim(cur));
    return parts;
}

void parse_assignment(TomlTable& table, const std::string& line, int lineno) {
    auto eq = line.find('=');
    if (eq == std::string::npos)
        throw spec_error("spec file line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
        throw spec_error("spec file line " + std::to_string(lineno) + ": malformed assignment");
    if (value.front() == '[') {
        if (value.back() != ']')
            throw spec_error("spec file line " + std::to_string(lineno) + ": unterminated array");
        table.arrays[key] = split_top_level(value.substr(1, value.size() - 2));
    } else if (value.front() == '{') {
        if (value.back() != '}')
            throw spec_error("spec file line " + std::to_string(lineno) +
                             ": unterminated inline table");
        // flatten inline table into dotted keys
        for (const auto& part : split_top_level(value.substr(1, value.size() - 2))) {
            auto ieq = part.find('=');
            if (ieq == std::string::npos)
                throw spec_error("spec file line " + std::to_string(lineno) +
                                 ": malformed inline table");
            table.scalars[key + "." + trim(part.substr(0, ieq))] = trim(part.substr(ieq + 1));
        }
    } else {
        table.scalars[key] = value;
    }
}

TomlDoc parse_toml(const std::string& text) {
    TomlDoc doc;
    TomlTable* current = &doc.root;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        // strip comments outside strings
        std::string line;
        bool in_str = false;
        for (char ch : raw) {
            if (ch == '"') in_str = !in_str;
            if (ch == '#' && !in_str) break;
            line += ch;
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("[[", 0) == 0) {
            auto end = line.find("]]");
            if (end == std::string::npos)
                throw spec_error("spec file line " + std::to_string(lineno) + ": bad [[table]]");
            std::string name = trim(line.substr(2, end - 2));
            doc.table_arrays[name].push_back(TomlTable{});
            current = &doc.table_arrays[name].back();
            continue;
        }
        if (line.front() == '[') {
            throw spec_error("spec file line " + std::to_string(lineno) +
                             ": plain [table] sections are not used; use [[name]]");
        }
        parse_assignment(*current, line, lineno);
    }
    return doc;
}

Rat toml_rat(const std::string& raw) { return parse_rat(strip_quotes(trim(raw))); }

}  // namespace

MechanismSpec parse_mechanism(const std::string& text) {
    TomlDoc doc = parse_toml(text);
    MechanismSpec spec;
    if (auto it = doc.root.scalars.find("name"); it != doc.root.scalars.end())
        spec.name = strip_quotes(it->second);
    if (auto it = doc.root.scalars.find("seed"); it != doc.root.scalars.end())
        spec.seed = std::stoull(strip_quotes(it->second));

    auto joints_it = doc.table_arrays.find("joints");
    if (joints_it == doc.table_arrays.end())
        throw spec_error(spec.name + ": no [[joints]] entries");
    for (const auto& jt : joints_it->second) {
        Joint joint;
        bool has_dh = jt.scalars.count("dh.w") || jt.scalars.count("dh.d") ||
                      jt.scalars.count("dh.s");
        if (has_dh) {
            DHRow row{Rat(0), Rat(0), Rat(0)};
            if (auto it = jt.scalars.find("dh.w"); it != jt.scalars.end()) row.w = toml_rat(it->second);
            if (auto it = jt.scalars.find("dh.d"); it != jt.scalars.end()) row.d = toml_rat(it->second);
            if (auto it = jt.scalars.find("dh.s"); it != jt.scalars.end()) row.s = toml_rat(it->second);
            joint.dh = row;
        }
        if (auto it = jt.arrays.find("axis"); it != jt.arrays.end()) {
            if (it->second.size() != 8)
                throw spec_error(spec.name + ": axis needs exactly 8 rationals");
            DQ h = dq_zero();
            for (std::size_t i = 0; i < 8; ++i) h.c[i] = toml_rat(it->second[i]);
            joint.axis = h;
        }
        spec.joints.push_back(std::move(joint));
    }

    auto loops_it = doc.table_arrays.find("loops");
    if (loops_it == doc.table_arrays.end()) throw spec_error(spec.name + ": no [[loops]] entries");
    for (const auto& lt : loops_it->second) {
        auto it = lt.arrays.find("joints");
        if (it == lt.arrays.end()) throw spec_error(spec.name + ": loop without joints = [...]");
        std::vector<int> cycle;
        for (const auto& e : it->second) cycle.push_back(std::stoi(strip_quotes(e)) - 1);
        spec.loops.push_back(std::move(cycle));
    }

    if (auto mt = doc.table_arrays.find("moebius"); mt != doc.table_arrays.end()) {
        std::vector<MoebiusMap> maps;
        for (const auto& m : mt->second) {
            MoebiusMap map = MoebiusMap::identity();
            if (auto it = m.scalars.find("a"); it != m.scalars.end()) map.a = toml_rat(it->second);
            if (auto it = m.scalars.find("b"); it != m.scalars.end()) map.b = toml_rat(it->second);
            if (auto it = m.scalars.find("c"); it != m.scalars.end()) map.c = toml_rat(it->second);
            if (auto it = m.scalars.find("d"); it != m.scalars.end()) map.d = toml_rat(it->second);
            maps.push_back(map);
        }
        spec.maps = std::move(maps);
        spec.moebius_mode = "explicit";
    } else if (auto it = doc.root.scalars.find("moebius"); it != doc.root.scalars.end()) {
        std::string mode = strip_quotes(it->second);
        if (mode == "random") {
            spec.maps = random_moebius_maps(spec.njoints(), spec.seed);
            spec.moebius_mode = "random";
        } else if (mode != "none") {
            throw spec_error(spec.name + ": unknown moebius mode '" + mode + "'");
        }
    }

    spec.validate();
    return spec;
}

MechanismSpec load_mechanism_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open mechanism file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mechanism(buf.str());
}

std::vector<MoebiusMap> paper_moebius_maps() {
    auto r = [](const char* s) { return parse_rat(s); };
    return {
        MoebiusMap{r("1/8"), r("-8/11"), r("7/10"), r("11/4")},
        MoebiusMap{r("1"), r("5/3"), r("2/11"), r("-9/11")},
        MoebiusMap{r("-2/9"), r("3/10"), r("1"), r("1")},
        MoebiusMap{r("-3/2"), r("5/9"), r("11/4"), r("11/4")},
        MoebiusMap{r("-11/3"), r("11/5"), r("2/3"), r("-2/7")},
        MoebiusMap{r("11/7"), r("3/2"), r("-3/4"), r("-11/6")},
    };
}

}  // namespace cspace
