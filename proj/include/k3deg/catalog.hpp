#pragma once

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "k3deg/degen.hpp"
#include "k3deg/lattice.hpp"
#include "k3deg/rational.hpp"
#include "k3deg/toric.hpp"

namespace k3deg::catalog {

inline constexpr const char* kSchemaTag = "k3deg-catalog/1";

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path,
                              const std::string& what) {
    throw CatalogError(path + ": " + what);
}

inline const json& need(const json& j, const std::string& path,
                        const std::string& key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

inline void allow_keys(const json& j, const std::string& path,
                       const std::vector<std::string>& required,
                       const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& k : required)
        if (!j.contains(k)) fail(path, "missing field '" + k + "'");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const auto& r : required)
            if (k == r) known = true;
        for (const auto& o : optional)
            if (k == o) known = true;
        if (!known) fail(path, "unknown field '" + k + "'");
    }
}

inline long long get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

inline std::string get_str(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

inline bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

inline Rat get_rat(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, std::string("bad rational: ") + e.what());
        }
    }
    fail(path, "expected an integer or a rational string");
}

inline const json& need_array(const json& j, const std::string& path,
                              std::size_t size = static_cast<std::size_t>(-1)) {
    if (!j.is_array()) fail(path, "expected an array");
    if (size != static_cast<std::size_t>(-1) && j.size() != size)
        fail(path, "expected " + std::to_string(size) + " entries, found " +
                       std::to_string(j.size()));
    return j;
}

inline std::vector<std::string> get_str_list(const json& j,
                                             const std::string& path) {
    need_array(j, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_str(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<int> get_int_list(const json& j, const std::string& path) {
    need_array(j, path);
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(static_cast<int>(
            get_int(j[i], path + "[" + std::to_string(i) + "]")));
    return out;
}

inline std::vector<int> get_generator_indices(const json& j,
                                              const std::string& path) {
    auto names = get_str_list(j, path);
    std::vector<int> out;
    out.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        try {
            out.push_back(lattice::name_index(names[i]));
        } catch (const std::exception&) {
            fail(path + "[" + std::to_string(i) + "]",
                 "unknown generator '" + names[i] + "'");
        }
    }
    return out;
}

inline lattice::Vec get_divisor(const json& j, const std::string& path) {
    allow_keys(j, path, {"e", "s", "t"});
    const json& e = need_array(need(j, path, "e"), path + ".e", 19);
    lattice::Vec v = lattice::zero();
    for (int i = 0; i < 19; ++i)
        v[i] = get_rat(e[i], path + ".e[" + std::to_string(i) + "]");
    v[lattice::kS] = get_rat(need(j, path, "s"), path + ".s");
    v[lattice::kT] = get_rat(need(j, path, "t"), path + ".t");
    return v;
}

} // namespace detail

struct Generators {
    std::vector<std::string> names;
    std::vector<std::vector<long long>> gram;
    std::vector<int> basis18;
    std::array<std::vector<int>, 2> e8_blocks;
    std::vector<lattice::Vec> h_generators;
    lattice::Vec r1, r2, r3;
};

struct Moduli {
    std::vector<std::string> parameters;
    std::vector<int> weights;
    std::string discriminant;
    std::string discriminant_factored;
    std::string type_ii_restriction;
};

struct Equation {
    std::string text;
    long long degree = 0;
};

struct Contraction {
    std::vector<std::string> curves;
    std::vector<std::string> types;
    std::optional<std::string> location;
    std::map<std::string, std::string> points;
    bool scroll = false;
};

struct Section {
    std::string name;
    long long degree = 0;
    std::optional<lattice::Vec> cls;
};

struct StrictTransform {
    std::string curve;
    std::string image;
};

struct OutcomeComponent {
    std::string surface;
    int k2 = 0;
    int d2 = 0;
    std::vector<std::string> degenerate;
};

struct OutcomeComposite {
    std::string curve;
    std::vector<std::pair<std::string, int>> parts;
    std::string notes;
};

struct Outcome {
    std::vector<std::string> gamma;
    std::array<int, 2> k2_pair{};
    std::vector<OutcomeComponent> components;
    std::vector<OutcomeComposite> composites;
};

struct PreBlowup {
    std::vector<std::string> curves;
    std::string extracted;
    std::string location;
    std::vector<std::string> types;
};

struct Model {
    std::string name;
    std::vector<std::string> gamma;
    std::string construction;
    std::string ambient;
    std::vector<int> weights;
    std::vector<int> degrees;
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    std::string degeneration_parameter;
    std::vector<Equation> equations;
    lattice::Vec polarising_divisor;
    std::vector<Section> sections;
    std::map<long long, long long> expected_h0;
    std::vector<Contraction> contractions;
    std::vector<std::string> singularities;
    std::vector<StrictTransform> strict_transforms;
    std::vector<Outcome> outcomes;
    std::map<std::string, std::string> metadata;
    std::vector<std::string> floor_claims;
    std::optional<PreBlowup> pre_blowup;
    std::optional<std::string> scroll_branch;
    std::map<std::string, long long> z_intersections;
    std::optional<lattice::Vec> f3_class;
    std::optional<std::string> expanded_equation;
};

struct Fibre {
    lattice::Vec cls;
    std::map<std::string, int> multiplicities;
    std::string type;
};

struct Fibration {
    std::string name;
    std::vector<Fibre> fibres;
    std::vector<std::string> sections;
    std::vector<int> euler_numbers;
};

struct Involution {
    std::vector<std::string> fixed;
    std::map<std::string, long long> quotient_self_intersections;
};

struct GraphCounts {
    long long states = 0;
    long long classes = 0;
    long long edges = 0;
};

struct ClassSide {
    int k2 = 0;
    int d2 = 0;
    std::vector<std::string> tags;
};

struct ClassRow {
    std::string key;
    std::string model;
    int outcome = 0;
    std::vector<std::string> gamma;
    int k2 = 0;
    int size = 0;
    std::string phi;
    std::vector<std::string> missing;
    std::vector<std::string> neighbors;
    std::array<ClassSide, 2> sides;
};

struct Graph {
    GraphCounts counts;
    std::vector<ClassRow> classes;
};

struct BInvariant {
    std::string name;
    std::string monomial;
    std::array<int, 4> exponents{};
};

struct ToricMonomial {
    std::string coefficient;
    toric::Exponents exponents{};
};

struct Chart {
    std::vector<int> clearing;
    std::string result;
    std::string target;
    std::map<std::string, std::string> shifts;
    std::vector<std::array<int, 3>> substitution;
    std::vector<std::string> variables;
};

struct Pipeline {
    std::string hypersurface;
    std::string c1;
    std::string c2;
    Chart chart4;
    Chart chart8;
};

struct Toric {
    std::vector<BInvariant> b_invariants;
    std::vector<std::string> coefficients;
    long long group_order = 0;
    std::vector<ToricMonomial> monomials;
    Pipeline pipeline;
    std::vector<std::string> pivots;
    std::vector<long long> snf;
    long long sublattice_index = 0;
    std::vector<toric::IntVert> vertices;
    std::array<int, 4> weight_relation{};
};

struct Catalog {
    std::string schema;
    Generators generators;
    Moduli moduli;
    std::vector<Model> models;
    std::vector<Fibration> fibrations;
    Involution involution;
    degen::State seed_state;
    Graph graph;
    Toric toric;
};

namespace detail {

inline Generators parse_generators(const json& j, const std::string& path) {
    allow_keys(j, path,
               {"names", "gram", "basis18", "e8_blocks", "h_generators",
                "relations"});
    Generators g;
    g.names = get_str_list(need(j, path, "names"), path + ".names");
    const json& gram = need_array(need(j, path, "gram"), path + ".gram", 21);
    for (std::size_t i = 0; i < 21; ++i) {
        std::string rp = path + ".gram[" + std::to_string(i) + "]";
        const json& row = need_array(gram[i], rp, 21);
        std::vector<long long> r;
        for (std::size_t k = 0; k < 21; ++k)
            r.push_back(get_int(row[k], rp + "[" + std::to_string(k) + "]"));
        g.gram.push_back(std::move(r));
    }
    g.basis18 = get_generator_indices(need(j, path, "basis18"),
                                      path + ".basis18");
    const json& blocks =
        need_array(need(j, path, "e8_blocks"), path + ".e8_blocks", 2);
    for (int b = 0; b < 2; ++b)
        g.e8_blocks[b] = get_generator_indices(
            blocks[b], path + ".e8_blocks[" + std::to_string(b) + "]");
    const json& hs = need_array(need(j, path, "h_generators"),
                                path + ".h_generators", 2);
    for (std::size_t i = 0; i < 2; ++i)
        g.h_generators.push_back(get_divisor(
            hs[i], path + ".h_generators[" + std::to_string(i) + "]"));
    const json& rel = need(j, path, "relations");
    allow_keys(rel, path + ".relations", {"R1", "R2", "R3"});
    g.r1 = get_divisor(need(rel, path + ".relations", "R1"),
                       path + ".relations.R1");
    g.r2 = get_divisor(need(rel, path + ".relations", "R2"),
                       path + ".relations.R2");
    g.r3 = get_divisor(need(rel, path + ".relations", "R3"),
                       path + ".relations.R3");
    return g;
}

inline Moduli parse_moduli(const json& j, const std::string& path) {
    allow_keys(j, path,
               {"parameters", "weights", "discriminant",
                "discriminant_factored", "type_ii_restriction"});
    Moduli m;
    m.parameters =
        get_str_list(need(j, path, "parameters"), path + ".parameters");
    m.weights = get_int_list(need(j, path, "weights"), path + ".weights");
    m.discriminant =
        get_str(need(j, path, "discriminant"), path + ".discriminant");
    m.discriminant_factored = get_str(need(j, path, "discriminant_factored"),
                                      path + ".discriminant_factored");
    m.type_ii_restriction = get_str(need(j, path, "type_ii_restriction"),
                                    path + ".type_ii_restriction");
    return m;
}

inline Contraction parse_contraction(const json& j, const std::string& path) {
    allow_keys(j, path, {"curves", "types"}, {"location", "points", "scroll"});
    Contraction c;
    c.curves = get_str_list(need(j, path, "curves"), path + ".curves");
    c.types = get_str_list(need(j, path, "types"), path + ".types");
    if (j.contains("location") && !j["location"].is_null())
        c.location = get_str(j["location"], path + ".location");
    if (j.contains("points")) {
        const json& pts = j["points"];
        if (!pts.is_object()) fail(path + ".points", "expected an object");
        for (const auto& [k, v] : pts.items())
            c.points[k] = get_str(v, path + ".points." + k);
    }
    if (j.contains("scroll")) c.scroll = get_bool(j["scroll"], path + ".scroll");
    return c;
}

inline Outcome parse_outcome(const json& j, const std::string& path) {
    allow_keys(j, path, {"gamma", "k2_pair", "components", "composites"});
    Outcome o;
    o.gamma = get_str_list(need(j, path, "gamma"), path + ".gamma");
    const json& kp = need_array(need(j, path, "k2_pair"), path + ".k2_pair", 2);
    o.k2_pair[0] = static_cast<int>(get_int(kp[0], path + ".k2_pair[0]"));
    o.k2_pair[1] = static_cast<int>(get_int(kp[1], path + ".k2_pair[1]"));
    const json& comps = need_array(need(j, path, "components"),
                                   path + ".components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string cp = path + ".components[" + std::to_string(i) + "]";
        allow_keys(comps[i], cp, {"surface", "k2", "d2", "degenerate"});
        OutcomeComponent c;
        c.surface = get_str(need(comps[i], cp, "surface"), cp + ".surface");
        c.k2 = static_cast<int>(get_int(need(comps[i], cp, "k2"), cp + ".k2"));
        c.d2 = static_cast<int>(get_int(need(comps[i], cp, "d2"), cp + ".d2"));
        c.degenerate = get_str_list(need(comps[i], cp, "degenerate"),
                                    cp + ".degenerate");
        o.components.push_back(std::move(c));
    }
    const json& cps = need_array(need(j, path, "composites"),
                                 path + ".composites");
    for (std::size_t i = 0; i < cps.size(); ++i) {
        std::string cp = path + ".composites[" + std::to_string(i) + "]";
        allow_keys(cps[i], cp, {"curve", "parts", "notes"});
        OutcomeComposite c;
        c.curve = get_str(need(cps[i], cp, "curve"), cp + ".curve");
        c.notes = get_str(need(cps[i], cp, "notes"), cp + ".notes");
        const json& parts = need_array(need(cps[i], cp, "parts"),
                                       cp + ".parts");
        for (std::size_t p = 0; p < parts.size(); ++p) {
            std::string pp = cp + ".parts[" + std::to_string(p) + "]";
            const json& pair = need_array(parts[p], pp, 2);
            c.parts.emplace_back(
                get_str(pair[0], pp + "[0]"),
                static_cast<int>(get_int(pair[1], pp + "[1]")));
        }
        o.composites.push_back(std::move(c));
    }
    return o;
}

inline Model parse_model(const json& j, const std::string& path) {
    allow_keys(j, path,
               {"name", "gamma", "construction", "ambient", "weights",
                "degrees", "variables", "parameters",
                "degeneration_parameter", "equations", "polarising_divisor",
                "sections", "expected_h0", "contractions", "singularities",
                "strict_transforms", "outcomes", "metadata"},
               {"floor_claims", "pre_blowup", "scroll_branch",
                "z_intersections", "f3_class", "expanded_equation"});
    Model m;
    m.name = get_str(need(j, path, "name"), path + ".name");
    m.gamma = get_str_list(need(j, path, "gamma"), path + ".gamma");
    m.construction =
        get_str(need(j, path, "construction"), path + ".construction");
    m.ambient = get_str(need(j, path, "ambient"), path + ".ambient");
    m.weights = get_int_list(need(j, path, "weights"), path + ".weights");
    m.degrees = get_int_list(need(j, path, "degrees"), path + ".degrees");
    m.variables =
        get_str_list(need(j, path, "variables"), path + ".variables");
    m.parameters =
        get_str_list(need(j, path, "parameters"), path + ".parameters");
    m.degeneration_parameter =
        get_str(need(j, path, "degeneration_parameter"),
                path + ".degeneration_parameter");
    const json& eqs = need_array(need(j, path, "equations"),
                                 path + ".equations");
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        std::string ep = path + ".equations[" + std::to_string(i) + "]";
        allow_keys(eqs[i], ep, {"text", "degree"});
        m.equations.push_back(
            {get_str(need(eqs[i], ep, "text"), ep + ".text"),
             get_int(need(eqs[i], ep, "degree"), ep + ".degree")});
    }
    m.polarising_divisor = get_divisor(need(j, path, "polarising_divisor"),
                                       path + ".polarising_divisor");
    const json& secs = need_array(need(j, path, "sections"),
                                  path + ".sections");
    for (std::size_t i = 0; i < secs.size(); ++i) {
        std::string sp = path + ".sections[" + std::to_string(i) + "]";
        allow_keys(secs[i], sp, {"name", "degree", "class"});
        Section s;
        s.name = get_str(need(secs[i], sp, "name"), sp + ".name");
        s.degree = get_int(need(secs[i], sp, "degree"), sp + ".degree");
        const json& cls = need(secs[i], sp, "class");
        if (!cls.is_null()) s.cls = get_divisor(cls, sp + ".class");
        m.sections.push_back(std::move(s));
    }
    const json& h0 = need(j, path, "expected_h0");
    if (!h0.is_object()) fail(path + ".expected_h0", "expected an object");
    for (const auto& [k, v] : h0.items()) {
        long long n = 0;
        try {
            std::size_t used = 0;
            n = std::stoll(k, &used);
            if (used != k.size() || n <= 0) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            fail(path + ".expected_h0", "bad multiple '" + k + "'");
        }
        m.expected_h0[n] = get_int(v, path + ".expected_h0." + k);
    }
    const json& cons = need_array(need(j, path, "contractions"),
                                  path + ".contractions");
    for (std::size_t i = 0; i < cons.size(); ++i)
        m.contractions.push_back(parse_contraction(
            cons[i], path + ".contractions[" + std::to_string(i) + "]"));
    m.singularities = get_str_list(need(j, path, "singularities"),
                                   path + ".singularities");
    const json& sts = need_array(need(j, path, "strict_transforms"),
                                 path + ".strict_transforms");
    for (std::size_t i = 0; i < sts.size(); ++i) {
        std::string sp = path + ".strict_transforms[" + std::to_string(i) + "]";
        allow_keys(sts[i], sp, {"curve", "image"});
        m.strict_transforms.push_back(
            {get_str(need(sts[i], sp, "curve"), sp + ".curve"),
             get_str(need(sts[i], sp, "image"), sp + ".image")});
    }
    const json& outs = need_array(need(j, path, "outcomes"),
                                  path + ".outcomes");
    for (std::size_t i = 0; i < outs.size(); ++i)
        m.outcomes.push_back(parse_outcome(
            outs[i], path + ".outcomes[" + std::to_string(i) + "]"));
    const json& meta = need(j, path, "metadata");
    if (!meta.is_object()) fail(path + ".metadata", "expected an object");
    for (const auto& [k, v] : meta.items())
        m.metadata[k] = get_str(v, path + ".metadata." + k);
    if (j.contains("floor_claims"))
        m.floor_claims =
            get_str_list(j["floor_claims"], path + ".floor_claims");
    if (j.contains("pre_blowup")) {
        std::string pp = path + ".pre_blowup";
        allow_keys(j["pre_blowup"], pp,
                   {"curves", "extracted", "location", "types"});
        PreBlowup pb;
        pb.curves = get_str_list(need(j["pre_blowup"], pp, "curves"),
                                 pp + ".curves");
        pb.extracted =
            get_str(need(j["pre_blowup"], pp, "extracted"), pp + ".extracted");
        pb.location =
            get_str(need(j["pre_blowup"], pp, "location"), pp + ".location");
        pb.types =
            get_str_list(need(j["pre_blowup"], pp, "types"), pp + ".types");
        m.pre_blowup = std::move(pb);
    }
    if (j.contains("scroll_branch"))
        m.scroll_branch =
            get_str(j["scroll_branch"], path + ".scroll_branch");
    if (j.contains("z_intersections")) {
        const json& zi = j["z_intersections"];
        if (!zi.is_object())
            fail(path + ".z_intersections", "expected an object");
        for (const auto& [k, v] : zi.items())
            m.z_intersections[k] =
                get_int(v, path + ".z_intersections." + k);
    }
    if (j.contains("f3_class"))
        m.f3_class = get_divisor(j["f3_class"], path + ".f3_class");
    if (j.contains("expanded_equation"))
        m.expanded_equation =
            get_str(j["expanded_equation"], path + ".expanded_equation");
    return m;
}

inline Fibration parse_fibration(const json& j, const std::string& path) {
    allow_keys(j, path, {"name", "fibres", "sections", "euler_numbers"});
    Fibration f;
    f.name = get_str(need(j, path, "name"), path + ".name");
    const json& fs = need_array(need(j, path, "fibres"), path + ".fibres");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::string fp = path + ".fibres[" + std::to_string(i) + "]";
        allow_keys(fs[i], fp, {"class", "multiplicities", "type"});
        Fibre fib;
        fib.cls = get_divisor(need(fs[i], fp, "class"), fp + ".class");
        const json& marks = need(fs[i], fp, "multiplicities");
        if (!marks.is_object())
            fail(fp + ".multiplicities", "expected an object");
        for (const auto& [k, v] : marks.items())
            fib.multiplicities[k] = static_cast<int>(
                get_int(v, fp + ".multiplicities." + k));
        fib.type = get_str(need(fs[i], fp, "type"), fp + ".type");
        f.fibres.push_back(std::move(fib));
    }
    f.sections = get_str_list(need(j, path, "sections"), path + ".sections");
    f.euler_numbers = get_int_list(need(j, path, "euler_numbers"),
                                   path + ".euler_numbers");
    return f;
}

inline Involution parse_involution(const json& j, const std::string& path) {
    allow_keys(j, path, {"fixed", "quotient_self_intersections"});
    Involution inv;
    inv.fixed = get_str_list(need(j, path, "fixed"), path + ".fixed");
    const json& q = need(j, path, "quotient_self_intersections");
    if (!q.is_object())
        fail(path + ".quotient_self_intersections", "expected an object");
    for (const auto& [k, v] : q.items())
        inv.quotient_self_intersections[k] =
            get_int(v, path + ".quotient_self_intersections." + k);
    return inv;
}

inline degen::State parse_seed(const json& j, const std::string& path) {
    allow_keys(j, path, {"sides", "shared"});
    degen::State st;
    const json& sides = need_array(need(j, path, "sides"), path + ".sides", 2);
    for (int si = 0; si < 2; ++si) {
        std::string sp = path + ".sides[" + std::to_string(si) + "]";
        const json& js = sides[si];
        allow_keys(js, sp, {"k2", "d2", "curves", "points", "intersections"});
        degen::Side& side = st.sides[si];
        side.k2 = static_cast<int>(get_int(need(js, sp, "k2"), sp + ".k2"));
        side.d2 = static_cast<int>(get_int(need(js, sp, "d2"), sp + ".d2"));
        const json& cs = need_array(need(js, sp, "curves"), sp + ".curves");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::string cp = sp + ".curves[" + std::to_string(i) + "]";
            allow_keys(cs[i], cp, {"id", "sq", "d", "label"});
            std::string id = get_str(need(cs[i], cp, "id"), cp + ".id");
            if (side.curves.count(id)) fail(cp, "duplicate curve id " + id);
            degen::Curve c;
            c.sq = static_cast<int>(get_int(need(cs[i], cp, "sq"), cp + ".sq"));
            c.d = static_cast<int>(get_int(need(cs[i], cp, "d"), cp + ".d"));
            const json& lab = need(cs[i], cp, "label");
            if (!lab.is_null()) c.label = get_str(lab, cp + ".label");
            side.curves[id] = std::move(c);
        }
        const json& pts = need(js, sp, "points");
        if (!pts.is_object()) fail(sp + ".points", "expected an object");
        for (const auto& [pid, pd] : pts.items()) {
            std::string pp = sp + ".points." + pid;
            if (!pd.is_object()) fail(pp, "expected an object");
            degen::PointData data;
            for (const auto& [cid, mk] : pd.items()) {
                const json& arr = need_array(mk, pp + "." + cid, 2);
                data[cid] = {static_cast<int>(
                                 get_int(arr[0], pp + "." + cid + "[0]")),
                             static_cast<int>(
                                 get_int(arr[1], pp + "." + cid + "[1]"))};
            }
            side.points[pid] = std::move(data);
        }
        const json& inter = need_array(need(js, sp, "intersections"),
                                       sp + ".intersections");
        for (std::size_t i = 0; i < inter.size(); ++i) {
            std::string ip = sp + ".intersections[" + std::to_string(i) + "]";
            const json& row = need_array(inter[i], ip, 3);
            std::string a = get_str(row[0], ip + "[0]");
            std::string b = get_str(row[1], ip + "[1]");
            int v = static_cast<int>(get_int(row[2], ip + "[2]"));
            if (side.get_i(a, b) != 0) fail(ip, "duplicate intersection pair");
            side.set_i(a, b, v);
        }
    }
    const json& shared = need_array(need(j, path, "shared"),
                                    path + ".shared", 2);
    st.shared[0] = get_str(shared[0], path + ".shared[0]");
    st.shared[1] = get_str(shared[1], path + ".shared[1]");
    st.next_id = 1;
    return st;
}

inline Graph parse_graph(const json& j, const std::string& path) {
    allow_keys(j, path, {"counts", "classes"});
    Graph g;
    const json& counts = need(j, path, "counts");
    allow_keys(counts, path + ".counts", {"states", "classes", "edges"});
    g.counts.states =
        get_int(need(counts, path + ".counts", "states"),
                path + ".counts.states");
    g.counts.classes =
        get_int(need(counts, path + ".counts", "classes"),
                path + ".counts.classes");
    g.counts.edges = get_int(need(counts, path + ".counts", "edges"),
                             path + ".counts.edges");
    const json& rows = need_array(need(j, path, "classes"), path + ".classes");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string rp = path + ".classes[" + std::to_string(i) + "]";
        allow_keys(rows[i], rp,
                   {"key", "model", "outcome", "gamma", "k2", "size", "phi",
                    "missing", "neighbors", "sides"});
        ClassRow r;
        r.key = get_str(need(rows[i], rp, "key"), rp + ".key");
        r.model = get_str(need(rows[i], rp, "model"), rp + ".model");
        r.outcome = static_cast<int>(
            get_int(need(rows[i], rp, "outcome"), rp + ".outcome"));
        r.gamma = get_str_list(need(rows[i], rp, "gamma"), rp + ".gamma");
        r.k2 = static_cast<int>(get_int(need(rows[i], rp, "k2"), rp + ".k2"));
        r.size = static_cast<int>(
            get_int(need(rows[i], rp, "size"), rp + ".size"));
        r.phi = get_str(need(rows[i], rp, "phi"), rp + ".phi");
        r.missing =
            get_str_list(need(rows[i], rp, "missing"), rp + ".missing");
        r.neighbors =
            get_str_list(need(rows[i], rp, "neighbors"), rp + ".neighbors");
        const json& sides = need_array(need(rows[i], rp, "sides"),
                                       rp + ".sides", 2);
        for (int s = 0; s < 2; ++s) {
            std::string sp = rp + ".sides[" + std::to_string(s) + "]";
            allow_keys(sides[s], sp, {"k2", "d2", "tags"});
            r.sides[s].k2 = static_cast<int>(
                get_int(need(sides[s], sp, "k2"), sp + ".k2"));
            r.sides[s].d2 = static_cast<int>(
                get_int(need(sides[s], sp, "d2"), sp + ".d2"));
            r.sides[s].tags =
                get_str_list(need(sides[s], sp, "tags"), sp + ".tags");
        }
        g.classes.push_back(std::move(r));
    }
    return g;
}

inline Chart parse_chart(const json& j, const std::string& path) {
    allow_keys(j, path,
               {"clearing", "result", "substitution", "target", "variables"},
               {"shift_x", "shift_y", "shift_w"});
    Chart c;
    c.clearing = get_int_list(need(j, path, "clearing"), path + ".clearing");
    c.result = get_str(need(j, path, "result"), path + ".result");
    c.target = get_str(need(j, path, "target"), path + ".target");
    c.variables =
        get_str_list(need(j, path, "variables"), path + ".variables");
    const json& subs = need_array(need(j, path, "substitution"),
                                  path + ".substitution");
    for (std::size_t i = 0; i < subs.size(); ++i) {
        std::string ip = path + ".substitution[" + std::to_string(i) + "]";
        const json& row = need_array(subs[i], ip, 3);
        std::array<int, 3> t{};
        for (int k = 0; k < 3; ++k)
            t[k] = static_cast<int>(
                get_int(row[k], ip + "[" + std::to_string(k) + "]"));
        c.substitution.push_back(t);
    }
    for (const char* key : {"shift_x", "shift_y", "shift_w"})
        if (j.contains(key))
            c.shifts[key] = get_str(j[key], path + "." + key);
    return c;
}

inline Toric parse_toric(const json& j, const std::string& path) {
    allow_keys(j, path,
               {"b_invariants", "coefficients", "group_order", "monomials",
                "pipeline", "pivots", "snf", "sublattice_index", "vertices",
                "weight_relation"});
    Toric t;
    const json& bs = need_array(need(j, path, "b_invariants"),
                                path + ".b_invariants");
    for (std::size_t i = 0; i < bs.size(); ++i) {
        std::string bp = path + ".b_invariants[" + std::to_string(i) + "]";
        allow_keys(bs[i], bp, {"name", "monomial", "exponents"});
        BInvariant b;
        b.name = get_str(need(bs[i], bp, "name"), bp + ".name");
        b.monomial = get_str(need(bs[i], bp, "monomial"), bp + ".monomial");
        const json& es = need_array(need(bs[i], bp, "exponents"),
                                    bp + ".exponents", 4);
        for (int k = 0; k < 4; ++k)
            b.exponents[k] = static_cast<int>(
                get_int(es[k], bp + ".exponents[" + std::to_string(k) + "]"));
        t.b_invariants.push_back(std::move(b));
    }
    t.coefficients = get_str_list(need(j, path, "coefficients"),
                                  path + ".coefficients");
    t.group_order =
        get_int(need(j, path, "group_order"), path + ".group_order");
    const json& ms = need_array(need(j, path, "monomials"),
                                path + ".monomials");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::string mp = path + ".monomials[" + std::to_string(i) + "]";
        allow_keys(ms[i], mp, {"coefficient", "exponents"});
        ToricMonomial m;
        m.coefficient =
            get_str(need(ms[i], mp, "coefficient"), mp + ".coefficient");
        const json& es = need_array(need(ms[i], mp, "exponents"),
                                    mp + ".exponents", 4);
        for (int k = 0; k < 4; ++k)
            m.exponents[k] = static_cast<int>(
                get_int(es[k], mp + ".exponents[" + std::to_string(k) + "]"));
        t.monomials.push_back(std::move(m));
    }
    const json& pipe = need(j, path, "pipeline");
    allow_keys(pipe, path + ".pipeline",
               {"hypersurface", "c1", "c2", "chart4", "chart8"});
    t.pipeline.hypersurface =
        get_str(need(pipe, path + ".pipeline", "hypersurface"),
                path + ".pipeline.hypersurface");
    t.pipeline.c1 =
        get_str(need(pipe, path + ".pipeline", "c1"), path + ".pipeline.c1");
    t.pipeline.c2 =
        get_str(need(pipe, path + ".pipeline", "c2"), path + ".pipeline.c2");
    t.pipeline.chart4 = parse_chart(need(pipe, path + ".pipeline", "chart4"),
                                    path + ".pipeline.chart4");
    t.pipeline.chart8 = parse_chart(need(pipe, path + ".pipeline", "chart8"),
                                    path + ".pipeline.chart8");
    t.pivots = get_str_list(need(j, path, "pivots"), path + ".pivots");
    const json& snf = need_array(need(j, path, "snf"), path + ".snf");
    for (std::size_t i = 0; i < snf.size(); ++i)
        t.snf.push_back(get_int(snf[i],
                                path + ".snf[" + std::to_string(i) + "]"));
    t.sublattice_index = get_int(need(j, path, "sublattice_index"),
                                 path + ".sublattice_index");
    const json& vs = need_array(need(j, path, "vertices"),
                                path + ".vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string vp = path + ".vertices[" + std::to_string(i) + "]";
        const json& row = need_array(vs[i], vp, 3);
        toric::IntVert v{};
        for (int k = 0; k < 3; ++k)
            v[k] = get_int(row[k], vp + "[" + std::to_string(k) + "]");
        t.vertices.push_back(v);
    }
    const json& wr = need_array(need(j, path, "weight_relation"),
                                path + ".weight_relation", 4);
    for (int k = 0; k < 4; ++k)
        t.weight_relation[k] = static_cast<int>(
            get_int(wr[k], path + ".weight_relation[" + std::to_string(k) +
                               "]"));
    return t;
}

} // namespace detail

inline Catalog parse_catalog(const nlohmann::json& j) {
    using namespace detail;
    const std::string root = "catalog";
    allow_keys(j, root,
               {"schema", "generators", "moduli", "models", "fibrations",
                "involution", "seed_state", "graph", "toric"});
    Catalog c;
    c.schema = get_str(need(j, root, "schema"), root + ".schema");
    if (c.schema != kSchemaTag)
        fail(root + ".schema", "unsupported schema '" + c.schema + "'");
    c.generators = parse_generators(need(j, root, "generators"),
                                    root + ".generators");
    c.moduli = parse_moduli(need(j, root, "moduli"), root + ".moduli");
    const json& ms = need_array(need(j, root, "models"), root + ".models");
    for (std::size_t i = 0; i < ms.size(); ++i)
        c.models.push_back(
            parse_model(ms[i], root + ".models[" + std::to_string(i) + "]"));
    const json& fs = need_array(need(j, root, "fibrations"),
                                root + ".fibrations");
    for (std::size_t i = 0; i < fs.size(); ++i)
        c.fibrations.push_back(parse_fibration(
            fs[i], root + ".fibrations[" + std::to_string(i) + "]"));
    c.involution = parse_involution(need(j, root, "involution"),
                                    root + ".involution");
    c.seed_state = parse_seed(need(j, root, "seed_state"),
                              root + ".seed_state");
    c.graph = parse_graph(need(j, root, "graph"), root + ".graph");
    c.toric = parse_toric(need(j, root, "toric"), root + ".toric");
    return c;
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CatalogError("catalog is not valid JSON: " +
                           std::string(e.what()));
    }
    return parse_catalog(j);
}

inline const Model& model_by_name(const Catalog& c, const std::string& name) {
    for (const auto& m : c.models)
        if (m.name == name) return m;
    throw CatalogError("no model named '" + name + "' in the catalog");
}

} // namespace k3deg::catalog
