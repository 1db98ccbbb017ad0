#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "k3deg/catalog.hpp"
#include "k3deg/degen.hpp"
#include "k3deg/dynkin.hpp"
#include "k3deg/lattice.hpp"
#include "k3deg/ns_model.hpp"
#include "k3deg/poly.hpp"
#include "k3deg/rational.hpp"
#include "k3deg/toric.hpp"

namespace k3deg::checks {

struct CheckResult {
    std::string id;
    std::string subject;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep = "; ") {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

struct Recorder {
    std::vector<CheckResult>& out;

    void add(const std::string& id, const std::string& subject, bool ok,
             const std::string& fail_detail) {
        out.push_back({id, subject, ok, ok ? std::string() : fail_detail});
    }

    void note(const std::string& id, const std::string& subject,
              const std::string& detail) {
        out.push_back({id, subject, true, detail});
    }

    template <class F>
    void guarded(const std::string& id, const std::string& subject, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            add(id, subject, false, e.what());
        }
    }
};

inline std::string gamma_key(std::vector<std::string> gamma) {
    std::sort(gamma.begin(), gamma.end());
    return join(gamma, "+");
}

} // namespace detail

inline void run_lattice_checks(const catalog::Catalog& cat,
                               std::vector<CheckResult>& out) {
    using lattice::Vec;
    detail::Recorder r{out};

    bool names_ok = cat.generators.names.size() == lattice::kGenerators;
    if (names_ok)
        for (int i = 0; i < lattice::kGenerators; ++i)
            names_ok = names_ok &&
                       cat.generators.names[i] == lattice::names()[i];
    r.add("lattice/generator-names", "", names_ok,
          "catalog generator names differ from the built in ordering");

    bool gram_ok = cat.generators.gram.size() == lattice::kGenerators;
    if (gram_ok)
        for (int i = 0; i < lattice::kGenerators; ++i)
            for (int j = 0; j < lattice::kGenerators; ++j)
                gram_ok = gram_ok &&
                          cat.generators.gram[i][j] == lattice::gram()[i][j];
    r.add("lattice/gram", "", gram_ok,
          "catalog intersection matrix differs from the built in one");

    r.add("lattice/basis18", "", cat.generators.basis18 == lattice::basis18(),
          "catalog rank 18 basis differs from the built in selection");
    r.add("lattice/e8-blocks", "",
          cat.generators.e8_blocks[0] == lattice::e8_block_low() &&
              cat.generators.e8_blocks[1] == lattice::e8_block_high(),
          "catalog E8 blocks differ from the built in selection");
    r.add("lattice/h-generators", "",
          cat.generators.h_generators.size() == 2 &&
              cat.generators.h_generators[0] == lattice::h_first() &&
              cat.generators.h_generators[1] == lattice::h_second(),
          "catalog hyperbolic generators differ from the built in pair");

    auto mfail = ns_model::verify_m_identification();
    r.add("lattice/m-identification", "", mfail.empty(),
          detail::join(mfail));

    const std::array<std::pair<std::string, const Vec*>, 3> rels{
        {{"R1", &cat.generators.r1},
         {"R2", &cat.generators.r2},
         {"R3", &cat.generators.r3}}};
    const std::array<const Vec*, 3> builtin{&lattice::r1(), &lattice::r2(),
                                            &lattice::r3()};
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const auto& [name, rel] = rels[i];
        r.add("lattice/relation-matches", name, *rel == *builtin[i],
              "catalog relation differs from the built in vector");
        bool orth = true;
        for (int g = 0; g < lattice::kGenerators; ++g)
            if (lattice::pair(*rel, lattice::unit(g)) != Rat(0)) orth = false;
        r.add("lattice/relation-orthogonal", name, orth,
              "relation does not annihilate every generator");
        r.add("lattice/relation-null", name,
              lattice::lin_equiv(*rel, lattice::zero()),
              "relation is not equivalent to zero");
    }

    {
        std::set<std::string> fixed(cat.involution.fixed.begin(),
                                    cat.involution.fixed.end());
        std::vector<std::string> bad;
        r.guarded("lattice/involution-quotient", "", [&] {
            if (cat.involution.quotient_self_intersections.size() !=
                lattice::kGenerators)
                bad.push_back("expected one entry per generator");
            for (int i = 0; i < lattice::kGenerators; ++i) {
                const std::string& name = lattice::names()[i];
                auto it =
                    cat.involution.quotient_self_intersections.find(name);
                if (it == cat.involution.quotient_self_intersections.end()) {
                    bad.push_back("no entry for " + name);
                    continue;
                }
                Rat got = ns_model::quotient_self_intersection(
                    name, fixed.count(name) > 0);
                if (got != Rat(it->second))
                    bad.push_back(name + " descends to " + got.str() +
                                  ", catalog says " +
                                  std::to_string(it->second));
            }
            r.add("lattice/involution-quotient", "", bad.empty(),
                  detail::join(bad));
        });
    }

    const catalog::Fibration* standard = nullptr;
    const catalog::Fibration* alternate = nullptr;
    for (const auto& f : cat.fibrations) {
        ns_model::FibrationInput in;
        in.name = f.name;
        in.sections = f.sections;
        in.euler = f.euler_numbers;
        for (const auto& fib : f.fibres)
            in.fibres.push_back({fib.cls, fib.multiplicities, fib.type});
        r.guarded("lattice/fibration", f.name, [&] {
            auto fails = ns_model::check_fibration(in);
            r.add("lattice/fibration", f.name, fails.empty(),
                  detail::join(fails));
        });
        if (f.name == "standard") standard = &f;
        if (f.name == "alternate") alternate = &f;
    }
    r.add("lattice/fibration-pair", "", standard && alternate,
          "expected one standard and one alternate fibration");
    if (standard) {
        bool ok = standard->fibres.size() == 2 &&
                  standard->fibres[0].cls == lattice::h_first() &&
                  lattice::sub(standard->fibres[0].cls,
                               standard->fibres[1].cls) == lattice::r1();
        r.add("lattice/standard-fibres", "standard", ok,
              "standard fibre classes are not the hyperbolic generator and "
              "its shift by the first relation");
    }
    if (alternate) {
        bool ok =
            alternate->fibres.size() == 1 &&
            alternate->fibres[0].cls ==
                lattice::add(lattice::r2(), lattice::unit(lattice::kS)) &&
            lattice::lin_equiv(alternate->fibres[0].cls,
                               lattice::unit(lattice::kS));
        r.add("lattice/alternate-fibre", "alternate", ok,
              "alternate fibre class is not the section class shifted by "
              "the second relation");
    }
}

inline void run_moduli_checks(const catalog::Catalog& cat,
                              std::vector<CheckResult>& out) {
    using poly::Poly;
    detail::Recorder r{out};
    r.add("moduli/parameter-weights", "",
          cat.moduli.parameters.size() == cat.moduli.weights.size(),
          "parameter and weight lists have different lengths");
    r.guarded("moduli/discriminant-factored", "", [&] {
        Poly disc = Poly::parse(cat.moduli.discriminant);
        Poly fact = Poly::parse(cat.moduli.discriminant_factored);
        r.add("moduli/discriminant-factored", "", disc == fact,
              "factored discriminant does not expand to the stated "
              "polynomial");
        Poly restricted =
            disc.substitute("d", Poly::constant(Rat(0)));
        r.add("moduli/type-ii-restriction", "",
              restricted == Poly::parse(cat.moduli.type_ii_restriction),
              "discriminant at d = 0 does not match the stated square");
    });
}

inline void run_model_checks(const catalog::Catalog&,
                             const catalog::Model& m,
                             std::vector<CheckResult>& out) {
    using lattice::Vec;
    using poly::Poly;
    detail::Recorder r{out};
    const Vec& D = m.polarising_divisor;

    {
        long long pd = 1, pw = 1;
        for (int d : m.degrees) pd *= d;
        for (int w : m.weights) pw *= w;
        Rat want = Rat(pd) / Rat(pw);
        r.add("models/degree-formula", m.name,
              lattice::pair(D, D) == want,
              "polarisation squares to " + lattice::pair(D, D).str() +
                  " against the ambient value " + want.str());
    }
    r.add("models/nef", m.name, lattice::nef(D),
          "polarising class meets a generator negatively");
    r.add("models/big", m.name, lattice::big(D),
          "polarising class has non-positive square");
    r.add("models/shape", m.name,
          m.variables.size() == m.weights.size() &&
              m.equations.size() == m.degrees.size(),
          "variable/weight or equation/degree lists disagree in length");

    std::map<std::string, int> wt;
    for (std::size_t i = 0;
         i < m.variables.size() && i < m.weights.size(); ++i)
        wt[m.variables[i]] = m.weights[i];

    for (std::size_t i = 0; i < m.equations.size(); ++i) {
        std::string subj = m.name + " equation " + std::to_string(i);
        r.guarded("models/equation-homogeneous", subj, [&] {
            Poly p = Poly::parse(m.equations[i].text);
            auto h = poly::homogeneous_degree(p, wt);
            r.add("models/equation-homogeneous", subj,
                  h.has_value() && *h == m.equations[i].degree,
                  h ? "equation is homogeneous of degree " +
                          std::to_string(*h) + ", stated degree is " +
                          std::to_string(m.equations[i].degree)
                    : "equation mixes weighted degrees");
        });
    }

    for (const auto& s : m.sections) {
        std::string subj = m.name + "/" + s.name;
        auto vit = std::find(m.variables.begin(), m.variables.end(), s.name);
        bool deg_ok = vit != m.variables.end() &&
                      m.weights[static_cast<std::size_t>(
                          vit - m.variables.begin())] == s.degree;
        r.add("models/section-degree", subj, deg_ok,
              "section name is not a variable of the stated weight");
        if (!s.cls) {
            r.note("models/section-class", subj,
                   "no divisor class recorded; skipped");
            continue;
        }
        r.add("models/section-integral", subj, lattice::integral(*s.cls),
              "section class has fractional coordinates");
        r.guarded("models/section-class", subj, [&] {
            r.add("models/section-class", subj,
                  lattice::verify_section(*s.cls, static_cast<int>(s.degree),
                                          D),
                  "section class is not the rounded multiple of the "
                  "polarisation");
        });
    }

    for (const auto& [n, h0] : m.expected_h0) {
        std::string subj = m.name + " n=" + std::to_string(n);
        r.guarded("models/h0-lattice", subj, [&] {
            Vec fl = ns_model::floor_multiple(D, n);
            if (!lattice::integral(fl))
                throw std::logic_error("rounded class is fractional");
            Rat rr = lattice::riemann_roch(fl);
            bool ok = rr.is_integer() && rr.num() == h0;
            r.add("models/h0-lattice", subj, ok,
                  "lattice count gives " + rr.str() +
                      " sections, table says " + std::to_string(h0));
        });
        r.guarded("models/h0-hilbert", subj, [&] {
            long long got = ns_model::hilbert_h0(m.weights, m.degrees, n);
            r.add("models/h0-hilbert", subj, got == h0,
                  "coordinate ring count gives " + std::to_string(got) +
                      " sections, table says " + std::to_string(h0));
        });
    }

    std::vector<std::string> all_types;
    for (std::size_t i = 0; i < m.contractions.size(); ++i) {
        const auto& c = m.contractions[i];
        std::string subj = m.name + " contraction " + std::to_string(i);
        r.guarded("models/contraction-type", subj, [&] {
            auto labels = dynkin::classify_names(c.curves);
            std::vector<std::string> want = c.types;
            std::sort(want.begin(), want.end());
            r.add("models/contraction-type", subj, labels == want,
                  "contracted configuration classifies as " +
                      detail::join(labels, "+") + ", stated type is " +
                      detail::join(want, "+"));
        });
        r.guarded("models/contraction-orthogonal", subj, [&] {
            bool orth = true;
            for (const auto& curve : c.curves)
                if (lattice::pair(D, lattice::unit(lattice::name_index(
                        curve))) != Rat(0))
                    orth = false;
            r.add("models/contraction-orthogonal", subj, orth,
                  "a contracted curve meets the polarisation");
        });
        all_types.insert(all_types.end(), c.types.begin(), c.types.end());
    }
    std::sort(all_types.begin(), all_types.end());
    r.add("models/singularities", m.name, all_types == m.singularities,
          "stated singularity list is not the sorted union of the "
          "contraction types");

    for (std::size_t oi = 0; oi < m.outcomes.size(); ++oi) {
        const auto& o = m.outcomes[oi];
        std::string subj = m.name + " outcome " + std::to_string(oi);
        {
            std::multiset<std::string> got, want;
            long long degenerate_count = 0;
            for (const auto& comp : o.components)
                for (const auto& lbl : comp.degenerate) {
                    got.insert(lbl);
                    ++degenerate_count;
                }
            for (const auto& cp : o.composites) got.insert(cp.curve);
            for (const auto& lbl : degen::all_labels()) want.insert(lbl);
            r.add("models/outcome-partition", subj, got == want,
                  "degenerate and composite curves do not partition the "
                  "nineteen labels");
            long long rank = 0;
            bool rank_ok = true;
            for (const auto& lbl : o.gamma) {
                if (lbl.size() < 2) {
                    rank_ok = false;
                    break;
                }
                rank += std::stoll(lbl.substr(1));
            }
            r.add("models/outcome-gamma-rank", subj,
                  rank_ok && rank == degenerate_count,
                  "total rank of the configuration differs from the number "
                  "of degenerate curves");
        }
        {
            long long d2 = 0;
            for (const auto& comp : o.components) d2 += comp.d2;
            r.add("models/outcome-degree", subj, d2 == 0,
                  "component degree squares do not cancel");
        }
        r.guarded("models/outcome-k2", subj, [&] {
            bool ok = o.components.size() == 2;
            std::multiset<long long> got, want{o.k2_pair[0], o.k2_pair[1]};
            for (std::size_t ci = 0; ok && ci < o.components.size(); ++ci) {
                const auto& comp = o.components[ci];
                got.insert(comp.k2);
                ok = degen::surface_k2(comp.surface) == comp.k2 &&
                     comp.k2 == comp.d2;
            }
            r.add("models/outcome-k2", subj, ok && got == want,
                  "component surfaces do not carry the stated K^2 pair");
        });
    }

    for (const auto& claim : m.floor_claims) {
        std::string subj = m.name + "/" + claim;
        if (claim == "double_floor_plus_e9") {
            Vec lhs = ns_model::floor_multiple(D, 2);
            Vec rhs = lattice::add(
                lattice::scale(Rat(2), lattice::floor_of(D)),
                lattice::unit(9));
            r.add("models/floor-claim", subj, lhs == rhs,
                  "rounding twice the polarisation is not twice the "
                  "rounding plus the ninth generator");
        } else {
            r.add("models/floor-claim", subj, false,
                  "unrecognized floor claim");
        }
    }

    if (!m.z_intersections.empty()) {
        r.guarded("models/z-intersections", m.name, [&] {
            Vec twoD = lattice::scale(Rat(2), D);
            std::vector<std::string> bad;
            for (const auto& [name, v] : m.z_intersections)
                (void)lattice::name_index(name);
            for (int i = 0; i < lattice::kGenerators; ++i) {
                const std::string& name = lattice::names()[i];
                auto it = m.z_intersections.find(name);
                long long want = it == m.z_intersections.end() ? 0
                                                               : it->second;
                Rat got = lattice::pair(twoD, lattice::unit(i));
                if (got != Rat(want))
                    bad.push_back(name + " pairs to " + got.str() +
                                  ", table says " + std::to_string(want));
            }
            r.add("models/z-intersections", m.name, bad.empty(),
                  detail::join(bad));
        });
    }

    if (m.f3_class) {
        r.add("models/f3-section", m.name,
              lattice::verify_section(*m.f3_class, 3, D),
              "the stated cubic class is not the rounded triple of the "
              "polarisation");
        r.add("models/f3-relation", m.name,
              lattice::sub(ns_model::floor_multiple(D, 3), *m.f3_class) ==
                  lattice::r1(),
              "rounded triple minus the stated class is not the first "
              "relation");
    }

    if (m.pre_blowup) {
        r.guarded("models/pre-blowup", m.name, [&] {
            auto labels = dynkin::classify_names(m.pre_blowup->curves);
            std::vector<std::string> want = m.pre_blowup->types;
            std::sort(want.begin(), want.end());
            r.add("models/pre-blowup", m.name, labels == want,
                  "configuration before the extra blow up classifies as " +
                      detail::join(labels, "+"));
        });
    }

    if (m.expanded_equation) {
        r.guarded("models/expanded-equation", m.name, [&] {
            bool ok = !m.equations.empty() &&
                      Poly::parse(*m.expanded_equation) ==
                          Poly::parse(m.equations[0].text);
            r.add("models/expanded-equation", m.name, ok,
                  "expanded form does not multiply out to the defining "
                  "equation");
        });
    }

    if (m.scroll_branch) {
        r.guarded("models/scroll-branch", m.name, [&] {
            Poly sb = Poly::parse(*m.scroll_branch);
            Poly eq = Poly::parse(m.equations.at(0).text);
            Poly branch = Poly::var("w", 2) - eq;
            Poly chart = sb.substitute("u", Poly::constant(Rat(1)))
                             .substitute("v", Poly::var("z"));
            r.add("models/scroll-branch-chart", m.name, chart == branch,
                  "branch curve does not restrict to the chart form of the "
                  "double cover");
            std::map<std::string, Poly> scaling;
            scaling["x"] = Poly::term(Rat(1), {{"lam", 1}, {"x", 1}});
            scaling["y"] = Poly::term(Rat(1), {{"lam", 1}, {"y", 1}});
            scaling["u"] = Poly::term(Rat(1), {{"lam", -2}, {"u", 1}});
            r.add("models/scroll-branch-weight", m.name,
                  sb.substitute_all(scaling) == sb,
                  "branch curve is not invariant under the scroll torus");
            auto hd = poly::homogeneous_degree(sb, {{"u", 1}, {"v", 1}});
            r.add("models/scroll-branch-ruling", m.name,
                  hd.has_value() && *hd == 4,
                  "branch curve does not have degree 4 over the ruling");
            Poly g = sb.substitute("y", Poly::constant(Rat(1)))
                         .substitute("v", Poly::constant(Rat(1)));
            auto at_origin = [](const Poly& p) {
                return p.substitute("x", Poly::constant(Rat(0)))
                    .substitute("u", Poly::constant(Rat(0)));
            };
            bool singular = at_origin(g).zero() &&
                            at_origin(g.derivative("x")).zero() &&
                            at_origin(g.derivative("u")).zero();
            r.add("models/scroll-branch-singular", m.name, singular,
                  "branch curve is not singular along the directrix");
        });
    }
}

inline void run_toric_checks(const catalog::Catalog& cat,
                             std::vector<CheckResult>& out) {
    using poly::Monomial;
    using poly::Poly;
    detail::Recorder r{out};
    const catalog::Toric& t = cat.toric;

    r.add("toric/vertex-count", "", t.vertices.size() == 4,
          "expected four vertices");
    r.guarded("toric/reflexive", "", [&] {
        r.add("toric/reflexive", "", toric::is_reflexive(t.vertices),
              "polar dual has fractional vertices");
        auto dual = toric::polar_dual(t.vertices);
        std::vector<toric::IntVert> dual_z;
        for (const auto& v : dual) {
            toric::IntVert w{};
            for (int i = 0; i < 3; ++i) {
                if (!v[i].is_integer())
                    throw std::logic_error("dual vertex is fractional");
                w[i] = v[i].num();
            }
            dual_z.push_back(w);
        }
        auto back = toric::polar_dual(dual_z);
        auto orig = toric::to_rational(t.vertices);
        std::sort(orig.begin(), orig.end());
        r.add("toric/double-dual", "", back == orig,
              "dual of the dual is not the original polytope");
    });
    {
        std::array<long long, 3> acc{};
        bool ok = t.vertices.size() == 4;
        if (ok)
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 3; ++k)
                    acc[k] += static_cast<long long>(t.weight_relation[i]) *
                              t.vertices[i][k];
        ok = ok && acc[0] == 0 && acc[1] == 0 && acc[2] == 0;
        r.add("toric/weight-relation", "", ok,
              "weighted vertex sum does not vanish");
    }

    r.guarded("toric/grading", "", [&] {
        auto g = toric::Grading::from_weights(t.weight_relation);

        gram::IntMatrix rows(4, std::vector<long long>(3));
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 3; ++k) rows[i][k] = t.vertices[i][k];
        auto snf = gram::smith_normal_form(rows);
        r.add("toric/smith-factors", "", snf.factors == t.snf,
              "Smith invariant factors differ from the catalog");
        long long idx = toric::sublattice_index(rows);
        r.add("toric/sublattice-index", "", idx == t.sublattice_index,
              "vertex sublattice index " + std::to_string(idx) +
                  " differs from the catalog");
        auto gc = toric::group_order(g);
        r.add("toric/group-order", "",
              gc.cosets == t.group_order &&
                  static_cast<long long>(toric::group_elements(g).size()) ==
                      t.group_order,
              "symmetry group order " + std::to_string(gc.cosets) +
                  " differs from the catalog");
        r.add("toric/index-matches-group", "", idx == gc.cosets,
              "sublattice index and symmetry group order disagree");

        auto cd = toric::cox_degree(g, {1, 1, 1, 1});
        r.add("toric/product-degree", "",
              cd.degree == g.modulus &&
                  cd.cls == toric::ClassTuple{0, 0, 0, 0},
              "coordinate product is not anticanonical and invariant");

        auto inv = toric::invariant_monomials(g);
        std::vector<toric::Exponents> stored;
        bool mono_ok = t.coefficients.size() == t.monomials.size();
        for (std::size_t i = 0; mono_ok && i < t.monomials.size(); ++i) {
            stored.push_back(t.monomials[i].exponents);
            mono_ok = t.monomials[i].coefficient == t.coefficients[i];
        }
        std::sort(stored.begin(), stored.end());
        mono_ok = mono_ok && stored == inv &&
                  std::adjacent_find(stored.begin(), stored.end()) ==
                      stored.end();
        r.add("toric/invariant-monomials", "", mono_ok,
              "enumerated invariant monomials differ from the catalog "
              "family");
        bool deg_ok = true;
        for (const auto& mono : t.monomials) {
            auto d = toric::cox_degree(g, mono.exponents);
            if (d.degree != g.modulus ||
                d.cls != toric::ClassTuple{0, 0, 0, 0})
                deg_ok = false;
        }
        r.add("toric/monomial-degrees", "", deg_ok,
              "a family monomial is not anticanonical and invariant");

        std::map<std::string, toric::Exponents> by_name;
        for (const auto& mono : t.monomials)
            by_name[mono.coefficient] = mono.exponents;
        bool pivots_ok = t.pivots.size() == 4;
        for (const auto& p : t.pivots)
            pivots_ok = pivots_ok && by_name.count(p) > 0;
        r.add("toric/pivots", "", pivots_ok,
              "pivot coefficients are not four members of the family");
        if (pivots_ok)
            for (const auto& b : t.b_invariants) {
                auto it = by_name.find(b.monomial);
                if (it == by_name.end()) {
                    r.add("toric/b-invariant", b.name, false,
                          "names a coefficient outside the family");
                    continue;
                }
                std::vector<std::pair<toric::Exponents, long long>> parts;
                parts.push_back({it->second, 1});
                for (int j = 0; j < 4; ++j)
                    parts.push_back({by_name.at(t.pivots[j]),
                                     b.exponents[j]});
                r.add("toric/b-invariant", b.name,
                      toric::invariance_check(parts),
                      "combination is not fixed by the ambient torus");
            }
    });

    r.guarded("toric/pipeline", "", [&] {
        Poly hs = Poly::parse(t.pipeline.hypersurface);
        Poly c1 = Poly::parse(t.pipeline.c1);
        Poly c2 = Poly::parse(t.pipeline.c2);
        struct ChartShape {
            const catalog::Chart* chart;
            const char* label;
            const char* base;
            const char* m1;
            const char* m2;
        };
        const std::array<ChartShape, 2> charts{
            {{&t.pipeline.chart8, "chart8", "1 + b0*z^2 + x^3*z + y^2*z",
              "z", "x*z"},
             {&t.pipeline.chart4, "chart4", "z^3 + b0*z + y^3*z^2 + w^2",
              "z^2", "y*z^2"}}};
        for (const auto& cs : charts) {
            const catalog::Chart& c = *cs.chart;
            r.guarded("toric/chart", cs.label, [&] {
                if (c.variables.size() != 3)
                    throw std::logic_error("chart needs three coordinates");
                std::map<std::string, Poly> images;
                for (std::size_t i = 0; i < c.substitution.size(); ++i) {
                    Monomial mono;
                    for (int k = 0; k < 3; ++k)
                        if (c.substitution[i][k] != 0)
                            mono[c.variables[k]] = c.substitution[i][k];
                    images["y" + std::to_string(i)] =
                        Poly::term(Rat(1), mono);
                }
                auto [cleared, mult] =
                    hs.substitute_all(images).clear_denominators();
                Monomial want_clear;
                for (std::size_t k = 0;
                     k < c.clearing.size() && k < c.variables.size(); ++k)
                    if (c.clearing[k] != 0)
                        want_clear[c.variables[k]] = c.clearing[k];
                r.add("toric/chart-clearing", cs.label, mult == want_clear,
                      "denominator clearing multiplies by an unexpected "
                      "monomial");
                Poly target = Poly::parse(c.target);
                r.add("toric/chart-target", cs.label, cleared == target,
                      "cleared restriction differs from the stored chart "
                      "equation");

                std::string square_var, cube_var, square_key, cube_key;
                for (const auto& [key, text] : c.shifts) {
                    std::string v = key.substr(std::string("shift_").size());
                    int d = target.degree_in(v);
                    if (d == 2) {
                        square_var = v;
                        square_key = key;
                    } else if (d == 3) {
                        cube_var = v;
                        cube_key = key;
                    }
                }
                if (c.shifts.size() != 2 || square_var.empty() ||
                    cube_var.empty())
                    throw std::logic_error(
                        "chart does not carry one square and one cube "
                        "shift");
                auto step1 = poly::complete_power(target, square_var, 2);
                r.add("toric/chart-square-shift", cs.label,
                      step1.shift == Poly::parse(c.shifts.at(square_key)),
                      "square completion shift differs from the stored "
                      "value");
                auto step2 =
                    poly::complete_power(step1.reduced, cube_var, 3);
                r.add("toric/chart-cube-shift", cs.label,
                      step2.shift == Poly::parse(c.shifts.at(cube_key)),
                      "cube completion shift differs from the stored value");
                Poly result = Poly::parse(c.result);
                r.add("toric/chart-result", cs.label,
                      step2.reduced == result,
                      "completed equation differs from the stored result");
                Poly want = Poly::parse(cs.base) + c1 * Poly::parse(cs.m1) +
                            c2 * Poly::parse(cs.m2);
                r.add("toric/chart-coefficients", cs.label, result == want,
                      "result does not split into the normal form with the "
                      "shared coefficient pair");
            });
        }
    });
}

inline void run_flop_checks(const catalog::Catalog& cat,
                            std::vector<CheckResult>& out) {
    detail::Recorder r{out};

    {
        degen::State builtin = degen::seed_state();
        r.add("flops/seed", "",
              cat.seed_state.sides == builtin.sides &&
                  cat.seed_state.shared == builtin.shared,
              "catalog seed state differs from the built in pair");
    }

    r.guarded("flops/enumeration", "", [&] {
        auto q = degen::enumerate_degenerations();
        r.add("flops/state-count", "",
              static_cast<long long>(q.full.states.size()) ==
                  cat.graph.counts.states,
              "enumerated " + std::to_string(q.full.states.size()) +
                  " states, catalog says " +
                  std::to_string(cat.graph.counts.states));
        r.add("flops/class-count", "",
              static_cast<long long>(q.classes.size()) ==
                  cat.graph.counts.classes,
              "enumerated " + std::to_string(q.classes.size()) +
                  " reflection classes, catalog says " +
                  std::to_string(cat.graph.counts.classes));
        r.add("flops/edge-count", "",
              static_cast<long long>(q.edges.size()) ==
                  cat.graph.counts.edges,
              "enumerated " + std::to_string(q.edges.size()) +
                  " class adjacencies, catalog says " +
                  std::to_string(cat.graph.counts.edges));

        {
            bool triple = true, books = true, anchors = true;
            for (const auto& st : q.full.states) {
                if (!degen::triple_point_check(st)) triple = false;
                auto tg = degen::tags(st);
                auto miss = degen::missing_labels(st);
                std::set<std::string> seen;
                std::size_t total = 0;
                for (int s = 0; s < 2; ++s) {
                    total += tg[s].size();
                    for (const auto& l : tg[s]) seen.insert(l);
                }
                if (seen.size() != total) books = false;
                if (total + miss.size() != 19) books = false;
                if (miss.size() < 1 || miss.size() > 2) books = false;
                auto labels = degen::all_labels();
                for (const auto& l : seen)
                    if (std::find(labels.begin(), labels.end(), l) ==
                        labels.end())
                        books = false;
                for (const auto& side : st.sides) {
                    if (side.points.size() != 1) anchors = false;
                    for (const auto& [cid, cv] : side.curves)
                        if (cv.sq <= -2 && (cv.sq != -2 || !cv.label))
                            anchors = false;
                }
            }
            r.add("flops/triple-point", "", triple,
                  "a state fails the gluing balance");
            r.add("flops/tag-bookkeeping", "", books,
                  "a state breaks the label accounting");
            r.add("flops/anchor-curves", "", anchors,
                  "a state carries a stray marked point or an unlabelled "
                  "curve of square at most minus two");
        }

        {
            std::map<int, int> census;
            for (const auto& st : q.full.states) ++census[st.sides[0].k2];
            bool ok = census.size() == 19;
            for (int k = -9; k <= 9; ++k) {
                auto it = census.find(k);
                int want = (k == 8 || k == -8) ? 2 : 1;
                if (it == census.end() || it->second != want) ok = false;
            }
            r.add("flops/census", "", ok,
                  "K^2 census over the enumerated states is off");
        }

        {
            bool ok = true;
            for (const auto& [a, b] : q.full.edges) {
                auto ma = degen::missing_labels(q.full.states[a]);
                auto mb = degen::missing_labels(q.full.states[b]);
                std::vector<std::string> sym;
                std::set_symmetric_difference(ma.begin(), ma.end(),
                                              mb.begin(), mb.end(),
                                              std::back_inserter(sym));
                if (sym.empty() || sym.size() > 3) ok = false;
            }
            r.add("flops/edge-missing-shift", "", ok,
                  "a flop moves the unbroken labels by an impossible "
                  "amount");
        }

        std::map<std::string, const catalog::ClassRow*> rows;
        bool rows_ok = true;
        for (const auto& row : cat.graph.classes)
            if (!rows.emplace(detail::gamma_key(row.gamma), &row).second)
                rows_ok = false;
        r.add("flops/rows-distinct", "", rows_ok,
              "two catalog rows share a configuration");

        std::map<int, std::string> row_key_of_class;
        std::set<std::string> matched;
        for (std::size_t ci = 0; ci < q.classes.size(); ++ci) {
            const degen::State& rep = q.full.states[q.rep[ci]];
            std::string key = detail::gamma_key(degen::classify_gamma(rep));
            auto it = rows.find(key);
            if (it == rows.end()) {
                r.add("flops/class-identified", key, false,
                      "enumeration found a degeneration the catalog does "
                      "not list");
                continue;
            }
            matched.insert(key);
            const catalog::ClassRow& row = *it->second;
            row_key_of_class[static_cast<int>(ci)] = row.key;

            r.add("flops/class-identified", row.key, true, "");
            r.add("flops/class-k2", row.key,
                  row.k2 == std::abs(rep.sides[0].k2),
                  "class K^2 level differs from the catalog");
            r.add("flops/class-size", row.key,
                  row.size == static_cast<int>(q.classes[ci].size()),
                  "class has " + std::to_string(q.classes[ci].size()) +
                      " states, catalog says " + std::to_string(row.size));
            {
                auto miss = degen::missing_labels(rep);
                std::vector<std::string> got(miss.begin(), miss.end());
                std::vector<std::string> want = row.missing;
                std::sort(want.begin(), want.end());
                r.add("flops/class-missing", row.key, got == want,
                      "unbroken labels differ from the catalog");
            }
            {
                auto tg = degen::tags(rep);
                bool ok = true;
                for (int s = 0; s < 2; ++s)
                    ok = ok && row.sides[s].k2 == rep.sides[s].k2 &&
                         row.sides[s].d2 == rep.sides[s].d2 &&
                         row.sides[s].tags == tg[s];
                r.add("flops/class-sides", row.key, ok,
                      "per side data differs from the catalog");
            }
            r.guarded("flops/class-model", row.key, [&] {
                const catalog::Model& mdl =
                    catalog::model_by_name(cat, row.model);
                if (row.outcome < 0 ||
                    row.outcome >=
                        static_cast<int>(mdl.outcomes.size()))
                    throw std::logic_error("outcome index out of range");
                const catalog::Outcome& oc = mdl.outcomes[row.outcome];
                auto tg = degen::tags(rep);
                auto miss = degen::missing_labels(rep);
                std::optional<std::string> found;
                for (const char* phi : {"identity", "mirror"}) {
                    bool mirrored = std::string(phi) == "mirror";
                    auto apply = [&](std::vector<std::string> v) {
                        if (mirrored)
                            for (auto& lbl : v)
                                lbl = degen::mirror_label(lbl);
                        std::sort(v.begin(), v.end());
                        return v;
                    };
                    for (const auto& assign :
                         {std::array<int, 2>{0, 1},
                          std::array<int, 2>{1, 0}}) {
                        bool ok = oc.components.size() == 2;
                        for (int s = 0; ok && s < 2; ++s) {
                            const auto& comp = oc.components[assign[s]];
                            ok = apply(comp.degenerate) == tg[s] &&
                                 comp.d2 == rep.sides[s].d2 &&
                                 degen::surface_k2(comp.surface) ==
                                     rep.sides[s].k2;
                        }
                        if (ok) {
                            std::vector<std::string> broken;
                            for (const auto& cp : oc.composites)
                                broken.push_back(cp.curve);
                            broken = apply(broken);
                            ok = broken ==
                                 std::vector<std::string>(miss.begin(),
                                                          miss.end());
                        }
                        if (ok && !found) found = phi;
                    }
                }
                r.add("flops/class-model", row.key,
                      found.has_value() && *found == row.phi,
                      found ? "model outcome matches under " + *found +
                                  ", catalog says " + row.phi
                            : "no relabelling matches the model outcome");
            });
        }
        for (const auto& [key, row] : rows)
            if (!matched.count(key))
                r.add("flops/class-identified", row->key, false,
                      "catalog lists a degeneration the enumeration never "
                      "reached");

        {
            std::map<int, std::set<std::string>> nbrs;
            for (const auto& [a, b] : q.edges) {
                auto ia = row_key_of_class.find(a);
                auto ib = row_key_of_class.find(b);
                if (ia == row_key_of_class.end() ||
                    ib == row_key_of_class.end())
                    continue;
                nbrs[a].insert(ib->second);
                nbrs[b].insert(ia->second);
            }
            for (const auto& [ci, key] : row_key_of_class) {
                const catalog::ClassRow& row =
                    *rows.at(detail::gamma_key(degen::classify_gamma(
                        q.full.states[q.rep[ci]])));
                std::vector<std::string> got(nbrs[ci].begin(),
                                             nbrs[ci].end());
                std::vector<std::string> want = row.neighbors;
                std::sort(want.begin(), want.end());
                r.add("flops/class-neighbors", key, got == want,
                      "adjacent classes differ from the catalog");
            }
        }

        for (const auto& [ci, key] : row_key_of_class) {
            const degen::State& rep = q.full.states[q.rep[ci]];
            const catalog::ClassRow& row =
                *rows.at(detail::gamma_key(degen::classify_gamma(rep)));
            int pos = rep.sides[0].k2 == row.k2 ? 0 : 1;
            const degen::Side& side = rep.sides[pos];
            if (key == "e18") {
                bool ok = side.curves.size() == 1;
                if (ok) {
                    const auto& [cid, c] = *side.curves.begin();
                    const auto& pd = side.points.at(rep.shared[pos]);
                    ok = c.sq == 1 && c.d == 3 && pd.size() == 1 &&
                         pd.count(cid) &&
                         pd.at(cid) == std::make_pair(1, 3);
                }
                r.add("flops/terminal-structure", key, ok,
                      "fully flopped side is not a plane with a triple "
                      "point on its cubic");
            } else if (key == "e17") {
                bool ok = side.curves.size() == 2;
                if (ok) {
                    const degen::Curve* neg = nullptr;
                    const degen::Curve* nil = nullptr;
                    std::string nid;
                    for (const auto& [cid, c] : side.curves) {
                        if (c.sq == -1) neg = &c;
                        if (c.sq == 0) {
                            nil = &c;
                            nid = cid;
                        }
                    }
                    const auto& pd = side.points.at(rep.shared[pos]);
                    std::multiset<std::pair<int, int>> marks;
                    for (const auto& [cid, mk] : pd) marks.insert(mk);
                    ok = neg && nil && marks ==
                         std::multiset<std::pair<int, int>>{{1, 1}, {1, 2}};
                    if (ok) {
                        std::string oid;
                        for (const auto& [cid, c] : side.curves)
                            if (cid != nid) oid = cid;
                        ok = side.get_i(nid, oid) == 1;
                    }
                }
                r.add("flops/terminal-structure", key, ok,
                      "scroll side does not pair a (-1) section with a "
                      "fibre through the marked point");
            } else if (key == "a1e17") {
                bool ok = side.curves.size() == 2;
                if (ok) {
                    std::string nid, tid;
                    const degen::Curve* neg2 = nullptr;
                    const degen::Curve* nil = nullptr;
                    for (const auto& [cid, c] : side.curves) {
                        if (c.sq == -2) {
                            neg2 = &c;
                            tid = cid;
                        }
                        if (c.sq == 0) {
                            nil = &c;
                            nid = cid;
                        }
                    }
                    const auto& pd = side.points.at(rep.shared[pos]);
                    ok = neg2 && neg2->label.has_value() && nil &&
                         nil->d == 2 && side.get_i(nid, tid) == 1 &&
                         pd.size() == 1 && pd.count(nid) &&
                         pd.at(nid) == std::make_pair(1, 2);
                }
                r.add("flops/terminal-structure", key, ok,
                      "quadric cone side does not show a labelled (-2) "
                      "against a conic through the marked point");
            } else if (key == "a1e16") {
                r.add("flops/terminal-structure", key,
                      degen::eligible(rep, pos).size() == 2,
                      "branch class does not offer exactly two flops on "
                      "its positive side");
            }
        }
    });
}

inline void run_property_checks(const catalog::Catalog&,
                                std::vector<CheckResult>& out) {
    using lattice::Vec;
    using poly::Poly;
    detail::Recorder r{out};
    std::mt19937 rng(0x5eed);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() %
                                     static_cast<unsigned>(hi - lo + 1));
    };

    r.guarded("properties/relation-shift", "", [&] {
        bool invariant = true, idempotent = true;
        for (int iter = 0; iter < 200; ++iter) {
            Vec v = lattice::zero(), w = lattice::zero();
            for (int i = 0; i < lattice::kGenerators; ++i) {
                v[i] = Rat(rnd(-9, 9));
                w[i] = Rat(rnd(-9, 9));
            }
            Vec shifted = v;
            shifted = lattice::add(shifted,
                                   lattice::scale(Rat(rnd(-5, 5)),
                                                  lattice::r1()));
            shifted = lattice::add(shifted,
                                   lattice::scale(Rat(rnd(-5, 5)),
                                                  lattice::r2()));
            shifted = lattice::add(shifted,
                                   lattice::scale(Rat(rnd(-5, 5)),
                                                  lattice::r3()));
            if (lattice::pair(shifted, w) != lattice::pair(v, w))
                invariant = false;
            if (lattice::canonicalize(shifted) != lattice::canonicalize(v))
                invariant = false;
            Vec c = lattice::canonicalize(v);
            if (lattice::canonicalize(c) != c) idempotent = false;
        }
        r.add("properties/relation-shift", "", invariant,
              "pairing or canonical form moved under a relation shift");
        r.add("properties/canonical-idempotent", "", idempotent,
              "canonical form is not a projection");
    });

    auto random_state = [&]() {
        degen::State st = degen::seed_state();
        int steps = rnd(0, 8);
        for (int k = 0; k < steps; ++k) {
            int side = rnd(0, 1);
            auto el = degen::eligible(st, side);
            if (el.empty()) {
                side = 1 - side;
                el = degen::eligible(st, side);
            }
            if (el.empty()) break;
            degen::flop(st, side, el[static_cast<std::size_t>(
                                      rnd(0, static_cast<int>(el.size()) -
                                                 1))]);
        }
        return st;
    };

    r.guarded("properties/contract-extract", "", [&] {
        bool ok = true;
        for (int iter = 0; iter < 100 && ok; ++iter) {
            degen::State st = random_state();
            int side = rnd(0, 1);
            auto el = degen::eligible(st, side);
            if (el.empty()) {
                side = 1 - side;
                el = degen::eligible(st, side);
            }
            if (el.empty()) continue;
            std::string cid = el[static_cast<std::size_t>(
                rnd(0, static_cast<int>(el.size()) - 1))];
            degen::Side before = st.sides[side];
            degen::Curve orig = before.curves.at(cid);
            degen::Side work = before;
            std::string pid = degen::blow_down(work, cid);
            degen::blow_up(work, pid, cid, orig.label);
            ok = work == before;
        }
        r.add("properties/contract-extract", "", ok,
              "contracting and re-extracting a curve changed the side");
    });

    r.guarded("properties/extract-contract", "", [&] {
        bool ok = true;
        for (int iter = 0; iter < 100 && ok; ++iter) {
            degen::State st = random_state();
            int side = rnd(0, 1);
            degen::Side before = st.sides[side];
            if (before.points.empty()) continue;
            auto pit = before.points.begin();
            std::advance(pit, rnd(0, static_cast<int>(
                                         before.points.size()) - 1));
            std::string fresh = "t0";
            while (before.curves.count(fresh)) fresh += "t";
            degen::Side work = before;
            degen::blow_up(work, pit->first, fresh);
            degen::blow_down(work, fresh);
            ok = work == before;
        }
        r.add("properties/extract-contract", "", ok,
              "extracting and contracting a fresh curve changed the side");
    });

    r.guarded("properties/power-shift", "", [&] {
        auto mono = [&](int xe, int amax, int bmax) {
            poly::Monomial m;
            if (xe) m["x"] = xe;
            int ea = rnd(0, amax), eb = rnd(0, bmax);
            if (ea) m["a"] = ea;
            if (eb) m["b"] = eb;
            return m;
        };
        bool ok = true;
        for (int iter = 0; iter < 100 && ok; ++iter) {
            int k = rnd(0, 1) ? 2 : 3;
            Poly lead = Poly::term(Rat(rnd(0, 1) ? rnd(1, 3) : -rnd(1, 3)),
                                   mono(0, 2, 2));
            Poly shift;
            int nterms = rnd(0, 3);
            for (int ti = 0; ti < nterms; ++ti)
                shift += Poly::term(Rat(rnd(-3, 3)), mono(0, 2, 1));
            Poly x = Poly::var("x");
            Poly p = lead * (x + shift).pow(k);
            for (int d = 0; d <= k - 2; ++d)
                p += Poly::term(Rat(rnd(-4, 4)), mono(d, 0, 2));
            auto cp = poly::complete_power(p, "x", k);
            ok = cp.shift == shift &&
                 cp.reduced == p.substitute("x", x - shift);
        }
        r.add("properties/power-shift", "", ok,
              "power completion does not recover the planted shift");
    });
}

struct Report {
    std::vector<CheckResult> results;

    long long failed() const {
        long long n = 0;
        for (const auto& c : results)
            if (!c.pass) ++n;
        return n;
    }
    long long passed() const {
        return static_cast<long long>(results.size()) - failed();
    }
    bool ok() const { return failed() == 0; }
};

inline Report run_all(const catalog::Catalog& cat) {
    Report rep;
    run_lattice_checks(cat, rep.results);
    run_moduli_checks(cat, rep.results);
    for (const auto& m : cat.models)
        run_model_checks(cat, m, rep.results);
    run_toric_checks(cat, rep.results);
    run_flop_checks(cat, rep.results);
    run_property_checks(cat, rep.results);
    return rep;
}

inline std::string to_json(const Report& rep,
                           std::optional<long long> elapsed_ms = {}) {
    nlohmann::json j;
    j["total"] = rep.results.size();
    j["passed"] = rep.passed();
    j["failed"] = rep.failed();
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : rep.results) {
        nlohmann::json e;
        e["id"] = c.id;
        e["subject"] = c.subject;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

inline std::string to_markdown(const Report& rep,
                               std::optional<long long> elapsed_ms = {}) {
    std::string out = "# Verification report\n\n";
    out += "| status | check | subject | note |\n";
    out += "| --- | --- | --- | --- |\n";
    for (const auto& c : rep.results) {
        out += "| ";
        out += c.pass ? "pass" : "FAIL";
        out += " | " + c.id + " | " + c.subject + " | " + c.detail + " |\n";
    }
    out += "\n" + std::to_string(rep.passed()) + " of " +
           std::to_string(rep.results.size()) + " checks passed";
    if (elapsed_ms)
        out += " in " + std::to_string(*elapsed_ms) + " ms";
    out += ".\n";
    return out;
}

} // namespace k3deg::checks
