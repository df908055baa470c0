#pragma once

// Bracket tables with multivariate-polynomial coefficients and the Jacobi
// constraint-reduction pipeline.
//
// Reduction runs in two phases.
//
// Phase 1, linear fixpoint: repeatedly pick an equation in which some
// unknown occurs linearly with a nonzero *constant* coefficient, solve for
// it (lexicographically smallest candidate name first), back-substitute
// everywhere, and iterate. This resolves the semisimple-vertical templates
// completely.
//
// Phase 2, arbitrary-parameter refinement (only for templates that declare a
// free-parameter set): the remaining unknowns are posited to be affine-linear
// functions of the declared parameters; substituting that ansatz into the
// residual equations of degree <= 1 in the unknowns and matching coefficients
// of parameter monomials yields a plain linear system, solved by phase 1
// machinery. An unknown is committed only when all of its ansatz coefficients
// are forced; otherwise the residual is reported untouched. This mechanizes
// the statement "the declared parameters are arbitrary": any equation that
// must hold identically in them pins the remaining unknowns. The mixed
// vertical blocks need it, e.g. to discover that the second horizontal
// coefficient of [T,Y] equals -x1.

#include <liefol/algebra.hpp>
#include <liefol/polynomial.hpp>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liefol {

struct SymbolicAlgebra {
    std::vector<std::string> basis;
    // (i,j) with i<j -> coefficient vector of [e_i, e_j]; absent pairs are zero.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> c;

    std::size_t dim() const { return basis.size(); }

    std::vector<Polynomial> bracket_basis(std::size_t i, std::size_t j) const
    {
        std::vector<Polynomial> out(dim());
        if (i == j) return out;
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = c.find({i, j});
        if (it == c.end()) return out;
        for (std::size_t k = 0; k < dim(); ++k) out[k] = flip ? -it->second[k] : it->second[k];
        return out;
    }

    std::set<std::string> variables() const
    {
        std::set<std::string> out;
        for (const auto& [_, coeffs] : c)
            for (const auto& p : coeffs)
                for (const auto& v : p.variables()) out.insert(v);
        return out;
    }
};

struct EquationProvenance {
    std::array<std::size_t, 3> triple;
    std::size_t coord;
};

struct TaggedEquation {
    Polynomial p;
    std::optional<EquationProvenance> origin;
};

struct InconsistentSystem : std::runtime_error {
    explicit InconsistentSystem(std::vector<EquationProvenance> prov)
        : std::runtime_error(describe(prov)), provenance(std::move(prov))
    {
    }
    std::vector<EquationProvenance> provenance;

private:
    static std::string describe(const std::vector<EquationProvenance>& prov)
    {
        std::ostringstream os;
        os << "inconsistent linear subsystem";
        if (!prov.empty()) {
            os << "; contradiction from triple(s):";
            for (const auto& p : prov)
                os << " (" << p.triple[0] << "," << p.triple[1] << "," << p.triple[2] << ")#"
                   << p.coord;
        }
        return os.str();
    }
};

// Symbolic Jacobi defect of the basis triple (i,j,k), one polynomial per
// basis coordinate.
inline std::vector<Polynomial> jacobi_defect(const SymbolicAlgebra& sa, std::size_t i, std::size_t j,
                                             std::size_t k)
{
    const std::size_t n = sa.dim();
    std::vector<Polynomial> out(n);
    // [[e_a,e_b],e_c] = sum_w <[e_a,e_b],e_w> [e_w,e_c]
    auto accumulate = [&](std::size_t a, std::size_t b, std::size_t cidx) {
        std::vector<Polynomial> inner = sa.bracket_basis(a, b);
        for (std::size_t w = 0; w < n; ++w) {
            if (inner[w].is_zero()) continue;
            std::vector<Polynomial> outer = sa.bracket_basis(w, cidx);
            for (std::size_t t = 0; t < n; ++t)
                if (!outer[t].is_zero()) out[t] += inner[w] * outer[t];
        }
    };
    accumulate(i, j, k);
    accumulate(j, k, i);
    accumulate(k, i, j);
    return out;
}

// Every nonzero defect coordinate over all i<j<k, in lexicographic triple
// order then coordinate order.
inline std::vector<TaggedEquation> jacobi_system_tagged(const SymbolicAlgebra& sa)
{
    std::vector<TaggedEquation> out;
    const std::size_t n = sa.dim();
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<Polynomial> d = jacobi_defect(sa, i, j, k);
                for (std::size_t t = 0; t < n; ++t)
                    if (!d[t].is_zero())
                        out.push_back({std::move(d[t]), EquationProvenance{{i, j, k}, t}});
            }
    return out;
}

inline std::vector<Polynomial> jacobi_system(const SymbolicAlgebra& sa)
{
    std::vector<Polynomial> out;
    for (auto& eq : jacobi_system_tagged(sa)) out.push_back(std::move(eq.p));
    return out;
}

struct ReductionResult {
    std::map<std::string, Polynomial> substitutions; // fully back-substituted
    std::vector<TaggedEquation> residual;            // no linearly isolatable variable left
    std::vector<std::string> free_vars;              // unknowns never pinned
};

namespace detail {

struct ReduceState {
    std::vector<TaggedEquation> eqs;
    std::map<std::string, Polynomial> subs;
};

// Applies v -> rhs across the system and the recorded substitutions, keeping
// every right-hand side free of solved variables.
inline void apply_substitution(ReduceState& st, const std::string& v, const Polynomial& rhs)
{
    std::map<std::string, Polynomial> one{{v, rhs}};
    for (auto& eq : st.eqs)
        if (eq.p.degree_in(v) > 0) eq.p = eq.p.substituted(one);
    for (auto& [_, r] : st.subs)
        if (r.degree_in(v) > 0) r = r.substituted(one);
    st.subs[v] = rhs;
}

// Drops satisfied equations; throws on nonzero-constant ones.
inline void simplify(ReduceState& st)
{
    std::vector<TaggedEquation> keep;
    std::vector<EquationProvenance> contradictions;
    bool contradictory = false;
    for (auto& eq : st.eqs) {
        if (eq.p.is_zero()) continue;
        if (eq.p.is_constant()) {
            contradictory = true;
            if (eq.origin) contradictions.push_back(*eq.origin);
            continue;
        }
        keep.push_back(std::move(eq));
    }
    if (contradictory) throw InconsistentSystem(std::move(contradictions));
    st.eqs = std::move(keep);
}

// One full phase-1 pass: eliminate until no equation offers a variable with
// a nonzero constant coefficient.
inline void linear_fixpoint(ReduceState& st)
{
    for (;;) {
        simplify(st);
        std::optional<std::string> best_var;
        std::size_t best_eq = 0;
        Rational best_coeff;
        Polynomial best_rest;
        for (std::size_t e = 0; e < st.eqs.size(); ++e) {
            for (const auto& v : st.eqs[e].p.variables()) {
                if (best_var && !(v < *best_var)) continue;
                if (auto iso = st.eqs[e].p.isolate_linear(v)) {
                    best_var = v;
                    best_eq = e;
                    best_coeff = iso->first;
                    best_rest = iso->second;
                }
            }
        }
        if (!best_var) return;
        (void)best_eq;
        Polynomial rhs = (Rational(-1) / best_coeff) * best_rest;
        apply_substitution(st, *best_var, rhs);
    }
}

// Phase 2: posit unknowns as affine-linear functions of the declared
// parameters and match coefficients of parameter monomials. Returns true
// when at least one unknown was committed.
inline bool refine_with_parameters(ReduceState& st, const std::set<std::string>& parameters)
{
    std::set<std::string> determined;
    for (const auto& eq : st.eqs)
        for (const auto& v : eq.p.variables())
            if (!parameters.count(v)) determined.insert(v);
    if (determined.empty()) return false;

    std::vector<TaggedEquation> usable;
    for (const auto& eq : st.eqs)
        if (eq.p.degree_in_set(determined) == 1) usable.push_back(eq);
    if (usable.empty()) return false;

    auto lambda_name = [](const std::string& v, const std::string& p) { return "@" + v + ":" + p; };

    std::map<std::string, Polynomial> ansatz;
    for (const auto& v : determined) {
        Polynomial form = Polynomial::variable(lambda_name(v, "1"));
        for (const auto& p : parameters)
            form += Polynomial::variable(lambda_name(v, p)) * Polynomial::variable(p);
        ansatz[v] = std::move(form);
    }

    ReduceState lam;
    for (const auto& eq : usable) {
        Polynomial expanded = eq.p.substituted(ansatz);
        for (auto& [param_mono, cofactor] : expanded.collect(parameters))
            lam.eqs.push_back({std::move(cofactor), eq.origin});
    }
    try {
        linear_fixpoint(lam);
    } catch (const InconsistentSystem&) {
        return false; // the affine ansatz does not fit; leave the residual as-is
    }

    bool progress = false;
    ReduceState trial = st;
    for (const auto& v : determined) {
        Polynomial value;
        bool pinned = true;
        auto coeff_of = [&](const std::string& p) -> std::optional<Rational> {
            auto it = lam.subs.find(lambda_name(v, p));
            if (it == lam.subs.end() || !it->second.is_constant()) return std::nullopt;
            return it->second.constant_value();
        };
        if (auto c0 = coeff_of("1"))
            value += Polynomial(*c0);
        else
            pinned = false;
        for (const auto& p : parameters) {
            if (!pinned) break;
            if (auto cp = coeff_of(p))
                value += Polynomial(*cp) * Polynomial::variable(p);
            else
                pinned = false;
        }
        if (!pinned) continue;
        apply_substitution(trial, v, value);
        progress = true;
    }
    if (!progress) return false;
    try {
        simplify(trial);
    } catch (const InconsistentSystem&) {
        return false; // commits contradict a nonlinear residual equation; keep the residual
    }
    st = std::move(trial);
    return true;
}

inline std::vector<TaggedEquation> dedup(const std::vector<TaggedEquation>& eqs)
{
    std::vector<TaggedEquation> out;
    for (const auto& eq : eqs) {
        bool dup = false;
        for (const auto& kept : out)
            if (kept.p == eq.p) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(eq);
    }
    return out;
}

inline std::vector<std::string> unpinned(const std::set<std::string>& all,
                                         const std::map<std::string, Polynomial>& subs)
{
    std::vector<std::string> out;
    for (const auto& v : all)
        if (!subs.count(v)) out.push_back(v);
    return out;
}

} // namespace detail

// Pure linear-stratum reduction of an arbitrary polynomial system. Residual
// equations have no variable that occurs linearly with a constant nonzero
// coefficient. Throws InconsistentSystem when the linear stratum is
// contradictory.
inline ReductionResult reduce_linear(const std::vector<TaggedEquation>& system)
{
    detail::ReduceState st;
    st.eqs = system;
    std::set<std::string> all_vars;
    for (const auto& eq : system)
        for (const auto& v : eq.p.variables()) all_vars.insert(v);
    detail::linear_fixpoint(st);
    std::vector<std::string> free_vars = detail::unpinned(all_vars, st.subs);
    return {std::move(st.subs), detail::dedup(st.eqs), std::move(free_vars)};
}

inline ReductionResult reduce_linear(const std::vector<Polynomial>& system)
{
    std::vector<TaggedEquation> tagged;
    for (const auto& p : system) tagged.push_back({p, std::nullopt});
    return reduce_linear(tagged);
}

// Capture-free simultaneous substitution into every bracket coefficient.
inline SymbolicAlgebra substitute(const SymbolicAlgebra& sa,
                                  const std::map<std::string, Polynomial>& subs)
{
    SymbolicAlgebra out;
    out.basis = sa.basis;
    for (const auto& [pair, coeffs] : sa.c) {
        std::vector<Polynomial> mapped;
        bool all_zero = true;
        for (const auto& p : coeffs) {
            mapped.push_back(p.substituted(subs));
            if (!mapped.back().is_zero()) all_zero = false;
        }
        if (!all_zero) out.c[pair] = std::move(mapped);
    }
    return out;
}

// Nonzero Jacobi defect coordinates of the (already substituted) table;
// empty iff the table satisfies Jacobi identically in its free parameters.
inline std::vector<TaggedEquation> verify_identically_zero(const SymbolicAlgebra& sa)
{
    return jacobi_system_tagged(sa);
}

// Exact specialization at a rational parameter point. Every variable still
// present in the table must be assigned.
inline MetricLieAlgebra specialize(const SymbolicAlgebra& sa,
                                   const std::map<std::string, Rational>& point)
{
    MetricLieAlgebra g(sa.basis);
    for (const auto& [pair, coeffs] : sa.c) {
        Vec v;
        for (const auto& p : coeffs) v.push_back(p.eval(point));
        g.set_bracket(pair.first, pair.second, std::move(v));
    }
    return g;
}

struct AnsatzTemplate {
    std::string name;
    SymbolicAlgebra algebra;
    std::vector<std::size_t> vertical;
    std::vector<std::string> parameters; // declared arbitrary; empty disables phase 2
};

namespace detail {

inline Polynomial pconst(long long n) { return Polynomial(Rational(n)); }
inline Polynomial pvar(const std::string& n) { return Polynomial::variable(n); }

// Vertical rows of the semisimple ansatz: [e_v, e_h] runs over the six
// vertical coordinates with paper-style names (letter, horizontal index,
// vertical index), e.g. [S,Y] = s21 A + ... + s26 T.
inline void semisimple_rows(SymbolicAlgebra& sa)
{
    const char* letters = "abcrst";
    for (std::size_t v = 0; v < 6; ++v)
        for (std::size_t h = 6; h < 8; ++h) {
            std::vector<Polynomial> coeffs(8);
            for (std::size_t w = 0; w < 6; ++w) {
                std::string name{letters[v]};
                name += std::to_string(h - 5); // X -> 1, Y -> 2
                name += std::to_string(w + 1);
                coeffs[w] = pvar(name);
            }
            sa.c[{v, h}] = std::move(coeffs);
        }
    std::vector<Polynomial> xy(8);
    for (std::size_t w = 0; w < 6; ++w) xy[w] = pvar("theta" + std::to_string(w + 1));
    xy[6] = pvar("rho");
    sa.c[{6, 7}] = std::move(xy);
}

inline void mixed_rows(SymbolicAlgebra& sa)
{
    const char* letters = "abc";
    for (std::size_t v = 0; v < 3; ++v)
        for (std::size_t h = 4; h < 6; ++h) {
            std::vector<Polynomial> coeffs(6);
            for (std::size_t w = 0; w < 4; ++w) {
                std::string name{letters[v]};
                name += std::to_string(h - 3);
                name += std::to_string(w + 1);
                coeffs[w] = pvar(name);
            }
            sa.c[{v, h}] = std::move(coeffs);
        }
    // [T,X] and [T,Y] carry horizontal parts x1 X + y1 Y resp. x2 X + y2 Y.
    for (std::size_t h = 4; h < 6; ++h) {
        std::vector<Polynomial> coeffs(6);
        std::string row = std::to_string(h - 3);
        for (std::size_t w = 0; w < 4; ++w) coeffs[w] = pvar("t" + row + std::to_string(w + 1));
        coeffs[4] = pvar("x" + row);
        coeffs[5] = pvar("y" + row);
        sa.c[{3, h}] = std::move(coeffs);
    }
    std::vector<Polynomial> xy(6);
    for (std::size_t w = 0; w < 4; ++w) xy[w] = pvar("theta" + std::to_string(w + 1));
    xy[4] = pvar("rho");
    sa.c[{4, 5}] = std::move(xy);
}

inline void su2_block(SymbolicAlgebra& sa, std::size_t base, int bc_sign)
{
    const std::size_t n = sa.dim();
    auto unit = [&](std::size_t k, long long val) {
        std::vector<Polynomial> v(n);
        v[k] = pconst(val);
        return v;
    };
    sa.c[{base + 0, base + 1}] = unit(base + 2, 2);
    sa.c[{base + 0, base + 2}] = unit(base + 1, -2);
    sa.c[{base + 1, base + 2}] = unit(base + 0, 2 * bc_sign);
}

} // namespace detail

// The four named family templates. The su2/sl2 three-dimensional blocks are
// fixed constants; everything else is a fresh unknown. The declared
// parameter lists name the coefficients the family keeps free.
inline AnsatzTemplate build_ansatz(const std::string& id)
{
    AnsatzTemplate t;
    t.name = id;
    if (id == "su2su2" || id == "su2sl2") {
        t.algebra.basis = {"A", "B", "C", "R", "S", "T", "X", "Y"};
        detail::su2_block(t.algebra, 0, +1);
        // [R,S]=2T, [T,R]=2S always; [S,T]=2R compact, -2R split
        detail::su2_block(t.algebra, 3, id == "su2su2" ? +1 : -1);
        detail::semisimple_rows(t.algebra);
        t.vertical = {0, 1, 2, 3, 4, 5};
        t.parameters = {"b11", "b21", "c11", "c12", "c21", "c22", "s14",
                        "s24", "t14", "t15", "t24", "t25", "rho"};
    } else if (id == "su2so2" || id == "sl2so2") {
        t.algebra.basis = {"A", "B", "C", "T", "X", "Y"};
        detail::su2_block(t.algebra, 0, id == "su2so2" ? +1 : -1);
        detail::mixed_rows(t.algebra);
        t.vertical = {0, 1, 2, 3};
        t.parameters = {"b11", "b21", "c11", "c12", "c21", "c22", "x1", "x2", "y1", "rho", "theta4"};
    } else {
        throw std::invalid_argument("unknown template: '" + id + "'");
    }
    return t;
}

// Every structure constant a fresh variable c_i_j_k; no declared parameters.
inline AnsatzTemplate build_generic_ansatz(std::size_t dim, std::vector<std::size_t> vertical)
{
    if (dim < 2) throw std::invalid_argument("generic ansatz needs dim >= 2");
    AnsatzTemplate t;
    t.name = "fully-generic";
    for (std::size_t i = 0; i < dim; ++i) t.algebra.basis.push_back("e" + std::to_string(i));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            std::vector<Polynomial> coeffs(dim);
            for (std::size_t k = 0; k < dim; ++k)
                coeffs[k] = detail::pvar("c_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                         std::to_string(k));
            t.algebra.c[{i, j}] = std::move(coeffs);
        }
    t.vertical = std::move(vertical);
    return t;
}

// Full pipeline for a template: Jacobi system, linear fixpoint, then
// arbitrary-parameter refinement until no further unknown is forced.
inline ReductionResult reduce_template(const AnsatzTemplate& tmpl)
{
    detail::ReduceState st;
    st.eqs = jacobi_system_tagged(tmpl.algebra);
    std::set<std::string> all_vars = tmpl.algebra.variables();
    std::set<std::string> params(tmpl.parameters.begin(), tmpl.parameters.end());

    detail::linear_fixpoint(st);
    while (!st.eqs.empty() && !params.empty()) {
        if (!detail::refine_with_parameters(st, params)) break;
        detail::linear_fixpoint(st);
    }
    std::vector<std::string> free_vars = detail::unpinned(all_vars, st.subs);
    return {std::move(st.subs), detail::dedup(st.eqs), std::move(free_vars)};
}

} // namespace liefol
