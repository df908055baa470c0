#pragma once

// Per-family verification bundle behind the `verify-families` command: for
// seeded parameter draws it checks Jacobi validity, the classification
// verdicts, the closed forms of the second fundamental forms, the two
// connection identities and the agreement of the two B^V computation routes.
//
// Every tenth-ish draw is replaced by a constrained draw so both sides of
// each if-and-only-if get exercised (random parameters almost never satisfy
// conditions like y1 + x2 = 0).

#include <liefol/families.hpp>
#include <liefol/geometry.hpp>
#include <liefol/rng.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace liefol {

// Direct expansion of B^V over the horizontal basis,
//   B^V(E,F) = 1/2 sum_a (<[X_a,E],F> + <[X_a,F],E>) X_a,
// independent of the connection table.
inline Vec bv_direct(const MetricLieAlgebra& g, const Splitting& s, std::size_t i, std::size_t j)
{
    Vec out = zero_vec(g.dim());
    for (auto k : s.horizontal()) {
        Vec ki = g.bracket_basis(k, i);
        Vec kj = g.bracket_basis(k, j);
        out[k] = half(ki[j] + kj[i]);
    }
    return out;
}

// Metric compatibility and torsion-freeness of the connection table.
inline bool connection_identities_hold(const MetricLieAlgebra& g, const ConnectionTable& gamma)
{
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec cij = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (!(gamma.at(i, j, k) + gamma.at(i, k, j)).is_zero()) return false;
                if (gamma.at(i, j, k) - gamma.at(j, i, k) != cij[k]) return false;
            }
        }
    return true;
}

enum class FamilyId { su2su2, su2sl2, su2so2, sl2so2 };

inline const char* family_name(FamilyId f)
{
    switch (f) {
    case FamilyId::su2su2: return "su2su2";
    case FamilyId::su2sl2: return "su2sl2";
    case FamilyId::su2so2: return "su2so2";
    case FamilyId::sl2so2: return "sl2so2";
    }
    return "?";
}

struct FamilyCheckReport {
    bool jacobi = true;
    bool classification = true;
    bool forms = true;
    bool connection = true;
    bool oracle = true;
    bool all() const { return jacobi && classification && forms && connection && oracle; }
};

namespace detail {

inline Vec expect1(std::size_t dim, std::size_t i, Rational val)
{
    Vec v = zero_vec(dim);
    v[i] = std::move(val);
    return v;
}

inline Vec expect2(std::size_t dim, std::size_t ix, Rational vx, std::size_t iy, Rational vy)
{
    Vec v = zero_vec(dim);
    v[ix] = std::move(vx);
    v[iy] = std::move(vy);
    return v;
}

inline bool forms_match(const SecondFundamentalForms& forms,
                        const std::map<std::pair<std::size_t, std::size_t>, Vec>& expected_bv,
                        const std::map<std::pair<std::size_t, std::size_t>, Vec>& expected_bh)
{
    for (const auto& [pair, v] : forms.bv) {
        auto it = expected_bv.find(pair);
        if (it == expected_bv.end() ? !is_zero(v) : v != it->second) return false;
    }
    for (const auto& [pair, v] : forms.bh) {
        auto it = expected_bh.find(pair);
        if (it == expected_bh.end() ? !is_zero(v) : v != it->second) return false;
    }
    return true;
}

// Closed forms of the nonzero B^V / B^H entries for each family, written
// directly in the free parameters. For the mixed families the mixed-in
// x1/x2 terms vanish exactly on the conformal locus (x1 = 0, x2 = -y1),
// where these reduce to the familiar y1-only expressions.
inline bool check_semisimple_forms(FamilyId f, const Semisimple13Params& p,
                                   const SecondFundamentalForms& forms)
{
    std::map<std::pair<std::size_t, std::size_t>, Vec> bv;
    if (f == FamilyId::su2sl2) {
        bv[{3, 4}] = expect2(8, 6, -p.s14, 7, -p.s24); // B^V(R,S)
        bv[{3, 5}] = expect2(8, 6, -p.t14, 7, -p.t24); // B^V(R,T)
    }
    return forms_match(forms, bv, {});
}

inline bool check_mixed_forms(FamilyId f, const Mixed11Params& p, const SecondFundamentalForms& forms)
{
    const Rational q(1, 4);
    std::map<std::pair<std::size_t, std::size_t>, Vec> bv, bh;
    bv[{0, 3}] = expect2(6, 4, q * (p.c12 * p.x1 + p.c22 * p.y1),
                         5, q * (p.c12 * p.x2 - p.c22 * p.x1)); // B^V(A,T)
    bv[{1, 3}] = expect2(6, 4, -q * (p.c11 * p.x1 + p.c21 * p.y1),
                         5, -q * (p.c11 * p.x2 - p.c21 * p.x1)); // B^V(B,T)
    bv[{2, 3}] = expect2(6, 4, q * (p.b11 * p.x1 + p.b21 * p.y1),
                         5, q * (p.b11 * p.x2 - p.b21 * p.x1)); // B^V(C,T)
    bv[{3, 3}] = expect1(6, 5, p.rho); // B^V(T,T) = rho Y
    if (f == FamilyId::sl2so2) {
        bv[{0, 1}] = expect2(6, 4, -p.b11, 5, -p.b21); // B^V(A,B)
        bv[{0, 2}] = expect2(6, 4, -p.c11, 5, -p.c21); // B^V(A,C)
        bv[{1, 3}] = expect2(6, 4, q * (p.c11 * p.x1 + p.c21 * p.y1),
                             5, q * (p.c11 * p.x2 - p.c21 * p.x1));
        bv[{2, 3}] = expect2(6, 4, -q * (p.b11 * p.x1 + p.b21 * p.y1),
                             5, -q * (p.b11 * p.x2 - p.b21 * p.x1));
    }
    bh[{4, 4}] = expect1(6, 3, p.x1);              // B^H(X,X) = x1 T
    bh[{4, 5}] = expect1(6, 3, half(p.y1 + p.x2)); // B^H(X,Y)
    bh[{5, 5}] = expect1(6, 3, -p.x1);             // B^H(Y,Y)
    return forms_match(forms, bv, bh);
}

inline bool check_classification(FamilyId f, const Semisimple13Params* sp, const Mixed11Params* mp,
                                 const ClassificationReport& r)
{
    switch (f) {
    case FamilyId::su2su2:
        return r.riemannian && r.totally_geodesic && r.conformal && r.minimal;
    case FamilyId::su2sl2: {
        bool tg_expected = sp->s14.is_zero() && sp->s24.is_zero() && sp->t14.is_zero() &&
                           sp->t24.is_zero();
        return r.riemannian && r.minimal && r.conformal && r.totally_geodesic == tg_expected;
    }
    case FamilyId::su2so2:
    case FamilyId::sl2so2: {
        bool conf_expected = (mp->y1 + mp->x2).is_zero() && mp->x1.is_zero();
        bool min_expected = mp->rho.is_zero();
        bool tg_expected = min_expected &&
                           (mp->c12 * mp->x1 + mp->c22 * mp->y1).is_zero() &&
                           (mp->c12 * mp->x2 - mp->c22 * mp->x1).is_zero() &&
                           (mp->c11 * mp->x1 + mp->c21 * mp->y1).is_zero() &&
                           (mp->c11 * mp->x2 - mp->c21 * mp->x1).is_zero() &&
                           (mp->b11 * mp->x1 + mp->b21 * mp->y1).is_zero() &&
                           (mp->b11 * mp->x2 - mp->b21 * mp->x1).is_zero();
        if (f == FamilyId::sl2so2)
            tg_expected = tg_expected && mp->b11.is_zero() && mp->b21.is_zero() &&
                          mp->c11.is_zero() && mp->c21.is_zero();
        return r.conformal == conf_expected && r.riemannian == conf_expected &&
               r.minimal == min_expected && r.totally_geodesic == tg_expected;
    }
    }
    return false;
}

inline void constrain_semisimple(Semisimple13Params& p, std::uint64_t index)
{
    if (index % 10 == 9) p.s14 = p.s24 = p.t14 = p.t24 = Rational(0); // totally geodesic case
}

inline void constrain_mixed(Mixed11Params& p, std::uint64_t index)
{
    switch (index % 10) {
    case 5: // totally geodesic case
        p.b11 = p.b21 = p.c11 = p.c12 = p.c21 = p.c22 = Rational(0);
        p.rho = Rational(0);
        break;
    case 7: // conformal case
        p.x1 = Rational(0);
        p.x2 = -p.y1;
        break;
    case 9: // conformal and minimal case
        p.x1 = Rational(0);
        p.x2 = -p.y1;
        p.rho = Rational(0);
        break;
    default: break;
    }
}

} // namespace detail

// Runs all checks for one family over `draws` seeded draws.
inline FamilyCheckReport run_family_checks(FamilyId f, std::uint64_t seed, std::uint64_t draws)
{
    FamilyCheckReport rep;
    const std::uint64_t stream = static_cast<std::uint64_t>(f);
    for (std::uint64_t d = 0; d < draws; ++d) {
        Semisimple13Params sp;
        Mixed11Params mp;
        FamilyInstance inst = [&] {
            switch (f) {
            case FamilyId::su2su2:
                sp = draw_semisimple13(seed, stream, d);
                return gen_su2_su2(sp);
            case FamilyId::su2sl2:
                sp = draw_semisimple13(seed, stream, d);
                detail::constrain_semisimple(sp, d);
                return gen_su2_sl2(sp);
            case FamilyId::su2so2:
                mp = draw_mixed11(seed, stream, d);
                detail::constrain_mixed(mp, d);
                return gen_su2_so2(mp);
            default:
                mp = draw_mixed11(seed, stream, d);
                detail::constrain_mixed(mp, d);
                return gen_sl2_so2(mp);
            }
        }();

        if (!jacobi_check(inst.algebra).empty()) {
            rep.jacobi = false;
            continue; // the geometric checks presuppose a Lie algebra
        }

        ClassificationReport r = classify(inst.algebra, inst.splitting);
        bool is_semisimple = (f == FamilyId::su2su2 || f == FamilyId::su2sl2);
        if (!detail::check_classification(f, &sp, &mp, r)) rep.classification = false;
        if (is_semisimple) {
            if (!detail::check_semisimple_forms(f, sp, r.forms)) rep.forms = false;
        } else {
            if (!detail::check_mixed_forms(f, mp, r.forms)) rep.forms = false;
        }

        ConnectionTable gamma = koszul(inst.algebra);
        if (!connection_identities_hold(inst.algebra, gamma)) rep.connection = false;

        for (std::size_t a = 0; a < inst.splitting.vertical().size(); ++a)
            for (std::size_t b = a; b < inst.splitting.vertical().size(); ++b) {
                std::size_t i = inst.splitting.vertical()[a], j = inst.splitting.vertical()[b];
                if (bv_direct(inst.algebra, inst.splitting, i, j) != r.forms.bv.at({i, j}))
                    rep.oracle = false;
            }
    }
    return rep;
}

} // namespace liefol
