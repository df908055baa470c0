#pragma once

// Generators for the four classified families of metric Lie algebras whose
// vertical block is su(2)+su(2), su(2)+sl(2,R), su(2)+so(2) or sl(2,R)+so(2)
// with a two-dimensional horizontal complement. Each generator emits the
// reduced bracket table of the family together with the adapted splitting;
// the derived coefficients (theta_i and the A,B,C parts of [T,X], [T,Y]) are
// always computed from the free parameters, never taken as input.
//
// Basis order is fixed (A,B,C,R,S,T,X,Y resp. A,B,C,T,X,Y) so that emitted
// files and golden tests are stable.

#include <liefol/algebra.hpp>

#include <utility>

namespace liefol {

// Free parameters of the two semisimple families.
struct Semisimple13Params {
    Rational b11, b21, c11, c12, c21, c22;
    Rational s14, s24, t14, t15, t24, t25;
    Rational rho;
};

// Free parameters of the two mixed families (theta4 stays free there).
struct Mixed11Params {
    Rational b11, b21, c11, c12, c21, c22;
    Rational x1, x2, y1;
    Rational rho, theta4;
};

struct FamilyInstance {
    MetricLieAlgebra algebra;
    Splitting splitting;
};

namespace detail {

inline Vec vec8(Rational a, Rational b, Rational c, Rational r, Rational s, Rational t, Rational x,
                Rational y)
{
    return Vec{std::move(a), std::move(b), std::move(c), std::move(r),
               std::move(s), std::move(t), std::move(x), std::move(y)};
}

inline Vec vec6(Rational a, Rational b, Rational c, Rational t, Rational x, Rational y)
{
    return Vec{std::move(a), std::move(b), std::move(c), std::move(t), std::move(x), std::move(y)};
}

// Shared su(2)-row pattern: [A,X]=-b11 B - c11 C, [B,X]=b11 A - c12 C,
// [C,X]=c11 A + c12 B, and the same with second-column parameters for Y.
// `sign` flips the [A,.] row for the sl(2,R) vertical block of the
// sl2so2 family, where [A,X] = +b11 B + c11 C.
inline void put_abc_rows(MetricLieAlgebra& g, std::size_t x_idx, std::size_t y_idx, std::size_t dim,
                         const Rational& b1, const Rational& b2, const Rational& c1, const Rational& c2,
                         const Rational& c3, const Rational& c4, int a_row_sign)
{
    auto mk = [dim](std::initializer_list<std::pair<std::size_t, Rational>> entries) {
        Vec v = zero_vec(dim);
        for (const auto& [idx, val] : entries) v[idx] = val;
        return v;
    };
    Rational sgn(a_row_sign);
    g.set_bracket(0, x_idx, mk({{1, sgn * b1}, {2, sgn * c1}}));
    g.set_bracket(0, y_idx, mk({{1, sgn * b2}, {2, sgn * c2}}));
    g.set_bracket(1, x_idx, mk({{0, b1}, {2, -c3}}));
    g.set_bracket(1, y_idx, mk({{0, b2}, {2, -c4}}));
    g.set_bracket(2, x_idx, mk({{0, c1}, {1, c3}}));
    g.set_bracket(2, y_idx, mk({{0, c2}, {1, c4}}));
}

} // namespace detail

// Vertical su(2)+su(2) inside an 8-dimensional algebra.
inline FamilyInstance gen_su2_su2(const Semisimple13Params& p)
{
    using detail::vec8;
    MetricLieAlgebra g({"A", "B", "C", "R", "S", "T", "X", "Y"});
    const Rational z(0), two(2);
    g.set_bracket(0, 1, vec8(z, z, two, z, z, z, z, z));
    g.set_bracket(0, 2, vec8(z, -two, z, z, z, z, z, z));
    g.set_bracket(1, 2, vec8(two, z, z, z, z, z, z, z));
    g.set_bracket(3, 4, vec8(z, z, z, z, z, two, z, z));
    g.set_bracket(3, 5, vec8(z, z, z, z, -two, z, z, z));
    g.set_bracket(4, 5, vec8(z, z, z, two, z, z, z, z));

    detail::put_abc_rows(g, 6, 7, 8, p.b11, p.b21, p.c11, p.c21, p.c12, p.c22, -1);
    g.set_bracket(3, 6, vec8(z, z, z, z, -p.s14, -p.t14, z, z));
    g.set_bracket(3, 7, vec8(z, z, z, z, -p.s24, -p.t24, z, z));
    g.set_bracket(4, 6, vec8(z, z, z, p.s14, z, -p.t15, z, z));
    g.set_bracket(4, 7, vec8(z, z, z, p.s24, z, -p.t25, z, z));
    g.set_bracket(5, 6, vec8(z, z, z, p.t14, p.t15, z, z, z));
    g.set_bracket(5, 7, vec8(z, z, z, p.t24, p.t25, z, z, z));

    Rational th1 = half(-p.rho * p.c12 + p.b11 * p.c21 - p.b21 * p.c11);
    Rational th2 = half(p.rho * p.c11 + p.b11 * p.c22 - p.b21 * p.c12);
    Rational th3 = half(-p.rho * p.b11 + p.c11 * p.c22 - p.c12 * p.c21);
    Rational th4 = half(-p.rho * p.t15 + p.s14 * p.t24 - p.s24 * p.t14);
    Rational th5 = half(p.rho * p.t14 + p.s14 * p.t25 - p.s24 * p.t15);
    Rational th6 = half(-p.rho * p.s14 + p.t14 * p.t25 - p.t15 * p.t24);
    g.set_bracket(6, 7, vec8(th1, th2, th3, th4, th5, th6, p.rho, z));

    return {std::move(g), Splitting(8, {0, 1, 2, 3, 4, 5})};
}

// Vertical su(2)+sl(2,R) inside an 8-dimensional algebra. Relative to the
// compact case the sl(2,R) signature flips the signs of [R,X], [R,Y] and of
// the theta_4..theta_6 coefficients; the [R,.] rows here are the ones forced
// by the Jacobi identity (the reduction pipeline rederives them).
inline FamilyInstance gen_su2_sl2(const Semisimple13Params& p)
{
    using detail::vec8;
    MetricLieAlgebra g({"A", "B", "C", "R", "S", "T", "X", "Y"});
    const Rational z(0), two(2);
    g.set_bracket(0, 1, vec8(z, z, two, z, z, z, z, z));
    g.set_bracket(0, 2, vec8(z, -two, z, z, z, z, z, z));
    g.set_bracket(1, 2, vec8(two, z, z, z, z, z, z, z));
    g.set_bracket(3, 4, vec8(z, z, z, z, z, two, z, z));
    g.set_bracket(3, 5, vec8(z, z, z, z, -two, z, z, z));
    g.set_bracket(4, 5, vec8(z, z, z, -two, z, z, z, z)); // [S,T] = -2R

    detail::put_abc_rows(g, 6, 7, 8, p.b11, p.b21, p.c11, p.c21, p.c12, p.c22, -1);
    g.set_bracket(3, 6, vec8(z, z, z, z, p.s14, p.t14, z, z));
    g.set_bracket(3, 7, vec8(z, z, z, z, p.s24, p.t24, z, z));
    g.set_bracket(4, 6, vec8(z, z, z, p.s14, z, -p.t15, z, z));
    g.set_bracket(4, 7, vec8(z, z, z, p.s24, z, -p.t25, z, z));
    g.set_bracket(5, 6, vec8(z, z, z, p.t14, p.t15, z, z, z));
    g.set_bracket(5, 7, vec8(z, z, z, p.t24, p.t25, z, z, z));

    Rational th1 = half(-p.rho * p.c12 + p.b11 * p.c21 - p.b21 * p.c11);
    Rational th2 = half(p.rho * p.c11 + p.b11 * p.c22 - p.b21 * p.c12);
    Rational th3 = half(-p.rho * p.b11 + p.c11 * p.c22 - p.c12 * p.c21);
    Rational th4 = half(-p.rho * p.t15 - p.s14 * p.t24 + p.s24 * p.t14);
    Rational th5 = half(-p.rho * p.t14 - p.s14 * p.t25 + p.s24 * p.t15);
    Rational th6 = half(p.rho * p.s14 - p.t14 * p.t25 + p.t15 * p.t24);
    g.set_bracket(6, 7, vec8(th1, th2, th3, th4, th5, th6, p.rho, z));

    return {std::move(g), Splitting(8, {0, 1, 2, 3, 4, 5})};
}

// Vertical su(2)+so(2) inside a 6-dimensional algebra.
inline FamilyInstance gen_su2_so2(const Mixed11Params& p)
{
    using detail::vec6;
    MetricLieAlgebra g({"A", "B", "C", "T", "X", "Y"});
    const Rational z(0), two(2);
    g.set_bracket(0, 1, vec6(z, z, two, z, z, z));
    g.set_bracket(0, 2, vec6(z, -two, z, z, z, z));
    g.set_bracket(1, 2, vec6(two, z, z, z, z, z));

    detail::put_abc_rows(g, 4, 5, 6, p.b11, p.b21, p.c11, p.c21, p.c12, p.c22, -1);
    g.set_bracket(3, 4, vec6(half(-p.c12 * p.x1 - p.c22 * p.y1), half(p.c11 * p.x1 + p.c21 * p.y1),
                             half(-p.b11 * p.x1 - p.b21 * p.y1), z, p.x1, p.y1));
    g.set_bracket(3, 5, vec6(half(-p.c12 * p.x2 + p.c22 * p.x1), half(p.c11 * p.x2 - p.c21 * p.x1),
                             half(-p.b11 * p.x2 + p.b21 * p.x1), -p.rho, p.x2, -p.x1));

    Rational th1 = half(-p.rho * p.c12 + p.b11 * p.c21 - p.b21 * p.c11);
    Rational th2 = half(p.rho * p.c11 + p.b11 * p.c22 - p.b21 * p.c12);
    Rational th3 = half(-p.rho * p.b11 + p.c11 * p.c22 - p.c12 * p.c21);
    g.set_bracket(4, 5, vec6(th1, th2, th3, p.theta4, p.rho, z));

    return {std::move(g), Splitting(6, {0, 1, 2, 3})};
}

// Vertical sl(2,R)+so(2) inside a 6-dimensional algebra.
inline FamilyInstance gen_sl2_so2(const Mixed11Params& p)
{
    using detail::vec6;
    MetricLieAlgebra g({"A", "B", "C", "T", "X", "Y"});
    const Rational z(0), two(2);
    g.set_bracket(0, 1, vec6(z, z, two, z, z, z));
    g.set_bracket(0, 2, vec6(z, -two, z, z, z, z));
    g.set_bracket(1, 2, vec6(-two, z, z, z, z, z)); // [B,C] = -2A

    detail::put_abc_rows(g, 4, 5, 6, p.b11, p.b21, p.c11, p.c21, p.c12, p.c22, +1);
    g.set_bracket(3, 4, vec6(half(-p.c12 * p.x1 - p.c22 * p.y1), half(-p.c11 * p.x1 - p.c21 * p.y1),
                             half(p.b11 * p.x1 + p.b21 * p.y1), z, p.x1, p.y1));
    g.set_bracket(3, 5, vec6(half(p.c22 * p.x1 - p.c12 * p.x2), half(p.c21 * p.x1 - p.c11 * p.x2),
                             half(-p.b21 * p.x1 + p.b11 * p.x2), -p.rho, p.x2, -p.x1));

    Rational th1 = half(-p.rho * p.c12 - p.b11 * p.c21 + p.b21 * p.c11);
    Rational th2 = half(-p.rho * p.c11 - p.b11 * p.c22 + p.b21 * p.c12);
    Rational th3 = half(p.rho * p.b11 - p.c11 * p.c22 + p.c12 * p.c21);
    g.set_bracket(4, 5, vec6(th1, th2, th3, p.theta4, p.rho, z));

    return {std::move(g), Splitting(6, {0, 1, 2, 3})};
}

} // namespace liefol
