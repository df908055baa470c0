#pragma once

// Levi-Civita connection of the left-invariant metric via the Koszul formula,
// second fundamental forms of a basis-adapted splitting, and the foliation
// classification (conformal / Riemannian / minimal / totally geodesic).
//
// For left-invariant fields in an orthonormal basis the Koszul formula
// collapses to
//     <nabla_{e_i} e_j, e_k> = 1/2 (<[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>).

#include <liefol/algebra.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace liefol {

struct JacobiError : std::runtime_error {
    explicit JacobiError(std::vector<JacobiViolation> v)
        : std::runtime_error(describe(v)), violations(std::move(v))
    {
    }
    std::vector<JacobiViolation> violations;

private:
    static std::string describe(const std::vector<JacobiViolation>& v)
    {
        std::ostringstream os;
        os << "table violates the Jacobi identity on " << v.size() << " triple(s):";
        for (const auto& viol : v)
            os << " (" << viol.triple[0] << "," << viol.triple[1] << "," << viol.triple[2] << ")";
        return os.str();
    }
};

struct NotIntegrableError : std::runtime_error {
    NotIntegrableError() : std::runtime_error("not integrable: vertical block is not a subalgebra") {}
};

// All Koszul coefficients gamma[i][j][k] = <nabla_{e_i} e_j, e_k>, stored as
// a dim^3 table. Satisfies, for every i,j,k:
//   gamma[i][j][k] + gamma[i][k][j] = 0            (metric compatibility)
//   gamma[i][j][k] - gamma[j][i][k] = <[e_i,e_j],e_k>   (torsion-freeness)
class ConnectionTable {
public:
    explicit ConnectionTable(std::size_t dim) : dim_(dim), g_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return g_[(i * dim_ + j) * dim_ + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const
    {
        return g_[(i * dim_ + j) * dim_ + k];
    }

private:
    std::size_t dim_;
    std::vector<Rational> g_;
};

// Throws JacobiError when the table is not a Lie algebra; the connection of
// a non-algebra has no geometric meaning.
inline ConnectionTable koszul(const MetricLieAlgebra& g)
{
    if (auto v = jacobi_check(g); !v.empty()) throw JacobiError(std::move(v));
    const std::size_t n = g.dim();
    // c[i][j] = coefficient vector of [e_i, e_j]
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = g.bracket_basis(i, j);
    ConnectionTable gamma(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                gamma.at(i, j, k) = half(c[i][j][k] - c[j][k][i] + c[k][i][j]);
    return gamma;
}

// bv maps vertical pairs (i <= j) to horizontally supported vectors,
// bh maps horizontal pairs to vertically supported vectors; both symmetric.
struct SecondFundamentalForms {
    std::map<std::pair<std::size_t, std::size_t>, Vec> bv;
    std::map<std::pair<std::size_t, std::size_t>, Vec> bh;
};

// B^V(E,F) = 1/2 H(nabla_E F + nabla_F E) over the vertical pairs and
// B^H(X,Y) = 1/2 V(nabla_X Y + nabla_Y X) over the horizontal pairs,
// both read off from the connection table. The vertical block must span a
// subalgebra for B^V to be the second fundamental form of a foliation; B^H
// needs no integrability on the horizontal side.
inline SecondFundamentalForms second_forms(const MetricLieAlgebra& g, const Splitting& s)
{
    if (s.dim() != g.dim()) throw std::invalid_argument("second_forms: splitting dimension mismatch");
    if (!is_subalgebra(g, s)) throw NotIntegrableError();
    ConnectionTable gamma = koszul(g);
    SecondFundamentalForms out;
    for (std::size_t a = 0; a < s.vertical().size(); ++a)
        for (std::size_t b = a; b < s.vertical().size(); ++b) {
            std::size_t i = s.vertical()[a], j = s.vertical()[b];
            Vec v = zero_vec(g.dim());
            for (auto k : s.horizontal()) v[k] = half(gamma.at(i, j, k) + gamma.at(j, i, k));
            out.bv[{i, j}] = std::move(v);
        }
    for (std::size_t a = 0; a < s.horizontal().size(); ++a)
        for (std::size_t b = a; b < s.horizontal().size(); ++b) {
            std::size_t i = s.horizontal()[a], j = s.horizontal()[b];
            Vec v = zero_vec(g.dim());
            for (auto k : s.vertical()) v[k] = half(gamma.at(i, j, k) + gamma.at(j, i, k));
            out.bh[{i, j}] = std::move(v);
        }
    return out;
}

// trace B^V = sum of B^V(e,e) over the vertical basis; zero iff the
// foliation is minimal.
inline Vec mean_curvature(const SecondFundamentalForms& forms)
{
    Vec out;
    for (const auto& [pair, v] : forms.bv) {
        if (pair.first != pair.second) continue;
        if (out.empty())
            out = v;
        else
            out = out + v;
    }
    if (out.empty()) throw std::invalid_argument("mean_curvature: no vertical diagonal entries");
    return out;
}

struct ClassificationReport {
    bool integrable = false;
    bool conformal = false;
    bool riemannian = false;
    bool minimal = false;
    bool totally_geodesic = false;
    Vec mean_curvature;
    std::optional<Vec> conformal_vector; // present iff conformal
    SecondFundamentalForms forms;
};

// Conformality is decided on the orthonormal horizontal basis: B^H = g (x) V
// iff all off-diagonal bh vanish and the diagonal entries share one value,
// which is then V. Riemannian means that common value is zero.
inline ClassificationReport classify(const MetricLieAlgebra& g, const Splitting& s)
{
    ClassificationReport r;
    r.forms = second_forms(g, s); // throws NotIntegrableError / JacobiError
    r.integrable = true;

    bool conformal = true;
    std::optional<Vec> diag;
    for (const auto& [pair, v] : r.forms.bh) {
        if (pair.first == pair.second) {
            if (!diag)
                diag = v;
            else if (*diag != v)
                conformal = false;
        } else if (!is_zero(v)) {
            conformal = false;
        }
    }
    r.conformal = conformal;
    if (conformal) r.conformal_vector = *diag;
    r.riemannian = conformal && is_zero(*diag);

    r.mean_curvature = mean_curvature(r.forms);
    r.minimal = is_zero(r.mean_curvature);

    r.totally_geodesic = true;
    for (const auto& [pair, v] : r.forms.bv)
        if (!is_zero(v)) {
            r.totally_geodesic = false;
            break;
        }
    return r;
}

} // namespace liefol
