#pragma once

// Metric Lie algebras given by structure constants in a declared orthonormal
// basis, plus the Jacobi machinery and basis-adapted vertical/horizontal
// splittings.
//
// Structure constants are stored only for index pairs i < j; antisymmetry is
// enforced by construction rather than validated. A table is allowed to
// violate the Jacobi identity: jacobi_check is a separate judgment, since the
// symbolic reduction workflow has to handle candidate tables that fail it.

#include <liefol/linalg.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liefol {

class MetricLieAlgebra {
public:
    explicit MetricLieAlgebra(std::vector<std::string> basis_names) : basis_(std::move(basis_names))
    {
        if (basis_.empty()) throw std::invalid_argument("algebra needs at least one basis vector");
        std::set<std::string> seen;
        for (const auto& name : basis_) {
            if (name.empty() || !seen.insert(name).second)
                throw std::invalid_argument("basis names must be distinct and nonempty");
        }
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }

    // Declares [e_i, e_j] = coeffs (i < j). A zero vector erases the entry so
    // that equal algebras always have equal tables.
    void set_bracket(std::size_t i, std::size_t j, Vec coeffs)
    {
        if (i >= j || j >= dim()) throw std::invalid_argument("set_bracket: need i < j < dim");
        if (coeffs.size() != dim()) throw std::invalid_argument("set_bracket: coefficient length mismatch");
        if (is_zero(coeffs))
            table_.erase({i, j});
        else
            table_[{i, j}] = std::move(coeffs);
    }

    const std::map<std::pair<std::size_t, std::size_t>, Vec>& table() const { return table_; }

    // [e_i, e_j] for arbitrary i, j, with the sign handled.
    Vec bracket_basis(std::size_t i, std::size_t j) const
    {
        if (i >= dim() || j >= dim()) throw std::invalid_argument("bracket_basis: index out of range");
        if (i == j) return zero_vec(dim());
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = table_.find({i, j});
        if (it == table_.end()) return zero_vec(dim());
        return flip ? -Vec(it->second) : it->second;
    }

    friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b)
    {
        return a.basis_ == b.basis_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> basis_;
    std::map<std::pair<std::size_t, std::size_t>, Vec> table_;
};

// Bilinear extension of the structure-constant table.
inline Vec bracket(const MetricLieAlgebra& g, const Vec& x, const Vec& y)
{
    if (x.size() != g.dim() || y.size() != g.dim())
        throw std::invalid_argument("bracket: vector length mismatch");
    Vec out = zero_vec(g.dim());
    for (const auto& [pair, coeffs] : g.table()) {
        auto [i, j] = pair;
        Rational c = x[i] * y[j] - x[j] * y[i];
        if (!c.is_zero()) add_scaled(out, c, coeffs);
    }
    return out;
}

// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]; zero iff the Jacobi
// identity holds on the triple.
inline Vec jacobi_defect(const MetricLieAlgebra& g, std::size_t i, std::size_t j, std::size_t k)
{
    if (!(i < j && j < k && k < g.dim()))
        throw std::invalid_argument("jacobi_defect: need i < j < k < dim");
    Vec ei = zero_vec(g.dim()), ej = zero_vec(g.dim()), ek = zero_vec(g.dim());
    ei[i] = Rational(1);
    ej[j] = Rational(1);
    ek[k] = Rational(1);
    Vec out = bracket(g, bracket(g, ei, ej), ek);
    out = out + bracket(g, bracket(g, ej, ek), ei);
    out = out + bracket(g, bracket(g, ek, ei), ej);
    return out;
}

struct JacobiViolation {
    std::array<std::size_t, 3> triple;
    Vec defect;
};

// All triples with nonzero defect, in lexicographic order of (i,j,k).
// Empty iff the table is a Lie algebra.
inline std::vector<JacobiViolation> jacobi_check(const MetricLieAlgebra& g)
{
    std::vector<JacobiViolation> out;
    for (std::size_t i = 0; i + 2 < g.dim(); ++i)
        for (std::size_t j = i + 1; j + 1 < g.dim(); ++j)
            for (std::size_t k = j + 1; k < g.dim(); ++k) {
                Vec d = jacobi_defect(g, i, j, k);
                if (!is_zero(d)) out.push_back({{i, j, k}, std::move(d)});
            }
    return out;
}

// Partition of the basis indices into a vertical block and its (derived)
// horizontal complement. Both blocks must be nonempty. Whether the vertical
// block spans a subalgebra is a separate judgment (is_subalgebra).
class Splitting {
public:
    Splitting(std::size_t dim, std::vector<std::size_t> vertical) : dim_(dim), vertical_(std::move(vertical))
    {
        std::sort(vertical_.begin(), vertical_.end());
        if (vertical_.empty()) throw std::invalid_argument("splitting: vertical block is empty");
        if (std::adjacent_find(vertical_.begin(), vertical_.end()) != vertical_.end())
            throw std::invalid_argument("splitting: duplicate vertical index");
        if (vertical_.back() >= dim) throw std::invalid_argument("splitting: vertical index out of range");
        std::vector<bool> mark(dim, false);
        for (auto i : vertical_) mark[i] = true;
        for (std::size_t i = 0; i < dim; ++i)
            if (!mark[i]) horizontal_.push_back(i);
        if (horizontal_.empty()) throw std::invalid_argument("splitting: horizontal block is empty");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::size_t>& vertical() const { return vertical_; }
    const std::vector<std::size_t>& horizontal() const { return horizontal_; }

    bool is_vertical(std::size_t i) const
    {
        return std::binary_search(vertical_.begin(), vertical_.end(), i);
    }

private:
    std::size_t dim_;
    std::vector<std::size_t> vertical_;
    std::vector<std::size_t> horizontal_;
};

// True iff the vertical block closes under the bracket, i.e. the
// left-invariant distribution it generates is integrable.
inline bool is_subalgebra(const MetricLieAlgebra& g, const Splitting& s)
{
    if (s.dim() != g.dim()) throw std::invalid_argument("is_subalgebra: splitting dimension mismatch");
    for (std::size_t a = 0; a < s.vertical().size(); ++a)
        for (std::size_t b = a + 1; b < s.vertical().size(); ++b) {
            Vec br = g.bracket_basis(s.vertical()[a], s.vertical()[b]);
            for (auto h : s.horizontal())
                if (!br[h].is_zero()) return false;
        }
    return true;
}

} // namespace liefol
