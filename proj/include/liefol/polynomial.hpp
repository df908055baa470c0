#pragma once

// Multivariate polynomials over Rational with named variables, used by the
// Jacobi constraint-reduction pipeline. Terms are kept in a canonical
// graded-lexicographic order, so representation equality is polynomial
// equality and printing is reproducible.
//
// The variable precedence puts "rho" ahead of everything else and orders the
// rest alphabetically; with terms printed leading-first this reproduces the
// conventional display of the derived coefficients, e.g.
//   theta1 = -1/2*rho*c12 + 1/2*b11*c21 - 1/2*b21*c11.

#include <liefol/rational.hpp>

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liefol {

// True when a should come before b in the variable precedence.
inline bool var_precedes(const std::string& a, const std::string& b)
{
    if (a == b) return false;
    if (a == "rho") return true;
    if (b == "rho") return false;
    return a < b;
}

// Product of variables with positive exponents, kept sorted by precedence.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(const std::string& name, int exp = 1)
    {
        Monomial m;
        if (exp < 0) throw std::invalid_argument("negative exponent");
        if (exp > 0) m.factors_.push_back({name, exp});
        return m;
    }

    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    int degree() const
    {
        int d = 0;
        for (const auto& [_, e] : factors_) d += e;
        return d;
    }

    int degree_in(const std::string& name) const
    {
        for (const auto& [v, e] : factors_)
            if (v == name) return e;
        return 0;
    }

    template <typename Set>
    int degree_in_set(const Set& names) const
    {
        int d = 0;
        for (const auto& [v, e] : factors_)
            if (names.count(v)) d += e;
        return d;
    }

    Monomial times(const Monomial& o) const
    {
        Monomial out;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && var_precedes(a->first, b->first)))
                out.factors_.push_back(*a++);
            else if (a == factors_.end() || var_precedes(b->first, a->first))
                out.factors_.push_back(*b++);
            else {
                out.factors_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return out;
    }

    // Splits off the named variable: returns the cofactor monomial.
    Monomial without(const std::string& name) const
    {
        Monomial out;
        for (const auto& f : factors_)
            if (f.first != name) out.factors_.push_back(f);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    // Graded-lexicographic: higher total degree first, ties broken by the
    // variable precedence reading factors left to right.
    static bool graded_lex_less(const Monomial& a, const Monomial& b)
    {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        auto x = a.factors_.begin();
        auto y = b.factors_.begin();
        while (x != a.factors_.end() && y != b.factors_.end()) {
            if (x->first != y->first) return var_precedes(y->first, x->first);
            if (x->second != y->second) return x->second < y->second;
            ++x, ++y;
        }
        return x == a.factors_.end() && y != b.factors_.end();
    }

    std::string str() const
    {
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += '*';
            s += v;
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<std::pair<std::string, int>> factors_;
};

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::graded_lex_less(b, a); }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    Polynomial() = default;
    explicit Polynomial(Rational c)
    {
        if (!c.is_zero()) terms_[Monomial()] = std::move(c);
    }
    Polynomial(long long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(const std::string& name)
    {
        Polynomial p;
        p.terms_[Monomial::var(name)] = Rational(1);
        return p;
    }
    static Polynomial constant(Rational c) { return Polynomial(std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    // Only valid when is_constant().
    Rational constant_value() const
    {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const
    {
        int d = 0;
        for (const auto& [m, _] : terms_)
            if (m.degree() > d) d = m.degree();
        return d;
    }

    int degree_in(const std::string& name) const
    {
        int d = 0;
        for (const auto& [m, _] : terms_)
            if (m.degree_in(name) > d) d = m.degree_in(name);
        return d;
    }

    template <typename Set>
    int degree_in_set(const Set& names) const
    {
        int d = 0;
        for (const auto& [m, _] : terms_)
            if (m.degree_in_set(names) > d) d = m.degree_in_set(names);
        return d;
    }

    std::set<std::string> variables() const
    {
        std::set<std::string> out;
        for (const auto& [m, _] : terms_)
            for (const auto& [v, e] : m.factors()) out.insert(v);
        return out;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const
    {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p)
    {
        return Polynomial(c) * p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // If the polynomial is q*v + rest with q a nonzero rational constant and
    // v absent from every other term, returns (q, rest).
    std::optional<std::pair<Rational, Polynomial>> isolate_linear(const std::string& v) const
    {
        Rational q(0);
        Polynomial rest;
        for (const auto& [m, c] : terms_) {
            int d = m.degree_in(v);
            if (d == 0) {
                rest.add_term(m, c);
            } else if (d == 1 && m.degree() == 1) {
                q = c;
            } else {
                return std::nullopt; // v occurs nonlinearly or with a variable coefficient
            }
        }
        if (q.is_zero()) return std::nullopt;
        return std::make_pair(q, rest);
    }

    // Capture-free simultaneous substitution; variables absent from the map
    // are left alone.
    Polynomial substituted(const std::map<std::string, Polynomial>& subs) const
    {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial term(c);
            for (const auto& [v, e] : m.factors()) {
                auto it = subs.find(v);
                Polynomial base = (it != subs.end()) ? it->second : variable(v);
                for (int k = 0; k < e; ++k) term = term * base;
            }
            out += term;
        }
        return out;
    }

    // Full evaluation; every variable must be assigned.
    Rational eval(const std::map<std::string, Rational>& point) const
    {
        Rational out(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.factors()) {
                auto it = point.find(v);
                if (it == point.end()) throw std::invalid_argument("eval: unassigned variable " + v);
                for (int k = 0; k < e; ++k) t *= it->second;
            }
            out += t;
        }
        return out;
    }

    // Groups terms by their monomial part over `names`: the keys are
    // monomials in `names` only, the values collect the cofactors.
    template <typename Set>
    std::map<Monomial, Polynomial, MonomialDescending> collect(const Set& names) const
    {
        std::map<Monomial, Polynomial, MonomialDescending> out;
        for (const auto& [m, c] : terms_) {
            Monomial key, rest;
            for (const auto& [v, e] : m.factors()) {
                if (names.count(v))
                    key = key.times(Monomial::var(v, e));
                else
                    rest = rest.times(Monomial::var(v, e));
            }
            out[key].add_term(rest, c);
        }
        return out;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    os << '-';
                    a = -a;
                }
                first = false;
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            bool unit_coeff = (a == Rational(1)) && !m.is_unit();
            if (!unit_coeff) os << a.str();
            if (!m.is_unit()) {
                if (!unit_coeff) os << '*';
                os << m.str();
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

} // namespace liefol
