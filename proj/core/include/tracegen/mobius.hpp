#ifndef TRACEGEN_MOBIUS_HPP
#define TRACEGEN_MOBIUS_HPP

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tracegen/dependence_graph.hpp"
#include "tracegen/letter_set.hpp"
#include "tracegen/numeric.hpp"

namespace tracegen {

/// Mobius polynomial mu_S(X) = sum over cliques gamma of S of
/// (-1)^|gamma| X^|gamma|. Coefficient j is (-1)^j times the number of
/// independence cliques of size j; c_0 is always 1.
class MobiusPolynomial {
public:
    MobiusPolynomial() : coeff_{1} {}
    explicit MobiusPolynomial(std::vector<std::int64_t> coeff) : coeff_(std::move(coeff)) {}

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    std::int64_t coeff(int j) const {
        return j >= 0 && j < static_cast<int>(coeff_.size()) ? coeff_[static_cast<size_t>(j)] : 0;
    }
    const std::vector<std::int64_t>& coefficients() const { return coeff_; }

    double eval(double x) const;
    /// Value of the formal derivative mu'(x).
    double eval_derivative(double x) const;
    Rational eval_exact(const Rational& x) const;

    /// Exact sign of mu(num/den) for den > 0, computed over integers.
    int sign_at(const BigInt& num, const BigInt& den) const;

    /// "1 - 4*X + 3*X^2"
    std::string to_string() const;

    friend bool operator==(const MobiusPolynomial& a, const MobiusPolynomial& b) {
        return a.coeff_ == b.coeff_;
    }

private:
    std::vector<std::int64_t> coeff_;
};

/// Coefficients by clique census over s (DFS over independent subsets).
MobiusPolynomial mobius_poly(const DependenceGraph& g, LetterSet s);

/// Lazily memoized evaluations mu_S(p) and mu'_S(p) at a fixed p,
/// keyed by subset bit pattern. Concurrent lookups are allowed; a miss
/// may be computed by several callers, and duplicate insertions of the
/// identical value are harmless.
class MobiusTable {
public:
    MobiusTable(const DependenceGraph& g, double p) : g_(&g), p_(p) {}

    const DependenceGraph& graph() const { return *g_; }
    double p() const { return p_; }

    double value(LetterSet s) const { return entry(s).first; }
    double derivative(LetterSet s) const { return entry(s).second; }

    std::size_t memo_size() const;

private:
    std::pair<double, double> entry(LetterSet s) const;

    const DependenceGraph* g_;
    double p_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::uint64_t, std::pair<double, double>> memo_;
};

/// Smallest positive root of mu_S, bracketed by a sign change with
/// mu(lo) > 0 >= mu(hi) and narrowed by bisection; sign tests are exact
/// over the integer coefficients. `degenerate` marks the no-sign-change
/// case (free-commutative-like), where the root is reported as exactly 1.
struct CriticalRoot {
    double value = 1.0;
    double lo = 1.0;
    double hi = 1.0;
    double tolerance = 0.0;
    bool degenerate = false;
};

CriticalRoot critical_root(const DependenceGraph& g, LetterSet s, double tol = 1e-12);

/// First `degree`+1 coefficients of the growth series
/// G_{S,U}(X) = mu_{S\U}(X) / mu_S(X) by exact integer power-series
/// division. Coefficient j counts the traces x over S with |x| = j and
/// max(x) contained in U.
std::vector<BigInt> series_expand(const DependenceGraph& g, LetterSet s, LetterSet u, int degree);

inline std::vector<BigInt> series_expand(const DependenceGraph& g, LetterSet u, int degree) {
    return series_expand(g, g.all(), u, degree);
}

} // namespace tracegen

#endif
