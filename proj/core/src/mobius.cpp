#include "tracegen/mobius.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

#include "tracegen/errors.hpp"

namespace tracegen {

double MobiusPolynomial::eval(double x) const {
    double acc = 0.0;
    for (size_t j = coeff_.size(); j-- > 0;)
        acc = acc * x + static_cast<double>(coeff_[j]);
    return acc;
}

double MobiusPolynomial::eval_derivative(double x) const {
    double acc = 0.0;
    for (size_t j = coeff_.size(); j-- > 1;)
        acc = acc * x + static_cast<double>(j) * static_cast<double>(coeff_[j]);
    return acc;
}

Rational MobiusPolynomial::eval_exact(const Rational& x) const {
    Rational acc = 0;
    for (size_t j = coeff_.size(); j-- > 0;)
        acc = acc * x + coeff_[j];
    return acc;
}

int MobiusPolynomial::sign_at(const BigInt& num, const BigInt& den) const {
    // sign of sum c_j num^j den^(d-j), an integer since den > 0
    size_t d = coeff_.size() - 1;
    BigInt acc = coeff_[d];
    BigInt den_pow = 1;
    for (size_t j = d; j-- > 0;) {
        den_pow *= den;
        acc = acc * num + coeff_[j] * den_pow;
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

std::string MobiusPolynomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < coeff_.size(); ++j) {
        std::int64_t c = coeff_[j];
        if (c == 0 && !(j == 0 && coeff_.size() == 1))
            continue;
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (j == 0) {
            out << mag;
        } else {
            if (mag != 1)
                out << mag << "*";
            out << "X";
            if (j > 1)
                out << "^" << j;
        }
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

namespace {

void census_dfs(const DependenceGraph& g, LetterSet candidates, int depth,
                std::vector<std::int64_t>& counts) {
    if (depth >= static_cast<int>(counts.size()))
        counts.resize(static_cast<size_t>(depth) + 1, 0);
    ++counts[static_cast<size_t>(depth)];
    while (!candidates.empty()) {
        int a = candidates.least();
        candidates = candidates.without(a);
        census_dfs(g, candidates - g.link(a), depth + 1, counts);
    }
}

} // namespace

MobiusPolynomial mobius_poly(const DependenceGraph& g, LetterSet s) {
    std::vector<std::int64_t> counts{0};
    census_dfs(g, s, 0, counts);
    for (size_t j = 1; j < counts.size(); j += 2)
        counts[j] = -counts[j];
    return MobiusPolynomial(std::move(counts));
}

std::pair<double, double> MobiusTable::entry(LetterSet s) const {
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(s.bits());
        if (it != memo_.end())
            return it->second;
    }
    MobiusPolynomial poly = mobius_poly(*g_, s);
    std::pair<double, double> value{poly.eval(p_), poly.eval_derivative(p_)};
    {
        std::unique_lock lock(mutex_);
        memo_.emplace(s.bits(), value);
    }
    return value;
}

std::size_t MobiusTable::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

namespace {

struct Bracket {
    BigInt lo_num, hi_num, den; // endpoints lo_num/den, hi_num/den
    bool exact_hit = false;     // mu(hi) == 0
};

// First sign change of `poly` on the grid {k/den : 1 <= k <= cap}.
std::optional<Bracket> scan_grid(const MobiusPolynomial& poly, const BigInt& den,
                                 const BigInt& cap) {
    for (BigInt k = 1; k <= cap; ++k) {
        int sign = poly.sign_at(k, den);
        if (sign <= 0)
            return Bracket{k - 1, k, den, sign == 0};
    }
    return std::nullopt;
}

} // namespace

CriticalRoot critical_root(const DependenceGraph& g, LetterSet s, double tol) {
    if (s.empty())
        throw input_error("critical root of the empty alphabet is undefined");
    if (!(tol > 0))
        throw input_error("tolerance must be positive");

    MobiusPolynomial poly = mobius_poly(g, s);

    CriticalRoot out;
    out.tolerance = tol;

    // Grid scan from 0 with step 1/(4n); mu(0) = 1 > 0 always. If no
    // sign change shows up anywhere in (0, 1], halve the step a bounded
    // number of times before declaring the polynomial degenerate.
    BigInt den = 4 * g.size();
    std::optional<Bracket> best = scan_grid(poly, den, den);
    for (int halvings = 0; !best && halvings < 10; ++halvings) {
        den *= 2;
        best = scan_grid(poly, den, den);
    }

    if (!best) {
        // Free-commutative-like case: mu stayed positive at every probed
        // point of (0, 1]; report p_S = 1 exactly.
        out.degenerate = true;
        out.value = out.lo = out.hi = 1.0;
        return out;
    }

    // Refine below the candidate while halving keeps uncovering an
    // earlier sign change; stops at the first pass that finds none.
    while (best->lo_num > 0) {
        BigInt den_fine = best->den * 2;
        std::optional<Bracket> earlier = scan_grid(poly, den_fine, best->lo_num * 2);
        if (!earlier)
            break;
        best = earlier;
    }

    if (best->exact_hit) {
        double v = static_cast<double>(Rational(best->hi_num, best->den));
        out.value = out.lo = out.hi = v;
        return out;
    }

    // Bisection with exact sign tests; invariant mu(lo) > 0 >= mu(hi).
    BigInt lo_num = best->lo_num, hi_num = best->hi_num, den2 = best->den;
    Rational tol_q(tol);
    while (Rational(hi_num - lo_num, den2) > tol_q) {
        lo_num *= 2;
        hi_num *= 2;
        den2 *= 2;
        BigInt mid = (lo_num + hi_num) / 2;
        int sign = poly.sign_at(mid, den2);
        if (sign == 0) {
            lo_num = hi_num = mid;
            break;
        }
        if (sign > 0)
            lo_num = mid;
        else
            hi_num = mid;
    }
    out.lo = static_cast<double>(Rational(lo_num, den2));
    out.hi = static_cast<double>(Rational(hi_num, den2));
    out.value = static_cast<double>(Rational(lo_num + hi_num, 2 * den2));
    return out;
}

std::vector<BigInt> series_expand(const DependenceGraph& g, LetterSet s, LetterSet u, int degree) {
    if (degree < 0)
        throw input_error("series degree must be nonnegative");
    u &= s;

    MobiusPolynomial numer = mobius_poly(g, s - u);
    MobiusPolynomial denom = mobius_poly(g, s);

    // G = numer / denom with denom(0) = 1:
    // g_n = a_n - sum_{j >= 1} b_j g_{n-j}
    std::vector<BigInt> out(static_cast<size_t>(degree) + 1);
    for (int n = 0; n <= degree; ++n) {
        BigInt acc = numer.coeff(n);
        for (int j = 1; j <= std::min(n, denom.degree()); ++j)
            acc -= denom.coeff(j) * out[static_cast<size_t>(n - j)];
        out[static_cast<size_t>(n)] = acc;
    }
    return out;
}

} // namespace tracegen
