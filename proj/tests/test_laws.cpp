#include <doctest.h>

#include <cmath>

#include "tracegen/errors.hpp"
#include "tracegen/laws.hpp"
#include "tracegen/pyramid.hpp"
#include "tracegen/rng.hpp"
#include "tracegen/sampler.hpp"
#include "support.hpp"

using namespace tracegen;
using namespace tracegen::testing;

TEST_CASE("b weights of the running example") {
    DependenceGraph g = path4();
    TraceLaw law(g, 0.2);
    CHECK(b_weight(law, Trace()) == doctest::Approx(0.32).epsilon(1e-14));
    CHECK(b_weight(law, tr(g, "a.b.a")) == doctest::Approx(0.00256).epsilon(1e-12));
    CHECK_THROWS_AS(TraceLaw(g, 0.4), domain_error);
    CHECK_THROWS_AS(TraceLaw(g, 1.0 / 3.0), domain_error);
}

TEST_CASE("b weight partial sums increase toward 1") {
    DependenceGraph g = path4();
    Rational p(1, 5);
    Rational mu(8, 25);
    auto counts = series_expand(g, g.all(), 25);
    Rational sum = 0;
    Rational power = 1;
    Rational prev = -1;
    for (const BigInt& c : counts) {
        sum += mu * Rational(c) * power;
        power *= p;
        CHECK(sum > prev);
        CHECK(sum <= 1);
        prev = sum;
    }
    CHECK(static_cast<double>(sum) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("geometric parameter forms and domain errors") {
    DependenceGraph g = path4();
    MobiusTable table(g, 0.2);
    CHECK(geometric_param(table, g.all(), g.index("c")) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // singleton alphabet: r collapses to p
    CHECK(geometric_param(table, LetterSet::single(g.index("c")), g.index("c")) ==
          doctest::Approx(0.2).epsilon(1e-14));

    MobiusTable tiny(g, 1e-9);
    CHECK(geometric_param(tiny, g.all(), g.index("c")) < 1e-8);

    // p beyond p_{S \ {a1}} zeroes the denominator
    MobiusTable bad(g, 0.5);
    CHECK_THROWS_AS(geometric_param(bad, g.all(), g.index("c")), domain_error);

    CHECK_THROWS_AS(geometric_param(table, g.parse_letter_set("a,b"), g.index("c")),
                    input_error);
}

TEST_CASE("conditional weights") {
    DependenceGraph g = path4();

    // T = Sigma degenerates to the unconditioned law
    TraceLaw full(g, 0.2, g.all());
    TraceLaw plain(g, 0.2);
    for (const char* text : {"e", "a", "b.a", "a.c"}) {
        Trace x = tr(g, text);
        CHECK(conditional_weight(full, x) == doctest::Approx(b_weight(plain, x)).epsilon(1e-14));
    }

    TraceLaw cond(g, 0.2, g.parse_letter_set("c"));
    CHECK(conditional_weight(cond, Trace()) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(conditional_weight(cond, tr(g, "a")) == 0.0); // max not inside T
}

TEST_CASE("exact distribution tables") {
    DependenceGraph g = path4();
    Rational p(1, 5);

    ExactTable table = exact_distribution(g, p, g.all(), g.all(), 2);
    CHECK(table.entries.size() == 1 + 4 + 13);
    CHECK(table.entries.at("[]") == Rational(8, 25));
    CHECK(table.entries.at("[a]") == Rational(8, 125));
    CHECK(table.entries.at("[a d]") == Rational(8, 625)); // the trace a.d
    double mass = static_cast<double>(table.enumerated_mass);
    CHECK(mass <= 1.0);
    CHECK(mass + table.tail_bound >= 1.0);

    // conditioning on the empty max set keeps only the unit
    ExactTable unit_only = exact_distribution(g, p, g.all(), LetterSet(), 4);
    CHECK(unit_only.entries.size() == 1);
    CHECK(unit_only.entries.at("[]") == 1);

    // horizon 0 holds the unit with its conditional weight
    ExactTable horizon0 = exact_distribution(g, p, g.all(), g.all(), 0);
    CHECK(horizon0.entries.size() == 1);
    CHECK(horizon0.entries.at("[]") == Rational(8, 25));

    CHECK_THROWS_AS(exact_distribution(free_monoid(6), p, free_monoid(6).all(),
                                       free_monoid(6).all(), 2),
                    input_error);
    CHECK_THROWS_AS(exact_distribution(g, p, g.all(), g.all(), 11), input_error);
    CHECK_THROWS_AS(exact_distribution(g, Rational(1, 2), g.all(), g.all(), 2), domain_error);
}

TEST_CASE("exact distribution matches conditional weights on a sub-alphabet") {
    DependenceGraph g = path4();
    Rational p(1, 5);
    LetterSet s = g.parse_letter_set("a,b,c");
    LetterSet t = g.link(g.index("d")) & s; // {c}
    ExactTable table = exact_distribution(g, p, s, t, 5);

    // mu_{abc} = 1 - 3X + X^2 -> 11/25 at 1/5; Z = mu_{ab} = 1 - 2X -> 3/5
    CHECK(table.entries.at("[]") == Rational(11, 25) / Rational(3, 5));
    CHECK(table.entries.at("[c]") == Rational(11, 125) / Rational(3, 5));
    for (const auto& [key, weight] : table.entries)
        CHECK(weight > 0);
    CHECK(static_cast<double>(table.enumerated_mass) + table.tail_bound >= 1.0);
    CHECK(table.enumerated_mass <= 1);
}

TEST_CASE("pyramid count mass is geometric, checked exactly") {
    DependenceGraph g = path4();
    const int horizon = 8;
    Rational p(1, 5);
    Rational mu(8, 25);
    Rational r(1, 3); // geometric parameter at anchor c

    // exact enumerated mass of {|x|_c = k}, missing only the tail
    int c = g.index("c");
    std::vector<Rational> mass(5, Rational(0));
    Rational p_pow[9];
    p_pow[0] = 1;
    for (int j = 1; j <= horizon; ++j)
        p_pow[j] = p_pow[j - 1] * p;
    for (const Trace& x : distinct_traces(g, g.all(), horizon)) {
        std::size_t k = x.count(c);
        if (k < mass.size())
            mass[k] += mu * p_pow[x.length()];
    }

    // total tail mass beyond the horizon
    Rational seen = 0;
    auto counts = series_expand(g, g.all(), horizon);
    for (int j = 0; j <= horizon; ++j)
        seen += mu * Rational(counts[static_cast<size_t>(j)]) * p_pow[j];
    Rational tail = 1 - seen;
    CHECK(tail > 0);
    CHECK(tail < Rational(1, 50));

    Rational expected = 1 - r; // (1-r) r^k with B(L) = 1 - r for T = Sigma
    for (int k = 0; k <= 3; ++k) {
        CHECK(mass[static_cast<size_t>(k)] <= expected);
        CHECK(mass[static_cast<size_t>(k)] + tail >= expected);
        expected *= r;
    }

    // the occurrence probability: B(|x|_c > 0) = 1 - mu_Sigma / mu_{Sigma - c} = 1/3
    Rational no_c = mass[0];
    CHECK(no_c <= Rational(2, 3));
    CHECK(no_c + tail >= Rational(2, 3));
}

TEST_CASE("product form of concatenation masses under injective pasting") {
    DependenceGraph g = path4();
    Rational p(1, 5);
    Rational mu(8, 25);
    int c = g.index("c");

    auto b_mass = [&](const std::vector<Trace>& set) {
        Rational total = 0;
        for (const Trace& x : set) {
            Rational power = 1;
            for (size_t i = 0; i < x.length(); ++i)
                power *= p;
            total += mu * power;
        }
        return total;
    };

    std::vector<Trace> pyramids; // c-pyramidal, length <= 4
    std::vector<Trace> tails;    // c-free, length <= 3
    for (const Trace& x : distinct_traces(g, g.all(), 4))
        if (is_pyramidal(g, x, c))
            pyramids.push_back(x);
    for (const Trace& x : distinct_traces(g, g.all().without(c), 3))
        tails.push_back(x);

    // injectivity of concatenation on this pair of sets
    std::set<std::string> products;
    std::vector<Trace> product_list;
    for (const Trace& u : pyramids)
        for (const Trace& v : tails) {
            Trace uv = u;
            uv.append(v);
            products.insert(lex_min_key(g, uv));
            product_list.push_back(uv);
        }
    REQUIRE(products.size() == pyramids.size() * tails.size());

    CHECK(b_mass(product_list) == b_mass(pyramids) * b_mass(tails) / mu);
}

TEST_CASE("goodness of fit for the geometric law") {
    std::vector<std::int64_t> zeros(1000, 0);
    GoodnessOfFit perfect = k_law_check(zeros, 0.0);
    CHECK(perfect.statistic == 0.0);
    CHECK(perfect.p_value == 1.0);

    std::vector<std::int64_t> not_zero(1000, 0);
    not_zero[10] = 2;
    CHECK(k_law_check(not_zero, 0.0).p_value == 0.0);

    Rng rng(2024);
    std::vector<std::int64_t> good;
    for (int i = 0; i < 100000; ++i)
        good.push_back(sample_geometric(1.0 / 3.0, rng));
    CHECK(k_law_check(good, 1.0 / 3.0).p_value > 0.001);

    std::vector<std::int64_t> wrong;
    for (int i = 0; i < 100000; ++i)
        wrong.push_back(sample_geometric(0.5, rng));
    CHECK(k_law_check(wrong, 1.0 / 3.0).p_value < 1e-9);

    CHECK_THROWS_AS(k_law_check(std::vector<std::int64_t>{}, 0.5), input_error);
    CHECK_THROWS_AS(k_law_check(zeros, 1.0), input_error);
}
