#include <cmath>
#include <numbers>

#include "doctest.h"
#include "svf/svf_model.hpp"

using namespace svf;

TEST_CASE("FC at the centre") {
    const SvfModel fc = builtin("FC");
    const CompactSet v = evaluate(fc, 0.0);
    CHECK(v == CompactSet{{-1.5, -1.0}, {1.0, 1.5}});
    CHECK(evaluate(fc, 0.75) == CompactSet{{-1.5, 1.5}});
    // the closing points themselves carry no gap
    CHECK(evaluate(fc, -0.5).size() == 1);
    CHECK(evaluate(fc, 0.5).size() == 1);
}

TEST_CASE("FB closing point") {
    const SvfModel fb = builtin("FB");
    REQUIRE(fb.holes.size() == 1);
    const double xa = fb.holes[0].d;
    CHECK(fb.holes[0].c == -xa);
    CHECK(std::cos(2 * xa) / 2 + std::cos(3 * xa) / 3 == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    // scipy.optimize.brentq on [0.3, 1]
    CHECK(xa == doctest::Approx(0.6554767088482629).epsilon(1e-13));
    const CompactSet v = evaluate(fb, 0.0);
    CHECK(v == CompactSet{{-1.0, -1.0 / 3.0}, {0.5, 1.0}});
}

TEST_CASE("FA has three holes and valid geometry") {
    const SvfModel fa = builtin("FA");
    REQUIRE(fa.holes.size() == 3);
    const auto warnings = fa.validate();
    CHECK_FALSE(warnings.empty());  // g listed above h
    CHECK(evaluate(fa, -0.5).size() == 3);
    CHECK(evaluate(fa, 0.5).size() == 2);
    CHECK(evaluate(fa, 0.95).size() == 1);
    // hole 1 and 2 close where cosh(2x + 1) = 3/2
    const double c = (-1.0 - std::acosh(1.5)) / 2.0;
    CHECK(std::cosh(2 * c + 1) == doctest::Approx(1.5));
    CHECK(fa.holes[0].c == doctest::Approx(c));
}

TEST_CASE("built-ins validate without hard errors") {
    for (const char* name : {"FA", "FB", "FC"}) {
        CHECK_NOTHROW((void)builtin(name).validate());
    }
    CHECK_THROWS_AS((void)builtin("FD"), DomainError);
}

TEST_CASE("validate rejects a hole touching the outer boundary") {
    SvfModel m = builtin("FC");
    m.ell = {[](double) { return -0.5; }, -1, 1};
    CHECK_THROWS_AS((void)m.validate(), ModelError);
}

TEST_CASE("evaluate outside the domain") {
    CHECK_THROWS_AS((void)evaluate(builtin("FA"), 1.5), DomainError);
}

TEST_CASE("chebyshev partition") {
    const Partition p = chebyshev_partition(10, -1, 1);
    REQUIRE(p.size() == 11);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(p.nodes[i] < p.nodes[i + 1]);
    // roots of T_11
    for (double x : p.nodes) CHECK(std::cos(11 * std::acos(x)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    const Partition q = chebyshev_partition(4, 0, 2);
    CHECK(q.nodes.front() == doctest::Approx(1.0 - std::cos(std::numbers::pi / 10)));
}

TEST_CASE("uniform partition") {
    const Partition p = uniform_partition(20, -1, 1);
    REQUIRE(p.size() == 21);
    CHECK(p.nodes[5] == -0.5);
    CHECK(p.nodes[15] == 0.5);
    CHECK(p.norm() == doctest::Approx(0.1));
    CHECK_THROWS_AS((void)uniform_partition(0, 0, 1), DomainError);
}

TEST_CASE("sample set checks") {
    SampleSet s = sample(builtin("FB"), uniform_partition(10, -1, 1));
    CHECK_NOTHROW(s.check());
    s.values.pop_back();
    CHECK_THROWS_AS(s.check(), DomainError);
}
