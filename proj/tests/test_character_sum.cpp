#include <cmath>

#include "doctest.h"
#include "nonarch/character_sum.hpp"
#include "nonarch/field.hpp"

using namespace nonarch;

TEST_CASE("prime-power root relations are recognized exactly") {
    const FieldSpec Q2(FieldKind::Qp, 2);
    // zeta_8 + zeta_8^5 = 0: siblings differ by a half turn
    CharacterSum s(Q2, 0);
    s.add_term(UnitRootExponent(mpq_class(1, 8)));
    s.add_term(UnitRootExponent(mpq_class(5, 8)));
    CHECK(s.is_zero());
    CHECK(s.magnitude() == 0.0);

    const FieldSpec Q3(FieldKind::Qp, 3);
    CharacterSum t(Q3, 0);
    t.add_term(UnitRootExponent());
    t.add_term(UnitRootExponent(mpq_class(1, 3)));
    t.add_term(UnitRootExponent(mpq_class(2, 3)));
    CHECK(t.is_zero());

    CharacterSum u(Q3, 0);
    u.add_term(UnitRootExponent());
    u.add_term(UnitRootExponent(mpq_class(1, 3)));
    CHECK_FALSE(u.is_zero());
}

TEST_CASE("scale alignment makes equal values equal sums") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    CharacterSum a(Q3, 0);
    a.add_term(UnitRootExponent());  // 1
    CharacterSum b(Q3, 1);
    b.add_term(UnitRootExponent(), 3);  // (1/3) * 3
    CHECK(a.equals(b));
    CHECK(b.equals(a));

    CharacterSum c(Q3, 1);
    c.add_term(UnitRootExponent(), 2);
    CHECK_FALSE(a.equals(c));
}

TEST_CASE("magnitudes track the exact complex value") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    // (1/3)(1 + 2 zeta_3): |.| = sqrt(3)/3
    CharacterSum s(Q3, 1);
    s.add_term(UnitRootExponent(), 1);
    s.add_term(UnitRootExponent(mpq_class(1, 3)), 2);
    const double want = std::sqrt(3.0) / 3.0;
    CHECK(std::abs(s.magnitude() - want) <= s.magnitude_error() + 1e-12);

    const std::complex<double> v = s.value();
    CHECK(std::abs(std::abs(v) - want) <= s.magnitude_error() + 1e-12);
}

TEST_CASE("sums add and subtract term-wise") {
    const FieldSpec Q2(FieldKind::Qp, 2);
    CharacterSum a(Q2, 0);
    a.add_term(UnitRootExponent(mpq_class(1, 4)));
    CharacterSum b(Q2, 0);
    b.add_term(UnitRootExponent(mpq_class(1, 4)));
    const CharacterSum diff = a - b;
    CHECK(diff.is_zero());
    const CharacterSum sum = a + b;
    CHECK_FALSE(sum.is_zero());
    CHECK(std::abs(sum.magnitude() - 2.0) <= sum.magnitude_error() + 1e-12);
}
