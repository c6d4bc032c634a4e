import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extfuzzy import (
    DivisionByZero,
    DomainError,
    FamilyMismatch,
    FuzzyNumber,
    ParseError,
    add,
    divide,
    expabs,
    gauss,
    invert,
    make_efn,
    membership,
    multiply,
    negate,
    parse_efn,
    quasi,
    subtract,
    tri,
)
from extfuzzy.relations import Family

ints = st.integers(min_value=-1000, max_value=1000).map(float)
spread = st.integers(min_value=0, max_value=50).map(float)


def E(base, rel):
    return FuzzyNumber(base, rel)


@st.composite
def numbers(draw, family):
    if family == "quasi":
        rel = quasi(draw(spread), draw(spread))
    else:
        rel = {"tri": tri, "gauss": gauss, "expabs": expabs}[family](draw(spread))
    return E(draw(ints), rel)


families = st.sampled_from(["tri", "gauss", "expabs", "quasi"])


class TestConstruction:
    def test_make(self):
        n = make_efn(2, gauss(3))
        assert n.base == 2.0 and n.relation == gauss(3)
        assert str(n) == "2@gauss(3)"

    def test_non_finite_base(self):
        with pytest.raises(DomainError):
            make_efn(float("inf"), tri(1))

    def test_membership(self):
        assert membership(E(0, tri(1)), 0) == 1.0
        assert membership(E(2, tri(3)), 0) == pytest.approx(1 / 3, abs=1e-12)
        assert E(0, gauss(1)).membership(1) == pytest.approx(0.6065, abs=1e-4)

    @given(st.data())
    def test_membership_bounds(self, data):
        n = data.draw(numbers(data.draw(families)))
        y = data.draw(st.floats(-5e3, 5e3))
        assert membership(n, n.base) == 1.0
        assert 0.0 <= membership(n, y) <= 1.0


class TestArithmetic:
    def test_add_table_values(self):
        assert add(E(361, quasi(11, 9)), E(667, quasi(17, 216))) == E(1028, quasi(17, 216))
        assert add(E(300, quasi(10, 50)), E(130, quasi(10, 20))) == E(430, quasi(10, 50))

    def test_crisp_identities(self):
        x = E(7.25, gauss(2))
        assert add(x, E(0, gauss(0))) == x
        assert multiply(x, E(1, gauss(0))) == x
        assert x + 0 == x and 0 + x == x and x * 1 == x

    def test_negate(self):
        assert negate(E(5, tri(2))) == E(-5, tri(2))
        assert negate(E(0, gauss(1))) == E(0, gauss(1))
        assert negate(E(3, quasi(1, 4))) == E(-3, quasi(4, 1))

    @given(l=spread, r=spread, x=ints, y=st.floats(-2000, 2000))
    def test_negate_mirrors_membership(self, l, r, x, y):
        n = E(x, quasi(l, r))
        assert membership(negate(n), -y) == membership(n, y)

    def test_subtract(self):
        assert subtract(E(5, tri(2)), E(3, tri(1))) == E(2, tri(2))
        x = E(4, expabs(1.5))
        assert subtract(x, x) == E(0, expabs(1.5))
        assert subtract(E(13, quasi(2, 1)), E(0, quasi(0, 0))) == E(13, quasi(2, 1))
        assert E(5, tri(2)) - E(3, tri(1)) == E(2, tri(2))

    def test_multiply(self):
        assert multiply(E(2, tri(1)), E(3, tri(2))) == E(6, tri(2))
        assert multiply(E(0, gauss(1)), E(9.5, gauss(4))) == E(0, gauss(4))

    def test_invert(self):
        assert invert(E(2, tri(1))) == E(0.5, tri(1))
        assert invert(E(1, gauss(3))) == E(1, gauss(3))
        with pytest.raises(DivisionByZero):
            invert(E(0, expabs(1)))

    def test_divide(self):
        assert divide(E(6, tri(2)), E(3, tri(1))) == E(2, tri(2))
        x = E(-2.5, gauss(0.25))
        assert divide(x, x) == E(1, gauss(0.25))
        with pytest.raises(DivisionByZero):
            divide(x, E(0, gauss(1)))
        with pytest.raises(ZeroDivisionError):
            x / 0

    def test_family_mismatch(self):
        with pytest.raises(FamilyMismatch):
            add(E(1, tri(1)), E(1, gauss(1)))
        with pytest.raises(FamilyMismatch):
            multiply(E(1, quasi(1, 1)), E(1, tri(1)))

    @given(st.data())
    def test_commutative_associative(self, data):
        fam = data.draw(families)
        a, b, c = (data.draw(numbers(fam)) for _ in range(3))
        assert add(a, b) == add(b, a)
        assert multiply(a, b) == multiply(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    @given(st.data())
    def test_distributive(self, data):
        fam = data.draw(families)
        a, b, c = (data.draw(numbers(fam)) for _ in range(3))
        assert multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c))

    @given(st.data())
    def test_closure(self, data):
        fam = data.draw(families)
        a, b = data.draw(numbers(fam)), data.draw(numbers(fam))
        results = [add(a, b), subtract(a, b), multiply(a, b), negate(a)]
        if b.base != 0:
            results += [divide(a, b), invert(b)]
        assert all(isinstance(r, FuzzyNumber) and r.family is Family.from_text(fam) for r in results)

    @given(st.data())
    def test_many_identities(self, data):
        x = data.draw(numbers("tri"))
        p = data.draw(spread)
        s = add(x, E(0, tri(p)))
        assert s.base == x.base and s.relation.p == max(x.relation.p, p)

    @pytest.mark.parametrize("fam", ["tri", "gauss", "expabs", "quasi"])
    def test_vagueness_does_not_accumulate(self, fam):
        rng = random.Random(fam)
        make = {"tri": tri, "gauss": gauss, "expabs": expabs}.get(fam)
        nums = []
        for _ in range(150):
            if make is None:
                rel = quasi(rng.uniform(0, 10), rng.uniform(0, 10))
            else:
                rel = make(rng.uniform(0, 10))
            nums.append(E(rng.randint(-100, 100), rel))
        total = nums[0]
        for n in nums[1:]:
            total = total + n
        assert total.relation.left == max(n.relation.left for n in nums)
        assert total.relation.right == max(n.relation.right for n in nums)
        assert total.base == sum(n.base for n in nums)


class TestLiterals:
    @pytest.mark.parametrize("text", ["5.5@gauss(0.5)", "361@quasi(11,9)", "-4.3@tri(1)",
                                      "0@trap(3,0.5)", "1e-3@expabs(2)"])
    def test_round_trip(self, text):
        n = parse_efn(text)
        assert parse_efn(str(n)) == n

    def test_whitespace(self):
        assert parse_efn(" 361 @ quasi( 11 , 9 ) ") == E(361, quasi(11, 9))

    @pytest.mark.parametrize("text", ["5", "@tri(1)", "x@tri(1)", "1@tri(-1)", "nan@tri(1)", "1@tri(1"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_efn(text)
