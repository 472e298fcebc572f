import pytest

from dualrs import CodeSpec, Poly, make_field

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf7():
    return make_field(7, 1, alpha=3)


@pytest.fixture(scope="session")
def gf5():
    return make_field(5, 1)


@pytest.fixture(scope="session")
def gf256():
    return make_field(2, 8, modulus=0x11D, alpha=2)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def dual7(gf7):
    return CodeSpec(gf7, 2, "dual")


@pytest.fixture(scope="session")
def primal7(gf7):
    return CodeSpec(gf7, 2, "primal")


@pytest.fixture(scope="session")
def dual256(gf256):
    return CodeSpec(gf256, 223, "dual")


def P(field, *coeffs):
    """Shorthand: P(F, c0, c1, ...) = c0 + c1 x + ..."""
    return Poly(field, coeffs)


# -- independent oracles -------------------------------------------------------

def naive_mul(a, b, p, m, modulus_int):
    """Schoolbook product of two GF(p^m) elements, reduced mod the modulus."""
    def digits(v):
        return [(v // p**i) % p for i in range(m)]

    mod = [(modulus_int // p**i) % p for i in range(m + 1)]
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(digits(a)):
        for j, y in enumerate(digits(b)):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(len(prod) - 1, m - 1, -1):
        c = prod[top]
        if c:
            for i in range(m + 1):
                prod[top - m + i] = (prod[top - m + i] - c * mod[i]) % p
    return sum(c * p**i for i, c in enumerate(prod[:m]))


def brute_eval(field, word, x):
    """sum_i word[i] * x^i using repeated multiplication only."""
    acc, power = 0, 1
    for c in word:
        acc = field.add(acc, field.mul(c, power))
        power = field.mul(power, x)
    return acc


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
