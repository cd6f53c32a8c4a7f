import itertools
import sys

import pytest

from bsymbol import kernels
from bsymbol.codes import Code, derive_params
from bsymbol.field import build_field


class PolyOracle:
    """GF(p^m) as coordinate lists reduced by the modulus; shares no tables
    with :class:`~bsymbol.field.FieldCtx`."""

    def __init__(self, p, modulus):
        self.p = p
        self.mod = list(modulus)
        self.m = len(modulus) - 1

    def vec(self, idx):
        out = []
        for _ in range(self.m):
            idx, r = divmod(idx, self.p)
            out.append(r)
        return out

    def idx(self, vec):
        x = 0
        for d in reversed(vec):
            x = x * self.p + d
        return x

    def add(self, a, b):
        return self.idx([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def mul(self, a, b):
        va, vb, p, m = self.vec(a), self.vec(b), self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(2 * m - 2, m - 1, -1):
            t = prod[k]
            if t:
                for j in range(m + 1):
                    prod[k - m + j] = (prod[k - m + j] - t * self.mod[j]) % p
        return self.idx(prod[:m])

    def pow(self, a, k):
        acc = 1
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc


@pytest.fixture(scope="session")
def poly_oracle():
    return PolyOracle


SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]


@pytest.fixture(scope="session", params=SMALL_FIELDS, ids=lambda pm: f"GF({pm[0]}^{pm[1]})")
def small_field(request):
    return build_field(*request.param)


@pytest.fixture(scope="session")
def code_2_4_1():
    return Code(derive_params(2, 1, 4, 1))


@pytest.fixture(scope="session")
def code_3_3_2():
    return Code(derive_params(3, 1, 3, 2))


@pytest.fixture(scope="session")
def code_5_3_2_short():
    return Code(derive_params(5, 1, 3, 2), "shortened")


@pytest.fixture(scope="session")
def code_5_3_2_full():
    return Code(derive_params(5, 1, 3, 2))


@pytest.fixture(params=kernels.available_backends(), ids=lambda m: m.BACKEND)
def backend(request):
    return request.param


def all_words(q, n):
    return itertools.product(range(q), repeat=n)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in list(sys.modules.items())
                if name.rpartition(".")[2] == "test_acceptance"), None)
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
