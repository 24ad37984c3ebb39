"""The group of integer matrices preserving the bilinear form O_n + I_{p,q}.

Lambda denotes the block-diagonal form with an n x n zero block followed by
the diagonal (+1 x p, -1 x q) block.  A square integer matrix P belongs to the
group when P Lambda P^t = Lambda and det P = +-1.  Membership forces the upper
right n x (p+q) block of P to vanish, which yields an exact three-factor
decomposition

    P = (A + I) * (I, 0; X, I) * (I + D)

with A unimodular n x n, X = lower-left block, and D in the integer
indefinite orthogonal group O(p,q;Z).

All arithmetic is exact over Python integers (arbitrary precision).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CalcError

Matrix = list[list[int]]


# ---------------------------------------------------------------- int matrices


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    if len(a[0]) != len(b):
        raise CalcError("SIZE_MISMATCH", f"{len(a[0])} cols vs {len(b)} rows")
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)] if a else []


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def mat_det(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def block_sum(*blocks: Matrix) -> Matrix:
    size = sum(len(b) for b in blocks)
    out = zeros(size, size)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


# ------------------------------------------------------------------ the group


def lambda_form(n: int, p: int, q: int) -> Matrix:
    diag = [0] * n + [1] * p + [-1] * q
    return [[diag[i] if i == j else 0 for j in range(len(diag))] for i in range(len(diag))]


@dataclass(frozen=True)
class LambdaMatrix:
    """Integer square matrix together with the block signature (n, p, q)."""

    n: int
    p: int
    q: int
    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(n: int, p: int, q: int, entries) -> "LambdaMatrix":
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        size = n + p + q
        if len(rows) != size or any(len(r) != size for r in rows):
            raise CalcError("SIZE_MISMATCH", f"expected {size}x{size}")
        return LambdaMatrix(n, p, q, rows)

    def mat(self) -> Matrix:
        return [list(r) for r in self.entries]

    @property
    def size(self) -> int:
        return self.n + self.p + self.q


@dataclass(frozen=True)
class GeneratorWord:
    """Sequence of factors, each ('A', Q) | ('B', X) | ('C', R)."""

    factors: tuple[tuple[str, tuple[tuple[int, ...], ...]], ...]

    def matrices(self, n: int, p: int, q: int) -> list[Matrix]:
        out = []
        for kind, body in self.factors:
            block = [list(r) for r in body]
            if kind == "A":
                out.append(block_sum(block, identity(p + q)))
            elif kind == "C":
                out.append(block_sum(identity(n), block))
            else:  # B: unitriangular with lower-left block X
                m = identity(n + p + q)
                for i in range(p + q):
                    for j in range(n):
                        m[n + i][j] = block[i][j]
                out.append(m)
        return out


def reassemble(word: GeneratorWord, n: int, p: int, q: int) -> LambdaMatrix:
    acc = identity(n + p + q)
    for m in word.matrices(n, p, q):
        acc = mat_mul(acc, m)
    return LambdaMatrix.of(n, p, q, acc)


def is_member(pm: LambdaMatrix) -> bool:
    """True iff P Lambda P^t = Lambda and det P = +-1."""
    p = pm.mat()
    lam = lambda_form(pm.n, pm.p, pm.q)
    if not mat_eq(mat_mul(mat_mul(p, lam), mat_transpose(p)), lam):
        return False
    return mat_det(p) in (1, -1)


def _is_opq(r: Matrix, p: int, q: int) -> bool:
    ipq = lambda_form(0, p, q)
    return mat_eq(mat_mul(mat_mul(r, ipq), mat_transpose(r)), ipq)


def decompose(pm: LambdaMatrix) -> GeneratorWord:
    """Exact three-factor decomposition of a group member.

    Membership forces the upper-right block to vanish, so P = [[A,0],[C,D]]
    and P = (A+I)(I,0;C,I)(I+D) exactly.  Identity factors are dropped; the
    identity matrix decomposes as the empty word.
    """
    if not is_member(pm):
        raise CalcError("NOT_MEMBER", "matrix does not preserve the form")
    n, p, q = pm.n, pm.p, pm.q
    m = pm.mat()
    for i in range(n):
        for j in range(n, n + p + q):
            if m[i][j] != 0:
                raise CalcError("NOT_MEMBER", "upper-right block nonzero")
    a = [row[:n] for row in m[:n]]
    c = [row[:n] for row in m[n:]]
    d = [row[n:] for row in m[n:]]
    factors = []
    if n and not mat_eq(a, identity(n)):
        factors.append(("A", tuple(tuple(r) for r in a)))
    if n and (p + q) and any(any(v for v in row) for row in c):
        factors.append(("B", tuple(tuple(r) for r in c)))
    if (p + q) and not mat_eq(d, identity(p + q)):
        factors.append(("C", tuple(tuple(r) for r in d)))
    return GeneratorWord(tuple(factors))


# ------------------------------------------------------------ random elements


def _random_gl(n: int, rng: random.Random) -> Matrix:
    """Single random elementary operation on the identity (unimodular)."""
    m = identity(n)
    kind = rng.choice(["shear", "swap", "flip"]) if n >= 2 else "flip"
    if kind == "shear":
        i, j = rng.sample(range(n), 2)
        m[i][j] = rng.choice([-2, -1, 1, 2])
    elif kind == "swap":
        i, j = rng.sample(range(n), 2)
        m[i], m[j] = m[j], m[i]
    else:
        i = rng.randrange(n)
        m[i][i] = -1
    return m


# Integer unit of the form (+,+,-): rows have norms 1, 1, -1 and are
# Lambda-orthogonal; used to generate infinite-order elements of O(p,q;Z).
_HYPERBOLIC = [[1, 2, 2], [2, 1, 2], [2, 2, 3]]


def _random_opq(p: int, q: int, rng: random.Random) -> Matrix:
    """Random element of O(p,q;Z): signed block permutation, possibly
    composed with a hyperbolic unit on a (+,+,-) or (-,-,+) axis triple."""
    size = p + q
    perm_p = rng.sample(range(p), p)
    perm_q = rng.sample(range(q), q)
    m = zeros(size, size)
    for i, t in enumerate(perm_p):
        m[i][t] = rng.choice([1, -1])
    for i, t in enumerate(perm_q):
        m[p + i][p + t] = rng.choice([1, -1])
    axes = None
    if p >= 2 and q >= 1 and rng.random() < 0.5:
        xs = rng.sample(range(p), 2)
        axes = [xs[0], xs[1], p + rng.randrange(q)]
    elif q >= 2 and p >= 1 and rng.random() < 0.5:
        xs = rng.sample(range(q), 2)
        axes = [p + xs[0], p + xs[1], rng.randrange(p)]
    if axes is not None:
        h = identity(size)
        for i in range(3):
            for j in range(3):
                h[axes[i]][axes[j]] = _HYPERBOLIC[i][j]
        m = mat_mul(m, h)
    return m


def random_member(n: int, p: int, q: int, length: int, seed: int) -> LambdaMatrix:
    """Product of ``length`` random generators; deterministic per seed."""
    if length < 0:
        raise CalcError("SIZE_MISMATCH", "length must be >= 0")
    rng = random.Random(seed)
    size = n + p + q
    acc = identity(size)
    kinds = [k for k, ok in (("A", n > 0), ("B", n > 0 and p + q > 0), ("C", p + q > 0)) if ok]
    for _ in range(length):
        if not kinds:
            break
        kind = rng.choice(kinds)
        if kind == "A":
            g = block_sum(_random_gl(n, rng), identity(p + q))
        elif kind == "C":
            g = block_sum(identity(n), _random_opq(p, q, rng))
        else:
            g = identity(size)
            for i in range(p + q):
                for j in range(n):
                    g[n + i][j] = rng.randint(-2, 2)
        acc = mat_mul(acc, g)
    return LambdaMatrix.of(n, p, q, acc)


# -------------------------------------------------------------- text exchange


def parse_matrix(text: str) -> LambdaMatrix:
    """Matrix file: first line ``n p q``, then n+p+q rows of integers."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CalcError("SIZE_MISMATCH", "empty matrix file")
    try:
        n, p, q = (int(v) for v in lines[0].split())
    except ValueError as exc:
        raise CalcError("SIZE_MISMATCH", f"bad header {lines[0]!r}") from exc
    size = n + p + q
    if len(lines) - 1 != size:
        raise CalcError("SIZE_MISMATCH", f"expected {size} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [int(v) for v in ln.split()]
        if len(row) != size:
            raise CalcError("SIZE_MISMATCH", f"row {ln!r} has {len(row)} entries")
        rows.append(row)
    return LambdaMatrix.of(n, p, q, rows)


def format_matrix(pm: LambdaMatrix) -> str:
    lines = [f"{pm.n} {pm.p} {pm.q}"]
    lines += [" ".join(str(v) for v in row) for row in pm.entries]
    return "\n".join(lines) + "\n"
