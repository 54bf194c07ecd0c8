"""The centrosymmetric matrix algebra: canonical basis and structure constants.

A matrix a is centrosymmetric when a[i, j] == a[n+1-i, n+1-j] for all i, j,
equivalently c*a*c == a for the exchange matrix c.  These matrices form a
free module of rank ceil(n^2/2) with basis

    f[i, j] = e[i, j] + e[n+1-i, n+1-j]   (single unit when the two cells
                                           coincide, i.e. the odd middle cell)

indexed canonically by 1 <= i <= ceil(n/2) and 1 <= j <= n, except that in
the odd middle row i == (n+1)/2 the indices j and n+1-j name the same
element and the canonical representative takes j <= (n+1)/2.  Basis order
is lexicographic on the canonical (i, j).  Structure constants are always
computed by expanding into matrix units and multiplying (the oracle); the
closed product formula is a verified property, never the implementation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import Matrix, exchange, is_centrosymmetric, matrix_unit
from .rings import Ring


def kron(i: int, j: int) -> int:
    """Kronecker delta."""
    return 1 if i == j else 0


def akron(i: int, j: int) -> int:
    """Anti-Kronecker delta: 0 iff i == j."""
    return 0 if i == j else 1


def half_ceil(n: int) -> int:
    return (n + 1) // 2


def half_floor(n: int) -> int:
    return n // 2


def rank_of(n: int) -> int:
    """Free rank of the centrosymmetric algebra: ceil(n^2/2)."""
    return (n * n + 1) // 2


@dataclass(frozen=True, order=True)
class BasisIndex:
    n: int
    i: int
    j: int

    @property
    def label(self) -> str:
        return f"f{self.i}_{self.j}"

    def __repr__(self):
        return self.label


def canon_index(n: int, i: int, j: int) -> tuple:
    """Canonical representative of the index pair (i, j)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"index ({i}, {j}) out of range for size {n}")
    k = half_ceil(n)
    if i > k:
        i, j = n + 1 - i, n + 1 - j
    if n % 2 and i == k and j > k:
        j = n + 1 - j
    return (i, j)


def canonical_indices(n: int) -> list:
    """All canonical basis indices in lexicographic order; ceil(n^2/2) of them."""
    k = half_ceil(n)
    out = []
    for i in range(1, k + 1):
        top = k if (n % 2 and i == k) else n
        for j in range(1, top + 1):
            out.append(BasisIndex(n, i, j))
    return out


def basis_matrix(ring: Ring, n: int, i: int, j: int) -> Matrix:
    """The basis element f[i, j] as a matrix (index canonicalized first).

    The mirror unit is added exactly when it sits in a different cell; on
    the diagonal that is the anti-Kronecker adjustment of the definition.
    """
    i, j = canon_index(n, i, j)
    m = matrix_unit(ring, n, i, j)
    mi, mj = n + 1 - i, n + 1 - j
    if akron(i, mi) or akron(j, mj):
        m = m + matrix_unit(ring, n, mi, mj)
    return m


class CentroMatrix:
    """A matrix certified centrosymmetric at construction."""

    __slots__ = ("inner",)

    def __init__(self, inner: Matrix):
        if not is_centrosymmetric(inner):
            raise ValueError("matrix is not centrosymmetric")
        self.inner = inner

    @property
    def ring(self) -> Ring:
        return self.inner.ring

    @property
    def n(self) -> int:
        return self.inner.n

    def __getitem__(self, ij):
        return self.inner[ij]

    def __add__(self, other):
        return CentroMatrix(self.inner + _unwrap(other))

    def __sub__(self, other):
        return CentroMatrix(self.inner - _unwrap(other))

    def __neg__(self):
        return CentroMatrix(-self.inner)

    def __mul__(self, other):
        return CentroMatrix(self.inner * _unwrap(other))

    def scale(self, r):
        return CentroMatrix(self.inner.scale(r))

    def transpose(self):
        return CentroMatrix(self.inner.transpose())

    def __eq__(self, other):
        return isinstance(other, CentroMatrix) and other.inner == self.inner

    def __hash__(self):
        return hash(("centro", self.inner))

    def __repr__(self):
        return f"Centro{self.inner!r}"


def _unwrap(m):
    return m.inner if isinstance(m, CentroMatrix) else m


def canonical_basis(ring: Ring, n: int) -> list:
    """Ordered list of (BasisIndex, CentroMatrix) pairs."""
    return [
        (idx, CentroMatrix(basis_matrix(ring, n, idx.i, idx.j)))
        for idx in canonical_indices(n)
    ]


def coords(a) -> list:
    """Coordinates of a centrosymmetric matrix over the canonical basis.

    Each basis element contributes exactly one canonical cell, so the
    coordinate at (i, j) is just the entry a[i, j].
    """
    m = _unwrap(a)
    if not is_centrosymmetric(m):
        raise ValueError("matrix is not centrosymmetric")
    return [m[idx.i, idx.j] for idx in canonical_indices(m.n)]


def from_coords(ring: Ring, n: int, v) -> CentroMatrix:
    """Inverse of :func:`coords`: the combination sum(v[u] * f_u)."""
    v = list(v)
    idxs = canonical_indices(n)
    if len(v) != len(idxs):
        raise ValueError(f"expected {len(idxs)} coordinates for size {n}, got {len(v)}")
    grid = [[ring.zero()] * n for _ in range(n)]
    for idx, val in zip(idxs, v):
        grid[idx.i - 1][idx.j - 1] = val
        grid[n - idx.i][n - idx.j] = val
    return CentroMatrix(Matrix(ring, n, [x for row in grid for x in row]))


_SC_CACHE: dict = {}


def structure_constants(ring: Ring, n: int) -> dict:
    """Sparse product table: (u, v) -> tuple of (w, coeff) with f_u f_v = sum.

    Computed by the matrix-unit oracle: expand basis elements as matrices,
    multiply, re-extract coordinates.  Cached per (ring, n).
    """
    key = (ring, n)
    cached = _SC_CACHE.get(key)
    if cached is not None:
        return cached
    basis = canonical_basis(ring, n)
    zero = ring.zero()
    table = {}
    for u, (_, fu) in enumerate(basis):
        for v, (_, fv) in enumerate(basis):
            cs = coords(fu * fv)
            terms = tuple((w, c) for w, c in enumerate(cs) if c != zero)
            if terms:
                table[(u, v)] = terms
    _SC_CACHE[key] = table
    return table


def formula_applicable(n: int, a: BasisIndex, b: BasisIndex) -> bool:
    """Whether the closed product formula applies verbatim to f_a * f_b.

    The formula breaks exactly where the odd middle cell halves supports:
    when either factor is the middle idempotent f[mid, mid], or when the
    first factor sits in the middle row while the second ends in the
    middle column (their unit terms then collapse pairwise and double).
    """
    if n % 2 == 0:
        return True
    mid = half_ceil(n)
    if (a.i, a.j) == (mid, mid) or (b.i, b.j) == (mid, mid):
        return False
    return not (a.i == mid and b.j == mid)


def formula_product(ring: Ring, n: int, a: BasisIndex, b: BasisIndex):
    """Closed-formula expansion of f_a * f_b, or None where not applicable.

    f[i,j] f[p,q] = kron(j, p) f[i, q] + kron(j, n+1-p) f[i, n+1-q],
    read against canonical representatives.
    """
    if not formula_applicable(n, a, b):
        return None
    out = {}
    one = ring.one()
    if kron(a.j, b.i):
        w = canon_index(n, a.i, b.j)
        out[w] = ring.add(out.get(w, ring.zero()), one)
    if kron(a.j, n + 1 - b.i):
        w = canon_index(n, a.i, n + 1 - b.j)
        out[w] = ring.add(out.get(w, ring.zero()), one)
    zero = ring.zero()
    return {w: c for w, c in out.items() if c != zero}


def idempotents(ring: Ring, n: int) -> list:
    """The diagonal elements f_1 .. f_ceil(n/2): orthogonal, summing to 1."""
    return [
        CentroMatrix(basis_matrix(ring, n, i, i)) for i in range(1, half_ceil(n) + 1)
    ]


def peirce_component(ring: Ring, n: int, i: int, j: int) -> list:
    """Basis of the corner f_i * S * f_j: one or two canonical elements."""
    k = half_ceil(n)
    if not (1 <= i <= k and 1 <= j <= k):
        raise IndexError(f"corner index ({i}, {j}) out of range; need 1..{k}")
    seen = []
    for jj in (j, n + 1 - j):
        ci, cj = canon_index(n, i, jj)
        idx = BasisIndex(n, ci, cj)
        if idx not in [s[0] for s in seen]:
            seen.append((idx, CentroMatrix(basis_matrix(ring, n, ci, cj))))
    return seen


class SymSeq:
    """A palindromic sequence of ring elements: a[i] == a[m+1-i]."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: Ring, entries):
        entries = tuple(entries)
        m = len(entries)
        for i in range(m // 2):
            if entries[i] != entries[m - 1 - i]:
                raise ValueError(
                    f"sequence is not symmetric at positions {i + 1} and {m - i}"
                )
        self.ring = ring
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, SymSeq)
            and other.ring == self.ring
            and other.entries == self.entries
        )

    def __repr__(self):
        return f"SymSeq({self.ring.literal()}, {[self.ring.format(e) for e in self.entries]})"


def is_symmetric_sequence(entries) -> bool:
    entries = list(entries)
    m = len(entries)
    return all(entries[i] == entries[m - 1 - i] for i in range(m // 2))


def fill_square(ring: Ring, entries) -> Matrix:
    """Row-major fill of a length-n^2 sequence into an n-by-n matrix."""
    entries = list(entries)
    n = int(len(entries) ** 0.5)
    while n * n < len(entries):
        n += 1
    if n * n != len(entries):
        raise ValueError(f"sequence length {len(entries)} is not a perfect square")
    return Matrix(ring, n, entries)


def seq_to_matrix(s: SymSeq) -> CentroMatrix:
    """Identify a symmetric sequence of square length with a centrosymmetric matrix."""
    return CentroMatrix(fill_square(s.ring, s.entries))


def matrix_to_seq(a) -> SymSeq:
    m = _unwrap(a)
    return SymSeq(m.ring, m.entries)


def exchange_coords(ring: Ring, n: int) -> list:
    """Coordinates of the exchange matrix c over the canonical basis."""
    return coords(CentroMatrix(exchange(ring, n)))
