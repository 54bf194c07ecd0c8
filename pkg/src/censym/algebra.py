"""Finite-rank structure-constant algebras with involutions.

A :class:`StructureAlgebra` is a free module with a distinguished basis, a
sparse product table on basis pairs, unit coordinates, and optionally an
involution given by the coordinate images of the basis.  It is the common
carrier for the centrosymmetric algebra, full matrix algebras (also over a
group-ring coefficient ring, flattened to the base), direct products,
corner subalgebras, and quotients.  Linear maps between algebras or based
modules travel as :class:`LinearMapWitness` values whose claimed properties
are machine-checked exhaustively on basis pairs by :func:`check_witness`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import basis as fb
from .linalg import (
    FreenessUndetermined,
    RowBasis,
    mat_vec,
    nullspace,
    span_basis,
    unit_vector,
    vec_is_zero,
)
from .matrices import Matrix
from .reports import FAIL, PASS, UNDETERMINED, Report, combine_clauses
from .rings import GroupRingC2, Ring


class StructureAlgebra:
    """An associative unital algebra presented by basis labels and a sparse
    structure-constant table ``(u, v) -> ((w, coeff), ...)``."""

    def __init__(self, ring: Ring, labels, table: dict, unit, invol=None):
        self.ring = ring
        self.labels = tuple(labels)
        zero = ring.zero()
        self.table = {
            uv: tuple((w, c) for w, c in terms if c != zero)
            for uv, terms in table.items()
            if any(c != zero for _, c in terms)
        }
        self.unit = list(unit)
        if len(self.unit) != len(self.labels):
            raise ValueError("unit coordinate length does not match the basis")
        self.invol = None if invol is None else [list(row) for row in invol]
        if self.invol is not None and len(self.invol) != len(self.labels):
            raise ValueError("involution matrix does not match the basis")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def zero_vector(self):
        return [self.ring.zero()] * self.rank

    def basis_vector(self, u: int):
        return unit_vector(self.ring, self.rank, u)

    def mul(self, x, y):
        R = self.ring
        zero = R.zero()
        out = [zero] * self.rank
        xs = [(u, c) for u, c in enumerate(x) if c != zero]
        tbl = self.table
        for v, cv in enumerate(y):
            if cv == zero:
                continue
            for u, cu in xs:
                terms = tbl.get((u, v))
                if terms:
                    cuv = R.mul(cu, cv)
                    for w, c in terms:
                        out[w] = R.add(out[w], R.mul(cuv, c))
        return out

    def mul_basis(self, u: int, v: int):
        out = self.zero_vector()
        for w, c in self.table.get((u, v), ()):
            out[w] = c
        return out

    def apply_invol(self, x):
        if self.invol is None:
            raise ValueError("algebra has no involution")
        return mat_vec(self.ring, self.invol, x)

    def format_element(self, x) -> str:
        return format_vector(self.ring, self.labels, x)

    def validate(self) -> list:
        """Exhaustive associativity, unit, and involution audit on the basis.

        Returns a list of defect descriptions; empty means the presentation
        is a genuine algebra (with involution, if one is attached).
        """
        defects = []
        r = self.rank
        for u in range(r):
            e = self.basis_vector(u)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                defects.append(f"unit law fails at {self.labels[u]}")
        for u in range(r):
            for v in range(r):
                uv = self.mul_basis(u, v)
                for w in range(r):
                    left = self.mul(uv, self.basis_vector(w))
                    right = self.mul(self.basis_vector(u), self.mul_basis(v, w))
                    if left != right:
                        defects.append(
                            "associativity fails at "
                            f"({self.labels[u]}, {self.labels[v]}, {self.labels[w]})"
                        )
        if self.invol is not None:
            for u in range(r):
                twice = self.apply_invol(self.invol[u])
                if twice != self.basis_vector(u):
                    defects.append(f"involution is not an involution at {self.labels[u]}")
            if self.apply_invol(self.unit) != self.unit:
                defects.append("involution moves the unit")
            for u in range(r):
                for v in range(r):
                    left = self.apply_invol(self.mul_basis(u, v))
                    right = self.mul(self.invol[v], self.invol[u])
                    if left != right:
                        defects.append(
                            "involution is not an anti-homomorphism at "
                            f"({self.labels[u]}, {self.labels[v]})"
                        )
        return defects

    def invol_is_signed_permutation(self) -> bool:
        if self.invol is None:
            return False
        R = self.ring
        zero, one = R.zero(), R.one()
        minus = R.neg(one)
        for row in self.invol:
            nz = [c for c in row if c != zero]
            if len(nz) != 1 or nz[0] not in (one, minus):
                return False
        return True

    def to_json_dict(self) -> dict:
        R = self.ring
        r = self.rank
        tensor = [
            [
                [R.format(c) for c in self.mul_basis(u, v)]
                for v in range(r)
            ]
            for u in range(r)
        ]
        out = {
            "ring": R.literal(),
            "rank": r,
            "labels": list(self.labels),
            "unit": [R.format(c) for c in self.unit],
            "tensor": tensor,
        }
        if self.invol is not None:
            out["involution"] = [[R.format(c) for c in row] for row in self.invol]
        return out


def format_vector(ring: Ring, labels, v) -> str:
    """Human-readable combination like ``f1_1 + 2*f1_3`` or ``-f2_1``."""
    zero, one = ring.zero(), ring.one()
    minus = ring.neg(one)
    parts = []
    for c, lab in zip(v, labels):
        if c == zero:
            continue
        if c == one:
            parts.append(lab)
        elif c == minus:
            parts.append(f"-{lab}")
        else:
            s = ring.format(c)
            if "+" in s or "-" in s[1:]:
                s = f"({s})"
            parts.append(f"{s}*{lab}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def algebra_of_censym(ring: Ring, n: int) -> StructureAlgebra:
    """The centrosymmetric algebra on the canonical f-basis, with the matrix
    transpose as its involution (a plus-signed basis permutation)."""
    idxs = fb.canonical_indices(n)
    pos = {(ix.i, ix.j): u for u, ix in enumerate(idxs)}
    labels = [ix.label for ix in idxs]
    table = fb.structure_constants(ring, n)
    unit = fb.coords(fb.CentroMatrix(Matrix.identity(ring, n)))
    invol = []
    for ix in idxs:
        ti, tj = fb.canon_index(n, ix.j, ix.i)
        invol.append(unit_vector(ring, len(idxs), pos[(ti, tj)]))
    return StructureAlgebra(ring, labels, table, unit, invol)


def full_matrix_algebra(ring: Ring, m: int,
                        flatten_group_ring: bool = True) -> StructureAlgebra:
    """The full m-by-m matrix algebra on matrix units, transpose involution.

    When the coefficient ring is a group ring over the order-two cyclic
    group, the algebra is by default flattened over the base ring: basis
    E{i}_{j} and x*E{i}_{j}, with x carried along multiplication via
    x*x == 1 and fixed by the involution.  Pass ``flatten_group_ring=False``
    to keep matrix units over the group ring itself (rank m*m over it).
    """
    if m < 1:
        raise ValueError(f"matrix algebra size must be >= 1, got {m}")
    if isinstance(ring, GroupRingC2) and flatten_group_ring:
        base = ring.base
        idx = {}
        labels = []
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for g in (0, 1):
                    idx[(i, j, g)] = len(labels)
                    labels.append(f"E{i}_{j}" if g == 0 else f"x*E{i}_{j}")
        one = base.one()
        table = {}
        for (i, j, g), u in idx.items():
            for (p, q, h), v in idx.items():
                if j == p:
                    table[(u, v)] = ((idx[(i, q, (g + h) % 2)], one),)
        unit = [base.zero()] * len(labels)
        for i in range(1, m + 1):
            unit[idx[(i, i, 0)]] = one
        invol = [
            unit_vector(base, len(labels), idx[(j, i, g)])
            for (i, j, g) in idx
        ]
        return StructureAlgebra(base, labels, table, unit, invol)

    idx = {}
    labels = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            idx[(i, j)] = len(labels)
            labels.append(f"E{i}_{j}")
    one = ring.one()
    table = {}
    for (i, j), u in idx.items():
        for (p, q), v in idx.items():
            if j == p:
                table[(u, v)] = ((idx[(i, q)], one),)
    unit = [ring.zero()] * len(labels)
    for i in range(1, m + 1):
        unit[idx[(i, i)]] = one
    invol = [unit_vector(ring, len(labels), idx[(j, i)]) for (i, j) in idx]
    return StructureAlgebra(ring, labels, table, unit, invol)


def zero_algebra(ring: Ring) -> StructureAlgebra:
    return StructureAlgebra(ring, (), {}, (), invol=())


def direct_product(a: StructureAlgebra, b: StructureAlgebra,
                   prefixes=("a", "b")) -> StructureAlgebra:
    """Block-diagonal product algebra with prefixed labels."""
    if a.ring != b.ring:
        raise ValueError("direct product needs a common coefficient ring")
    ring = a.ring
    labels = [f"{prefixes[0]}:{lab}" for lab in a.labels] + [
        f"{prefixes[1]}:{lab}" for lab in b.labels
    ]
    off = a.rank
    table = dict(a.table)
    for (u, v), terms in b.table.items():
        table[(u + off, v + off)] = tuple((w + off, c) for w, c in terms)
    unit = list(a.unit) + list(b.unit)
    invol = None
    if a.invol is not None and b.invol is not None:
        zero = ring.zero()
        invol = [row + [zero] * b.rank for row in a.invol] + [
            [zero] * off + row for row in b.invol
        ]
    return StructureAlgebra(ring, labels, table, unit, invol)


def subalgebra_from_vectors(a: StructureAlgebra, vectors, labels, unit_vec,
                            induce_invol: bool = False) -> StructureAlgebra:
    """The algebra spanned by the given independent vectors, which must be
    closed under multiplication and contain the given unit."""
    ring = a.ring
    rb = RowBasis(ring, a.rank, track=True)
    rb.insert_all(vectors)
    table = {}
    zero = ring.zero()
    for u, xu in enumerate(vectors):
        for v, xv in enumerate(vectors):
            prod = a.mul(xu, xv)
            cs = rb.express(prod)
            if cs is None:
                raise ValueError(
                    f"span is not closed under multiplication at ({labels[u]}, {labels[v]})"
                )
            terms = tuple((w, c) for w, c in enumerate(cs) if c != zero)
            if terms:
                table[(u, v)] = terms
    unit = rb.express(list(unit_vec))
    if unit is None:
        raise ValueError("unit is not inside the span")
    invol = None
    if induce_invol:
        if a.invol is None:
            raise ValueError("ambient algebra has no involution to induce")
        invol = []
        for xu in vectors:
            img = rb.express(a.apply_invol(xu))
            if img is None:
                raise ValueError("span is not involution-stable")
            invol.append(img)
    return StructureAlgebra(ring, labels, table, unit, invol)


@dataclass
class BasedModule:
    """A free module with a listed basis of coordinate vectors inside an
    ambient structure algebra."""

    algebra: StructureAlgebra
    vectors: list
    name: str = "module"
    _rb: RowBasis | None = field(default=None, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def rowbasis(self) -> RowBasis:
        if self._rb is None:
            rb = RowBasis(self.algebra.ring, self.algebra.rank, track=True)
            rb.insert_all(self.vectors)
            self._rb = rb
        return self._rb

    def express(self, ambient_vec):
        return self.rowbasis().express(ambient_vec)

    def to_ambient(self, coords):
        return mat_vec(self.algebra.ring, self.vectors, coords)


@dataclass
class LinearMapWitness:
    """A linear map on bases plus the properties it claims; claims are
    verified exhaustively by :func:`check_witness`.

    ``matrix[u]`` is the image of the u-th source basis vector in target
    coordinates.  ``bijective`` claims need the explicit two-sided
    ``inverse``.  Supported claims: algebra-homomorphism,
    left-module-homomorphism, bimodule-homomorphism, bijective,
    involution-equivariant.
    """

    source: object
    target: object
    matrix: list
    inverse: list | None = None
    claimed: tuple = ()
    name: str = "map"

    def apply(self, v):
        ring = _ring_of(self.target)
        return mat_vec(ring, self.matrix, v)

    def apply_inverse(self, v):
        ring = _ring_of(self.source)
        return mat_vec(ring, self.inverse, v)


def _ring_of(side) -> Ring:
    return side.algebra.ring if isinstance(side, BasedModule) else side.ring


def _rank_of(side) -> int:
    return side.rank


def _labels_of(side):
    if isinstance(side, BasedModule):
        return [f"{side.name}[{k}]" for k in range(side.rank)]
    return side.labels


def check_witness(w: LinearMapWitness, params: dict | None = None) -> Report:
    """Verify every claimed property of the witness on all basis pairs."""
    params = dict(params or {})
    params.setdefault("map", w.name)
    clauses = {}
    counterexample = None

    def record(prop, verdict, ce=None):
        nonlocal counterexample
        clauses[prop] = verdict
        if verdict == FAIL and counterexample is None and ce is not None:
            counterexample = dict(ce, property=prop)

    for prop in w.claimed:
        if prop == "algebra-homomorphism":
            record(prop, *_check_algebra_hom(w))
        elif prop == "bijective":
            record(prop, *_check_bijective(w))
        elif prop == "left-module-homomorphism":
            record(prop, *_check_module_hom(w, right=False))
        elif prop == "bimodule-homomorphism":
            verdict, ce = _check_module_hom(w, right=False)
            if verdict == PASS:
                verdict, ce = _check_module_hom(w, right=True)
            record(prop, verdict, ce)
        elif prop == "involution-equivariant":
            record(prop, *_check_invol_equivariant(w))
        else:
            record(prop, FAIL, {"reason": f"unsupported claim {prop!r}"})
    return combine_clauses(f"witness:{w.name}", params, clauses,
                           counterexample=counterexample)


def _check_algebra_hom(w: LinearMapWitness):
    src, tgt = w.source, w.target
    if not isinstance(src, StructureAlgebra) or not isinstance(tgt, StructureAlgebra):
        return FAIL, {"reason": "algebra-homomorphism needs algebra endpoints"}
    img_unit = w.apply(src.unit)
    if img_unit != tgt.unit:
        return FAIL, {
            "input": "unit",
            "lhs": tgt.format_element(img_unit),
            "rhs": tgt.format_element(tgt.unit),
        }
    for u in range(src.rank):
        for v in range(src.rank):
            lhs = w.apply(src.mul_basis(u, v))
            rhs = tgt.mul(w.matrix[u], w.matrix[v])
            if lhs != rhs:
                return FAIL, {
                    "input": f"({src.labels[u]}, {src.labels[v]})",
                    "lhs": tgt.format_element(lhs),
                    "rhs": tgt.format_element(rhs),
                }
    return PASS, None


def _check_bijective(w: LinearMapWitness):
    if w.inverse is None:
        return FAIL, {"reason": "bijective claim without an explicit inverse"}
    ring = _ring_of(w.source)
    sr, tr = _rank_of(w.source), _rank_of(w.target)
    if len(w.matrix) != sr or len(w.inverse) != tr:
        return FAIL, {"reason": "matrix shapes do not match the bases"}
    for u in range(sr):
        if w.apply_inverse(w.matrix[u]) != unit_vector(ring, sr, u):
            return FAIL, {"input": f"{_labels_of(w.source)[u]}",
                          "reason": "inverse(map(u)) != u"}
    for t in range(tr):
        if w.apply(w.inverse[t]) != unit_vector(_ring_of(w.target), tr, t):
            return FAIL, {"input": f"{_labels_of(w.target)[t]}",
                          "reason": "map(inverse(t)) != t"}
    return PASS, None


def _check_module_hom(w: LinearMapWitness, right: bool):
    src, tgt = w.source, w.target
    if not isinstance(src, BasedModule) or not isinstance(tgt, BasedModule):
        return FAIL, {"reason": "module-homomorphism needs module endpoints"}
    if src.algebra is not tgt.algebra and src.algebra.labels != tgt.algebra.labels:
        return FAIL, {"reason": "modules live over different algebras"}
    A = src.algebra
    for s in range(A.rank):
        bs = A.basis_vector(s)
        for k, mk in enumerate(src.vectors):
            acted = A.mul(mk, bs) if right else A.mul(bs, mk)
            cs = src.express(acted)
            if cs is None:
                return FAIL, {
                    "input": f"({A.labels[s]}, {src.name}[{k}])",
                    "reason": "source basis is not stable under the action",
                }
            lhs = tgt.to_ambient(mat_vec(A.ring, w.matrix, cs))
            img = tgt.to_ambient(w.matrix[k])
            rhs = A.mul(img, bs) if right else A.mul(bs, img)
            if lhs != rhs:
                return FAIL, {
                    "input": f"({A.labels[s]}, {src.name}[{k}])",
                    "lhs": A.format_element(lhs),
                    "rhs": A.format_element(rhs),
                }
    return PASS, None


def _check_invol_equivariant(w: LinearMapWitness):
    src, tgt = w.source, w.target
    if not isinstance(src, StructureAlgebra) or not isinstance(tgt, StructureAlgebra):
        return FAIL, {"reason": "involution check needs algebra endpoints"}
    if src.invol is None or tgt.invol is None:
        return FAIL, {"reason": "both sides need involutions"}
    for u in range(src.rank):
        lhs = tgt.apply_invol(w.matrix[u])
        rhs = w.apply(src.invol[u])
        if lhs != rhs:
            return FAIL, {
                "input": src.labels[u],
                "lhs": tgt.format_element(lhs),
                "rhs": tgt.format_element(rhs),
            }
    return PASS, None


@dataclass
class IdealBasis:
    """A two-sided ideal with a reduced free spanning set."""

    algebra: StructureAlgebra
    rowbasis: RowBasis
    gens: list

    @property
    def rank(self) -> int:
        return self.rowbasis.rank

    @property
    def vectors(self) -> list:
        return [list(r) for r in self.rowbasis.rows]

    def contains(self, v) -> bool:
        return self.rowbasis.contains(v)


def ideal_generated(a: StructureAlgebra, gens) -> IdealBasis:
    """Smallest two-sided ideal containing the generators, as a reduced
    unit-pivot basis.  Raises FreenessUndetermined when elimination cannot
    certify a free basis over the ring."""
    ring = a.ring
    rb = RowBasis(ring, a.rank)
    stuck: list = []
    queue = [list(g) for g in gens]
    while queue:
        v = queue.pop()
        try:
            added = rb.insert(v)
        except FreenessUndetermined:
            stuck.append(v)
            continue
        if added:
            for u in range(a.rank):
                bu = a.basis_vector(u)
                queue.append(a.mul(bu, v))
                queue.append(a.mul(v, bu))
            if stuck:
                queue.extend(stuck)
                stuck = []
    if stuck:
        rb.insert(stuck[0])  # re-raise with context
    return IdealBasis(a, rb, [list(g) for g in gens])


def ideal_is_two_sided(j: IdealBasis) -> bool:
    a = j.algebra
    for u in range(a.rank):
        bu = a.basis_vector(u)
        for row in j.rowbasis.rows:
            if not j.contains(a.mul(bu, list(row))):
                return False
            if not j.contains(a.mul(list(row), bu)):
                return False
    return True


def quotient_by_ideal(a: StructureAlgebra, j: IdealBasis):
    """Quotient algebra on the non-pivot part of the basis, plus the
    projection witness (a surjective algebra homomorphism).  The induced
    involution is attached when the ideal is involution-stable."""
    if j.algebra is not a and j.algebra.labels != a.labels:
        raise ValueError("ideal does not belong to this algebra")
    ring = a.ring
    pivot_set = set(j.rowbasis.pivots)
    comp = [u for u in range(a.rank) if u not in pivot_set]
    labels = tuple(a.labels[u] for u in comp)

    def project(v):
        res = j.rowbasis.residual(v)
        return [res[u] for u in comp]

    zero = ring.zero()
    table = {}
    for uq, u in enumerate(comp):
        for vq, v in enumerate(comp):
            cs = project(a.mul_basis(u, v))
            terms = tuple((w, c) for w, c in enumerate(cs) if c != zero)
            if terms:
                table[(uq, vq)] = terms
    unit = project(a.unit)
    invol = None
    if a.invol is not None:
        stable = all(
            j.contains(a.apply_invol(list(row))) for row in j.rowbasis.rows
        )
        if stable:
            invol = [project(a.invol[u]) for u in comp]
    q = StructureAlgebra(ring, labels, table, unit, invol)
    proj_matrix = [project(a.basis_vector(u)) for u in range(a.rank)]
    witness = LinearMapWitness(
        source=a, target=q, matrix=proj_matrix,
        claimed=("algebra-homomorphism",), name="quotient-projection",
    )
    return q, witness


def centre_basis(a: StructureAlgebra) -> list:
    """Basis of the centre over a field: the exact nullspace of the
    commutation system z*b_u - b_u*z = 0 ranged over the whole basis."""
    ring = a.ring
    rows = []
    for u in range(a.rank):
        bu = a.basis_vector(u)
        cols = []
        for wv in range(a.rank):
            bw = a.basis_vector(wv)
            comm = [ring.sub(x, y) for x, y in zip(a.mul(bw, bu), a.mul(bu, bw))]
            cols.append(comm)
        for t in range(a.rank):
            row = [cols[wv][t] for wv in range(a.rank)]
            if not vec_is_zero(ring, row):
                rows.append(row)
    return nullspace(ring, rows, a.rank)


def centre(a: StructureAlgebra, candidates=None) -> Report:
    """Centre of the algebra.

    Over a field: the exact nullspace of the commutation system, returned
    as a basis; when candidate central elements are supplied the report
    also states whether they span the centre.  Over other rings: a
    containment certificate for the candidates (commutation plus linear
    independence); full saturation is out of scope there.
    """
    ring = a.ring
    params = {"ring": ring.literal(), "rank": a.rank}
    candidates = None if candidates is None else [list(c) for c in candidates]
    if ring.is_field:
        basis_vectors = centre_basis(a)
        witness = {
            "dimension": len(basis_vectors),
            "basis": [a.format_element(v) for v in basis_vectors],
        }
        verdict = PASS
        if candidates is not None:
            cand_rb = span_basis(ring, candidates, a.rank)
            null_rb = span_basis(ring, basis_vectors, a.rank)
            reduces = cand_rb.rank == len(basis_vectors) and all(
                null_rb.contains(c) for c in candidates
            )
            witness["reduces_to_candidates"] = reduces
            if not reduces:
                verdict = FAIL
        return Report("centre", params, verdict, witness)

    if not candidates:
        return Report(
            "centre", params, UNDETERMINED,
            witness={"note": "full centre computation needs a field; supply candidates"},
        )
    # duplicated candidates name the same element (e.g. the exchange matrix
    # is the unit at size 1); keep one copy
    deduped = []
    for c in candidates:
        if c not in deduped:
            deduped.append(c)
    candidates = deduped
    for c in candidates:
        for u in range(a.rank):
            bu = a.basis_vector(u)
            if a.mul(c, bu) != a.mul(bu, c):
                return Report(
                    "centre", params, FAIL,
                    counterexample={
                        "candidate": a.format_element(c),
                        "against": a.labels[u],
                    },
                )
    try:
        rb = span_basis(ring, candidates, a.rank)
        independent = rb.rank == len(candidates)
    except FreenessUndetermined:
        return Report(
            "centre", params, UNDETERMINED,
            witness={"note": "candidate independence not certified over this ring"},
        )
    if not independent:
        return Report(
            "centre", params, FAIL,
            counterexample={"reason": "candidates are linearly dependent"},
        )
    return Report(
        "centre", params, PASS,
        witness={
            "certificate": "containment",
            "candidates": [a.format_element(c) for c in candidates],
            "note": "candidates commute with the whole basis and are independent",
        },
    )
