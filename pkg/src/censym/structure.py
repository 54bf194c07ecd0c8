"""Explicit isomorphism and Morita witnesses for the centrosymmetric algebra.

Everything here returns checkable data: coordinate maps with explicit
inverses whose claimed properties (:func:`censym.algebra.check_witness`)
are verified on whole bases, never sampled.  Covered:

* size 2 is the group ring of the order-two cyclic group;
* the size-3 algebra has a 2-by-2 block presentation over that group ring;
* even sizes 2m are isomorphic to m-by-m matrices over the group ring;
* odd sizes 2m+1 map onto m-by-m matrices after killing the middle-column
  ideal, with the sign rule f[i,j] == -f[i,n+1-j] in the quotient;
* all column modules S*f_j are isomorphic to S*f_1 by explicit right
  multiplications, and the endomorphism ring of S*f_1 (+) S*f_mid for odd
  sizes is the size-3 algebra again;
* with 2 invertible, the central idempotents (1 +- c)/2 split the algebra
  into two full matrix algebras of sizes ceil(n/2) and floor(n/2).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import basis as fb
from .algebra import (
    BasedModule,
    LinearMapWitness,
    StructureAlgebra,
    algebra_of_censym,
    direct_product,
    full_matrix_algebra,
    ideal_generated,
    quotient_by_ideal,
    subalgebra_from_vectors,
    zero_algebra,
)
from .linalg import RowBasis, unit_vector
from .matrices import Matrix, matrix_unit
from .rings import GroupRingC2, Ring


def _positions(n: int) -> dict:
    return {(ix.i, ix.j): u for u, ix in enumerate(fb.canonical_indices(n))}


def iso_s2(ring: Ring) -> LinearMapWitness:
    """Group ring over the order-two cyclic group onto the size-2 algebra:
    1 -> f1_1, x -> f1_2."""
    src = full_matrix_algebra(GroupRingC2(ring), 1)
    tgt = algebra_of_censym(ring, 2)
    matrix = [tgt.basis_vector(0), tgt.basis_vector(1)]
    inverse = [src.basis_vector(0), src.basis_vector(1)]
    return LinearMapWitness(
        src, tgt, matrix, inverse,
        claimed=("algebra-homomorphism", "bijective", "involution-equivariant"),
        name="s2-group-ring",
    )


_S3_SYMBOLS = ("a", "b", "u", "d", "v")

# Block presentation of the size-3 algebra: entries (a + b*x, u; d, v) with
# the product
#   (a+bx, u; d, v)(a1+b1x, u1; d1, v1) =
#     ( (aa1+bb1+ud1) + (ab1+ba1+ud1)x , au1+bu1+uv1 ; da1+db1+vd1 , 2du1+vv1 )
_S3_PRODUCTS = {
    ("a", "a"): {"a": 1}, ("a", "b"): {"b": 1}, ("a", "u"): {"u": 1},
    ("b", "a"): {"b": 1}, ("b", "b"): {"a": 1}, ("b", "u"): {"u": 1},
    ("u", "d"): {"a": 1, "b": 1}, ("u", "v"): {"u": 1},
    ("d", "a"): {"d": 1}, ("d", "b"): {"d": 1}, ("d", "u"): {"v": 2},
    ("v", "d"): {"d": 1}, ("v", "v"): {"v": 1},
}


def s3_presentation(ring: Ring):
    """The rank-5 block presentation and its isomorphism onto the size-3
    algebra: (a, b, u, d, v) -> (f1_1, f1_3, f1_2, f2_1, f2_2)."""
    pos = {s: k for k, s in enumerate(_S3_SYMBOLS)}
    table = {}
    for (s, t), expansion in _S3_PRODUCTS.items():
        table[(pos[s], pos[t])] = tuple(
            (pos[w], ring.from_int(c)) for w, c in expansion.items()
        )
    unit = [ring.zero()] * 5
    unit[pos["a"]] = ring.one()
    unit[pos["v"]] = ring.one()
    swap = {"a": "a", "b": "b", "u": "d", "d": "u", "v": "v"}
    invol = [unit_vector(ring, 5, pos[swap[s]]) for s in _S3_SYMBOLS]
    pres = StructureAlgebra(ring, _S3_SYMBOLS, table, unit, invol)

    tgt = algebra_of_censym(ring, 3)
    tpos = _positions(3)
    image_of = {"a": (1, 1), "b": (1, 3), "u": (1, 2), "d": (2, 1), "v": (2, 2)}
    matrix = [tgt.basis_vector(tpos[image_of[s]]) for s in _S3_SYMBOLS]
    inverse = [None] * 5
    for k, s in enumerate(_S3_SYMBOLS):
        inverse[tpos[image_of[s]]] = pres.basis_vector(k)
    witness = LinearMapWitness(
        pres, tgt, matrix, inverse,
        claimed=("algebra-homomorphism", "bijective", "involution-equivariant"),
        name="s3-block-presentation",
    )
    return pres, witness


def iso_even(ring: Ring, m: int) -> LinearMapWitness:
    """m-by-m matrices over the group ring onto the size-2m algebra:
    E[i,j] -> f[i,j] and x*E[i,j] -> f[i, n+1-j]."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    n = 2 * m
    src = full_matrix_algebra(GroupRingC2(ring), m)
    tgt = algebra_of_censym(ring, n)
    tpos = _positions(n)
    matrix = []
    inverse = [None] * tgt.rank
    u = 0
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            for g in (0, 1):
                col = j if g == 0 else n + 1 - j
                t = tpos[fb.canon_index(n, i, col)]
                matrix.append(tgt.basis_vector(t))
                inverse[t] = src.basis_vector(u)
                u += 1
    return LinearMapWitness(
        src, tgt, matrix, inverse,
        claimed=("algebra-homomorphism", "bijective", "involution-equivariant"),
        name=f"even-size-{n}",
    )


def odd_quotient(ring: Ring, m: int):
    """The size-(2m+1) algebra, its middle-column ideal, the quotient, and
    the projection witness."""
    n = 2 * m + 1
    a = algebra_of_censym(ring, n)
    pos = _positions(n)
    mid = a.basis_vector(pos[(m + 1, m + 1)])
    ideal = ideal_generated(a, [mid])
    quot, proj = quotient_by_ideal(a, ideal)
    return a, ideal, quot, proj


def iso_odd_quotient(ring: Ring, m: int) -> LinearMapWitness:
    """Quotient of the size-(2m+1) algebra by the middle-column ideal onto
    m-by-m matrices, using the sign rule f[i,j] == -f[i,n+1-j] there."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    n = 2 * m + 1
    a, ideal, quot, proj = odd_quotient(ring, m)
    tgt = full_matrix_algebra(ring, m, flatten_group_ring=False)
    epos = {}
    u = 0
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            epos[(i, j)] = u
            u += 1
    pos = _positions(n)
    minus_one = ring.neg(ring.one())
    matrix = []
    for lab in quot.labels:
        i, j = _parse_f_label(lab)
        if j <= m:
            matrix.append(tgt.basis_vector(epos[(i, j)]))
        else:
            v = tgt.zero_vector()
            v[epos[(i, n + 1 - j)]] = minus_one
            matrix.append(v)
    inverse = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            inverse.append(proj.apply(a.basis_vector(pos[(i, j)])))
    return LinearMapWitness(
        quot, tgt, matrix, inverse,
        claimed=("algebra-homomorphism", "bijective", "involution-equivariant"),
        name=f"odd-quotient-size-{n}",
    )


def _parse_f_label(label: str):
    i, j = label[1:].split("_")
    return int(i), int(j)


@dataclass
class ModuleIsoWitness:
    """A verified column-module isomorphism, realized by explicit right
    multiplications (kept alongside the coordinate witness for reports)."""

    map: LinearMapWitness
    multiplier: Matrix
    inverse_multiplier: Matrix


def column_module(a: StructureAlgebra, ring: Ring, n: int, j: int) -> BasedModule:
    """The left module S*f_j: elements supported on columns j and n+1-j."""
    pos = _positions(n)
    vectors = []
    for i in range(1, fb.half_ceil(n) + 1):
        seen = []
        for col in (j, n + 1 - j):
            cij = fb.canon_index(n, i, col)
            if cij not in seen:
                seen.append(cij)
                vectors.append(a.basis_vector(pos[cij]))
    return BasedModule(a, vectors, name=f"S*f{j}")


def morita_column_iso(ring: Ring, n: int, j: int) -> ModuleIsoWitness:
    """Left-module isomorphism S*f_1 -> S*f_j by right multiplication with
    e[1,j] + e[n,n+1-j]; inverse extracts columns j and n+1-j back."""
    if n < 4:
        raise ValueError("column isomorphisms are built for sizes >= 4")
    if not (2 <= j <= n // 2):
        raise ValueError(f"column index {j} out of range; need 2..{n // 2}")
    a = algebra_of_censym(ring, n)
    src = column_module(a, ring, n, 1)
    tgt = column_module(a, ring, n, j)
    mult = matrix_unit(ring, n, 1, j) + matrix_unit(ring, n, n, n + 1 - j)
    inv_mult = matrix_unit(ring, n, j, 1) + matrix_unit(ring, n, n + 1 - j, n)

    def push(module_from, module_to, mat):
        rows = []
        for v in module_from.vectors:
            ambient = fb.from_coords(ring, n, v).inner * mat
            cs = module_to.express(fb.coords(fb.CentroMatrix(ambient)))
            if cs is None:
                raise ValueError("right multiplication left the column module")
            rows.append(cs)
        return rows

    witness = LinearMapWitness(
        src, tgt,
        matrix=push(src, tgt, mult),
        inverse=push(tgt, src, inv_mult),
        claimed=("left-module-homomorphism", "bijective"),
        name=f"column-1-to-{j}-size-{n}",
    )
    return ModuleIsoWitness(witness, mult, inv_mult)


def endring_odd(ring: Ring, n: int):
    """Endomorphism ring of S*f_1 (+) S*f_mid for odd n >= 5, assembled from
    the four idempotent corners, with its isomorphism onto the size-3
    algebra.  The two corner relations are part of the returned algebra:
    f[1,mid]*f[mid,1] == f_1 + f[1,n] and f[mid,1]*f[1,mid] == 2*f_mid."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"need an odd size >= 5, got {n}")
    mid = (n + 1) // 2
    a = algebra_of_censym(ring, n)
    pos = _positions(n)
    corner = [(1, 1), (1, n), (1, mid), (mid, 1), (mid, mid)]
    vectors = [a.basis_vector(pos[c]) for c in corner]
    labels = [f"f{i}_{j}" for i, j in corner]
    unit = a.zero_vector()
    unit[pos[(1, 1)]] = ring.one()
    unit[pos[(mid, mid)]] = ring.one()
    end = subalgebra_from_vectors(a, vectors, labels, unit, induce_invol=True)

    tgt = algebra_of_censym(ring, 3)
    tpos = _positions(3)
    images = [(1, 1), (1, 3), (1, 2), (2, 1), (2, 2)]
    matrix = [tgt.basis_vector(tpos[c]) for c in images]
    inverse = [None] * 5
    for k, c in enumerate(images):
        inverse[tpos[c]] = end.basis_vector(k)
    witness = LinearMapWitness(
        end, tgt, matrix, inverse,
        claimed=("algebra-homomorphism", "bijective", "involution-equivariant"),
        name=f"endring-size-{n}",
    )
    return end, witness


@dataclass
class WedderburnSplit:
    """The two-sided splitting by the central idempotents (1 +- c)/2."""

    plus_algebra: StructureAlgebra   # rank ceil(n/2)^2
    minus_algebra: StructureAlgebra  # rank floor(n/2)^2
    witness: LinearMapWitness        # onto M_(n-k) x M_k, k = ceil(n/2)
    p_plus: list
    p_minus: list


def wedderburn_split(ring: Ring, n: int) -> WedderburnSplit:
    """Split into full matrix algebras of sizes ceil(n/2) and floor(n/2).

    Requires 2 invertible.  Matrix units inside each piece are built from
    the symmetrized and antisymmetrized combinations f[i,j] * (1 +- c)/2
    (with a half rescaling of the odd middle column), then verified against
    the full-matrix structure constants rather than trusted.
    """
    t = ring.invert_two()
    if t is None:
        raise ValueError(
            f"the splitting construction requires 2 invertible in {ring.literal()}"
        )
    a = algebra_of_censym(ring, n)
    pos = _positions(n)
    c = fb.exchange_coords(ring, n)
    p_plus = [ring.mul(t, ring.add(x, y)) for x, y in zip(a.unit, c)]
    p_minus = [ring.mul(t, ring.sub(x, y)) for x, y in zip(a.unit, c)]
    k = fb.half_ceil(n)
    low = fb.half_floor(n)

    plus_vectors, plus_labels = [], []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            base = a.basis_vector(pos[fb.canon_index(n, i, j)])
            v = a.mul(base, p_plus)
            if n % 2 and j == k and i < k:
                v = [ring.mul(t, x) for x in v]
            plus_vectors.append(v)
            plus_labels.append(f"E{i}_{j}")
    minus_vectors, minus_labels = [], []
    for i in range(1, low + 1):
        for j in range(1, low + 1):
            base = a.basis_vector(pos[(i, j)])
            minus_vectors.append(a.mul(base, p_minus))
            minus_labels.append(f"E{i}_{j}")

    plus_full = full_matrix_algebra(ring, k, flatten_group_ring=False)
    plus_piece = subalgebra_from_vectors(a, plus_vectors, plus_labels, p_plus)
    if plus_piece.table != plus_full.table:
        raise ValueError("plus piece does not match full matrix structure constants")
    if low:
        minus_piece = subalgebra_from_vectors(a, minus_vectors, minus_labels, p_minus)
        minus_full = full_matrix_algebra(ring, low, flatten_group_ring=False)
        if minus_piece.table != minus_full.table:
            raise ValueError("minus piece does not match full matrix structure constants")
    else:
        minus_piece = zero_algebra(ring)
        minus_full = minus_piece

    target = direct_product(minus_full, plus_full, prefixes=("m", "p"))
    units = minus_vectors + plus_vectors
    rb = RowBasis(ring, a.rank, track=True)
    rb.insert_all(units)
    matrix = []
    for u in range(a.rank):
        cs = rb.express(a.basis_vector(u))
        if cs is None:
            raise ValueError("piece units do not span the algebra")
        matrix.append(cs)
    inverse = [list(v) for v in units]
    witness = LinearMapWitness(
        a, target, matrix, inverse,
        claimed=("algebra-homomorphism", "bijective"),
        name=f"wedderburn-size-{n}",
    )
    return WedderburnSplit(plus_piece, minus_piece, witness, p_plus, p_minus)
