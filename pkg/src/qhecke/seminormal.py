"""
Seminormal irreducible representations of ``H_n(q)``.

The basis of the module for a shape is its standard tableaux, ordered by
content string.  For the generator ``T_{s_i}`` and a tableau ``t`` with
eigenvalues ``a = a_i``, ``b = a_{i+1}``:

* ``i, i+1`` in the same row: ``T_{s_i} t = q t``;
* same column: ``T_{s_i} t = -q^-1 t``;
* otherwise ``t`` and ``t' = s_i t`` span a block.  With ``t`` the tableau
  with the smaller content string and ``h = q - q^-1``::

      [ -h b/(a-b)    1 - h^2 a b/(a-b)^2 ]
      [  1             h a/(a-b)          ]

Matrices are dense lists of lists; entry ``[r][c]`` is the coefficient of
basis vector ``r`` in the image of basis vector ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .hecke import HeckeElement, _parent
from .idempotents import (
    IdempotentRecord, addable_corners, extend_idempotent, records_by_level,
)
from .permutations import identity
from .scalar import Q, RatFunc
from .trace import (
    TraceContext, conditional_expectation, ocneanu_trace, qdim_closed,
    scalar_multiple_of,
)
from .tableaux import (
    StandardTableau, YoungDiagram, content_string, enumerate_standard,
    frobenius_dim, partitions,
)

__all__ = [
    "SeminormalRep", "build_rep", "jm_matrix", "rep_dimension_audit",
    "similarity_check", "diagonalising_block", "relations_check",
    "mat_mul", "mat_add", "mat_scale", "mat_identity", "mat_diag", "mat_zero",
    "mat_trace", "is_diagonal_unit", "idempotent_image_check",
    "markov_decomposition_check", "appendix_identities_check", "ResolventReport",
]

Matrix = list[list]


def mat_zero(d: int) -> Matrix:
    return [[0] * d for _ in range(d)]


def mat_identity(d: int) -> Matrix:
    return [[1 if r == c else 0 for c in range(d)] for r in range(d)]


def mat_diag(values) -> Matrix:
    values = list(values)
    out = mat_zero(len(values))
    for i, v in enumerate(values):
        out[i][i] = v
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    out = mat_zero(d)
    for r in range(d):
        row = a[r]
        for k in range(d):
            x = row[k]
            if not x:
                continue
            bk = b[k]
            for c in range(d):
                if bk[c]:
                    out[r][c] = out[r][c] + x * bk[c]
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, s) -> Matrix:
    return [[x * s for x in row] for row in a]


def mat_trace(a: Matrix):
    total = 0
    for i in range(len(a)):
        total = total + a[i][i]
    return total


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_diagonal_unit(a: Matrix, k: Optional[int]) -> bool:
    """True if ``a`` is the matrix unit ``E_kk`` (or zero when ``k`` is None)."""
    return all((x == 1) if (r == c == k) else (x == 0)
               for r, row in enumerate(a) for c, x in enumerate(row))


@dataclass
class SeminormalRep:
    shape: YoungDiagram
    basis: list[StandardTableau]
    gens: list[Matrix]             # gens[i-1] is the image of T_{s_i}
    q: object = Q
    _words: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.shape.size

    def gen(self, i: int) -> Matrix:
        return self.gens[i - 1]

    def gen_inverse(self, i: int) -> Matrix:
        """``T_{s_i}^{-1} = T_{s_i} - (q - q^-1)``."""
        h = self.q - 1 / self.q
        return mat_add(self.gen(i), mat_scale(mat_identity(self.dim), -h))

    def contents(self, i: int) -> list[int]:
        return [content_string(t)[i - 1] for t in self.basis]

    def jm_diagonal(self, i: int) -> Matrix:
        return mat_diag(self.q ** (2 * m) for m in self.contents(i))

    def word_matrix(self, w) -> Matrix:
        """Image of the basis word ``T_w``, built along canonical words."""
        w = tuple(w)
        if w not in self._words:
            if w == identity(self.n):
                self._words[w] = mat_identity(self.dim)
            else:
                parent, i = _parent(w)
                self._words[w] = mat_mul(self.word_matrix(parent), self.gen(i))
        return self._words[w]

    def image(self, x: HeckeElement) -> Matrix:
        if x.n != self.n:
            raise ValueError(f"element of H_{x.n} acting on a module of H_{self.n}")
        out = mat_zero(self.dim)
        for w, c in x.terms.items():
            out = mat_add(out, mat_scale(self.word_matrix(w), c))
        return out

    def to_json(self) -> dict:
        def entry(x):
            if isinstance(x, RatFunc):
                return x.to_json()
            return RatFunc(x).to_json() if isinstance(self.q, RatFunc) else str(Fraction(x))
        return {
            "shape": list(self.shape.rows),
            "basis": [t.to_list() for t in self.basis],
            "generators": [[[entry(x) for x in row] for row in m] for m in self.gens],
        }


def diagonalising_block(a, b, q=Q) -> Matrix:
    """The 2x2 image of ``T_{s_i}`` on ``(v, v')`` with ``y_i v = a v``, ``y_{i+1} v = b v``."""
    h = q - 1 / q
    return [[-h * b / (a - b), 1 - h * h * a * b / (a - b) ** 2],
            [1, h * a / (a - b)]]


def build_rep(shape: YoungDiagram, q=Q) -> SeminormalRep:
    basis = enumerate_standard(shape)
    index = {t: k for k, t in enumerate(basis)}
    d, n = len(basis), shape.size
    gens = []
    for i in range(1, n):
        m = mat_zero(d)
        for k, t in enumerate(basis):
            cs = content_string(t)
            mi, mj = cs[i - 1], cs[i]
            if mj == mi + 1:
                m[k][k] = q
            elif mj == mi - 1:
                m[k][k] = -1 / q
            elif mi < mj:
                # t has the smaller content string: it is the first vector of its block
                k2 = index[t.swap(i)]
                block = diagonalising_block(q ** (2 * mi), q ** (2 * mj), q)
                m[k][k], m[k][k2] = block[0][0], block[0][1]
                m[k2][k], m[k2][k2] = block[1][0], block[1][1]
        gens.append(m)
    return SeminormalRep(shape, basis, gens, q)


def jm_matrix(rep: SeminormalRep, i: int) -> Matrix:
    """``y_i`` as the word ``T_{s_{i-1}} ... T_{s_1}^2 ... T_{s_{i-1}}``."""
    out = mat_identity(rep.dim)
    for j in list(range(i - 1, 0, -1)) + list(range(1, i)):
        out = mat_mul(out, rep.gen(j))
    return out


def relations_check(rep: SeminormalRep) -> dict[str, bool]:
    """Quadratic, braid and far-commutation relations, and diagonal ``y_i``."""
    n, q = rep.n, rep.q
    h = q - 1 / q
    ident = mat_identity(rep.dim)
    out = {"quadratic": True, "braid": True, "far_commutation": True, "jm_diagonal": True}
    for i in range(1, n):
        s = rep.gen(i)
        out["quadratic"] &= mat_equal(mat_mul(s, s), mat_add(ident, mat_scale(s, h)))
        if i + 1 < n:
            t = rep.gen(i + 1)
            out["braid"] &= mat_equal(mat_mul(mat_mul(s, t), s), mat_mul(mat_mul(t, s), t))
        for j in range(i + 2, n):
            t = rep.gen(j)
            out["far_commutation"] &= mat_equal(mat_mul(s, t), mat_mul(t, s))
    for i in range(1, n + 1):
        out["jm_diagonal"] &= mat_equal(jm_matrix(rep, i), rep.jm_diagonal(i))
    return out


def rep_dimension_audit(n: int) -> bool:
    """
    Every module of ``H_n`` has ``frobenius_dim`` rows and the squares sum to ``n!``.

    >>> rep_dimension_audit(4)
    True
    """
    total = 0
    for lam in partitions(n):
        d = build_rep(lam).dim
        if d != frobenius_dim(lam):
            return False
        total += d * d
    return total == factorial(n)


def similarity_check(rep, i: int, pair) -> bool:
    """
    Conjugating the triangular action on ``(e, T_{s_i} e)`` by ``V`` gives the block of ``rep``.

    ``rep`` is a SeminormalRep or a YoungDiagram; ``pair`` is the tableau
    opening the block for ``T_{s_i}`` or the pair ``(t, s_i t)``.

    >>> similarity_check(YoungDiagram((2, 1)), 2, StandardTableau.parse("[[1,3],[2]]"))
    True
    """
    if isinstance(rep, YoungDiagram):
        rep = build_rep(rep)
    t = pair[0] if isinstance(pair, (tuple, list)) else pair
    if isinstance(pair, (tuple, list)) and pair[1] != t.swap(i):
        raise ValueError(f"{pair[1]} is not {t} with {i}, {i + 1} swapped")
    q = rep.q
    h = q - 1 / q
    cs = content_string(t)
    a, b = q ** (2 * cs[i - 1]), q ** (2 * cs[i])
    t2 = t.swap(i)
    if t2 is None or cs[i] - cs[i - 1] in (-1, 1) or cs[i - 1] > cs[i]:
        raise ValueError(f"{t} does not open a two-dimensional block for s_{i}")
    r = h * b / (a - b)
    V, Vinv = [[1, r], [0, 1]], [[1, -r], [0, 1]]
    tri_sigma = [[0, 1], [1, h]]
    tri_yi = [[a, -h * b], [0, b]]
    tri_yj = [[b, h * b], [0, a]]

    def conj(m):
        return mat_mul(mat_mul(Vinv, m), V)

    k1, k2 = rep.basis.index(t), rep.basis.index(t2)
    s = rep.gen(i)
    block = [[s[k1][k1], s[k1][k2]], [s[k2][k1], s[k2][k2]]]
    return (mat_equal(mat_mul(V, Vinv), mat_identity(2))
            and mat_equal(conj(tri_sigma), block)
            and mat_equal(conj(tri_yi), mat_diag([a, b]))
            and mat_equal(conj(tri_yj), mat_diag([b, a])))


# -- idempotents and traces seen through the representations -------------------

def idempotent_image_check(n: int, q=Q) -> bool:
    """``rho_lam(e_t)`` is the matrix unit at ``t`` and vanishes on other shapes."""
    reps = {}
    for rec in records_by_level(n, q)[n]:
        for lam in _shapes(n):
            rep = reps.setdefault(lam, build_rep(lam, q))
            k = rep.basis.index(rec.tableau) if lam == rec.shape else None
            if not is_diagonal_unit(rep.image(rec.element), k):
                return False
    return True


def _shapes(n: int) -> list[YoungDiagram]:
    return partitions(n)


def markov_decomposition_check(x: HeckeElement, ctx: TraceContext) -> bool:
    """``sum_lam qdim(lam) * trace(rho_lam(x)) == ocneanu_trace(x)``."""
    total = 0
    for lam in _shapes(x.n):
        total = total + qdim_closed(lam, ctx) * mat_trace(build_rep(lam, x.q).image(x))
    return total == ocneanu_trace(x, ctx)


# -- resolvent identities, checked at sampled values of t ----------------------
#
# Every entry of the matrices below is a rational function of t whose
# numerator degree never exceeds the degree of its (known) denominator.  After
# clearing that denominator, vanishing at more points than its degree proves
# the identity for all t.

@dataclass
class ResolventReport:
    shape: YoungDiagram
    m: int
    samples: list[Fraction]
    degree_bound: int
    resolvent_inverse: bool = False      # 1/(t-y_{m+1}) T^-1 form
    resolvent_direct: bool = False       # 1/(t-y_{m+1}) T form
    z_recurrence: bool = False
    z_closed_form: bool = False

    @property
    def ok(self) -> bool:
        return (len(self.samples) > self.degree_bound and self.resolvent_inverse
                and self.resolvent_direct and self.z_recurrence and self.z_closed_form)


_Z_SCALARS: dict = {}


def _corner_scalars(rec: IdempotentRecord, ctx: TraceContext) -> list[tuple[int, object]]:
    """``(content, s_j)`` with ``Tr(P_j) == s_j e`` computed exactly for each corner."""
    key = (rec.tableau, ctx)
    if key not in _Z_SCALARS:
        out = []
        for j, corner in enumerate(addable_corners(rec.shape)):
            p = extend_idempotent(rec, j).element
            s = scalar_multiple_of(conditional_expectation(p, ctx), rec.element)
            if s is None:
                raise ArithmeticError(f"Tr(P_{j}) is not a multiple of e for {rec.tableau}")
            out.append((corner.exponent, s))
        _Z_SCALARS[key] = out
    return _Z_SCALARS[key]


def _z_entry(t_val, k: int, tab: StandardTableau, records: dict, ctx: TraceContext):
    """Entry of ``Z_k = Tr_{d(k)} (t - y_k)^-1`` at basis tableau ``tab``."""
    q = ctx.q
    rec = records[tab.restrict(k - 1)]
    total = 0
    for c, s in _corner_scalars(rec, ctx):
        total = total + s / (t_val - q ** (2 * c))
    return total


def _degree_bound(rep: SeminormalRep, m: int) -> int:
    """
    Degree in t of the cleared denominators at level ``m``.

    Resolvents: ``(t - a)(t - b)``.  Recurrence: ``(t - y_m)^2`` times one
    factor per addable corner at levels ``m`` and ``m - 1``.  Closed form:
    ``t (t - 1) prod_k (t - q^2 y_k)(t - q^-2 y_k)`` times the level-``m`` corners.
    """
    bound = 2
    for tab in rep.basis:
        c1 = len(tab.restrict(m).shape.addable())
        c0 = len(tab.restrict(m - 1).shape.addable())
        bound = max(bound, 2 + c1 + c0, 2 + 2 * m + c1)
    return bound


def _singular(t_val) -> bool:
    # t - q^(2c) with c != 0 never vanishes at a rational t
    return t_val in (0, 1)


def appendix_identities_check(shape: YoungDiagram, m: int, t_samples, ctx: TraceContext = TraceContext(1),
                              report: bool = False):
    """
    Resolvent identities for ``y_m, y_{m+1}`` and the ``Z_m`` recurrence in ``rho_shape``.

    ``t_samples`` are distinct rationals; singular samples are dropped and
    fresh integers are added until the sample count exceeds the degree bound.

    >>> appendix_identities_check(YoungDiagram((2, 1)), 2, [2, 3, 5, 7, 11])
    True
    """
    n = shape.size
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < {n}, got m = {m}")
    q = ctx.q
    h = q - 1 / q
    z = ctx.z
    rep = build_rep(shape, q)
    bound = _degree_bound(rep, m)
    samples = []
    for t in t_samples:
        t = Fraction(t)
        if t not in samples and not _singular(t):
            samples.append(t)
    fresh = 2
    while len(samples) <= bound:
        if Fraction(fresh) not in samples:
            samples.append(Fraction(fresh))
        fresh += 1

    a = [q ** (2 * c) for c in rep.contents(m)]
    b = [q ** (2 * c) for c in rep.contents(m + 1)]
    s = rep.gen(m)
    s_inv = rep.gen_inverse(m)
    records = {}
    for level in records_by_level(m + 1, q)[:m + 1]:
        for rec in level:
            records[rec.tableau] = rec

    res = ResolventReport(shape, m, samples, bound, True, True, True, True)
    for t in samples:
        ra = mat_diag(1 / (t - x) for x in a)
        rb = mat_diag(1 / (t - x) for x in b)
        ya = mat_diag(a)
        lhs = mat_mul(rb, s_inv)
        rhs = mat_add(mat_mul(s_inv, ra), mat_scale(mat_mul(mat_mul(rb, ya), ra), h))
        res.resolvent_inverse &= mat_equal(lhs, rhs)
        lhs = mat_mul(rb, s)
        rhs = mat_add(mat_mul(s_inv, ra), mat_scale(mat_mul(ra, rb), h * t))
        res.resolvent_direct &= mat_equal(lhs, rhs)

        for k, tab in enumerate(rep.basis):
            y = a[k]
            z_next = _z_entry(t, m + 1, tab, records, ctx)
            z_here = z / (t - 1) if m == 1 else _z_entry(t, m, tab, records, ctx)
            lhs = (t - q * q * y) * (t - y / (q * q)) / (t - y) ** 2 * z_next
            rhs = z_here + h * y / (t - y) ** 2 * (1 - h * z)
            res.z_recurrence &= lhs == rhs
            prod = 1
            for c in content_string(tab)[:m]:
                yk = q ** (2 * c)
                prod = prod * (t - yk) ** 2 / ((t - q * q * yk) * (t - yk / (q * q)))
            closed = (1 + h * z / (t - 1)) * prod / (h * t) - (1 - h * z) / (h * t)
            res.z_closed_form &= closed == z_next
    return res if report else res.ok
