"""Simple Lie algebras of type A in the elementary-matrix realization.

Basis order is E(alpha) for the positive roots, then F(alpha), then the
Cartan elements H(i).  Positive roots of sl_n are the pairs (i, j) with
i < j, ordered lexicographically; E(i,j) is the matrix unit at row i and
column j, F(i,j) its transpose, H(i) = diag unit i minus diag unit i+1.
The invariant form is the trace form, which pairs E(alpha) with F(alpha)
to 1 and makes h_alpha = [e_alpha, f_alpha] satisfy [h_alpha, e_alpha] =
2 e_alpha.

Elements of g are ``Sparse`` maps basis index -> Fraction; tensors in
g (x) g and g (x) g (x) g carry index pairs / triples as keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParameterError, InvalidRankError
from .sparse import Sparse, gauss_solve


@dataclass
class LieAlgebraData:
    n: int
    rank: int
    positive_roots: list
    basis: list
    struct: dict  # (i, j) -> Sparse over basis indices, i != j
    gram: list  # dense symmetric matrix of the trace form
    gram_inv: list = field(repr=False, default=None)

    @property
    def dim(self):
        return len(self.basis)

    def e_index(self, root):
        return self.positive_roots.index(tuple(root))

    def f_index(self, root):
        return len(self.positive_roots) + self.positive_roots.index(tuple(root))

    def h_index(self, i):
        if not 1 <= i <= self.rank:
            raise InvalidParameterError(f"no Cartan element H({i})")
        return 2 * len(self.positive_roots) + (i - 1)

    def label(self, idx):
        return self.basis[idx]


def _matrix_units(n):
    """sl_n basis as {index: {(row, col): coeff}} sparse matrices."""
    roots = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    mats = []
    for (i, j) in roots:
        mats.append({(i, j): Fraction(1)})
    for (i, j) in roots:
        mats.append({(j, i): Fraction(1)})
    for i in range(1, n):
        mats.append({(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)})
    return roots, mats


def _mat_mul(a, b):
    out = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k == k2:
                key = (i, j)
                out[key] = out.get(key, Fraction(0)) + x * y
    return {k: v for k, v in out.items() if v != 0}


def _mat_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) - v
    return {k: v for k, v in out.items() if v != 0}


def _mat_trace_prod(a, b):
    return sum((x * b.get((j, i), 0) for (i, j), x in a.items()), Fraction(0))


def _in_basis(mat, roots, n):
    """Express a traceless matrix in the E/F/H basis."""
    out = Sparse()
    npos = len(roots)
    for (i, j), c in mat.items():
        if i < j:
            out.iadd(roots.index((i, j)), c)
        elif i > j:
            out.iadd(npos + roots.index((j, i)), c)
    # diagonal part: partial sums give the H coordinates
    acc = Fraction(0)
    for i in range(1, n):
        acc += mat.get((i, i), Fraction(0))
        out.iadd(2 * npos + (i - 1), acc)
    return out


def build_sl(n: int) -> LieAlgebraData:
    """sl_n with the trace form; raises on n < 2."""
    if n < 2:
        raise InvalidRankError(f"sl_n needs n >= 2, got {n}")
    roots, mats = _matrix_units(n)
    npos = len(roots)
    labels = (
        [f"E({i},{j})" for (i, j) in roots]
        + [f"F({i},{j})" for (i, j) in roots]
        + [f"H({i})" for i in range(1, n)]
    )
    dim = len(mats)
    struct = {}
    for a in range(dim):
        for b in range(dim):
            if a == b:
                continue
            comm = _mat_sub(_mat_mul(mats[a], mats[b]), _mat_mul(mats[b], mats[a]))
            coords = _in_basis(comm, roots, n)
            if coords:
                struct[(a, b)] = coords
    gram = [[_mat_trace_prod(mats[a], mats[b]) for b in range(dim)] for a in range(dim)]
    identity = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    gram_inv = gauss_solve(gram, identity)
    return LieAlgebraData(
        n=n,
        rank=n - 1,
        positive_roots=roots,
        basis=labels,
        struct=struct,
        gram=gram,
        gram_inv=gram_inv,
    )


# -- operations on elements and tensors --------------------------------------

def basis_element(idx) -> Sparse:
    return Sparse({idx: Fraction(1)})


def bracket(alg: LieAlgebraData, x: Sparse, y: Sparse) -> Sparse:
    out = Sparse()
    for i, ci in x.items():
        for j, cj in y.items():
            sc = alg.struct.get((i, j))
            if sc:
                for k, ck in sc.items():
                    out.iadd(k, ci * cj * ck)
    return out


def bracket_basis(alg: LieAlgebraData, i: int, j: int) -> Sparse:
    return alg.struct.get((i, j), Sparse())


def form(alg: LieAlgebraData, x: Sparse, y: Sparse) -> Fraction:
    return sum(
        (ci * cj * alg.gram[i][j] for i, ci in x.items() for j, cj in y.items()),
        Fraction(0),
    )


def dual_element(alg: LieAlgebraData, x: Sparse) -> Sparse:
    """The element x* with form(x*, b_j) = x_j for all j."""
    out = Sparse()
    for i, c in x.items():
        for j in range(alg.dim):
            out.iadd(j, c * alg.gram_inv[j][i])
    return out


def casimir(alg: LieAlgebraData) -> Sparse:
    """Omega = sum_i b_i (x) b^i over the form-dual basis."""
    out = Sparse()
    for i in range(alg.dim):
        for j in range(alg.dim):
            c = alg.gram_inv[j][i]
            if c:
                out.iadd((i, j), c)
    return out


def swap2(t: Sparse) -> Sparse:
    return Sparse((((j, i), c) for (i, j), c in t.items()))


def r_dj(alg: LieAlgebraData) -> Sparse:
    """Drinfeld-Jimbo solution (1/2)(sum e_alpha ^ f_alpha + Omega)."""
    out = Sparse()
    npos = len(alg.positive_roots)
    half = Fraction(1, 2)
    for a in range(npos):
        out.iadd((a, npos + a), half)
        out.iadd((npos + a, a), -half)
    for key, c in casimir(alg).items():
        out.iadd(key, half * c)
    return out


def r_c1c2(alg: LieAlgebraData, c1, c2) -> Sparse:
    """Two-point constant solution c1*Omega - (c1 - c2)*r_DJ.

    On sl_2 this is literally c1 f(x)e + c2 e(x)f + (c1+c2)/4 h(x)h; the
    Casimir-based form is the rank-stable version of the same tensor and
    satisfies r + swap(r) = (c1 + c2) * Omega.
    """
    c1 = Fraction(c1)
    c2 = Fraction(c2)
    if c1 == c2 or c1 == 0 or c2 == 0:
        raise InvalidParameterError("two-point constants must be nonzero and distinct")
    return c1 * casimir(alg) - (c1 - c2) * r_dj(alg)


def jordanian(alg: LieAlgebraData, root=None) -> Sparse:
    """h_alpha ^ e_alpha for a positive root (default: the highest root)."""
    root = tuple(root) if root is not None else (1, alg.n)
    if root not in alg.positive_roots:
        raise InvalidParameterError(f"not a positive root: {root}")
    e_idx = alg.e_index(root)
    f_idx = alg.f_index(root)
    h = bracket_basis(alg, e_idx, f_idx)  # coroot h_alpha
    out = Sparse()
    for i, c in h.items():
        out.iadd((i, e_idx), c)
        out.iadd((e_idx, i), -c)
    return out


def ad_action2(alg: LieAlgebraData, x: Sparse, t: Sparse) -> Sparse:
    """[x (x) 1 + 1 (x) x, t] on a constant 2-tensor."""
    out = Sparse()
    for (i, j), c in t.items():
        for k, ck in bracket(alg, x, basis_element(i)).items():
            out.iadd((k, j), c * ck)
        for k, ck in bracket(alg, x, basis_element(j)).items():
            out.iadd((i, k), c * ck)
    return out


def cyb(alg: LieAlgebraData, r: Sparse) -> Sparse:
    """CYB(r) = [r12, r13] + [r12, r23] + [r13, r23] in g (x) g (x) g."""
    out = Sparse()
    for (i, j), c in r.items():
        for (k, l), d in r.items():
            cd = c * d
            for m, cm in bracket_basis(alg, i, k).items():
                out.iadd((m, j, l), cd * cm)
            for m, cm in bracket_basis(alg, j, k).items():
                out.iadd((i, m, l), cd * cm)
            for m, cm in bracket_basis(alg, j, l).items():
                out.iadd((i, k, m), cd * cm)
    return out
