"""Exact kernels of matrices over Q(i).

``nullspace`` runs Gauss-Jordan elimination over ``GaussianRational``. Before
doing so it reduces the matrix modulo a prime ``p = 1 (mod 4)``, sending ``i``
to a square root of -1 mod p. A full-column-rank image mod p proves the exact
kernel is trivial, which is the common case for the solver's random
unsolvable inputs; any other outcome falls through to the exact computation.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, GaussianRational

__all__ = ["nullspace", "full_column_rank_mod_p"]

# primes congruent to 1 mod 4, so -1 has a square root in each residue field
_PRIMES = (2305843009213693921, 1000000009, 998244353)


def _sqrt_minus_one(p: int) -> int:
    for g in range(2, 200):
        if pow(g, (p - 1) // 2, p) == p - 1:
            return pow(g, (p - 1) // 4, p)
    raise ValueError(f"no quadratic non-residue found below 200 for {p}")


_MODULI = [(p, _sqrt_minus_one(p)) for p in _PRIMES]


def _reduce(c: GaussianRational, p: int, iota: int) -> int | None:
    re, im = c.re, c.im
    d = int(re.denominator) * int(im.denominator)
    if d % p == 0:
        return None
    num = int(re.numerator) * int(im.denominator) + int(im.numerator) * int(re.denominator) * iota
    return num * pow(d, -1, p) % p


def _pivot_rows_mod_p(rows: Sequence[Sequence[GaussianRational]], ncols: int) -> list[int] | None:
    """Indices of rows that are independent mod p, or None if no prime applies.

    Their count is a lower bound on the exact rank.
    """
    for p, iota in _MODULI:
        mat = []
        ok = True
        for row in rows:
            red = []
            for c in row:
                if not c:
                    red.append(0)
                    continue
                v = _reduce(c, p, iota)
                if v is None:
                    ok = False
                    break
                red.append(v)
            if not ok:
                break
            mat.append(red)
        if ok:
            return _pivots_mod(mat, ncols, p)
    return None


def full_column_rank_mod_p(rows: Sequence[Sequence[GaussianRational]], ncols: int) -> bool:
    """True only if the matrix provably has full column rank over Q(i)."""
    piv = _pivot_rows_mod_p(rows, ncols)
    return piv is not None and len(piv) == ncols


def _pivots_mod(mat: list[list[int]], ncols: int, p: int) -> list[int]:
    order = list(range(len(mat)))
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        order[rank], order[pivot] = order[pivot], order[rank]
        prow = mat[rank]
        inv = pow(prow[col], -1, p)
        for r in range(rank + 1, len(mat)):
            f = mat[r][col]
            if f:
                f = f * inv % p
                row = mat[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == ncols:
            break
    return order[:rank]


def _in_kernel(rows, vec) -> bool:
    for row in rows:
        acc = ZERO
        for x, y in zip(row, vec):
            if x and y:
                acc = acc + x * y
        if acc:
            return False
    return True


def nullspace(rows: Sequence[Sequence[GaussianRational]], ncols: int, *, prefilter: bool = True) -> list[list[GaussianRational]]:
    """Basis of ``{x : M x = 0}``, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns (reduced row echelon convention), so the basis is canonical.

    With ``prefilter`` the rows independent mod p are found first. If they
    fill every column the kernel is trivial. Otherwise the exact kernel of
    just those rows is computed and kept if it annihilates every row; it
    always contains the true kernel, so that check makes it exact.
    """
    if prefilter and rows:
        piv = _pivot_rows_mod_p(rows, ncols)
        if piv is not None:
            if len(piv) == ncols:
                return []
            basis = _rref_nullspace([rows[i] for i in sorted(piv)], ncols)
            if all(_in_kernel(rows, v) for v in basis):
                return basis
    return _rref_nullspace(rows, ncols)


def _rref_nullspace(rows, ncols: int) -> list[list[GaussianRational]]:
    mat = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        inv = ONE / prow[col]
        if inv != ONE:
            prow = [c * inv for c in prow]
            mat[rank] = prow
        for r in range(len(mat)):
            if r == rank:
                continue
            f = mat[r][col]
            if f:
                row = mat[r]
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] = row[c] - f * prow[c]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][free]
        basis.append(vec)
    return basis
