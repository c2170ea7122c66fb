"""Explicit matrix representations of S_n over exact rationals.

Classical representations (trivial, sign, defining, regular, standard),
Young permutation modules on row-sorted injective tableaux, Specht modules
spanned by column-antisymmetrized tableau polynomials, induction and
restriction along subgroups, sums/tensors, exterior-square characters, and
the GL-side character/dimension checks.

A MatrixRep carries a rule producing the exact matrix of any permutation in
its domain; matrices are memoized compute-then-publish, so values are
immutable once visible. matrix(pi sigma) == matrix(pi) . matrix(sigma) under
the package-wide convention (pi sigma)(i) = pi(sigma(i)).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations as _perms, product as _cartesian
from math import factorial

from .characters import ClassFunction, char_inner, character_row, class_function, _int
from .errors import DegreeCapError, InvariantViolationError
from .linalg import ColumnSpaceSolver, Matrix, block_diag, identity, kron, mat_mul
from .partitions import (
    Partition,
    Permutation,
    all_permutations,
    as_partition,
    class_representative,
    compose,
    identity_perm,
    inverse_perm,
    partitions_of,
    sign as perm_sign,
)
from .ring import PolynomialValue, S, basis_element, evaluate
from .tableaux import Tableau, count_ssyt, f_lambda, standard_tableaux

_REGULAR_CAP = 6
_SPECHT_CAP = 5
_YOUNG_CAP = 6


def set_rep_caps(regular: int | None = None, specht: int | None = None,
                 young: int | None = None) -> None:
    global _REGULAR_CAP, _SPECHT_CAP, _YOUNG_CAP
    if regular is not None:
        _REGULAR_CAP = regular
    if specht is not None:
        _SPECHT_CAP = specht
    if young is not None:
        _YOUNG_CAP = young


@dataclass(frozen=True)
class SubgroupSpec:
    """An explicit subgroup of S_n: the ambient degree and the full element
    list (closed under composition and inverse, containing the identity)."""

    n: int
    elements: tuple[Permutation, ...]

    @classmethod
    def from_elements(cls, n: int, elements) -> "SubgroupSpec":
        elems = tuple(sorted({tuple(e) for e in elements}))
        eset = set(elems)
        if identity_perm(n) not in eset:
            raise ValueError("subgroup must contain the identity")
        for a in elems:
            if len(a) != n:
                raise ValueError(f"element {a} is not a word of length {n}")
            if inverse_perm(a) not in eset:
                raise ValueError(f"subgroup not closed under inverse at {a}")
            for b in elems:
                if compose(a, b) not in eset:
                    raise ValueError("subgroup not closed under composition")
        return cls(n, elems)

    @classmethod
    def young(cls, composition) -> "SubgroupSpec":
        """The Young subgroup S_{n_1} x ... x S_{n_r} on consecutive blocks."""
        blocks = [int(x) for x in composition]
        if any(b < 1 for b in blocks):
            raise ValueError("composition parts must be positive")
        n = sum(blocks)
        starts = []
        base = 1
        for b in blocks:
            starts.append(list(range(base, base + b)))
            base += b
        elems = []
        for pieces in _cartesian(*[_perms(block) for block in starts]):
            word = [0] * n
            for block, image in zip(starts, pieces):
                for src, img in zip(block, image):
                    word[src - 1] = img
            elems.append(tuple(word))
        return cls(n, tuple(sorted(elems)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in set(self.elements)

    def conjugacy_classes(self) -> list[tuple[Permutation, ...]]:
        """Brute-force conjugacy classes, each sorted, smallest rep first."""
        remaining = set(self.elements)
        classes = []
        for g in self.elements:
            if g not in remaining:
                continue
            orbit = {compose(h, compose(g, inverse_perm(h))) for h in self.elements}
            classes.append(tuple(sorted(orbit)))
            remaining -= orbit
        return classes


@dataclass(eq=False)
class MatrixRep:
    """A representation: degree n, dimension, and an exact matrix for every
    permutation in the domain (None = all of S_n)."""

    n: int
    dim: int
    _matrix_fn: object
    domain: SubgroupSpec | None = None
    label: str = ""
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def matrix(self, perm) -> Matrix:
        pi = tuple(perm)
        if len(pi) != self.n:
            raise ValueError(f"permutation degree {len(pi)} != {self.n}")
        if self.domain is not None and pi not in self.domain:
            raise ValueError(f"{pi} is outside this representation's domain")
        try:
            return self._memo[pi]
        except KeyError:
            pass
        with self._lock:
            if pi not in self._memo:
                self._memo[pi] = self._matrix_fn(pi)
            return self._memo[pi]

    def trace(self, perm) -> Fraction:
        m = self.matrix(perm)
        return sum((m[i][i] for i in range(self.dim)), Fraction(0))

    def generator_matrices(self) -> dict[int, Matrix]:
        """Matrices of the adjacent transpositions s_1..s_{n-1} (full-group
        representations only)."""
        if self.domain is not None:
            raise ValueError("generator matrices only defined on full S_n")
        return {i: self.matrix(adjacent_transposition(self.n, i))
                for i in range(1, self.n)}

    def elements(self):
        if self.domain is not None:
            return self.domain.elements
        return all_permutations(self.n)


def adjacent_transposition(n: int, i: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return tuple(word)


def _perm_matrix(images: list[int], dim: int) -> Matrix:
    """Matrix sending basis vector j to basis vector images[j]."""
    rows = [[0] * dim for _ in range(dim)]
    for j, i in enumerate(images):
        rows[i][j] = 1
    return tuple(tuple(r) for r in rows)


def classical_rep(kind: str, n: int) -> MatrixRep:
    """One of the classical representations: trivial, sign, defining
    (dimension n), regular (n!, capped), standard (n-1, the orthogonal
    complement of the all-ones line in the defining representation)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "trivial":
        return MatrixRep(n, 1, lambda pi: ((Fraction(1),),), label=f"trivial(S_{n})")
    if kind == "sign":
        return MatrixRep(
            n, 1, lambda pi: ((Fraction(perm_sign(pi)),),), label=f"sign(S_{n})"
        )
    if kind == "defining":
        return MatrixRep(
            n,
            n,
            lambda pi: _perm_matrix([pi[j] - 1 for j in range(n)], n),
            label=f"defining(S_{n})",
        )
    if kind == "regular":
        if n > _REGULAR_CAP:
            raise DegreeCapError(f"regular representation capped at n <= {_REGULAR_CAP}")
        basis = list(all_permutations(n))
        index = {g: i for i, g in enumerate(basis)}

        def fn(pi):
            return _perm_matrix([index[compose(pi, h)] for h in basis], len(basis))

        return MatrixRep(n, factorial(n), fn, label=f"regular(S_{n})")
    if kind == "standard":
        dim = n - 1

        def fn(pi):
            cols = []
            for j in range(2, n + 1):
                vec = [0] * dim
                if pi[j - 1] != 1:
                    vec[pi[j - 1] - 2] += 1
                if pi[0] != 1:
                    vec[pi[0] - 2] -= 1
                cols.append(vec)
            return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))

        return MatrixRep(n, dim, fn, label=f"standard(S_{n})")
    raise ValueError(f"unknown classical representation {kind!r}")


def character_of(rep: MatrixRep) -> ClassFunction:
    """Trace at one canonical representative per cycle type (full-group
    representations; for subgroup domains use rep.trace per element)."""
    if rep.domain is not None:
        raise ValueError("character_of needs a full-S_n representation")
    return class_function(
        rep.n,
        {mu: rep.trace(class_representative(mu)) for mu in partitions_of(rep.n)},
    )


def decompose(rep: MatrixRep) -> dict[Partition, int]:
    """Multiplicity of each irreducible, via the character inner product;
    raises if any multiplicity fails to be a nonnegative integer."""
    chi = character_of(rep)
    out: dict[Partition, int] = {}
    for lam in partitions_of(rep.n):
        m = char_inner(chi, class_function(rep.n, character_row(lam)))
        val = _int(m, f"multiplicity of {lam}")
        if val < 0:
            raise InvariantViolationError(f"negative multiplicity {val} at {lam}")
        if val:
            out[lam] = val
    return out


# --- Young permutation modules and Specht modules -----------------------------


def young_basis(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """Row-sorted injective tableaux of shape lam, as ordered tuples of
    sorted row sets; deterministic lexicographic enumeration."""
    lam = as_partition(lam)
    n = sum(lam)

    def fill(rows_left: tuple[int, ...], available: tuple[int, ...]):
        if not rows_left:
            yield ()
            return
        k = rows_left[0]
        for chosen in combinations(available, k):
            rest = tuple(x for x in available if x not in chosen)
            for tail in fill(rows_left[1:], rest):
                yield (chosen,) + tail

    return list(fill(lam, tuple(range(1, n + 1))))


def young_module(lam) -> MatrixRep:
    """Permutation representation on the row-sorted injective tableaux of
    shape lam; dimension n! / prod(lam_i!)."""
    lam = as_partition(lam)
    n = sum(lam)
    if n > _YOUNG_CAP:
        raise DegreeCapError(f"Young modules capped at n <= {_YOUNG_CAP}")
    basis = young_basis(lam)
    index = {b: i for i, b in enumerate(basis)}
    dim = factorial(n)
    for part in lam:
        dim //= factorial(part)
    if dim != len(basis):
        raise InvariantViolationError("Young module dimension mismatch")

    def fn(pi):
        images = []
        for b in basis:
            moved = tuple(tuple(sorted(pi[x - 1] for x in row)) for row in b)
            images.append(index[moved])
        return _perm_matrix(images, dim)

    return MatrixRep(n, dim, fn, label=f"young({lam})")


def _column_groups(tab: Tableau) -> list[tuple[int, ...]]:
    cols: dict[int, list[int]] = {}
    for r, row in enumerate(tab.rows):
        for c, v in enumerate(row):
            cols.setdefault(c, []).append(v)
    return [tuple(v) for _, v in sorted(cols.items())]


def specht_polynomial(tab: Tableau) -> dict[tuple[int, ...], int]:
    """The column antisymmetrization of the injective-tableau monomial
    x^t = prod over cells of x_{entry}^(row index): a polynomial in
    x_1..x_n as exponent-vector -> integer."""
    n = tab.size
    base = [0] * n
    for r, row in enumerate(tab.rows):
        for v in row:
            base[v - 1] = r
    out: dict[tuple[int, ...], int] = {}
    groups = _column_groups(tab)
    for images in _cartesian(*[_perms(g) for g in groups]):
        word = list(range(1, n + 1))
        sgn = 1
        for src_group, img_group in zip(groups, images):
            for src, img in zip(src_group, img_group):
                word[src - 1] = img
        # sign of the column permutation = product of block signs
        for src_group, img_group in zip(groups, images):
            seen = list(img_group)
            # count inversions relative to src_group order
            inv = sum(
                1
                for a in range(len(seen))
                for b in range(a + 1, len(seen))
                if src_group.index(seen[a]) > src_group.index(seen[b])
            )
            sgn *= -1 if inv % 2 else 1
        exps = [0] * n
        for x, e in enumerate(base, start=1):
            exps[word[x - 1] - 1] = e
        key = tuple(exps)
        c = out.get(key, 0) + sgn
        if c:
            out[key] = c
        elif key in out:
            del out[key]
    return out


def _act_exponents(pi: Permutation, key: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(key)
    for i, e in enumerate(key, start=1):
        out[pi[i - 1] - 1] = e
    return tuple(out)


def specht_module(lam) -> MatrixRep:
    """The irreducible module spanned by the standard column-antisymmetrized
    tableau polynomials; matrices come from exact linear solves in monomial
    coordinates, dimension = number of standard tableaux."""
    lam = as_partition(lam)
    n = sum(lam)
    if n > _SPECHT_CAP:
        raise DegreeCapError(f"Specht modules capped at n <= {_SPECHT_CAP}")
    tabs = standard_tableaux(lam)
    polys = [specht_polynomial(t) for t in tabs]
    dim = len(tabs)
    if dim != f_lambda(lam):
        raise InvariantViolationError("Specht dimension != standard tableau count")
    monomials = sorted(set().union(*polys)) if polys else []
    mono_index = {m: i for i, m in enumerate(monomials)}
    a_matrix = tuple(
        tuple(Fraction(poly.get(m, 0)) for poly in polys) for m in monomials
    )
    solver = ColumnSpaceSolver(a_matrix)

    def fn(pi):
        cols = []
        for poly in polys:
            moved: dict[tuple[int, ...], int] = {}
            for key, c in poly.items():
                moved[_act_exponents(pi, key)] = c
            b = [Fraction(0)] * len(monomials)
            for key, c in moved.items():
                idx = mono_index.get(key)
                if idx is None:
                    raise InvariantViolationError(
                        "permuted Specht polynomial left the monomial span"
                    )
                b[idx] = Fraction(c)
            cols.append(solver.solve(b))
        return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))

    return MatrixRep(n, dim, fn, label=f"specht({lam})")


# --- induction / restriction / sums / tensors ---------------------------------


def lex_transversal(subgroup: SubgroupSpec) -> list[Permutation]:
    """Left-coset representatives found by scanning S_n in lexicographic
    word order and keeping each minimal unseen representative."""
    seen: set[Permutation] = set()
    reps = []
    for g in all_permutations(subgroup.n):
        if g in seen:
            continue
        reps.append(g)
        for h in subgroup.elements:
            seen.add(compose(g, h))
    return reps


def induce(rep: MatrixRep, n: int, transversal=None) -> MatrixRep:
    """Induction from the subgroup domain of ``rep`` up to S_n, as the block
    matrix with (i, j) block Y(t_i^{-1} g t_j) (zero when the argument falls
    outside the subgroup)."""
    if rep.domain is None:
        raise ValueError("induce needs a representation with a subgroup domain")
    if rep.n != n:
        raise ValueError("subgroup must sit inside S_n (same word degree)")
    sub = rep.domain
    if transversal is None:
        ts = lex_transversal(sub)
    else:
        ts = [tuple(t) for t in transversal]
        covered = {compose(t, h) for t in ts for h in sub.elements}
        if len(covered) != len(ts) * sub.order or len(covered) != factorial(n):
            raise ValueError("not a transversal of the subgroup")
    k = len(ts)
    d = rep.dim
    zero_block = tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d))
    sub_set = set(sub.elements)
    t_invs = [inverse_perm(t) for t in ts]

    def fn(g):
        blocks = []
        for i in range(k):
            row_blocks = []
            for j in range(k):
                u = compose(t_invs[i], compose(g, ts[j]))
                row_blocks.append(rep.matrix(u) if u in sub_set else zero_block)
            blocks.append(row_blocks)
        rows = []
        for i in range(k):
            for r in range(d):
                rows.append(tuple(x for j in range(k) for x in blocks[i][j][r]))
        return tuple(rows)

    return MatrixRep(n, k * d, fn, label=f"induced({rep.label})")


def restrict(rep: MatrixRep, subgroup: SubgroupSpec) -> MatrixRep:
    """Same matrices, domain cut down to the subgroup."""
    if rep.n != subgroup.n:
        raise ValueError("subgroup degree differs from the representation's")
    if rep.domain is not None:
        missing = set(subgroup.elements) - set(rep.domain.elements)
        if missing:
            raise ValueError("new domain is not a subgroup of the current one")
    return MatrixRep(
        rep.n, rep.dim, rep.matrix, domain=subgroup, label=f"restricted({rep.label})"
    )


def trivial_of(subgroup: SubgroupSpec) -> MatrixRep:
    return MatrixRep(
        subgroup.n, 1, lambda pi: ((Fraction(1),),), domain=subgroup,
        label=f"trivial({subgroup.n})",
    )


def sign_of(subgroup: SubgroupSpec) -> MatrixRep:
    return MatrixRep(
        subgroup.n, 1, lambda pi: ((Fraction(perm_sign(pi)),),), domain=subgroup,
        label=f"sign({subgroup.n})",
    )


def _check_same_domain(a: MatrixRep, b: MatrixRep):
    if a.n != b.n:
        raise ValueError(f"degrees differ: {a.n} != {b.n}")
    da = a.domain.elements if a.domain else None
    db = b.domain.elements if b.domain else None
    if da != db:
        raise ValueError("domains differ")


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    _check_same_domain(a, b)
    return MatrixRep(
        a.n,
        a.dim + b.dim,
        lambda pi: block_diag(a.matrix(pi), b.matrix(pi)),
        domain=a.domain,
        label=f"({a.label})+({b.label})",
    )


def tensor_product(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """Inner tensor product: the diagonal action, Kronecker-product
    matrices; characters multiply pointwise."""
    _check_same_domain(a, b)
    return MatrixRep(
        a.n,
        a.dim * b.dim,
        lambda pi: kron(a.matrix(pi), b.matrix(pi)),
        domain=a.domain,
        label=f"({a.label})x({b.label})",
    )


def subgroup_char_inner(subgroup: SubgroupSpec, f, g) -> Fraction:
    """<f, g>_H = (1/|H|) sum over H of f(h) g(h) for element-wise
    character values (callables on permutations)."""
    total = sum((Fraction(f(h)) * Fraction(g(h)) for h in subgroup.elements),
                Fraction(0))
    return total / subgroup.order


def square_class(mu) -> Partition:
    """Cycle type of g^2 for g of cycle type mu: odd cycles stay whole,
    even cycles split in two."""
    parts: list[int] = []
    for length in as_partition(mu):
        if length % 2:
            parts.append(length)
        else:
            parts.extend([length // 2, length // 2])
    return tuple(sorted(parts, reverse=True))


def exterior_square_character(chi: ClassFunction) -> ClassFunction:
    """Character of the exterior square: value at g is
    (chi(g)^2 - chi(g^2)) / 2."""
    vals = chi.as_dict()
    return class_function(
        chi.n,
        {
            mu: (vals[mu] ** 2 - vals[square_class(mu)]) / 2
            for mu in partitions_of(chi.n)
        },
    )


# --- GL characters and Schur-Weyl counting ------------------------------------


def gl_character(lam, nvars: int) -> PolynomialValue:
    """Character of the irreducible polynomial GL_m module indexed by lam:
    the Schur polynomial in m variables."""
    return evaluate(basis_element(S, as_partition(lam)), nvars)


def gl_dimension(lam, nvars: int) -> int:
    """Dimension: the number of semistandard tableaux of shape lam with
    entries at most nvars (zero when the shape has too many rows)."""
    lam = as_partition(lam)
    if len(lam) > nvars:
        return 0
    return count_ssyt(lam, nvars)


def schur_weyl_check(n: int, m: int) -> bool:
    """Dimension count of the tensor-space decomposition:
    m^n == sum over lam |- n with at most m rows of f^lam * dim V^lam."""
    if not (0 <= n <= 6 and 0 <= m <= 6):
        raise ValueError("schur_weyl_check is supported for n, m <= 6")
    total = sum(
        f_lambda(lam) * gl_dimension(lam, m)
        for lam in partitions_of(n)
        if len(lam) <= m
    )
    return total == m**n


# --- structural checks ---------------------------------------------------------


def verify_generator_relations(rep: MatrixRep) -> bool:
    """Explicitly check s_i^2 = 1, the braid relations and distant
    commutation by matrix multiplication."""
    if rep.domain is not None:
        raise ValueError("relation check needs a full-S_n representation")
    n = rep.n
    eye = identity(rep.dim)
    gens = {i: rep.matrix(adjacent_transposition(n, i)) for i in range(1, n)}
    for i in range(1, n):
        if mat_mul(gens[i], gens[i]) != eye:
            return False
    for i in range(1, n - 1):
        lhs = mat_mul(gens[i], mat_mul(gens[i + 1], gens[i]))
        rhs = mat_mul(gens[i + 1], mat_mul(gens[i], gens[i + 1]))
        if lhs != rhs:
            return False
    for i in range(1, n):
        for j in range(i + 2, n):
            if mat_mul(gens[i], gens[j]) != mat_mul(gens[j], gens[i]):
                return False
    return True
