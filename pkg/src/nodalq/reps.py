"""Exact finite-dimensional representations of presented path algebras.

A representation assigns a dimension to every vertex and a matrix over
an exact field to every arrow; the matrix of an arrow maps the source
space into the target space, acting on column vectors.  A written word
``a.b`` therefore evaluates to the product ``mat(a) * mat(b)`` with
``b`` applied first.

On top of the basics (hom spaces, direct sums, summand splitting) the
module carries the three change-of-vertex operators used to move
representations along gluings and blow-ups, a Krull-Schmidt
decomposition against a catalog of indecomposables, and two exhaustive
enumeration strategies for such catalogs over a finite field:

* ``scan`` runs over all matrix tuples per dimension vector and keeps
  one representative per isomorphism class, which is exact but only
  affordable while the entry count stays small;
* ``closure`` grows the catalog by one total dimension at a time,
  realizing every candidate as an extension of a known direct sum by a
  simple submodule, so single large matrices never get enumerated.

Every isomorphism decision inside the enumerators goes through the
basis-pair test of ``has_summand``, which is exact for indecomposable
probes and never samples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .construct import blow_presentation, glue_presentation
from .linalg import Matrix, all_matrices, block_diag
from .quiver import Presentation


class ShapeMismatch(ValueError):
    pass


class SearchSpaceTooLarge(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Representation:
    """Matrices over an exact field attached to a presentation's quiver.

    ``dims`` aligns with ``pres.quiver.vertices`` and ``mats`` with
    ``pres.quiver.arrows``; relation satisfaction is checked separately
    by ``check_relations`` so that raw candidates can be filtered.
    """

    pres: Presentation
    field: object
    dims: tuple[int, ...]
    mats: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        q = self.pres.quiver
        if len(self.dims) != len(q.vertices):
            raise ShapeMismatch("one dimension per vertex required")
        if any(d < 0 for d in self.dims):
            raise ShapeMismatch("dimensions must be nonnegative")
        if len(self.mats) != len(q.arrows):
            raise ShapeMismatch("one matrix per arrow required")
        for a, m in zip(q.arrows, self.mats):
            if m.field != self.field:
                raise ShapeMismatch(f"matrix of {a.name!r} is over the wrong field")
            want = (self.dim(a.target), self.dim(a.source))
            if m.shape != want:
                raise ShapeMismatch(
                    f"matrix of {a.name!r} has shape {m.shape}, expected {want}"
                )

    def dim(self, v: str) -> int:
        return self.dims[self.pres.quiver.vertices.index(v)]

    def mat(self, name: str) -> Matrix:
        for a, m in zip(self.pres.quiver.arrows, self.mats):
            if a.name == name:
                return m
        raise KeyError(f"no arrow named {name!r}")

    @property
    def total(self) -> int:
        return sum(self.dims)


def make_representation(pres: Presentation, field, dims, mats) -> Representation:
    """Build a representation from dicts; omitted vertices get dimension
    zero and omitted arrows the zero matrix."""
    q = pres.quiver
    dt = tuple(dims.get(v, 0) for v in q.vertices)

    def lookup(a):
        nr, nc = dt[q.vertices.index(a.target)], dt[q.vertices.index(a.source)]
        got = mats.get(a.name)
        if got is None:
            return Matrix.zeros(field, nr, nc)
        if isinstance(got, Matrix):
            return got
        if nr == 0 or nc == 0:
            # row lists cannot carry a zero shape
            return Matrix.zeros(field, nr, nc)
        return Matrix.from_rows(field, got)

    return Representation(pres, field, dt, tuple(lookup(a) for a in q.arrows))


def zero_representation(pres: Presentation, field) -> Representation:
    return make_representation(pres, field, {}, {})


def simple_representation(pres: Presentation, field, v: str) -> Representation:
    if not pres.quiver.has_vertex(v):
        raise ShapeMismatch(f"no vertex {v!r}")
    return make_representation(pres, field, {v: 1}, {})


def direct_sum(m: Representation, n: Representation) -> Representation:
    if m.pres != n.pres or m.field != n.field:
        raise ShapeMismatch("summands must live over the same presentation and field")
    dims = tuple(a + b for a, b in zip(m.dims, n.dims))
    mats = tuple(
        block_diag(m.field, [ma, na]) for ma, na in zip(m.mats, n.mats)
    )
    return Representation(m.pres, m.field, dims, mats)


def path_matrix(m: Representation, word: tuple[str, ...], source=None) -> Matrix:
    """Evaluate a written word; the last arrow of the word acts first."""
    if not word:
        if source is None:
            raise ValueError("an empty word needs an explicit source vertex")
        return Matrix.identity(m.field, m.dim(source))
    out = m.mat(word[0])
    for name in word[1:]:
        out = out * m.mat(name)
    return out


def check_relations(m: Representation):
    """Return (ok, problems) for the presentation's relations."""
    problems = []
    for w in m.pres.zero_words():
        if not path_matrix(m, w).is_zero():
            problems.append(f"word {'·'.join(w)} does not vanish")
    for lhs, rhs in m.pres.commutation_pairs():
        if path_matrix(m, lhs) != path_matrix(m, rhs):
            problems.append(f"words {'·'.join(lhs)} and {'·'.join(rhs)} differ")
    return (not problems, tuple(problems))


# ---------------------------------------------------------------------------
# morphisms and hom spaces

@dataclass(frozen=True)
class Morphism:
    """A family of per-vertex matrices intertwining two representations."""

    source: Representation
    target: Representation
    blocks: tuple[Matrix, ...]

    def block(self, v: str) -> Matrix:
        return self.blocks[self.source.pres.quiver.vertices.index(v)]

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and all(
            b.is_invertible() for b in self.blocks
        )


@dataclass(frozen=True)
class HomSpace:
    source: Representation
    target: Representation
    basis: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def identity_morphism(m: Representation) -> Morphism:
    blocks = tuple(Matrix.identity(m.field, d) for d in m.dims)
    return Morphism(m, m, blocks)


def compose_morphisms(g: Morphism, f: Morphism) -> Morphism:
    if f.target != g.source:
        raise ShapeMismatch("morphisms do not compose")
    blocks = tuple(gb * fb for gb, fb in zip(g.blocks, f.blocks))
    return Morphism(f.source, g.target, blocks)


def _inverse_morphism(f: Morphism) -> Morphism:
    return Morphism(f.target, f.source, tuple(b.inverse() for b in f.blocks))


def combine_morphisms(hom: HomSpace, coeffs) -> Morphism:
    field = hom.source.field
    cs = [field.coerce(c) for c in coeffs]
    if len(cs) != len(hom.basis):
        raise ShapeMismatch("one coefficient per basis element required")
    blocks = []
    for k, (nd, md) in enumerate(zip(hom.target.dims, hom.source.dims)):
        acc = Matrix.zeros(field, nd, md)
        for c, f in zip(cs, hom.basis):
            if c != field.zero():
                acc = acc + f.blocks[k].scale(c)
        blocks.append(acc)
    return Morphism(hom.source, hom.target, tuple(blocks))


def hom_space(m: Representation, n: Representation) -> HomSpace:
    """Solve the intertwining equations f.mat(a) = mat(a).f exactly."""
    if m.pres != n.pres or m.field != n.field:
        raise ShapeMismatch("hom spaces need a common presentation and field")
    q = m.pres.quiver
    field = m.field
    offsets = []
    pos = 0
    for v in q.vertices:
        offsets.append(pos)
        pos += n.dim(v) * m.dim(v)
    unknowns = pos

    def uidx(vi, i, j):
        return offsets[vi] + i * m.dims[vi] + j

    rows = []
    for a in q.arrows:
        si = q.vertices.index(a.source)
        ti = q.vertices.index(a.target)
        ma, na = m.mat(a.name), n.mat(a.name)
        for i in range(n.dims[ti]):
            for j in range(m.dims[si]):
                row = [field.zero()] * unknowns
                for k in range(m.dims[ti]):
                    col = uidx(ti, i, k)
                    row[col] = field.add(row[col], ma.rows[k][j])
                for k in range(n.dims[si]):
                    col = uidx(si, k, j)
                    row[col] = field.sub(row[col], na.rows[i][k])
                rows.append(tuple(row))
    system = Matrix(field, len(rows), unknowns, tuple(rows))
    basis = []
    for vec in system.nullspace():
        blocks = []
        for vi, v in enumerate(q.vertices):
            nd, md = n.dims[vi], m.dims[vi]
            block_rows = tuple(
                tuple(vec[uidx(vi, i, j)] for j in range(md)) for i in range(nd)
            )
            blocks.append(Matrix(field, nd, md, block_rows))
        basis.append(Morphism(m, n, tuple(blocks)))
    return HomSpace(m, n, tuple(basis))


# ---------------------------------------------------------------------------
# summands and decomposition

def _columns_matrix(field, height, cols) -> Matrix:
    rows = tuple(tuple(c[i] for c in cols) for i in range(height))
    return Matrix(field, height, len(cols), rows)


def simple_summand_multiplicity(m: Representation, v: str) -> int:
    """Multiplicity of the one-dimensional representation at ``v`` as a
    direct summand: the part of the joint out-kernel sticking out of the
    joint in-image."""
    q = m.pres.quiver
    field = m.field
    dv = m.dim(v)
    if dv == 0:
        return 0
    outs = [m.mat(a.name) for a in q.out_arrows(v)]
    if outs:
        stacked = outs[0]
        for x in outs[1:]:
            stacked = stacked.vstack(x)
        kernel = _columns_matrix(field, dv, stacked.nullspace())
    else:
        kernel = Matrix.identity(field, dv)
    ins = [m.mat(a.name) for a in q.in_arrows(v)]
    if ins:
        joined = ins[0]
        for x in ins[1:]:
            joined = joined.hstack(x)
        image = joined.column_space_basis()
    else:
        image = Matrix.zeros(field, dv, 0)
    return kernel.hstack(image).rank() - image.ncols


def has_simple_summand_at(m: Representation, v: str) -> bool:
    return simple_summand_multiplicity(m, v) > 0


def _find_split(m: Representation, u: Representation):
    """A pair (f, g) with g.f invertible on ``u``, or None.

    Exact for indecomposable ``u``: its endomorphism ring is local, so
    if a copy of ``u`` splits off then already some pair of hom basis
    elements composes to an automorphism.
    """
    if any(du > dm for du, dm in zip(u.dims, m.dims)):
        return None
    into = hom_space(u, m)
    if not into.basis:
        return None
    back = hom_space(m, u)
    for f in into.basis:
        for g in back.basis:
            if compose_morphisms(g, f).is_isomorphism():
                return f, g
    return None


def has_summand(m: Representation, u: Representation) -> bool:
    """Whether the indecomposable ``u`` is a direct summand of ``m``."""
    if u.total == 0:
        raise ShapeMismatch("the zero representation is not a valid probe")
    return _find_split(m, u) is not None


def split_summand(m: Representation, u: Representation):
    """Split one copy of the indecomposable ``u`` off ``m``; returns the
    complement representation, or None when ``u`` is not a summand."""
    pair = _find_split(m, u)
    if pair is None:
        return None
    f, g = pair
    h = compose_morphisms(g, f)
    e = compose_morphisms(f, compose_morphisms(_inverse_morphism(h), g))
    field = m.field
    q = m.pres.quiver
    bases = []
    for vi in range(len(q.vertices)):
        vecs = e.blocks[vi].nullspace()
        bases.append(_columns_matrix(field, m.dims[vi], vecs))
    dims = tuple(b.ncols for b in bases)
    mats = []
    for a, ma in zip(q.arrows, m.mats):
        si = q.vertices.index(a.source)
        ti = q.vertices.index(a.target)
        restricted = bases[ti].solve(ma * bases[si])
        if restricted is None:
            raise RuntimeError("idempotent complement is not arrow-stable")
        mats.append(restricted)
    return Representation(m.pres, field, dims, tuple(mats))


def strip_simple_summands(m: Representation, vertices):
    """Split off every one-dimensional summand sitting at the given
    vertices; returns the stripped representation and per-vertex counts."""
    counts = {v: 0 for v in vertices}
    cur = m
    changed = True
    while changed:
        changed = False
        for v in vertices:
            if cur.dim(v) == 0:
                continue
            c = split_summand(cur, simple_representation(m.pres, m.field, v))
            if c is not None:
                counts[v] += 1
                cur = c
                changed = True
    return cur, counts


def decompose(m: Representation, catalog) -> tuple[int, ...]:
    """Multiplicities of the catalog classes in ``m``.

    The catalog must list pairwise non-isomorphic indecomposables and
    cover every summand of ``m``; a leftover nothing splits from is an
    error, never a silent drop.
    """
    counts = [0] * len(catalog)
    cur = m
    while cur.total > 0:
        for k, u in enumerate(catalog):
            if u.total > cur.total:
                continue
            nxt = split_summand(cur, u)
            if nxt is not None:
                counts[k] += 1
                cur = nxt
                break
        else:
            raise ValueError(
                "catalog does not cover a summand of the representation"
                f" (stuck at dimension vector {cur.dims})"
            )
    return tuple(counts)


# ---------------------------------------------------------------------------
# isomorphism and indecomposability with explicit search caps

def is_isomorphic(m: Representation, n: Representation, cap: int = 2 ** 20) -> bool:
    """Exact isomorphism test by searching for an invertible morphism.

    Over a finite field every coefficient vector on a hom basis is
    tried.  Over the rationals the determinant product is a polynomial
    of per-variable degree at most the total dimension, so scanning the
    integer grid 0..total per coordinate is still conclusive.  Raises
    SearchSpaceTooLarge instead of sampling when the grid passes ``cap``.
    """
    if m.pres != n.pres or m.field != n.field:
        raise ShapeMismatch("comparison needs a common presentation and field")
    if m.dims != n.dims:
        return False
    if m.total == 0:
        return True
    hom = hom_space(m, n)
    if hom.dim == 0:
        return False
    if m.field.size is not None:
        if m.field.size ** hom.dim > cap:
            raise SearchSpaceTooLarge(
                f"{m.field.size}^{hom.dim} candidate morphisms exceed the cap {cap}"
            )
        values = tuple(m.field.elements())
    else:
        if (m.total + 1) ** hom.dim > cap:
            raise SearchSpaceTooLarge(
                f"{m.total + 1}^{hom.dim} grid points exceed the cap {cap}"
            )
        values = tuple(range(m.total + 1))
    for coeffs in itertools.product(values, repeat=hom.dim):
        if all(c == 0 for c in coeffs):
            continue
        if combine_morphisms(hom, coeffs).is_isomorphism():
            return True
    return False


def is_indecomposable(m: Representation, cap: int = 2 ** 20) -> bool:
    """Exact indecomposability test.

    Cheap certificates first (dimension one, a splitting simple, a
    one-dimensional endomorphism ring); after that, over a finite field
    every endomorphism is tried against being a proper idempotent.  Over
    the rationals there is no such finite sweep, so the undecided case
    raises SearchSpaceTooLarge.
    """
    if m.total == 0:
        return False
    if m.total == 1:
        return True
    for v in m.pres.quiver.vertices:
        if has_simple_summand_at(m, v):
            return False  # total > 1, so a splitting simple is proper
    end = hom_space(m, m)
    if end.dim == 1:
        return True
    if m.field.size is None:
        raise SearchSpaceTooLarge(
            "idempotent sweep needs a finite field; decide over GF(p)"
            " or use catalog decomposition"
        )
    if m.field.size ** end.dim > cap:
        raise SearchSpaceTooLarge(
            f"{m.field.size}^{end.dim} endomorphisms exceed the cap {cap}"
        )
    ident = identity_morphism(m)
    values = tuple(m.field.elements())
    for coeffs in itertools.product(values, repeat=end.dim):
        e = combine_morphisms(end, coeffs)
        if e.is_zero() or e == ident:
            continue
        if compose_morphisms(e, e) == e:
            return False
    return True


# ---------------------------------------------------------------------------
# moving representations along gluings and blow-ups

def _glue_blocks(m: Representation, i: str, j: str, merged_id):
    glued, vmap, _ = glue_presentation(m.pres, i, j, merged_id)
    q = m.pres.quiver
    gq = glued.quiver
    w = vmap[i][0]
    di, dj = m.dim(i), m.dim(j)
    gdims = []
    for gv in gq.vertices:
        if gv == w:
            gdims.append(di + dj)
        else:
            gdims.append(m.dim(gv))
    field = m.field

    def part_offset(v):
        # the i part sits above the j part in the merged space
        return 0 if v == i else di

    mats = []
    for a in q.arrows:
        src, tgt = a.source, a.target
        block = m.mat(a.name)
        nr = di + dj if tgt in (i, j) else m.dim(tgt)
        nc = di + dj if src in (i, j) else m.dim(src)
        r0 = part_offset(tgt) if tgt in (i, j) else 0
        c0 = part_offset(src) if src in (i, j) else 0
        grid = [[field.zero()] * nc for _ in range(nr)]
        for r in range(block.nrows):
            for c in range(block.ncols):
                grid[r0 + r][c0 + c] = block.rows[r][c]
        mats.append(Matrix(field, nr, nc, tuple(tuple(row) for row in grid)))
    return Representation(glued, field, tuple(gdims), tuple(mats))


def glue_induce(m: Representation, i: str, j: str, merged_id=None) -> Representation:
    """Push a representation through the gluing of ``i`` and ``j``.

    The merged space stacks the ``i`` part above the ``j`` part; each
    arrow matrix lands in the block addressed by its endpoints, so the
    imposed zero relations hold automatically.  Arrows running between
    the two vertices are rejected here; use the inessential variant for
    pairs that carry them.
    """
    q = m.pres.quiver
    if any({a.source, a.target} <= {i, j} for a in q.arrows):
        raise ShapeMismatch(
            f"arrows between {i!r} and {j!r} need glue_induce_inessential"
        )
    return _glue_blocks(m, i, j, merged_id)


def glue_induce_inessential(
    m: Representation, i: str, j: str, merged_id=None
) -> Representation:
    """Same construction restricted to an inessential pair, where one
    ordering has no arrows into the first vertex and none out of the
    second; arrows from one glued vertex to the other are allowed and
    become nilpotent loops."""
    q = m.pres.quiver
    ok = (not q.in_arrows(i) and not q.out_arrows(j)) or (
        not q.in_arrows(j) and not q.out_arrows(i)
    )
    if not ok:
        raise ShapeMismatch(f"pair ({i!r}, {j!r}) is not inessential here")
    return _glue_blocks(m, i, j, merged_id)


def blow_induce(m: Representation, v: str) -> Representation:
    """Push a representation through the blow-up of ``v``: both primed
    copies inherit the space at ``v`` and the matrices of the incident
    arrows, so all duplicated relations and commutations hold."""
    blown, vmap, amap = blow_presentation(m.pres, v)
    bq = blown.quiver
    old_of = {}
    for name, copies in amap.items():
        for c in copies:
            old_of[c] = name
    dims = []
    for bv in bq.vertices:
        dims.append(m.dim(v) if bv in vmap[v] else m.dim(bv))
    mats = tuple(m.mat(old_of[a.name]) for a in bq.arrows)
    return Representation(blown, m.field, tuple(dims), mats)


def _quotient_data(field, dim, kernel_cols: Matrix):
    """Deterministic section and projection for space/kernel.

    Returns (section, projection): projection maps coordinates onto the
    quotient, the section picks standard basis vectors at the non-pivot
    coordinates of the kernel basis.
    """
    d0 = kernel_cols.ncols
    if d0 == 0:
        ident = Matrix.identity(field, dim)
        return ident, ident
    pivots = kernel_cols.transpose().rref()[1]
    free = [k for k in range(dim) if k not in pivots]
    section = Matrix(
        field,
        dim,
        len(free),
        tuple(
            tuple(field.one() if r == f else field.zero() for f in free)
            for r in range(dim)
        ),
    )
    full = kernel_cols.hstack(section)
    proj_rows = full.inverse().rows[d0:]
    projection = Matrix(field, dim - d0, dim, tuple(proj_rows))
    return section, projection


def glue_restrict_inessential(
    n: Representation, base_pres: Presentation, i: str, j: str
) -> Representation:
    """Pull a representation of the glued presentation back to the base.

    Only defined for an inessential pair.  At the merged vertex the
    source-role copy receives the space modulo the joint kernel of the
    starting arrows and the sink-role copy the joint image of the ending
    arrows; induced maps use a deterministic section and echelon
    subspace coordinates.  On representations pushed forward from a base
    representation without one-dimensional summands at the pair, this
    recovers that representation on the nose.
    """
    bq = base_pres.quiver
    ordering = None
    for s, t in ((i, j), (j, i)):
        if not bq.in_arrows(s) and not bq.out_arrows(t):
            ordering = (s, t)
            break
    if ordering is None:
        raise ShapeMismatch(f"pair ({i!r}, {j!r}) is not inessential in the base")
    s, t = ordering
    glued, vmap, _ = glue_presentation(base_pres, i, j)
    if n.pres != glued:
        raise ShapeMismatch(
            "representation does not live over the glued form of this base"
        )
    field = n.field
    w = vmap[i][0]
    gq = glued.quiver
    dw = n.dim(w)

    starting = [n.mat(a.name) for a in gq.out_arrows(w)]
    if starting:
        stacked = starting[0]
        for x in starting[1:]:
            stacked = stacked.vstack(x)
        kernel = _columns_matrix(field, dw, stacked.nullspace())
    else:
        kernel = Matrix.identity(field, dw)
    section, projection = _quotient_data(field, dw, kernel)

    ending = [n.mat(a.name) for a in gq.in_arrows(w)]
    if ending:
        joined = ending[0]
        for x in ending[1:]:
            joined = joined.hstack(x)
        image = joined.column_space_basis()
    else:
        image = Matrix.zeros(field, dw, 0)

    dims = []
    for v in bq.vertices:
        if v == s:
            dims.append(dw - kernel.ncols)
        elif v == t:
            dims.append(image.ncols)
        else:
            dims.append(n.dim(v))
    mats = []
    for a in bq.arrows:
        na = n.mat(a.name)
        if a.source == s and a.target == t:
            solved = image.solve(na * section)
        elif a.source == s:
            solved = na * section
        elif a.target == t:
            solved = image.solve(na)
        else:
            solved = na
        if solved is None:
            raise RuntimeError("ending arrow image escaped the joint image")
        mats.append(solved)
    return Representation(base_pres, field, tuple(dims), tuple(mats))


# ---------------------------------------------------------------------------
# exhaustive enumeration of indecomposables

@dataclass(frozen=True)
class EnumerationResult:
    classes: tuple[Representation, ...]
    max_total: int
    method: str
    examined: int

    @property
    def count(self) -> int:
        return len(self.classes)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _support_connected(q, dims) -> bool:
    support = {v for v, d in zip(q.vertices, dims) if d > 0}
    if len(support) <= 1:
        return True
    adj = {v: set() for v in support}
    for a in q.arrows:
        if a.source in support and a.target in support:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
    seen = set()
    stack = [next(iter(support))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v] - seen)
    return seen == support


def _is_new_indecomposable(m, catalog, same_dimvec) -> bool:
    if m.total > 1:
        if any(has_simple_summand_at(m, v) for v in m.pres.quiver.vertices):
            return False
        for u in catalog:
            if u.total < m.total and all(a <= b for a, b in zip(u.dims, m.dims)):
                if has_summand(m, u):
                    return False
    for u in same_dimvec:
        if has_summand(m, u):
            return False
    return True


def _scan_catalog(pres, field, max_total, budget):
    if field.size is None:
        raise SearchSpaceTooLarge("exhaustive scans need a finite field")
    q = pres.quiver
    arrow_idx = [
        (q.vertices.index(a.source), q.vertices.index(a.target)) for a in q.arrows
    ]
    catalog = []
    examined = 0
    for total in range(1, max_total + 1):
        for dims in _compositions(total, len(q.vertices)):
            if not _support_connected(q, dims):
                continue
            cost = sum(dims[si] * dims[ti] for si, ti in arrow_idx)
            if cost > budget:
                raise BudgetExceeded(
                    f"dimension vector {dims} needs {cost} matrix entries,"
                    f" over the budget {budget}"
                )
            spaces = [
                tuple(all_matrices(field, dims[ti], dims[si]))
                for si, ti in arrow_idx
            ]
            found_here = []
            for mats in itertools.product(*spaces):
                examined += 1
                m = Representation(pres, field, dims, mats)
                if not check_relations(m)[0]:
                    continue
                if _is_new_indecomposable(m, catalog, found_here):
                    found_here.append(m)
            catalog.extend(found_here)
    return catalog, examined


def _weighted_multisets(entries, target):
    """Multisets over (index, weight) entries with weights summing to target."""

    def rec(start, left):
        if left == 0:
            yield ()
            return
        for k in range(start, len(entries)):
            w = entries[k][1]
            if w <= left:
                for rest in rec(k, left - w):
                    yield (k,) + rest

    yield from rec(0, target)


def _extension_candidates(pres, field, base, v, budget):
    """All one-step extensions of ``base`` by a simple submodule at ``v``.

    The new coordinate is row zero of the space at ``v``; arrows into
    ``v`` acquire an unknown top row, arrows out of ``v`` a forced zero
    column.  Relations ending at ``v`` translate into linear constraints
    on the unknown rows, and extensions differing by a coboundary give
    isomorphic modules, so only coset representatives get built.
    """
    q = pres.quiver
    ins = [a for a in q.arrows if a.target == v]
    widths = [base.dim(a.source) for a in ins]
    unknowns = sum(widths)
    if unknowns == 0:
        return []
    offsets = []
    pos = 0
    for wdt in widths:
        offsets.append(pos)
        pos += wdt
    slot = {a.name: k for k, a in enumerate(ins)}

    rows = []

    def word_part(word, sign):
        # contribution of the word's unknown top row: r[word0] . base(rest)
        k = slot[word[0]]
        if len(word) > 1:
            cols = path_matrix(base, word[1:])
        else:
            cols = Matrix.identity(field, widths[k])
        return k, cols, sign

    constraints = []
    for w in pres.zero_words():
        if q.arrow(w[0]).target == v:
            constraints.append([word_part(w, 1)])
    for lhs, rhs in pres.commutation_pairs():
        if q.arrow(lhs[0]).target == v:
            constraints.append([word_part(lhs, 1), word_part(rhs, -1)])
    for parts in constraints:
        width_cols = parts[0][1].ncols
        for c in range(width_cols):
            row = [field.zero()] * unknowns
            for k, cols, sign in parts:
                for r in range(cols.nrows):
                    idx = offsets[k] + r
                    term = cols.rows[r][c]
                    if sign < 0:
                        term = field.neg(term)
                    row[idx] = field.add(row[idx], term)
            rows.append(tuple(row))
    system = Matrix(field, len(rows), unknowns, tuple(rows))
    cocycles = system.nullspace()

    cobounds = []
    dv = base.dim(v)
    for t in range(dv):
        vec = [field.zero()] * unknowns
        for k, a in enumerate(ins):
            mat = base.mat(a.name)
            for c in range(mat.ncols):
                vec[offsets[k] + c] = mat.rows[t][c]
        cobounds.append(tuple(vec))

    # extend the coboundary row space to the full cocycle space; the
    # extension vectors then enumerate the cosets exactly once
    reduced = Matrix(field, len(cobounds), unknowns, tuple(cobounds))
    rr, pivots = reduced.rref()
    basis_rows = [rr.rows[k] for k in range(len(pivots))]
    ext_basis = []
    for z in cocycles:
        cur = list(z)
        for row in basis_rows + ext_basis:
            pc = next((c for c, x in enumerate(row) if x != field.zero()), None)
            if pc is not None and cur[pc] != field.zero():
                factor = field.mul(cur[pc], field.inv(row[pc]))
                cur = [
                    field.sub(x, field.mul(factor, y)) for x, y in zip(cur, row)
                ]
        if any(x != field.zero() for x in cur):
            ext_basis.append(tuple(cur))
    if len(ext_basis) > budget:
        raise BudgetExceeded(
            f"{len(ext_basis)} independent extension directions at {v!r},"
            f" over the budget {budget}"
        )

    out = []
    vi = q.vertices.index(v)
    new_dims = tuple(d + 1 if k == vi else d for k, d in enumerate(base.dims))
    for coeffs in itertools.product(field.elements(), repeat=len(ext_basis)):
        if all(c == field.zero() for c in coeffs):
            continue
        rvec = [field.zero()] * unknowns
        for c, bvec in zip(coeffs, ext_basis):
            if c != field.zero():
                rvec = [
                    field.add(x, field.mul(c, y)) for x, y in zip(rvec, bvec)
                ]
        mats = []
        for a, bm in zip(q.arrows, base.mats):
            if a.target == v and a.source == v:
                k = slot[a.name]
                top = (field.zero(),) + tuple(
                    rvec[offsets[k] + c] for c in range(widths[k])
                )
                body = tuple(
                    (field.zero(),) + bm.rows[r] for r in range(bm.nrows)
                )
                mats.append(Matrix(field, bm.nrows + 1, bm.ncols + 1, (top,) + body))
            elif a.target == v:
                k = slot[a.name]
                top = tuple(rvec[offsets[k] + c] for c in range(widths[k]))
                mats.append(
                    Matrix(field, bm.nrows + 1, bm.ncols, (top,) + bm.rows)
                )
            elif a.source == v:
                body = tuple(
                    (field.zero(),) + bm.rows[r] for r in range(bm.nrows)
                )
                mats.append(Matrix(field, bm.nrows, bm.ncols + 1, body))
            else:
                mats.append(bm)
        out.append(Representation(pres, field, new_dims, tuple(mats)))
    return out


def _closure_catalog(pres, field, max_total, budget):
    if field.size is None:
        raise SearchSpaceTooLarge("extension enumeration needs a finite field")
    q = pres.quiver
    catalog = [simple_representation(pres, field, v) for v in q.vertices]
    examined = len(catalog)
    for total in range(2, max_total + 1):
        found = []
        entries = [(k, u.total) for k, u in enumerate(catalog)]
        for picks in _weighted_multisets(entries, total - 1):
            base = catalog[picks[0]]
            for k in picks[1:]:
                base = direct_sum(base, catalog[k])
            for v in q.vertices:
                for m in _extension_candidates(pres, field, base, v, budget):
                    examined += 1
                    same = [u for u in found if u.dims == m.dims]
                    if _is_new_indecomposable(m, catalog, same):
                        found.append(m)
        catalog.extend(found)
    return catalog, examined


def enumerate_indecomposables(
    pres: Presentation,
    field,
    max_total: int,
    budget: int = 16,
    method: str = "scan",
) -> EnumerationResult:
    """One representative per isomorphism class of indecomposables with
    total dimension up to ``max_total``, over a finite field.

    ``scan`` tries every matrix tuple per dimension vector and refuses
    dimension vectors needing more than ``budget`` matrix entries.
    ``closure`` builds each candidate as an extension of smaller classes
    by a simple submodule, which reaches totals far beyond the scan;
    there ``budget`` caps the independent extension directions.  Both
    refuse loudly rather than returning a partial catalog.
    """
    if max_total < 0:
        raise ValueError("max_total must be nonnegative")
    if method == "scan":
        classes, examined = _scan_catalog(pres, field, max_total, budget)
    elif method == "closure":
        classes, examined = _closure_catalog(pres, field, max_total, budget)
    else:
        raise ValueError(f"unknown method {method!r}")
    return EnumerationResult(tuple(classes), max_total, method, examined)


def random_representation(pres: Presentation, field, rng, max_dim: int = 2):
    """A random representation of a relation-free presentation."""
    if pres.relations:
        raise ShapeMismatch("random sampling only fills relation-free shapes")
    q = pres.quiver
    dims = {v: rng.randrange(max_dim + 1) for v in q.vertices}
    mats = {}
    for a in q.arrows:
        nr, nc = dims[a.target], dims[a.source]
        if nr == 0 or nc == 0:
            continue
        if field.size is not None:
            entries = [[rng.randrange(field.size) for _ in range(nc)] for _ in range(nr)]
        else:
            entries = [[rng.randint(-2, 2) for _ in range(nc)] for _ in range(nr)]
        mats[a.name] = entries
    return make_representation(pres, field, dims, mats)
