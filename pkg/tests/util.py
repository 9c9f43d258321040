"""Shared fixtures: quiver builders, random data generators and the
independent path-counting oracle the dimension tests compare against.

The oracle walks the quiver directly with a memoized DFS and never
touches the construction code, so an agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from nodalq import Arrow, NodalDatum, Quiver


def line_quiver(n, orientations=None, prefix="v"):
    """A line on n vertices; orientations[k] truthy points edge k forward."""
    vs = tuple(f"{prefix}{k}" for k in range(n))
    arrows = []
    for k in range(n - 1):
        fwd = True if orientations is None else bool(orientations[k])
        u, w = vs[k], vs[k + 1]
        arrows.append(Arrow(f"{prefix}a{k}", u, w) if fwd else Arrow(f"{prefix}a{k}", w, u))
    return Quiver(vs, tuple(arrows))


def worked_example_datum():
    q = Quiver(
        ("v1", "v2", "v3", "v4", "v5", "v6", "v7"),
        (
            Arrow("a1", "v1", "v2"),
            Arrow("a2", "v2", "v3"),
            Arrow("a3", "v3", "v4"),
            Arrow("a4", "v5", "v4"),
            Arrow("a5", "v3", "v6"),
            Arrow("a6", "v6", "v7"),
        ),
    )
    return NodalDatum(q, (("v2", "v4"), ("v5", "v7")), ("v6",))


def exceptional_datum(n, m, l, case="one", flip=0):
    """One essential gluing on a line with the stated tail parameters.

    Vertices are y0..y{N-1}; the glued pair sits at positions m+1 and
    m+1+n.  Edges not fixed by the configuration alternate direction,
    shifted by ``flip``, to exercise the arbitrary-orientation clause.
    """
    size = m + n + l + 3
    pi, pj = m + 1, m + 1 + n
    vs = tuple(f"y{k}" for k in range(size))
    one = case == "one"
    arrows = []
    idx = 0
    for k in range(size - 1):
        u, w = vs[k], vs[k + 1]
        if k == pi - 1:
            arrows.append(Arrow("beta", u, w) if one else Arrow("beta", w, u))
        elif k == pi and n == 1:
            arrows.append(Arrow("alpha", w, u) if one else Arrow("alpha", u, w))
        elif k == pi:
            arrows.append(Arrow("a1", w, u) if one else Arrow("a1", u, w))
        elif k == pj - 1:
            arrows.append(Arrow("an", w, u) if one else Arrow("an", u, w))
        elif k == pj:
            arrows.append(Arrow("gamma", w, u) if one else Arrow("gamma", u, w))
        else:
            if (idx + flip) % 2 == 0:
                arrows.append(Arrow(f"t{idx}", u, w))
            else:
                arrows.append(Arrow(f"t{idx}", w, u))
            idx += 1
    q = Quiver(vs, tuple(arrows))
    return NodalDatum(q, ((vs[pi], vs[pj]),), ())


def super_datum(m, l, case="one"):
    """Two essential gluings: an (n=3) configuration plus the gluing of
    the middle path edge's endpoints.  The middle edge orientation is
    forced; the other way around the second gluing would be inessential."""
    left = [f"e{k}" for k in range(m)]
    right = [f"f{k}" for k in range(l)]
    vs = tuple(left + ["ti", "i", "x1", "x2", "j", "tj"] + right)
    one = case == "one"
    arrows = []
    idx = 0
    for k in range(len(vs) - 1):
        u, w = vs[k], vs[k + 1]
        if w == "i":
            arrows.append(Arrow("beta", u, w) if one else Arrow("beta", w, u))
        elif u == "i":
            arrows.append(Arrow("a1", w, u) if one else Arrow("a1", u, w))
        elif u == "x1":
            arrows.append(Arrow("a2", w, u) if one else Arrow("a2", u, w))
        elif u == "x2":
            arrows.append(Arrow("a3", w, u) if one else Arrow("a3", u, w))
        elif u == "j":
            arrows.append(Arrow("gamma", w, u) if one else Arrow("gamma", u, w))
        else:
            arrows.append(Arrow(f"t{idx}", u, w))
            idx += 1
    q = Quiver(vs, tuple(arrows))
    return NodalDatum(q, (("i", "j"), ("x1", "x2")), ())


# ---------------------------------------------------------------------------
# independent dimension oracle

def count_paths(q):
    """Number of paths of the acyclic quiver, trivial ones included."""
    outs = {v: [] for v in q.vertices}
    for a in q.arrows:
        outs[a.source].append(a.target)
    memo = {}

    def from_vertex(v):
        if v not in memo:
            memo[v] = None  # cycle guard
            memo[v] = 1 + sum(from_vertex(w) for w in outs[v])
        if memo[v] is None:
            raise ValueError("quiver has an oriented cycle")
        return memo[v]

    return sum(from_vertex(v) for v in q.vertices)


def count_paths_from(q, v):
    """Nonempty paths starting at ``v``."""
    outs = {u: [] for u in q.vertices}
    for a in q.arrows:
        outs[a.source].append(a.target)
    memo = {}

    def from_vertex(u):
        if u not in memo:
            memo[u] = 1 + sum(from_vertex(w) for w in outs[u])
        return memo[u]

    return from_vertex(v) - 1


def count_paths_into(q, v):
    """Nonempty paths ending at ``v``."""
    rev = Quiver(q.vertices, tuple(Arrow(a.name, a.target, a.source) for a in q.arrows))
    return count_paths_from(rev, v)


# ---------------------------------------------------------------------------
# randomized data for the dimension laws and the recognizer suites

def random_dag(rng, max_vertices=8, density=0.35, prefix="n"):
    n = rng.randint(2, max_vertices)
    vs = tuple(f"{prefix}{k}" for k in range(n))
    arrows = []
    idx = 0
    for a, b in itertools.combinations(range(n), 2):
        if rng.random() < density:
            arrows.append(Arrow(f"{prefix}e{idx}", vs[a], vs[b]))
            idx += 1
    if not arrows:
        arrows.append(Arrow(f"{prefix}e0", vs[0], vs[1]))
    return Quiver(vs, tuple(arrows))


def random_glue_datum(rng):
    q = random_dag(rng)
    vs = list(q.vertices)
    rng.shuffle(vs)
    r = rng.randint(1, len(vs) // 2)
    pairs = tuple((vs[2 * k], vs[2 * k + 1]) for k in range(r))
    return NodalDatum(q, pairs, ())


def random_blow_datum(rng):
    q = random_dag(rng)
    v = rng.choice(q.vertices)
    return NodalDatum(q, (), (v,))


def random_line_glue_datum(rng):
    """Gluing-only datum over a randomly oriented line quiver."""
    n = rng.randint(3, 9)
    q = line_quiver(n, orientations=tuple(rng.randint(0, 1) for _ in range(n - 1)))
    vs = list(q.vertices)
    rng.shuffle(vs)
    r = rng.randint(1, (n - 1) // 2)
    pairs = tuple((vs[2 * k], vs[2 * k + 1]) for k in range(r))
    return NodalDatum(q, pairs, ())


def random_quasi_gentle_datum(rng):
    """Gluing-only data on disjoint consistently oriented lines, pairs
    drawn without repetition: every glued vertex keeps at most one
    in-arrow and one out-arrow in the base, so the quasi-gentle test
    accepts and the built presentation satisfies the gentle axioms."""
    parts = rng.randint(1, 3)
    vs = []
    arrows = []
    for p in range(parts):
        n = rng.randint(2, 5)
        comp = [f"p{p}v{k}" for k in range(n)]
        vs.extend(comp)
        arrows.extend(
            Arrow(f"p{p}a{k}", comp[k], comp[k + 1]) for k in range(n - 1)
        )
    q = Quiver(tuple(vs), tuple(arrows))
    pool = list(vs)
    rng.shuffle(pool)
    r = rng.randint(1, max(1, len(pool) // 4))
    pairs = tuple((pool[2 * k], pool[2 * k + 1]) for k in range(r))
    return NodalDatum(q, pairs, ())


def random_degree_violation_datum(rng):
    """A single essential gluing that merges a two-in vertex with another
    vertex carrying an in-arrow, so the merged vertex has three or more
    in-arrows and the gentle degree axiom must fail."""
    # component one: a zigzag with an interior sink s
    left = rng.randint(1, 3)
    right = rng.randint(1, 3)
    c1 = [f"z{k}" for k in range(left + 1 + right)]
    sink = c1[left]
    arrows = [Arrow(f"za{k}", c1[k], c1[k + 1]) for k in range(left)]
    arrows += [Arrow(f"za{k + left}", c1[k + 1], c1[k]) for k in range(left, left + right)]
    # component two: a forward line; glue the sink to a non-source vertex
    n = rng.randint(2, 5)
    c2 = [f"w{k}" for k in range(n)]
    arrows += [Arrow(f"wa{k}", c2[k], c2[k + 1]) for k in range(n - 1)]
    other = c2[rng.randint(1, n - 1)]
    q = Quiver(tuple(c1 + c2), tuple(arrows))
    return NodalDatum(q, ((sink, other),), ())


def seeded(seed):
    return random.Random(seed)
