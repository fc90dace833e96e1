"""Truncated bisimplicial sets and the four comparison functors.

Data lives over a downward-closed finite set of bidegrees.  Horizontal
operators move the first index, vertical operators the second, and the
two kinds commute (audited exhaustively).

The left adjoint of the diagonal is computed by a confluent normal form
on coend generators rather than a global union-find pass: every class
of (simplex, pair of operators) has a unique representative whose
simplex is nondegenerate and whose operator pair is jointly surjective.
The small-scale union-find quotient is kept in the test suite as an
independent oracle for this normalization.
"""

from __future__ import annotations

from .names import sort_key
from .sset import (SimplicialError, SimplicialMap, TruncatedSimplicialSet,
                   _monotone_maps, _tuple_degen, _tuple_face)


class BidegreeShape:
    def __init__(self, support):
        self.support = frozenset(support)
        if not self.support:
            raise SimplicialError("empty bidegree support")
        for (p, q) in self.support:
            if p > 0 and (p - 1, q) not in self.support:
                raise SimplicialError(f"support not downward closed at {(p, q)}")
            if q > 0 and (p, q - 1) not in self.support:
                raise SimplicialError(f"support not downward closed at {(p, q)}")

    def __contains__(self, pq):
        return pq in self.support

    def sorted(self):
        return sorted(self.support)

    @classmethod
    def rectangle(cls, pmax, qmax):
        return cls({(p, q) for p in range(pmax + 1) for q in range(qmax + 1)})

    @classmethod
    def staircase(cls, total):
        """All (p, q) with p + q <= total."""
        return cls({(p, q) for p in range(total + 1) for q in range(total + 1 - p)})


class TruncatedBisimplicialSet:
    def __init__(self, shape, simplices, hfaces, hdegens, vfaces, vdegens,
                 basepoint=None):
        self.shape = shape
        self.simplices = {pq: tuple(simplices.get(pq, ())) for pq in shape.support}
        self.hfaces = hfaces      # {(p, q, i): {x: y}} to (p-1, q)
        self.hdegens = hdegens    # {(p, q, j): {x: y}} to (p+1, q)
        self.vfaces = vfaces      # {(p, q, j): {x: y}} to (p, q-1)
        self.vdegens = vdegens    # {(p, q, j): {x: y}} to (p, q+1)
        self.basepoint = basepoint
        self._index = {pq: frozenset(self.simplices[pq]) for pq in self.simplices}

    def hface(self, p, q, i, x):
        return self.hfaces[(p, q, i)][x]

    def hdegen(self, p, q, j, x):
        return self.hdegens[(p, q, j)][x]

    def vface(self, p, q, j, x):
        return self.vfaces[(p, q, j)][x]

    def vdegen(self, p, q, j, x):
        return self.vdegens[(p, q, j)][x]

    def size(self, p, q):
        return len(self.simplices[(p, q)])

    def is_pointed(self):
        return self.basepoint is not None

    def row(self, q):
        """Horizontal simplicial set p -> B_{p,q}."""
        ps = [p for (p, qq) in self.shape.support if qq == q]
        if not ps:
            raise SimplicialError(f"no bidegrees with vertical index {q}")
        bound = max(ps)
        simplices = {p: self.simplices[(p, q)] for p in range(bound + 1)}
        faces = {(p, i): self.hfaces[(p, q, i)]
                 for p in range(1, bound + 1) for i in range(p + 1)}
        degens = {(p, j): self.hdegens[(p, q, j)]
                  for p in range(bound) for j in range(p + 1)}
        return TruncatedSimplicialSet(bound, simplices, faces, degens)

    def vertical_face_map(self, q, j):
        """d^v_j as a simplicial map row(q) -> row(q-1)."""
        src, tgt = self.row(q), self.row(q - 1)
        assign = {p: {x: self.vface(p, q, j, x) for x in src.simplices[p]}
                  for p in src.degrees() if p <= tgt.bound}
        return SimplicialMap(
            TruncatedSimplicialSet(min(src.bound, tgt.bound),
                                   {p: src.simplices[p] for p in assign},
                                   {k: t for k, t in src.faces.items() if k[0] in assign},
                                   {k: t for k, t in src.degens.items()
                                    if k[0] + 1 in assign}),
            tgt, assign)

    def audit(self, max_violations=20):
        v = []

        def report(msg):
            if len(v) < max_violations:
                v.append(msg)

        for (p, q) in self.shape.sorted():
            cells = self.simplices[(p, q)]
            for i in range(p + 1) if p >= 1 else ():
                t = self.hfaces.get((p, q, i))
                if t is None or any(x not in t for x in cells):
                    report(f"horizontal face d_{i} incomplete at {(p, q)}")
            for j in range(q + 1) if q >= 1 else ():
                t = self.vfaces.get((p, q, j))
                if t is None or any(x not in t for x in cells):
                    report(f"vertical face d_{j} incomplete at {(p, q)}")
        if v:
            return v

        for (p, q) in self.shape.sorted():
            for x in self.simplices[(p, q)]:
                # horizontal simplicial identities
                if p >= 2:
                    for j in range(p + 1):
                        for i in range(j):
                            if (self.hface(p - 1, q, i, self.hface(p, q, j, x))
                                    != self.hface(p - 1, q, j - 1, self.hface(p, q, i, x))):
                                report(f"h-face identity fails at {(p, q)} on {x!r}")
                if q >= 2:
                    for j in range(q + 1):
                        for i in range(j):
                            if (self.vface(p, q - 1, i, self.vface(p, q, j, x))
                                    != self.vface(p, q - 1, j - 1, self.vface(p, q, i, x))):
                                report(f"v-face identity fails at {(p, q)} on {x!r}")
                # horizontal/vertical commutation
                if p >= 1 and q >= 1:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            if (self.vface(p - 1, q, j, self.hface(p, q, i, x))
                                    != self.hface(p, q - 1, i, self.vface(p, q, j, x))):
                                report(f"dh_{i} dv_{j} do not commute at {(p, q)}")
                if (p + 1, q) in self.shape and q >= 1:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            if (self.vface(p + 1, q, j, self.hdegen(p, q, i, x))
                                    != self.hdegen(p, q - 1, i, self.vface(p, q, j, x))):
                                report(f"sh_{i} dv_{j} do not commute at {(p, q)}")
                if (p, q + 1) in self.shape and p >= 1:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            if (self.hface(p, q + 1, i, self.vdegen(p, q, j, x))
                                    != self.vdegen(p - 1, q, j, self.hface(p, q, i, x))):
                                report(f"dh_{i} sv_{j} do not commute at {(p, q)}")
                if (p + 1, q + 1) in self.shape:
                    for i in range(p + 1):
                        for j in range(q + 1):
                            if (self.vdegen(p + 1, q, j, self.hdegen(p, q, i, x))
                                    != self.hdegen(p, q + 1, i, self.vdegen(p, q, j, x))):
                                report(f"sh_{i} sv_{j} do not commute at {(p, q)}")
                # degeneracy-side identities along each direction
                if (p + 1, q) in self.shape:
                    for j in range(p + 1):
                        sx = self.hdegen(p, q, j, x)
                        for i in range(p + 2):
                            got = self.hface(p + 1, q, i, sx)
                            if i in (j, j + 1):
                                want = x
                            elif i < j:
                                want = self.hdegen(p - 1, q, j - 1, self.hface(p, q, i, x))
                            else:
                                want = self.hdegen(p - 1, q, j, self.hface(p, q, i - 1, x))
                            if got != want:
                                report(f"h d_{i} s_{j} identity fails at {(p, q)}")
                if (p, q + 1) in self.shape:
                    for j in range(q + 1):
                        sx = self.vdegen(p, q, j, x)
                        for i in range(q + 2):
                            got = self.vface(p, q + 1, i, sx)
                            if i in (j, j + 1):
                                want = x
                            elif i < j:
                                want = self.vdegen(p, q - 1, j - 1, self.vface(p, q, i, x))
                            else:
                                want = self.vdegen(p, q - 1, j, self.vface(p, q, i - 1, x))
                            if got != want:
                                report(f"v d_{i} s_{j} identity fails at {(p, q)}")
        if self.basepoint is not None and self.basepoint not in self._index[(0, 0)]:
            report("basepoint is not a (0,0)-simplex")
        return v

    def __repr__(self):
        return (f"TruncatedBisimplicialSet({len(self.shape.support)} bidegrees, "
                f"total {sum(len(s) for s in self.simplices.values())} simplices)")


class BisimplicialMap:
    def __init__(self, source, target, assign):
        self.source = source
        self.target = target
        self.assign = {pq: dict(assign[pq]) for pq in assign}

    def __call__(self, p, q, x):
        return self.assign[(p, q)][x]

    def validate(self, max_violations=20):
        v = []
        B, C = self.source, self.target
        for (p, q) in B.shape.sorted():
            if (p, q) not in C.shape:
                continue
            for x in B.simplices[(p, q)]:
                y = self.assign[(p, q)][x]
                for i in range(p + 1) if p >= 1 else ():
                    if self.assign[(p - 1, q)][B.hface(p, q, i, x)] != C.hface(p, q, i, y):
                        v.append(f"dh_{i} not preserved at {(p, q)}")
                for j in range(q + 1) if q >= 1 else ():
                    if self.assign[(p, q - 1)][B.vface(p, q, j, x)] != C.vface(p, q, j, y):
                        v.append(f"dv_{j} not preserved at {(p, q)}")
                if (p + 1, q) in B.shape:
                    for i in range(p + 1):
                        if self.assign[(p + 1, q)][B.hdegen(p, q, i, x)] != C.hdegen(p, q, i, y):
                            v.append(f"sh_{i} not preserved at {(p, q)}")
                if (p, q + 1) in B.shape:
                    for j in range(q + 1):
                        if self.assign[(p, q + 1)][B.vdegen(p, q, j, x)] != C.vdegen(p, q, j, y):
                            v.append(f"sv_{j} not preserved at {(p, q)}")
        return v[:max_violations]


# ---------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------

def box_product(X, Y):
    """External product: (X box Y)_{p,q} = X_p x Y_q on the full rectangle."""
    shape = BidegreeShape.rectangle(X.bound, Y.bound)
    simplices = {(p, q): tuple((x, y) for x in X.simplices[p] for y in Y.simplices[q])
                 for (p, q) in shape.support}
    hfaces, hdegens, vfaces, vdegens = {}, {}, {}, {}
    for (p, q) in shape.support:
        cells = simplices[(p, q)]
        for i in range(p + 1) if p >= 1 else ():
            hfaces[(p, q, i)] = {(x, y): (X.face(p, i, x), y) for x, y in cells}
        if p < X.bound:
            for j in range(p + 1):
                hdegens[(p, q, j)] = {(x, y): (X.degen(p, j, x), y) for x, y in cells}
        for j in range(q + 1) if q >= 1 else ():
            vfaces[(p, q, j)] = {(x, y): (x, Y.face(q, j, y)) for x, y in cells}
        if q < Y.bound:
            for j in range(q + 1):
                vdegens[(p, q, j)] = {(x, y): (x, Y.degen(q, j, y)) for x, y in cells}
    bp = (X.basepoint, Y.basepoint) if X.is_pointed() and Y.is_pointed() else None
    return TruncatedBisimplicialSet(shape, simplices, hfaces, hdegens, vfaces,
                                    vdegens, basepoint=bp)


def diag(B):
    """Diagonal simplicial set: degree n is the bidegree (n, n) data."""
    ns = [p for (p, q) in B.shape.support if p == q]
    if not ns:
        raise SimplicialError("shape has empty diagonal")
    bound = max(ns)
    simplices = {n: B.simplices[(n, n)] for n in range(bound + 1)}
    faces = {(n, i): {x: B.hface(n, n - 1, i, B.vface(n, n, i, x))
                      for x in simplices[n]}
             for n in range(1, bound + 1) for i in range(n + 1)}
    degens = {(n, j): {x: B.hdegen(n, n + 1, j, B.vdegen(n, n, j, x))
                       for x in simplices[n]}
              for n in range(bound) for j in range(n + 1)}
    return TruncatedSimplicialSet(bound, simplices, faces, degens,
                                  basepoint=B.basepoint)


def dec(Y):
    """Illusie decalage: Dec(Y)_{p,q} = Y_{p+q+1}, horizontal operators are
    the front ones, vertical operators the back ones."""
    if Y.bound < 1:
        raise SimplicialError("decalage needs bound >= 1")
    shape = BidegreeShape.staircase(Y.bound - 1)
    simplices = {(p, q): Y.simplices[p + q + 1] for (p, q) in shape.support}
    hfaces, hdegens, vfaces, vdegens = {}, {}, {}, {}
    for (p, q) in shape.support:
        n = p + q + 1
        cells = simplices[(p, q)]
        for i in range(p + 1) if p >= 1 else ():
            hfaces[(p, q, i)] = {x: Y.face(n, i, x) for x in cells}
        if (p + 1, q) in shape.support:
            for j in range(p + 1):
                hdegens[(p, q, j)] = {x: Y.degen(n, j, x) for x in cells}
        for j in range(q + 1) if q >= 1 else ():
            vfaces[(p, q, j)] = {x: Y.face(n, p + 1 + j, x) for x in cells}
        if (p, q + 1) in shape.support:
            for j in range(q + 1):
                vdegens[(p, q, j)] = {x: Y.degen(n, p + 1 + j, x) for x in cells}
    bp = None
    if Y.is_pointed():
        bp = Y.degen(0, 0, Y.basepoint)
    return TruncatedBisimplicialSet(shape, simplices, hfaces, hdegens, vfaces,
                                    vdegens, basepoint=bp)


def dec_map(f):
    """Functoriality of the decalage on simplicial maps."""
    B, C = dec(f.source), dec(f.target)
    assign = {(p, q): {x: f(p + q + 1, x) for x in B.simplices[(p, q)]}
              for (p, q) in B.shape.support}
    return BisimplicialMap(B, C, assign)


# ---------------------------------------------------------------------
# left adjoint of the diagonal
# ---------------------------------------------------------------------

def _codegen_compose(t, j):
    """Postcompose a vertex tuple with the codegeneracy [n] -> [n-1]
    collapsing j, j+1."""
    return tuple(v if v <= j else v - 1 for v in t)


def dstar_normalize(X, n, x, alpha, beta):
    """Canonical representative of the coend class of (x, alpha, beta):
    shrink to the joint image, strip degeneracies of x, repeat."""
    while True:
        img = sorted(set(alpha) | set(beta))
        if len(img) != n + 1:
            pos = {v: k for k, v in enumerate(img)}
            missing = [i for i in range(n + 1) if i not in pos]
            for i in reversed(missing):
                x = X.face(n, i, x)
                n -= 1
            alpha = tuple(pos[v] for v in alpha)
            beta = tuple(pos[v] for v in beta)
            continue
        base, word = X.ez(n, x)
        if word:
            j = word[0]
            x = X.face(n, j, x)
            n -= 1
            alpha = _codegen_compose(alpha, j)
            beta = _codegen_compose(beta, j)
            continue
        return (n, x, alpha, beta)


def d_star(X):
    """Left adjoint of diag, on the staircase where bound-D data
    determines it: cells at (p, q) are (n, x, alpha, beta) with x a
    nondegenerate n-simplex and alpha: [p] -> [n], beta: [q] -> [n]
    jointly surjective."""
    if X.bound < 0:
        raise SimplicialError("invalid bound")
    shape = BidegreeShape.staircase(X.bound - 1) if X.bound >= 1 \
        else BidegreeShape.rectangle(0, 0)
    simplices = {}
    for (p, q) in shape.support:
        cells = []
        for n in range(min(X.bound, p + q + 1) + 1):
            for x in X.nondegenerate(n):
                for alpha in _monotone_maps(p, n):
                    aset = set(alpha)
                    if len(aset) + q + 1 < n + 1:
                        continue
                    for beta in _monotone_maps(q, n):
                        if aset | set(beta) == set(range(n + 1)):
                            cells.append((n, x, alpha, beta))
        simplices[(p, q)] = tuple(sorted(cells, key=sort_key))

    hfaces, hdegens, vfaces, vdegens = {}, {}, {}, {}
    for (p, q) in shape.support:
        cells = simplices[(p, q)]
        for i in range(p + 1) if p >= 1 else ():
            hfaces[(p, q, i)] = {
                c: dstar_normalize(X, c[0], c[1], _tuple_face(c[2], i), c[3])
                for c in cells}
        if (p + 1, q) in shape.support:
            for j in range(p + 1):
                hdegens[(p, q, j)] = {
                    c: (c[0], c[1], _tuple_degen(c[2], j), c[3]) for c in cells}
        for j in range(q + 1) if q >= 1 else ():
            vfaces[(p, q, j)] = {
                c: dstar_normalize(X, c[0], c[1], c[2], _tuple_face(c[3], j))
                for c in cells}
        if (p, q + 1) in shape.support:
            for j in range(q + 1):
                vdegens[(p, q, j)] = {
                    c: (c[0], c[1], c[2], _tuple_degen(c[3], j)) for c in cells}
    bp = None
    if X.is_pointed():
        bp = (0, X.basepoint, (0,), (0,))
    return TruncatedBisimplicialSet(shape, simplices, hfaces, hdegens, vfaces,
                                    vdegens, basepoint=bp)


def d_star_map(f):
    """Functoriality of d_star on simplicial maps."""
    B, C = d_star(f.source), d_star(f.target)
    Y = f.target
    assign = {}
    for (p, q) in B.shape.support:
        level = {}
        for (n, x, alpha, beta) in B.simplices[(p, q)]:
            level[(n, x, alpha, beta)] = dstar_normalize(Y, n, f(n, x), alpha, beta)
        assign[(p, q)] = level
    return BisimplicialMap(B, C, assign)


# ---------------------------------------------------------------------
# codiagonal
# ---------------------------------------------------------------------

def wbar(B):
    """Right adjoint of the decalage.  Degree-n simplices are tuples
    (x_0, ..., x_n) with x_p at bidegree (p, n-p), matched by
    dv_0 x_p = dh_{p+1} x_{p+1}."""
    bound = -1
    while all((p, bound + 1 - p) in B.shape for p in range(bound + 2)):
        bound += 1
    if bound < 0:
        raise SimplicialError("shape does not contain the (0,0) antidiagonal")

    simplices = {}
    for n in range(bound + 1):
        tuples = [(x,) for x in B.simplices[(0, n)]]
        for p in range(1, n + 1):
            by_hface = {}
            for y in B.simplices[(p, n - p)]:
                by_hface.setdefault(B.hface(p, n - p, p, y), []).append(y)
            tuples = [t + (y,)
                      for t in tuples
                      for y in by_hface.get(B.vface(p - 1, n - p + 1, 0, t[-1]), [])]
        simplices[n] = tuple(sorted(tuples, key=sort_key))
    index = {n: frozenset(simplices[n]) for n in simplices}

    def face(n, i, t):
        out = []
        for p in range(n):
            if p < i:
                out.append(B.vface(p, n - p, i - p, t[p]))
            else:
                out.append(B.hface(p + 1, n - p - 1, i, t[p + 1]))
        cell = tuple(out)
        if cell not in index[n - 1]:
            raise SimplicialError(f"codiagonal face left the matching set at degree {n}")
        return cell

    def degen(n, j, t):
        out = []
        for p in range(n + 2):
            if p <= j:
                out.append(B.vdegen(p, n - p, j - p, t[p]))
            else:
                out.append(B.hdegen(p - 1, n - p + 1, j, t[p - 1]))
        cell = tuple(out)
        if cell not in index[n + 1]:
            raise SimplicialError(f"codiagonal degeneracy left the matching set at degree {n}")
        return cell

    faces = {(n, i): {t: face(n, i, t) for t in simplices[n]}
             for n in range(1, bound + 1) for i in range(n + 1)}
    degens = {(n, j): {t: degen(n, j, t) for t in simplices[n]}
              for n in range(bound) for j in range(n + 1)}
    bp = (B.basepoint,) if B.is_pointed() else None
    return TruncatedSimplicialSet(bound, simplices, faces, degens, basepoint=bp)
