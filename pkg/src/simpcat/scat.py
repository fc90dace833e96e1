"""Truncated simplicial categories and the pointed tensor calculus.

A simplicial category is a finite family of composition-table
categories with face and degeneracy functors.  On top of that this
module provides the levelwise fundamental groupoid of a bisimplicial
set, the levelwise nerve of the maximal subgroupoid with its diagonal
and codiagonal, levelwise colimits, tensors by a simplicial set through
a choice of rho, the smash product with the basepoint orbit collapsed,
suspension, and the pointed cotensor.
"""

from __future__ import annotations

from .bisset import BidegreeShape, TruncatedBisimplicialSet, d_star, dec, wbar
from .cat import (BoundExceeded, CategoryError, FinCategory, Functor,
                  _materialize, colimit_record, coproduct_cat,
                  enumerate_functors, enumerate_transformations,
                  fundamental_groupoid, iso_subgroupoid, product_cat,
                  terminal_cat)
from .names import sort_key
from .sset import (SimplicialMap, TruncatedSimplicialSet, _tuple_face, delta,
                   sphere, truncate)


def functors_equal(F, G):
    return F.obj_map == G.obj_map and F.mor_map == G.mor_map


class SimplicialCategory:
    def __init__(self, bound, levels, faces, degens, basepoints=None,
                 records=None):
        self.bound = bound
        self.levels = {n: levels[n] for n in range(bound + 1)}
        self.faces = dict(faces)        # (n, i): Functor C_n -> C_{n-1}
        self.degens = dict(degens)      # (n, j): Functor C_n -> C_{n+1}
        self.basepoints = dict(basepoints) if basepoints is not None else None
        self.records = records          # optional per-level Materializations

    def level(self, n):
        return self.levels[n]

    def face(self, n, i):
        return self.faces[(n, i)]

    def degen(self, n, j):
        return self.degens[(n, j)]

    def is_pointed(self):
        return self.basepoints is not None

    def audit(self, max_violations=20):
        v = []

        def report(msg):
            if len(v) < max_violations:
                v.append(msg)

        for n in range(self.bound + 1):
            for msg in self.levels[n].validate():
                report(f"level {n}: {msg}")
        for (n, i), F in list(self.faces.items()) + list(self.degens.items()):
            for msg in F.validate():
                report(f"structure functor at {(n, i)}: {msg}")
        if v:
            return v
        for n in range(2, self.bound + 1):
            for j in range(n + 1):
                for i in range(j):
                    lhs = self.face(n - 1, i).compose(self.face(n, j))
                    rhs = self.face(n - 1, j - 1).compose(self.face(n, i))
                    if not functors_equal(lhs, rhs):
                        report(f"d_{i} d_{j} fails at level {n}")
        for n in range(self.bound):
            for j in range(n + 1):
                s = self.degen(n, j)
                for i in range(n + 2):
                    got = self.face(n + 1, i).compose(s)
                    if i in (j, j + 1):
                        want = Functor.identity(self.levels[n])
                    elif i < j:
                        want = self.degen(n - 1, j - 1).compose(self.face(n, i))
                    else:
                        want = self.degen(n - 1, j).compose(self.face(n, i - 1))
                    if not functors_equal(got, want):
                        report(f"d_{i} s_{j} fails at level {n}")
            for j in range(n + 1):
                for i in range(j + 1):
                    if n + 1 < self.bound:
                        lhs = self.degen(n + 1, i).compose(self.degen(n, j))
                        rhs = self.degen(n + 1, j + 1).compose(self.degen(n, i))
                        if not functors_equal(lhs, rhs):
                            report(f"s_{i} s_{j} fails at level {n}")
        if self.basepoints is not None:
            for n in range(self.bound + 1):
                if self.basepoints[n] not in self.levels[n].objects:
                    report(f"missing basepoint object at level {n}")
            for (n, i), F in self.faces.items():
                if F.obj_map[self.basepoints[n]] != self.basepoints[n - 1]:
                    report(f"basepoint not stable under face {(n, i)}")
            for (n, j), F in self.degens.items():
                if F.obj_map[self.basepoints[n]] != self.basepoints[n + 1]:
                    report(f"basepoint not stable under degeneracy {(n, j)}")
        return v

    def __repr__(self):
        kind = "PointedSimplicialCategory" if self.is_pointed() \
            else "SimplicialCategory"
        return (f"{kind}(bound {self.bound}, level sizes "
                f"{tuple(len(self.levels[n].objects) for n in range(self.bound + 1))})")


class PointedSimplicialCategory(SimplicialCategory):
    def __init__(self, bound, levels, faces, degens, basepoints, records=None):
        if basepoints is None:
            raise CategoryError("pointed simplicial category needs basepoints")
        super().__init__(bound, levels, faces, degens, basepoints, records)


class SimplicialFunctor:
    def __init__(self, source, target, levels):
        self.source = source
        self.target = target
        self.levels = {n: levels[n] for n in levels}

    def level(self, n):
        return self.levels[n]

    def validate(self, pointed=False, max_violations=20):
        v = []
        S, T = self.source, self.target
        bound = min(S.bound, T.bound)
        for n in range(bound + 1):
            for msg in self.levels[n].validate():
                v.append(f"level {n}: {msg}")
        for n in range(1, bound + 1):
            for i in range(n + 1):
                lhs = self.levels[n - 1].compose(S.face(n, i))
                rhs = T.face(n, i).compose(self.levels[n])
                if not functors_equal(lhs, rhs):
                    v.append(f"face commutation fails at {(n, i)}")
        for n in range(bound):
            for j in range(n + 1):
                lhs = self.levels[n + 1].compose(S.degen(n, j))
                rhs = T.degen(n, j).compose(self.levels[n])
                if not functors_equal(lhs, rhs):
                    v.append(f"degeneracy commutation fails at {(n, j)}")
        if pointed:
            for n in range(bound + 1):
                if self.levels[n].obj_map[S.basepoints[n]] != T.basepoints[n]:
                    v.append(f"basepoint not preserved at level {n}")
        return v[:max_violations]


# ---------------------------------------------------------------------
# constant objects and basepoints
# ---------------------------------------------------------------------

def constant_scat(C, bound):
    levels = {n: C for n in range(bound + 1)}
    ident = Functor.identity(C)
    faces = {(n, i): ident for n in range(1, bound + 1) for i in range(n + 1)}
    degens = {(n, j): ident for n in range(bound) for j in range(n + 1)}
    return SimplicialCategory(bound, levels, faces, degens)


def terminal_scat(bound):
    return constant_scat(terminal_cat(), bound)


def add_basepoint(S):
    """Disjoint terminal object per level; levelwise C |-> C + *."""
    pt = terminal_cat()
    levels, injections = {}, {}
    for n in range(S.bound + 1):
        levels[n], injections[n] = coproduct_cat([S.levels[n], pt])
    faces, degens = {}, {}
    for (n, i), F in S.faces.items():
        obj_map = {(0, o): (0, F.obj_map[o]) for o in F.source.objects}
        obj_map[(1, "*")] = (1, "*")
        mor_map = {(0, m): (0, F.mor_map[m]) for m in F.source.morphisms}
        mor_map[(1, ("id", "*"))] = (1, ("id", "*"))
        faces[(n, i)] = Functor(levels[n], levels[n - 1], obj_map, mor_map)
    for (n, j), F in S.degens.items():
        obj_map = {(0, o): (0, F.obj_map[o]) for o in F.source.objects}
        obj_map[(1, "*")] = (1, "*")
        mor_map = {(0, m): (0, F.mor_map[m]) for m in F.source.morphisms}
        mor_map[(1, ("id", "*"))] = (1, ("id", "*"))
        degens[(n, j)] = Functor(levels[n], levels[n + 1], obj_map, mor_map)
    basepoints = {n: (1, "*") for n in range(S.bound + 1)}
    return PointedSimplicialCategory(S.bound, levels, faces, degens, basepoints)


def s0_scat(bound):
    """The pointed two-object constant simplicial category (*)_+."""
    return add_basepoint(terminal_scat(bound))


def constant_pointed_scat(C, basepoint, bound):
    S = constant_scat(C, bound)
    return PointedSimplicialCategory(bound, S.levels, S.faces, S.degens,
                                     {n: basepoint for n in range(bound + 1)})


# ---------------------------------------------------------------------
# levelwise fundamental groupoid
# ---------------------------------------------------------------------

def pi_levelwise(B, closure_bound=20000):
    """Fundamental groupoid of each horizontal row (2-truncated), with
    structure functors induced by the vertical operators."""
    top = -1
    while all((p, top + 1) in B.shape for p in range(3)):
        top += 1
    if top < 0:
        raise CategoryError("no row carries a 2-truncated horizontal structure")
    records, levels = {}, {}
    for n in range(top + 1):
        row = truncate(B.row(n), 2)
        try:
            records[n] = _materialize(fundamental_groupoid(row), closure_bound)
        except BoundExceeded as e:
            raise BoundExceeded(f"row {n}: {e}") from e
        levels[n] = records[n].category
    faces, degens = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            obj_map = {v: B.vface(0, n, i, v) for v in B.simplices[(0, n)]}
            gen_map = {e: records[n - 1].genmap[B.vface(1, n, i, e)]
                       for e in B.simplices[(1, n)]}
            faces[(n, i)] = records[n].induced_functor(levels[n - 1], obj_map,
                                                       gen_map)
    for n in range(top):
        for j in range(n + 1):
            obj_map = {v: B.vdegen(0, n, j, v) for v in B.simplices[(0, n)]}
            gen_map = {e: records[n + 1].genmap[B.vdegen(1, n, j, e)]
                       for e in B.simplices[(1, n)]}
            degens[(n, j)] = records[n].induced_functor(levels[n + 1], obj_map,
                                                        gen_map)
    basepoints = None
    if B.is_pointed():
        basepoints = {0: B.basepoint}
        bp = B.basepoint
        for n in range(top):
            bp = B.vdegen(0, n, 0, bp)
            basepoints[n + 1] = bp
    cls = PointedSimplicialCategory if basepoints is not None else SimplicialCategory
    return cls(top, levels, faces, degens, basepoints, records=records)


def pi_functor(f, source_pi=None, target_pi=None, closure_bound=20000):
    """Levelwise fundamental-groupoid functor of a bisimplicial map."""
    S = source_pi if source_pi is not None else pi_levelwise(f.source, closure_bound)
    T = target_pi if target_pi is not None else pi_levelwise(f.target, closure_bound)
    bound = min(S.bound, T.bound)
    levels = {}
    for n in range(bound + 1):
        obj_map = {v: f(0, n, v) for v in f.source.simplices[(0, n)]}
        gen_map = {e: T.records[n].genmap[f(1, n, e)]
                   for e in f.source.simplices[(1, n)]}
        levels[n] = S.records[n].induced_functor(T.levels[n], obj_map, gen_map)
    return SimplicialFunctor(S, T, levels)


# ---------------------------------------------------------------------
# nerves of the maximal subgroupoid
# ---------------------------------------------------------------------

def _chains(C, k):
    out = [()]
    for _ in range(k):
        out = [c + (m,) for c in out for m in C.morphisms
               if not c or C.tgt[c[-1]] == C.src[m]]
    return tuple(sorted(out, key=sort_key))


def _chain_face(C, k, i, c):
    if k == 1:
        return C.tgt[c[0]] if i == 0 else C.src[c[0]]
    if i == 0:
        return c[1:]
    if i == k:
        return c[:-1]
    return c[:i - 1] + (C.comp[(c[i], c[i - 1])],) + c[i + 1:]


def _chain_degen(C, k, j, c):
    if k == 0:
        return (C.ident[c],)
    at = C.src[c[j]] if j < k else C.tgt[c[-1]]
    return c[:j] + (C.ident[at],) + c[j:]


def _chain_apply(F, k, c):
    if k == 0:
        return F.obj_map[c]
    return tuple(F.mor_map[m] for m in c)


def nerve_iso_levelwise(S, depth=None):
    """Bidegree (p, n): p-chains of invertible morphisms of level n."""
    depth = S.bound if depth is None else depth
    shape = BidegreeShape.rectangle(depth, S.bound)
    groupoids = {n: iso_subgroupoid(S.levels[n]) for n in range(S.bound + 1)}
    simplices = {(p, n): (groupoids[n].objects if p == 0 else
                          _chains(groupoids[n], p))
                 for (p, n) in shape.support}
    hfaces, hdegens, vfaces, vdegens = {}, {}, {}, {}
    for (p, n) in shape.support:
        G = groupoids[n]
        cells = simplices[(p, n)]
        for i in range(p + 1) if p >= 1 else ():
            hfaces[(p, n, i)] = {c: _chain_face(G, p, i, c) for c in cells}
        if p < depth:
            for j in range(p + 1):
                hdegens[(p, n, j)] = {c: _chain_degen(G, p, j, c) for c in cells}
        for j in range(n + 1) if n >= 1 else ():
            F = S.face(n, j)
            vfaces[(p, n, j)] = {c: _chain_apply(F, p, c) for c in cells}
        if n < S.bound:
            for j in range(n + 1):
                F = S.degen(n, j)
                vdegens[(p, n, j)] = {c: _chain_apply(F, p, c) for c in cells}
    bp = S.basepoints[0] if S.is_pointed() else None
    return TruncatedBisimplicialSet(shape, simplices, hfaces, hdegens,
                                    vfaces, vdegens, basepoint=bp)


def diag_nerve_iso(S):
    """Diagonal of the levelwise nerve, built directly: degree n is the
    n-chains of invertible morphisms of level n."""
    groupoids = {n: iso_subgroupoid(S.levels[n]) for n in range(S.bound + 1)}
    simplices = {n: (groupoids[n].objects if n == 0 else _chains(groupoids[n], n))
                 for n in range(S.bound + 1)}
    faces, degens = {}, {}
    for n in range(1, S.bound + 1):
        for i in range(n + 1):
            F = S.face(n, i)
            faces[(n, i)] = {c: _chain_face(groupoids[n - 1], n, i,
                                            _chain_apply(F, n, c))
                             for c in simplices[n]}
    for n in range(S.bound):
        for j in range(n + 1):
            F = S.degen(n, j)
            degens[(n, j)] = {c: _chain_degen(groupoids[n + 1], n, j,
                                              _chain_apply(F, n, c))
                              for c in simplices[n]}
    bp = S.basepoints[0] if S.is_pointed() else None
    return TruncatedSimplicialSet(S.bound, simplices, faces, degens,
                                  basepoint=bp)


def diag_nerve_iso_map(SF):
    """Simplicial map induced on the diagonal nerves by a simplicial
    functor between levelwise groupoids."""
    X, Y = diag_nerve_iso(SF.source), diag_nerve_iso(SF.target)
    bound = min(X.bound, Y.bound)
    assign = {n: {c: _chain_apply(SF.levels[n], n, c) for c in X.simplices[n]}
              for n in range(bound + 1)}
    if bound < X.bound:
        X = truncate(X, bound)
        Y = truncate(Y, bound)
    return SimplicialMap(X, Y, assign)


def wbar_nerve_iso(S, depth=None):
    return wbar(nerve_iso_levelwise(S, depth))


# ---------------------------------------------------------------------
# levelwise colimits
# ---------------------------------------------------------------------

def _induced_colimit_functor(rec, target_cat, target_cocones, leg_functors):
    obj_map = {}
    for rep in rec.presentation.objects:
        k, orig = rep
        obj_map[rep] = target_cocones[k].obj_map[leg_functors[k].obj_map[orig]]
    gen_map = {}
    for (k, m) in rec.presentation.generators:
        gen_map[(k, m)] = target_cocones[k].mor_map[leg_functors[k].mor_map[m]]
    return rec.induced_functor(target_cat, obj_map, gen_map)


def colimit_scat(scats, edges, bound=10000):
    """Levelwise colimit; edges are (src_index, tgt_index,
    SimplicialFunctor).  Returns (simplicial category, cocones)."""
    top = min(S.bound for S in scats)
    if not edges:
        levels, injections = {}, {}
        for n in range(top + 1):
            levels[n], injections[n] = coproduct_cat(
                [S.levels[n] for S in scats])
        faces, degens = {}, {}
        for n in range(1, top + 1):
            for i in range(n + 1):
                obj_map, mor_map = {}, {}
                for k, S in enumerate(scats):
                    F = S.face(n, i)
                    for o in F.source.objects:
                        obj_map[(k, o)] = (k, F.obj_map[o])
                    for m in F.source.morphisms:
                        mor_map[(k, m)] = (k, F.mor_map[m])
                faces[(n, i)] = Functor(levels[n], levels[n - 1], obj_map, mor_map)
        for n in range(top):
            for j in range(n + 1):
                obj_map, mor_map = {}, {}
                for k, S in enumerate(scats):
                    F = S.degen(n, j)
                    for o in F.source.objects:
                        obj_map[(k, o)] = (k, F.obj_map[o])
                    for m in F.source.morphisms:
                        mor_map[(k, m)] = (k, F.mor_map[m])
                degens[(n, j)] = Functor(levels[n], levels[n + 1], obj_map, mor_map)
        colim = SimplicialCategory(top, levels, faces, degens)
        cocones = [SimplicialFunctor(S, colim,
                                     {n: injections[n][k] for n in range(top + 1)})
                   for k, S in enumerate(scats)]
        return colim, cocones

    records, levels, cocone_levels = {}, {}, {}
    for n in range(top + 1):
        cats_n = [S.levels[n] for S in scats]
        edges_n = [(i, j, SF.levels[n]) for (i, j, SF) in edges]
        records[n], cocone_levels[n] = colimit_record(cats_n, edges_n, bound)
        levels[n] = records[n].category
    faces, degens = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            faces[(n, i)] = _induced_colimit_functor(
                records[n], levels[n - 1], cocone_levels[n - 1],
                [S.face(n, i) for S in scats])
    for n in range(top):
        for j in range(n + 1):
            degens[(n, j)] = _induced_colimit_functor(
                records[n], levels[n + 1], cocone_levels[n + 1],
                [S.degen(n, j) for S in scats])
    colim = SimplicialCategory(top, levels, faces, degens, records=records)
    cocones = [SimplicialFunctor(S, colim,
                                 {n: cocone_levels[n][k] for n in range(top + 1)})
               for k, S in enumerate(scats)]
    return colim, cocones


# ---------------------------------------------------------------------
# rho and tensors
# ---------------------------------------------------------------------

RHO_CHOICES = ("pi_dstar", "pi_dec")


def rho(X, tag="pi_dec", closure_bound=20000):
    """Simplicial-set-to-simplicial-category left adjoint candidate."""
    if tag == "pi_dec":
        return pi_levelwise(dec(X), closure_bound)
    if tag == "pi_dstar":
        return pi_levelwise(d_star(X), closure_bound)
    raise CategoryError(f"unknown rho choice {tag!r}")


def _product_functor(src, tgt, F, G):
    obj_map = {(a, b): (F.obj_map[a], G.obj_map[b]) for (a, b) in src.objects}
    mor_map = {(m, w): (F.mor_map[m], G.mor_map[w]) for (m, w) in src.morphisms}
    return Functor(src, tgt, obj_map, mor_map)


def product_scat(S, T):
    top = min(S.bound, T.bound)
    levels = {n: product_cat(S.levels[n], T.levels[n]) for n in range(top + 1)}
    faces = {(n, i): _product_functor(levels[n], levels[n - 1],
                                      S.face(n, i), T.face(n, i))
             for n in range(1, top + 1) for i in range(n + 1)}
    degens = {(n, j): _product_functor(levels[n], levels[n + 1],
                                       S.degen(n, j), T.degen(n, j))
              for n in range(top) for j in range(n + 1)}
    return SimplicialCategory(top, levels, faces, degens)


def tensor_rho(S, X, tag="pi_dec", closure_bound=20000):
    """Levelwise product of S with rho(X)."""
    return product_scat(S, rho(X, tag, closure_bound))


# ---------------------------------------------------------------------
# smash and suspension
# ---------------------------------------------------------------------

def _point_functor(pt, C, obj):
    return Functor(pt, C, {"*": obj}, {("id", "*"): C.ident[obj]})


def _collapse_functor(C, pt):
    return Functor(C, pt, {o: "*" for o in C.objects},
                   {m: ("id", "*") for m in C.morphisms})


def smash(S, X, tag="pi_dec", closure_bound=20000, colim_bound=20000):
    """Smash of a pointed simplicial category with a pointed simplicial
    set: levelwise, collapse the wedge inside the product with rho(X)."""
    if not S.is_pointed():
        raise CategoryError("smash needs a pointed simplicial category")
    if not X.is_pointed():
        raise CategoryError("smash needs a pointed simplicial set")
    R = rho(X, tag, closure_bound)
    top = min(S.bound, R.bound)
    pt = terminal_cat()

    wedge_recs, wedge_cocones = {}, {}
    products, recs, cocones, levels = {}, {}, {}, {}
    for n in range(top + 1):
        C, K = S.levels[n], R.levels[n]
        bpC, bpK = S.basepoints[n], R.basepoints[n]
        if not C.is_groupoid():
            raise CategoryError("smash levels must be groupoids")
        wedge_recs[n], wedge_cocones[n] = colimit_record(
            [pt, C, K],
            [(0, 1, _point_functor(pt, C, bpC)),
             (0, 2, _point_functor(pt, K, bpK))], colim_bound)
        A = wedge_recs[n].category
        P = product_cat(C, K)
        products[n] = P
        obj_map = {}
        for rep in wedge_recs[n].presentation.objects:
            k, orig = rep
            obj_map[rep] = {0: (bpC, bpK), 1: (orig, bpK), 2: (bpC, orig)}[k]
        gen_map = {}
        for (k, m) in wedge_recs[n].presentation.generators:
            gen_map[(k, m)] = (m, K.ident[bpK]) if k == 1 else (C.ident[bpC], m)
        j = wedge_recs[n].induced_functor(P, obj_map, gen_map)
        recs[n], cocones[n] = colimit_record(
            [A, P, pt], [(0, 1, j), (0, 2, _collapse_functor(A, pt))],
            colim_bound)
        levels[n] = recs[n].category

    faces, degens = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            FC, FK = S.face(n, i), R.face(n, i)
            wedge_leg = _induced_colimit_functor(
                wedge_recs[n], wedge_recs[n - 1].category,
                wedge_cocones[n - 1], [Functor.identity(pt), FC, FK])
            prod_leg = _product_functor(products[n], products[n - 1], FC, FK)
            faces[(n, i)] = _induced_colimit_functor(
                recs[n], levels[n - 1], cocones[n - 1],
                [wedge_leg, prod_leg, Functor.identity(pt)])
    for n in range(top):
        for j in range(n + 1):
            FC, FK = S.degen(n, j), R.degen(n, j)
            wedge_leg = _induced_colimit_functor(
                wedge_recs[n], wedge_recs[n + 1].category,
                wedge_cocones[n + 1], [Functor.identity(pt), FC, FK])
            prod_leg = _product_functor(products[n], products[n + 1], FC, FK)
            degens[(n, j)] = _induced_colimit_functor(
                recs[n], levels[n + 1], cocones[n + 1],
                [wedge_leg, prod_leg, Functor.identity(pt)])

    basepoints = {n: cocones[n][2].obj_map["*"] for n in range(top + 1)}
    out = PointedSimplicialCategory(top, levels, faces, degens, basepoints,
                                    records=recs)
    out.smash_cocones = cocones
    out.smash_products = products
    out.smash_rho = R
    return out


def suspend(S, tag="pi_dec", closure_bound=20000, colim_bound=20000):
    """Smash with a circle model (an interval with its ends glued)."""
    return smash(S, sphere(1, S.bound + 3), tag, closure_bound, colim_bound)


# ---------------------------------------------------------------------
# pointed cotensor
# ---------------------------------------------------------------------

def object_sset(S):
    """Levelwise object sets as a simplicial set."""
    simplices = {n: S.levels[n].objects for n in range(S.bound + 1)}
    faces = {(n, i): dict(S.face(n, i).obj_map)
             for n in range(1, S.bound + 1) for i in range(n + 1)}
    degens = {(n, j): dict(S.degen(n, j).obj_map)
              for n in range(S.bound) for j in range(n + 1)}
    bp = S.basepoints[0] if S.is_pointed() else None
    return TruncatedSimplicialSet(S.bound, simplices, faces, degens,
                                  basepoint=bp)


def morphism_sset(S):
    simplices = {n: S.levels[n].morphisms for n in range(S.bound + 1)}
    faces = {(n, i): dict(S.face(n, i).mor_map)
             for n in range(1, S.bound + 1) for i in range(n + 1)}
    degens = {(n, j): dict(S.degen(n, j).mor_map)
              for n in range(S.bound) for j in range(n + 1)}
    return TruncatedSimplicialSet(S.bound, simplices, faces, degens)


def _pointed_level_functors(R, S, m, cap):
    """Functors R_m -> S_m carrying the basepoint object to the
    basepoint object."""
    out = enumerate_functors(R.levels[m], S.levels[m], cap)
    return [F for F in out
            if F.obj_map[R.basepoints[m]] == S.basepoints[m]]


def _delta_compose(alpha, i):
    """alpha followed by the coface skipping i."""
    return tuple(v if v < i else v + 1 for v in alpha)


def _sigma_compose(alpha, j):
    """alpha followed by the codegeneracy collapsing j, j+1."""
    return tuple(v if v <= j else v - 1 for v in alpha)


def _grid_functor_families(R, S, n, top, cands, cap):
    """Assignments alpha |-> (functor R_m -> S_m), for alpha running
    over the m-simplices of Delta^n for m <= top, commuting with the
    structure maps on both sides.  These are exactly the simplicial
    functors R x (discrete Delta^n grid) -> S."""
    A = delta(n, top)
    cells = [(m, a) for m in range(top + 1)
             for a in sorted(A.simplices[m], key=sort_key)]
    out = []

    def consistent(m, a, F, chosen):
        for i in range(m + 1) if m >= 1 else ():
            prev = chosen[(m - 1, _tuple_face(a, i))]
            if not functors_equal(prev.compose(R.face(m, i)),
                                  S.face(m, i).compose(F)):
                return False
        for j in range(m):
            if a[j] == a[j + 1]:
                prev = chosen[(m - 1, a[:j] + a[j + 1:])]
                if not functors_equal(F.compose(R.degen(m - 1, j)),
                                      S.degen(m - 1, j).compose(prev)):
                    return False
        return True

    def extend(k, chosen):
        if len(out) > cap:
            raise CategoryError("cotensor enumeration cap exceeded")
        if k == len(cells):
            out.append(dict(chosen))
            return
        m, a = cells[k]
        for F in cands[m]:
            if consistent(m, a, F, chosen):
                chosen[(m, a)] = F
                extend(k + 1, chosen)
                del chosen[(m, a)]

    extend(0, {})
    return cells, out


def _grid_transformations(R, S, top, cells, Fd, Gd, cap):
    """Families of natural transformations Fd[(m, a)] -> Gd[(m, a)],
    with identity components over the basepoint object, commuting with
    the structure maps in both directions."""
    pools = {}
    for (m, a) in cells:
        opts = []
        for nt in enumerate_transformations(Fd[(m, a)], Gd[(m, a)]):
            bp = R.basepoints[m]
            if nt.components[bp] == S.levels[m].ident[S.basepoints[m]]:
                opts.append(nt.components)
        pools[(m, a)] = opts
    out = []

    def consistent(m, a, comps, chosen):
        for i in range(m + 1) if m >= 1 else ():
            prev = chosen[(m - 1, _tuple_face(a, i))]
            F = R.face(m, i)
            D = S.face(m, i)
            for o in R.levels[m].objects:
                if D.mor_map[comps[o]] != prev[F.obj_map[o]]:
                    return False
        for j in range(m):
            if a[j] == a[j + 1]:
                prev = chosen[(m - 1, a[:j] + a[j + 1:])]
                F = R.degen(m - 1, j)
                D = S.degen(m - 1, j)
                for o in R.levels[m - 1].objects:
                    if comps[F.obj_map[o]] != D.mor_map[prev[o]]:
                        return False
        return True

    def extend(k, chosen):
        if len(out) > cap:
            raise CategoryError("cotensor enumeration cap exceeded")
        if k == len(cells):
            out.append(dict(chosen))
            return
        m, a = cells[k]
        for comps in pools[(m, a)]:
            if consistent(m, a, comps, chosen):
                chosen[(m, a)] = comps
                extend(k + 1, chosen)
                del chosen[(m, a)]

    extend(0, {})
    return out


def cotensor(S, X, tag="pi_dec", closure_bound=20000, cap=100000):
    """Pointed cotensor: level n holds the simplicial functors from
    rho(X) x (discrete Delta^n grid) into S whose restriction to the
    basepoint object is constant at the basepoint (objects), and the
    matching transformation families with identity basepoint components
    (morphisms).  Structure maps act by reindexing the grid."""
    if not S.is_pointed():
        raise CategoryError("cotensor needs a pointed simplicial category")
    if not X.is_pointed():
        raise CategoryError("cotensor needs a pointed simplicial set")
    R = rho(X, tag, closure_bound)
    top = min(S.bound, R.bound)
    cands = {m: _pointed_level_functors(R, S, m, cap) for m in range(top + 1)}

    levels, level_data = {}, {}
    for n in range(top + 1):
        cells, fams = _grid_functor_families(R, S, n, top, cands, cap)

        def obj_name(d):
            return tuple(d[c].signature() for c in cells)

        objects, obj_data = [], {}
        for d in fams:
            nm = obj_name(d)
            objects.append(nm)
            obj_data[nm] = d
        objects.sort(key=sort_key)

        morphisms, src, tgt, mor_data = [], {}, {}, {}
        for fo in objects:
            for go in objects:
                for comps in _grid_transformations(R, S, top, cells,
                                                   obj_data[fo], obj_data[go],
                                                   cap):
                    nm = (fo, go,
                          tuple(tuple(comps[c][o]
                                      for o in R.levels[c[0]].objects)
                                for c in cells))
                    morphisms.append(nm)
                    src[nm], tgt[nm] = fo, go
                    mor_data[nm] = comps
                    if len(morphisms) > cap:
                        raise CategoryError("cotensor enumeration cap exceeded")
        ident, comp = {}, {}
        for o in objects:
            comps = {c: {v: S.levels[c[0]].ident[obj_data[o][c].obj_map[v]]
                         for v in R.levels[c[0]].objects} for c in cells}
            ident[o] = (o, o, tuple(tuple(comps[c][v]
                                          for v in R.levels[c[0]].objects)
                                    for c in cells))
        for g in morphisms:
            for f in morphisms:
                if tgt[f] != src[g]:
                    continue
                comps = {c: {v: S.levels[c[0]].comp[(mor_data[g][c][v],
                                                     mor_data[f][c][v])]
                             for v in R.levels[c[0]].objects} for c in cells}
                comp[(g, f)] = (src[f], tgt[g],
                                tuple(tuple(comps[c][v]
                                            for v in R.levels[c[0]].objects)
                                      for c in cells))
        levels[n] = FinCategory(objects, morphisms, src, tgt, ident, comp)
        level_data[n] = (cells, obj_data, mor_data)

    def reindex(n, m, alpha_fn):
        cells_n, obj_n, mor_n = level_data[n]
        cells_m, _, _ = level_data[m]
        obj_map, mor_map = {}, {}
        for o, d in obj_n.items():
            obj_map[o] = tuple(d[(deg, alpha_fn(a))].signature()
                               for (deg, a) in cells_m)
        for w, comps in mor_n.items():
            mor_map[w] = (obj_map[levels[n].src[w]],
                          obj_map[levels[n].tgt[w]],
                          tuple(tuple(comps[(deg, alpha_fn(a))][v]
                                      for v in R.levels[deg].objects)
                                for (deg, a) in cells_m))
        return Functor(levels[n], levels[m], obj_map, mor_map)

    faces, degens = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            faces[(n, i)] = reindex(n, n - 1,
                                    lambda a, i=i: _delta_compose(a, i))
    for n in range(top):
        for j in range(n + 1):
            degens[(n, j)] = reindex(n, n + 1,
                                     lambda a, j=j: _sigma_compose(a, j))
    basepoints = {}
    for n in range(top + 1):
        cells, obj_data, _ = level_data[n]
        const = None
        for o, d in obj_data.items():
            if all(set(d[c].obj_map.values()) == {S.basepoints[c[0]]}
                   for c in cells):
                const = o
                break
        if const is None:
            raise CategoryError("constant basepoint functor missing")
        basepoints[n] = const
    out = PointedSimplicialCategory(top, levels, faces, degens, basepoints)
    out.cotensor_rho = R
    return out


def loop_space(S, tag="pi_dec", closure_bound=20000, cap=100000):
    """Pointed cotensor by a circle model."""
    return cotensor(S, sphere(1, S.bound + 3), tag, closure_bound, cap)


# ---------------------------------------------------------------------
# simplicial functor enumeration
# ---------------------------------------------------------------------

def enumerate_simplicial_functors(S, T, cap=10 ** 6, pointed=False):
    """All simplicial functors S -> T up to the shared bound, found by
    extending level by level with commutation filtering."""
    bound = min(S.bound, T.bound)
    per_level = {n: enumerate_functors(S.levels[n], T.levels[n], cap)
                 for n in range(bound + 1)}
    if pointed:
        per_level = {n: [F for F in per_level[n]
                         if F.obj_map[S.basepoints[n]] == T.basepoints[n]]
                     for n in per_level}
    def signature(F):
        return (frozenset(F.obj_map.items()), frozenset(F.mor_map.items()))

    partials = [[F] for F in per_level[0]]
    for n in range(1, bound + 1):
        # bucket the level-n candidates by what they look like after the
        # face and degeneracy operators, so each partial needs one lookup
        buckets = {}
        for F in per_level[n]:
            key = (tuple(signature(T.face(n, i).compose(F))
                         for i in range(n + 1)),
                   tuple(signature(F.compose(S.degen(n - 1, j)))
                         for j in range(n)))
            buckets.setdefault(key, []).append(F)
        nxt = []
        for chosen in partials:
            prev = chosen[n - 1]
            key = (tuple(signature(prev.compose(S.face(n, i)))
                         for i in range(n + 1)),
                   tuple(signature(T.degen(n - 1, j).compose(prev))
                         for j in range(n)))
            for F in buckets.get(key, ()):
                nxt.append(chosen + [F])
                if len(nxt) > cap:
                    raise CategoryError("simplicial functor cap exceeded")
        partials = nxt
    return [SimplicialFunctor(S, T, dict(enumerate(levels)))
            for levels in partials]
