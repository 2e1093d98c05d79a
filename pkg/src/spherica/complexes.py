"""Bounded cochain complexes of bimodules and their calculus.

Sign conventions, fixed once and used by every construction:

* cohomological grading; shift (X[n])^i = X^{i+n} with differential
  multiplied by (-1)^n;
* cone(f: X -> Y)^n = X^{n+1} (+) Y^n with differential
  [[-d_X, 0], [f, d_Y]]; the canonical triangle is
  X -f-> Y -include-> cone(f) -project-> X[1];
* tensor differential d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy;
* hom complex Hom^n = prod_i Hom(X^i, Y^{i+n}) with
  d(f) = d_Y f - (-1)^n f d_X.

With these choices (X[n]) (x) Y equals (X (x) Y)[n] on the nose, while
X (x) (Y[n]) needs the sign (-1)^{n |x|}; both interchanges are provided
as explicit chain maps.  Triangle maps are only ever produced by the
cone constructor, never assembled by hand.

Quasi-isomorphism (acyclic cone) is the engine's equality notion: all
kernel terms are projective on both sides, so quasi-isomorphic kernels
induce isomorphic functors on the derived categories.
"""

from __future__ import annotations

import random

from .algebras import Algebra, trivial_algebra
from .bimodules import (
    Bimodule,
    BimoduleError,
    BimoduleMap,
    TensorData,
    direct_sum,
    hom_space,
    is_projective,
    tensor_over_middle,
    zero_bimodule,
)
from .linalg import Field, Matrix


class ComplexError(Exception):
    """Raised for malformed complexes or chain maps."""


_trivial_cache: dict[Field, Algebra] = {}


def scalar_algebra(field: Field) -> Algebra:
    """The ground field as an algebra, shared per field."""
    if field not in _trivial_cache:
        _trivial_cache[field] = trivial_algebra(field)
    return _trivial_cache[field]


class Complex:
    """A bounded cochain complex of (A,B)-bimodules."""

    def __init__(self, left_algebra: Algebra, right_algebra: Algebra,
                 terms: dict[int, Bimodule], diffs: dict[int, BimoduleMap],
                 validate: bool = True):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.field = left_algebra.field
        self.terms = {n: t for n, t in terms.items() if t.dim > 0}
        self.diffs = {n: d for n, d in diffs.items()
                      if n in self.terms and (n + 1) in self.terms and not d.is_zero()}
        if validate:
            self._validate()

    def _validate(self):
        for n, t in self.terms.items():
            if t.left_algebra is not self.left_algebra or \
               t.right_algebra is not self.right_algebra:
                if t.left_algebra.mult != self.left_algebra.mult or \
                   t.right_algebra.mult != self.right_algebra.mult:
                    raise ComplexError(f"term {n} lives over different algebras")
        for n, d in self.diffs.items():
            if d.source.dim != self.terms[n].dim or d.target.dim != self.terms[n + 1].dim:
                raise ComplexError(f"differential {n} has wrong endpoints")
        for n in self.diffs:
            if (n + 1) in self.diffs:
                comp = self.diffs[n + 1].matrix * self.diffs[n].matrix
                if not comp.is_zero():
                    raise ComplexError(f"d^2 != 0 at degree {n}")

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def term(self, n: int) -> Bimodule:
        return self.terms.get(n) or zero_bimodule(self.left_algebra, self.right_algebra)

    def dim(self, n: int) -> int:
        t = self.terms.get(n)
        return t.dim if t else 0

    def diff_matrix(self, n: int) -> Matrix:
        d = self.diffs.get(n)
        if d is not None:
            return d.matrix
        return Matrix.zeros(self.field, self.dim(n + 1), self.dim(n))

    def is_zero(self) -> bool:
        return not self.terms

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * t.dim for n, t in self.terms.items())

    def total_dim(self) -> int:
        return sum(t.dim for t in self.terms.values())

    def __repr__(self):
        parts = ", ".join(f"{n}:{self.terms[n].dim}" for n in self.degrees())
        return f"Complex({parts or 'zero'})"


def single_term(m: Bimodule, degree: int = 0) -> Complex:
    return Complex(m.left_algebra, m.right_algebra, {degree: m}, {})


def unit_complex(a: Algebra) -> Complex:
    from .bimodules import regular_bimodule
    return Complex(a, a, {0: regular_bimodule(a)}, {})


class ChainMap:
    """A degree-zero map of complexes commuting with the differentials."""

    def __init__(self, source: Complex, target: Complex,
                 components: dict[int, Matrix], validate: bool = True):
        self.source = source
        self.target = target
        self.field = source.field
        self.components = {}
        for n, mat in components.items():
            if mat.rows != target.dim(n) or mat.cols != source.dim(n):
                raise ComplexError(f"component {n} has shape {mat.rows}x{mat.cols}, "
                                   f"expected {target.dim(n)}x{source.dim(n)}")
            if mat.rows and mat.cols and not mat.is_zero():
                self.components[n] = mat
        if validate:
            self._validate()

    def _validate(self):
        degrees = set(self.source.terms) | set(self.target.terms)
        for n in degrees:
            left = self.target.diff_matrix(n) * self.comp(n)
            right = self.comp(n + 1) * self.source.diff_matrix(n)
            if left != right:
                raise ComplexError(f"chain map does not commute with d at degree {n}")
        # equivariance of each component
        for n, mat in self.components.items():
            BimoduleMap(self.source.term(n), self.target.term(n), mat, validate=True)

    def comp(self, n: int) -> Matrix:
        mat = self.components.get(n)
        if mat is not None:
            return mat
        return Matrix.zeros(self.field, self.target.dim(n), self.source.dim(n))

    def then(self, other: "ChainMap") -> "ChainMap":
        comps = {}
        for n in set(self.components) | set(other.components):
            comps[n] = other.comp(n) * self.comp(n)
        return ChainMap(self.source, other.target, comps, validate=False)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        comps = {}
        for n in set(self.components) | set(other.components):
            comps[n] = self.comp(n) + other.comp(n)
        return ChainMap(self.source, self.target, comps, validate=False)

    def scale(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target,
                        {n: m.scale(c) for n, m in self.components.items()},
                        validate=False)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components.values())

    def is_identity(self) -> bool:
        if set(self.source.terms) != set(self.target.terms):
            return False
        for n in self.source.terms:
            if self.source.dim(n) != self.target.dim(n) or not self.comp(n).is_identity():
                return False
        return True

    def is_degreewise_invertible(self) -> bool:
        for n in set(self.source.terms) | set(self.target.terms):
            if self.source.dim(n) != self.target.dim(n):
                return False
            if self.source.dim(n) and not self.comp(n).is_invertible():
                return False
        return True

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"


def identity_map(x: Complex) -> ChainMap:
    return ChainMap(x, x, {n: Matrix.identity(x.field, t.dim)
                           for n, t in x.terms.items()}, validate=False)


def shift(x: Complex, n: int) -> Complex:
    """(X[n])^i = X^{i+n}, differential multiplied by (-1)^n."""
    terms = {i - n: t for i, t in x.terms.items()}
    sign = x.field.elem((-1) ** n)
    diffs = {}
    for i, d in x.diffs.items():
        diffs[i - n] = BimoduleMap(d.source, d.target, d.matrix.scale(sign),
                                   sides="both", validate=False)
    return Complex(x.left_algebra, x.right_algebra, terms, diffs, validate=False)


def shift_map(f: ChainMap, n: int) -> ChainMap:
    return ChainMap(shift(f.source, n), shift(f.target, n),
                    {i - n: m for i, m in f.components.items()}, validate=False)


class ConeData:
    """A cone with its two canonical triangle maps.

    For f: X -> Y the triangle is X -> Y -include_target-> cone
    -project_source-> X[1]; include then project is zero.
    """

    def __init__(self, cone: Complex, include_target: ChainMap, project_source: ChainMap):
        self.cone = cone
        self.include_target = include_target
        self.project_source = project_source


def cone(f: ChainMap) -> ConeData:
    x, y = f.source, f.target
    field = x.field
    degrees = set()
    for n in x.terms:
        degrees.add(n - 1)
    degrees.update(y.terms)
    terms = {}
    parts = {}
    for n in sorted(degrees):
        xs = x.term(n + 1)
        ys = y.term(n)
        total, injs, projs = direct_sum([xs, ys], left=x.left_algebra,
                                        right=x.right_algebra)
        if total.dim:
            terms[n] = total
            parts[n] = (injs, projs, xs, ys)
    diffs = {}
    for n in terms:
        if (n + 1) not in terms:
            continue
        injs1, _, xs1, ys1 = parts[n + 1]
        _, projs0, xs0, ys0 = parts[n]
        # d(x, y) = (-dx, fx + dy)
        mat = Matrix.zeros(field, terms[n + 1].dim, terms[n].dim)
        mat = mat + injs1[0] * (x.diff_matrix(n + 1).scale(-1)) * projs0[0]
        mat = mat + injs1[1] * f.comp(n + 1) * projs0[0]
        mat = mat + injs1[1] * y.diff_matrix(n) * projs0[1]
        diffs[n] = BimoduleMap(terms[n], terms[n + 1], mat, validate=False)
    cx = Complex(x.left_algebra, x.right_algebra, terms, diffs)
    include = ChainMap(y, cx, {n: parts[n][0][1] for n in terms}, validate=True)
    sx = shift(x, 1)
    project = ChainMap(cx, sx, {n: parts[n][1][0] for n in terms}, validate=True)
    return ConeData(cx, include, project)


def direct_sum_complexes(xs: list[Complex]) -> tuple[Complex, list[ChainMap], list[ChainMap]]:
    if not xs:
        raise ComplexError("empty direct sum of complexes")
    la, ra = xs[0].left_algebra, xs[0].right_algebra
    field = xs[0].field
    degrees = set()
    for x in xs:
        degrees.update(x.terms)
    terms = {}
    injections: dict[int, list[Matrix]] = {}
    projections: dict[int, list[Matrix]] = {}
    for n in sorted(degrees):
        total, injs, projs = direct_sum([x.term(n) for x in xs], left=la, right=ra)
        terms[n] = total
        injections[n] = injs
        projections[n] = projs
    diffs = {}
    for n in terms:
        if (n + 1) not in terms:
            continue
        mat = Matrix.zeros(field, terms[n + 1].dim, terms[n].dim)
        for idx, x in enumerate(xs):
            mat = mat + injections[n + 1][idx] * x.diff_matrix(n) * projections[n][idx]
        diffs[n] = BimoduleMap(terms[n], terms[n + 1], mat, validate=False)
    total_cx = Complex(la, ra, terms, diffs, validate=False)
    inj_maps = []
    proj_maps = []
    for idx, x in enumerate(xs):
        inj_maps.append(ChainMap(x, total_cx,
                                 {n: injections[n][idx] for n in terms if x.dim(n)},
                                 validate=False))
        proj_maps.append(ChainMap(total_cx, x,
                                  {n: projections[n][idx] for n in terms if x.dim(n)},
                                  validate=False))
    return total_cx, inj_maps, proj_maps


# ---------------------------------------------------------------------------
# tensor product of complexes
# ---------------------------------------------------------------------------


class TensorComplex:
    """Total complex of the tensor bicomplex, with per-degree slot layout."""

    def __init__(self, x: Complex, y: Complex):
        if x.right_algebra.mult != y.left_algebra.mult:
            raise BimoduleError("tensor_cx: middle algebras differ")
        self.x = x
        self.y = y
        field = x.field
        la, ra = x.left_algebra, y.right_algebra
        layout: dict[int, list[tuple[int, int, TensorData, int]]] = {}
        terms: dict[int, Bimodule] = {}
        for i in x.degrees():
            for j in y.degrees():
                n = i + j
                layout.setdefault(n, [])
        for n in sorted(layout):
            slots = []
            offset = 0
            for i in sorted(x.degrees()):
                j = n - i
                if y.dim(j) == 0 or x.dim(i) == 0:
                    continue
                td = tensor_over_middle(x.term(i), y.term(j))
                slots.append((i, j, td, offset))
                offset += td.bimodule.dim
            layout[n] = slots
        self.layout = {n: s for n, s in layout.items() if s}
        for n, slots in self.layout.items():
            total, _, _ = direct_sum([td.bimodule for (_, _, td, _) in slots],
                                     left=la, right=ra)
            terms[n] = total
        diffs = {}
        for n, slots in self.layout.items():
            if (n + 1) not in self.layout:
                continue
            tgt_slots = {(i, j): (td, off) for (i, j, td, off) in self.layout[n + 1]}
            mat = Matrix.zeros(field, terms[n + 1].dim, terms[n].dim)
            arr = mat.arr.copy()
            for (i, j, td, off) in slots:
                # d_x (x) id : slot (i,j) -> (i+1, j)
                if (i + 1, j) in tgt_slots and x.diffs.get(i) is not None:
                    td2, off2 = tgt_slots[(i + 1, j)]
                    idy = BimoduleMap(y.term(j), y.term(j),
                                      Matrix.identity(field, y.dim(j)), validate=False)
                    block = td.induced(x.diffs[i], idy, td2).matrix
                    arr[off2:off2 + block.rows, off:off + block.cols] += block.arr
                # (-1)^i id (x) d_y : slot (i,j) -> (i, j+1)
                if (i, j + 1) in tgt_slots and y.diffs.get(j) is not None:
                    td2, off2 = tgt_slots[(i, j + 1)]
                    idx_map = BimoduleMap(x.term(i), x.term(i),
                                          Matrix.identity(field, x.dim(i)), validate=False)
                    block = td.induced(idx_map, y.diffs[j], td2).matrix.scale((-1) ** i)
                    arr[off2:off2 + block.rows, off:off + block.cols] += block.arr
            diffs[n] = BimoduleMap(terms[n], terms[n + 1], Matrix(field, arr),
                                   validate=False)
        self.complex = Complex(la, ra, terms, diffs)

    def slot(self, n: int, i: int, j: int) -> tuple[TensorData, int]:
        for (si, sj, td, off) in self.layout.get(n, []):
            if si == i and sj == j:
                return td, off
        raise ComplexError(f"no slot ({i},{j}) in degree {n}")

    def induced(self, f: ChainMap, g: ChainMap, target: "TensorComplex") -> ChainMap:
        """f (x) g for degree-zero chain maps (no Koszul signs needed)."""
        comps = {}
        for n, slots in self.layout.items():
            if n not in target.layout and not slots:
                continue
            tgt_dim = target.complex.dim(n)
            src_dim = self.complex.dim(n)
            if tgt_dim == 0 or src_dim == 0:
                continue
            arr = self.complex.field._zeros(tgt_dim, src_dim)
            tgt_slots = {(i, j): (td, off) for (i, j, td, off) in target.layout.get(n, [])}
            for (i, j, td, off) in slots:
                if (i, j) not in tgt_slots:
                    continue
                td2, off2 = tgt_slots[(i, j)]
                fm = BimoduleMap(self.x.term(i), target.x.term(i), f.comp(i), validate=False)
                gm = BimoduleMap(self.y.term(j), target.y.term(j), g.comp(j), validate=False)
                block = td.induced(fm, gm, td2).matrix
                arr[off2:off2 + block.rows, off:off + block.cols] += block.arr
            comps[n] = Matrix(self.complex.field, arr)
        return ChainMap(self.complex, target.complex, comps, validate=False)


def tensor_cx(x: Complex, y: Complex) -> TensorComplex:
    return TensorComplex(x, y)


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------


def homology_dims(x: Complex) -> dict[int, int]:
    """Degree -> dimension of cohomology, by exact rank computations."""
    out = {}
    for n in x.degrees():
        d_n = x.diff_matrix(n)
        d_prev = x.diff_matrix(n - 1)
        dim_ker = x.dim(n) - d_n.rank()
        h = dim_ker - d_prev.rank()
        if h:
            out[n] = h
    return out


def is_acyclic(x: Complex) -> bool:
    return not homology_dims(x)


def homology(x: Complex) -> dict[int, tuple[int, Bimodule]]:
    """Cohomology with its induced bimodule structure in every degree."""
    out = {}
    field = x.field
    for n in x.degrees():
        d_n = x.diff_matrix(n)
        d_prev = x.diff_matrix(n - 1)
        ker = d_n.nullspace()
        img = d_prev.image_basis()
        stacked = img.hstack(ker) if ker.cols else img
        _, pivots = stacked.rref()
        reps_cols = [p - img.cols for p in pivots if p >= img.cols]
        if not reps_cols:
            continue
        reps = Matrix.stack_columns(field, [ker.column_vec(c) for c in reps_cols], x.dim(n))
        basis = img.hstack(reps)
        term = x.term(n)
        hdim = reps.cols

        def induced(action_mats):
            mats = []
            for act in action_mats:
                coords = basis.solve(act * reps)
                if coords is None:
                    raise ComplexError("homology action does not preserve cycles")
                mats.append(coords.submatrix(slice(img.cols, img.cols + hdim),
                                             slice(0, hdim)))
            return mats

        h = Bimodule(x.left_algebra, x.right_algebra,
                     induced(term.left_action), induced(term.right_action),
                     hdim, label=f"H{n}", validate=False)
        out[n] = (hdim, h)
    return out


def is_quasi_iso(f: ChainMap) -> bool:
    return is_acyclic(cone(f).cone)


# ---------------------------------------------------------------------------
# hom complexes
# ---------------------------------------------------------------------------


def hom_cx(x: Complex, y: Complex, sides: str) -> Complex:
    """The hom complex over the stated side structure, as vector spaces.

    For a one-sided structure every term of x must be projective on
    that side, so the termwise hom computes maps in the derived
    category: H^n = Hom_D(x, y[n]).  For sides="both" the terms must be
    biprojective and H^n is the cohomology of the two-sided hom complex
    (H^0 = chain maps modulo homotopy).
    """
    if sides not in ("left", "right", "both"):
        raise ComplexError("hom side must be 'left', 'right' or 'both'")
    check_sides = ("left", "right") if sides == "both" else (sides,)
    for n, t in x.terms.items():
        for s in check_sides:
            if not is_projective(t, s):
                raise ComplexError(f"hom_cx source term at degree {n} is not "
                                   f"{s}-projective")
    field = x.field
    triv = scalar_algebra(field)
    bases: dict[int, dict[int, list[BimoduleMap]]] = {}
    degrees = set()
    for i in x.degrees():
        for m in y.degrees():
            degrees.add(m - i)
    for n in sorted(degrees):
        slot_homs = {}
        for i in x.degrees():
            if y.dim(i + n) == 0:
                continue
            homs = hom_space(x.term(i), y.term(i + n), sides)
            if homs:
                slot_homs[i] = homs
        if slot_homs:
            bases[n] = slot_homs

    def flatten(mat: Matrix) -> Matrix:
        return Matrix(field, mat.arr.reshape(mat.rows * mat.cols, 1)) if \
            mat.rows and mat.cols else Matrix.zeros(field, 0, 1)

    terms = {}
    offsets: dict[int, dict[int, int]] = {}
    for n, slot_homs in bases.items():
        total = sum(len(h) for h in slot_homs.values())
        offs = {}
        off = 0
        for i in sorted(slot_homs):
            offs[i] = off
            off += len(slot_homs[i])
        offsets[n] = offs
        ident = Matrix.identity(field, total)
        terms[n] = Bimodule(triv, triv, [ident], [ident], total,
                            label=f"Hom^{n}", validate=False)

    diffs = {}
    for n in bases:
        if (n + 1) not in bases:
            continue
        arr = field._zeros(terms[n + 1].dim, terms[n].dim)
        sgn = field.elem((-1) ** n)
        for i, homs in bases[n].items():
            for a, F in enumerate(homs):
                col = offsets[n][i] + a
                # d_y . F lands in slot i of degree n+1
                if i in bases.get(n + 1, {}) and y.diffs.get(i + n) is not None:
                    img = y.diff_matrix(i + n) * F.matrix
                    tgt = bases[n + 1][i]
                    V = Matrix.stack_columns(field, [flatten(t.matrix) for t in tgt],
                                             img.rows * img.cols)
                    coords = V.solve(flatten(img))
                    if coords is None:
                        raise ComplexError("hom differential image not in hom basis span")
                    for b in range(len(tgt)):
                        arr[offsets[n + 1][i] + b, col] += coords.arr[b, 0]
                # -(-1)^n F . d_x lands in slot i-1 of degree n+1
                if (i - 1) in bases.get(n + 1, {}) and x.diffs.get(i - 1) is not None:
                    img = (F.matrix * x.diff_matrix(i - 1)).scale(-1).scale(sgn)
                    tgt = bases[n + 1][i - 1]
                    V = Matrix.stack_columns(field, [flatten(t.matrix) for t in tgt],
                                             img.rows * img.cols)
                    coords = V.solve(flatten(img))
                    if coords is None:
                        raise ComplexError("hom differential image not in hom basis span")
                    for b in range(len(tgt)):
                        arr[offsets[n + 1][i - 1] + b, col] += coords.arr[b, 0]
        diffs[n] = BimoduleMap(terms[n], terms[n + 1], Matrix(field, arr), validate=False)
    return Complex(triv, triv, terms, diffs)


# ---------------------------------------------------------------------------
# spaces of chain maps and quasi-isomorphism search
# ---------------------------------------------------------------------------


def chain_map_space(x: Complex, y: Complex) -> list[ChainMap]:
    """Basis of the space of chain maps x -> y (both-sided equivariant)."""
    field = x.field
    degrees = sorted(set(x.terms) & set(y.terms))
    bases = {}
    for n in degrees:
        homs = hom_space(x.term(n), y.term(n), "both")
        if homs:
            bases[n] = homs
    if not bases:
        return []
    offsets = {}
    total = 0
    for n in sorted(bases):
        offsets[n] = total
        total += len(bases[n])

    rows = []
    check_degrees = sorted(set(x.terms) | set(y.terms))
    for n in check_degrees:
        rdim = y.dim(n + 1) * x.dim(n)
        if rdim == 0:
            continue
        arr = field._zeros(rdim, total)
        used = False
        if n in bases and y.diffs.get(n) is not None:
            for a, F in enumerate(bases[n]):
                img = y.diff_matrix(n) * F.matrix
                if not img.is_zero():
                    arr[:, offsets[n] + a] += img.arr.reshape(rdim)
                    used = True
        if (n + 1) in bases and x.diffs.get(n) is not None:
            for b, G in enumerate(bases[n + 1]):
                img = G.matrix * x.diff_matrix(n)
                if not img.is_zero():
                    arr[:, offsets[n + 1] + b] -= img.arr.reshape(rdim)
                    used = True
        if used:
            rows.append(Matrix(field, arr))

    if rows:
        system = rows[0]
        for r in rows[1:]:
            system = system.vstack(r)
        null = system.nullspace()
    else:
        null = Matrix.identity(field, total)

    out = []
    for c in range(null.cols):
        comps = {}
        for n, homs in bases.items():
            mat = Matrix.zeros(field, y.dim(n), x.dim(n))
            for a, F in enumerate(homs):
                coeff = null.arr[offsets[n] + a, c]
                if coeff != field.elem(0):
                    mat = mat + F.matrix.scale(coeff)
            comps[n] = mat
        out.append(ChainMap(x, y, comps, validate=False))
    return out


def find_quasi_iso(x: Complex, y: Complex, rng: random.Random,
                   attempts: int = 120) -> ChainMap | None:
    """Search the chain-map space for a quasi-isomorphism x -> y.

    Deterministic given the rng state; returns None when the homology
    profiles differ or no candidate in the sampled set works.
    """
    hx = homology_dims(x)
    if hx != homology_dims(y):
        return None
    if not hx:
        # both acyclic: every chain map, including zero, is a quasi-iso
        return ChainMap(x, y, {}, validate=False)
    basis = chain_map_space(x, y)
    if not basis:
        return None
    # deterministic first guesses: each basis map, then their sum
    candidates = list(basis)
    total = basis[0]
    for b in basis[1:]:
        total = total + b
    candidates.append(total)
    for f in candidates:
        if not f.is_zero() and is_quasi_iso(f):
            return f
    field = x.field
    p = field.p if field.is_prime_field else None
    for _ in range(attempts):
        coeffs = [rng.randrange(p) if p else rng.randrange(-9, 10) for _ in basis]
        f = None
        for c, b in zip(coeffs, basis):
            if c:
                f = b.scale(c) if f is None else f + b.scale(c)
        if f is None or f.is_zero():
            continue
        if is_quasi_iso(f):
            return f
    return None


# ---------------------------------------------------------------------------
# canonical isomorphisms: unitors, associator, shift interchange
# ---------------------------------------------------------------------------


def left_unitor(t: TensorComplex) -> ChainMap:
    """unit_complex(A) (x) X -> X, a (x) m |-> a.m."""
    x = t.y
    comps = {}
    for n, slots in t.layout.items():
        cols = []
        for (i, j, td, off) in slots:
            for (av, mv) in td.monomials():
                cols.append(x.term(j).left_action_of(av) * mv)
        comps[n] = Matrix.stack_columns(t.complex.field, cols, x.dim(n))
    return ChainMap(t.complex, x, comps)


def left_unitor_inv(t: TensorComplex) -> ChainMap:
    x = t.y
    unit_vec = t.x.term(0).left_algebra.unit
    comps = {}
    for n in x.degrees():
        td, off = t.slot(n, 0, n)
        cols = []
        for b in range(x.dim(n)):
            coords = td.tensor_coords(unit_vec, Matrix.basis_vector(x.field, x.dim(n), b))
            full = x.field._zeros(t.complex.dim(n), 1)
            full[off:off + td.bimodule.dim, 0:1] = coords.arr
            cols.append(Matrix(x.field, full))
        comps[n] = Matrix.stack_columns(x.field, cols, t.complex.dim(n))
    return ChainMap(x, t.complex, comps)


def right_unitor(t: TensorComplex) -> ChainMap:
    """X (x) unit_complex(B) -> X, m (x) b |-> m.b."""
    x = t.x
    comps = {}
    for n, slots in t.layout.items():
        cols = []
        for (i, j, td, off) in slots:
            for (mv, bv) in td.monomials():
                cols.append(x.term(i).right_action_of(bv) * mv)
        comps[n] = Matrix.stack_columns(t.complex.field, cols, x.dim(n))
    return ChainMap(t.complex, x, comps)


def right_unitor_inv(t: TensorComplex) -> ChainMap:
    x = t.x
    unit_vec = t.y.term(0).right_algebra.unit
    comps = {}
    for n in x.degrees():
        td, off = t.slot(n, n, 0)
        cols = []
        for b in range(x.dim(n)):
            coords = td.tensor_coords(Matrix.basis_vector(x.field, x.dim(n), b), unit_vec)
            full = x.field._zeros(t.complex.dim(n), 1)
            full[off:off + td.bimodule.dim, 0:1] = coords.arr
            cols.append(Matrix(x.field, full))
        comps[n] = Matrix.stack_columns(x.field, cols, t.complex.dim(n))
    return ChainMap(x, t.complex, comps)


def associator(txy: TensorComplex, txy_z: TensorComplex,
               tyz: TensorComplex, tx_yz: TensorComplex) -> ChainMap:
    """((X (x) Y) (x) Z  ->  X (x) (Y (x) Z), no signs.

    txy = X(x)Y, txy_z = (X(x)Y)(x)Z, tyz = Y(x)Z, tx_yz = X(x)(Y(x)Z).
    """
    field = txy.complex.field
    comps = {}
    for n, slots in txy_z.layout.items():
        cols = []
        for (m, k, td_outer, off_outer) in slots:
            inner_slots = txy.layout[m]
            for (q1v, zv) in td_outer.monomials():
                out = field._zeros(tx_yz.complex.dim(n), 1)
                for (i, j, td_xy, off_xy) in inner_slots:
                    seg = q1v.arr[off_xy:off_xy + td_xy.bimodule.dim, 0]
                    monos = td_xy.monomials()
                    for e, coeff in enumerate(seg):
                        if coeff == field.elem(0):
                            continue
                        xv, yv = monos[e]
                        td_yz, off_yz = tyz.slot(j + k, j, k)
                        inner = td_yz.tensor_coords(yv, zv)
                        w = field._zeros(tyz.complex.dim(j + k), 1)
                        w[off_yz:off_yz + td_yz.bimodule.dim, 0:1] = inner.arr
                        td_t, off_t = tx_yz.slot(n, i, j + k)
                        coords = td_t.tensor_coords(xv, Matrix(field, w))
                        out[off_t:off_t + td_t.bimodule.dim, 0:1] += coords.arr.reshape(-1, 1) * coeff
                cols.append(Matrix(field, field._normalize(out)))
        comps[n] = Matrix.stack_columns(field, cols, tx_yz.complex.dim(n))
    return ChainMap(txy_z.complex, tx_yz.complex, comps)


def associator_inv(txy: TensorComplex, txy_z: TensorComplex,
                   tyz: TensorComplex, tx_yz: TensorComplex) -> ChainMap:
    """X (x) (Y (x) Z)  ->  (X (x) Y) (x) Z, no signs (inverse bracketing)."""
    field = txy.complex.field
    comps = {}
    for n, slots in tx_yz.layout.items():
        cols = []
        for (i, m, td_outer, off_outer) in slots:
            inner_slots = tyz.layout[m]
            for (xv, wv) in td_outer.monomials():
                out = field._zeros(txy_z.complex.dim(n), 1)
                for (j, k, td_yz, off_yz) in inner_slots:
                    seg = wv.arr[off_yz:off_yz + td_yz.bimodule.dim, 0]
                    monos = td_yz.monomials()
                    for e, coeff in enumerate(seg):
                        if coeff == field.elem(0):
                            continue
                        yv, zv = monos[e]
                        td_xy, off_xy = txy.slot(i + j, i, j)
                        inner = td_xy.tensor_coords(xv, yv)
                        w = field._zeros(txy.complex.dim(i + j), 1)
                        w[off_xy:off_xy + td_xy.bimodule.dim, 0:1] = inner.arr
                        td_t, off_t = txy_z.slot(n, i + j, k)
                        coords = td_t.tensor_coords(Matrix(field, w), zv)
                        out[off_t:off_t + td_t.bimodule.dim, 0:1] += coords.arr * coeff
                cols.append(Matrix(field, field._normalize(out)))
        comps[n] = Matrix.stack_columns(field, cols, txy_z.complex.dim(n))
    return ChainMap(tx_yz.complex, txy_z.complex, comps)


def interchange_right_shift(t_shifted: TensorComplex, t_plain: TensorComplex,
                            n: int) -> ChainMap:
    """X (x) (Y[n])  ->  (X (x) Y)[n], with sign (-1)^{n.|x|} per slot."""
    field = t_shifted.complex.field
    target = shift(t_plain.complex, n)
    comps = {}
    for m, slots in t_shifted.layout.items():
        src_dim = t_shifted.complex.dim(m)
        arr = field._zeros(t_plain.complex.dim(m + n), src_dim)
        for (i, jp, td, off) in slots:
            td2, off2 = t_plain.slot(m + n, i, jp + n)
            if td.bimodule.dim != td2.bimodule.dim:
                raise ComplexError("interchange slots do not match")
            sign = field.elem((-1) ** (n * i))
            ident = Matrix.identity(field, td.bimodule.dim).scale(sign)
            arr[off2:off2 + td2.bimodule.dim, off:off + td.bimodule.dim] += ident.arr
        comps[m] = Matrix(field, arr)
    return ChainMap(t_shifted.complex, target, comps)


def interchange_left_shift(t_shifted: TensorComplex, t_plain: TensorComplex,
                           n: int) -> ChainMap:
    """(X[n]) (x) Y  ->  (X (x) Y)[n]: the identity, slots relabelled."""
    field = t_shifted.complex.field
    target = shift(t_plain.complex, n)
    comps = {}
    for m, slots in t_shifted.layout.items():
        arr = field._zeros(t_plain.complex.dim(m + n), t_shifted.complex.dim(m))
        for (ip, j, td, off) in slots:
            td2, off2 = t_plain.slot(m + n, ip + n, j)
            if td.bimodule.dim != td2.bimodule.dim:
                raise ComplexError("interchange slots do not match")
            ident = Matrix.identity(field, td.bimodule.dim)
            arr[off2:off2 + td2.bimodule.dim, off:off + td.bimodule.dim] += ident.arr
        comps[m] = Matrix(field, arr)
    return ChainMap(t_shifted.complex, target, comps)
