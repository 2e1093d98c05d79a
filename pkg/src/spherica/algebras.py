"""Finite-dimensional algebras presented by quivers with admissible relations.

Paths compose left to right: in the product ``p*q`` the path ``p`` is
traversed first, so ``e_v * p = p`` exactly when ``p`` starts at ``v``
and ``p * e_w = p`` exactly when ``p`` ends at ``w``.

A presentation is turned into an algebra by length-lexicographic
rewriting: each relation is oriented so its largest path (longest,
ties broken by arrow declaration order) rewrites to the remaining
terms.  The basis is the set of irreducible paths shorter than the
declared length bound; if an irreducible path reaches the bound the
presentation is rejected as infinite-dimensional (or the bound as too
small).  Associativity of the resulting table is checked exhaustively
on construction, which also catches non-confluent presentations.

Algebras are immutable and freely shareable.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .linalg import Field, Matrix


class AlgebraError(Exception):
    """Raised for invalid presentations or incompatible algebra operations."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class QuiverPresentation:
    """A quiver with admissible relations and a path-length bound.

    relations: list of formal linear combinations, each a list of
    (coefficient, path) pairs where a path is a tuple of arrow names.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[tuple[object, tuple[str, ...]], ...], ...] = ()
    length_bound: int = 1

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex names")
        names = set(self.vertices)
        seen = set()
        for a in self.arrows:
            if a.source not in names or a.target not in names:
                raise AlgebraError(f"arrow {a.name}: unknown endpoint")
            if a.name in seen or a.name in names:
                raise AlgebraError(f"duplicate name {a.name!r}")
            seen.add(a.name)
        if self.length_bound < 1:
            raise AlgebraError("length_bound must be >= 1")


class Algebra:
    """A finite-dimensional associative unital algebra with a path basis.

    Fields follow the construction: ``basis_labels`` name the basis
    elements, ``mult[i][j]`` is the sparse product {k: coeff} of basis
    elements i and j, ``unit`` is the coefficient vector of 1,
    ``vertex_idempotents`` indexes the trivial paths and
    ``radical_basis`` the basis elements of path length >= 1.
    """

    def __init__(self, field: Field, basis_labels: list[str],
                 mult: list[list[dict[int, object]]], unit: Matrix,
                 vertex_idempotents: list[int], radical_basis: list[int],
                 basis_paths: list[tuple] | None = None,
                 name: str = ""):
        self.field = field
        self.dim = len(basis_labels)
        self.basis_labels = list(basis_labels)
        self.mult = mult
        self.unit = unit
        self.vertex_idempotents = list(vertex_idempotents)
        self.radical_basis = list(radical_basis)
        self.basis_paths = basis_paths
        self.name = name
        self._left_mats: list[Matrix] | None = None
        self._right_mats: list[Matrix] | None = None
        self._subspace_cache: dict = {}
        self._validate()

    # --- construction-time sanity -----------------------------------

    def _validate(self):
        f = self.field
        zero = f.elem(0)
        # unit is a two-sided identity
        for i in range(self.dim):
            if self.multiply_vec(self.unit, Matrix.basis_vector(f, self.dim, i)) != \
               Matrix.basis_vector(f, self.dim, i):
                raise AlgebraError("unit is not a left identity")
            if self.multiply_vec(Matrix.basis_vector(f, self.dim, i), self.unit) != \
               Matrix.basis_vector(f, self.dim, i):
                raise AlgebraError("unit is not a right identity")
        # associativity on every basis triple (sparse, so cheap)
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult[i][j]
                for k in range(self.dim):
                    jk = self.mult[j][k]
                    left: dict[int, object] = {}
                    for m, c in ij.items():
                        for n, d in self.mult[m][k].items():
                            left[n] = left.get(n, zero) + c * d
                    right: dict[int, object] = {}
                    for m, c in jk.items():
                        for n, d in self.mult[i][m].items():
                            right[n] = right.get(n, zero) + c * d
                    lf = {n: f.elem(c) for n, c in left.items() if f.elem(c) != zero}
                    rf = {n: f.elem(c) for n, c in right.items() if f.elem(c) != zero}
                    if lf != rf:
                        raise AlgebraError(
                            f"multiplication not associative on basis triple ({i},{j},{k}); "
                            "the presentation is likely not confluent")
        # vertex idempotents: orthogonal, sum to the unit
        total = Matrix.zeros(f, self.dim, 1)
        for v in self.vertex_idempotents:
            ev = Matrix.basis_vector(f, self.dim, v)
            total = total + ev
            for w in self.vertex_idempotents:
                ew = Matrix.basis_vector(f, self.dim, w)
                prod = self.multiply_vec(ev, ew)
                expected = ev if v == w else Matrix.zeros(f, self.dim, 1)
                if prod != expected:
                    raise AlgebraError("vertex idempotents are not orthogonal idempotents")
        if total != self.unit:
            raise AlgebraError("vertex idempotents do not sum to the unit")

    # --- multiplication ----------------------------------------------

    def multiply_vec(self, x: Matrix, y: Matrix) -> Matrix:
        """Product of two elements given as dim x 1 coefficient vectors."""
        f = self.field
        out = f._zeros(self.dim, 1)
        zero = f.elem(0)
        for i in range(self.dim):
            xi = x.arr[i, 0]
            if xi == zero:
                continue
            for j in range(self.dim):
                yj = y.arr[j, 0]
                if yj == zero:
                    continue
                for k, c in self.mult[i][j].items():
                    out[k, 0] += xi * yj * c
        return Matrix(f, out)

    def left_mult_matrix(self, i: int) -> Matrix:
        """Matrix of x -> a_i * x on the regular module."""
        if self._left_mats is None:
            self._left_mats = []
            for a in range(self.dim):
                m = self.field._zeros(self.dim, self.dim)
                for b in range(self.dim):
                    for k, c in self.mult[a][b].items():
                        m[k, b] = c
                self._left_mats.append(Matrix(self.field, m))
        return self._left_mats[i]

    def right_mult_matrix(self, i: int) -> Matrix:
        """Matrix of x -> x * a_i on the regular module."""
        if self._right_mats is None:
            self._right_mats = []
            for a in range(self.dim):
                m = self.field._zeros(self.dim, self.dim)
                for b in range(self.dim):
                    for k, c in self.mult[b][a].items():
                        m[k, b] = c
                self._right_mats.append(Matrix(self.field, m))
        return self._right_mats[i]

    def left_action_of(self, vec: Matrix) -> Matrix:
        """Left multiplication matrix of an arbitrary element."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        zero = self.field.elem(0)
        for i in range(self.dim):
            c = vec.arr[i, 0]
            if c != zero:
                out = out + self.left_mult_matrix(i).scale(c)
        return out

    def right_action_of(self, vec: Matrix) -> Matrix:
        """Right multiplication matrix of an arbitrary element."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        zero = self.field.elem(0)
        for i in range(self.dim):
            c = vec.arr[i, 0]
            if c != zero:
                out = out + self.right_mult_matrix(i).scale(c)
        return out

    @property
    def generator_indices(self) -> list[int]:
        """Idempotents plus arrows: a generating set of the algebra.

        Only meaningful for path-basis algebras; other constructions
        override generators() directly.
        """
        gens = list(self.vertex_idempotents)
        if self.basis_paths is not None:
            gens += [i for i, p in enumerate(self.basis_paths) if len(p) == 1]
        else:
            gens += self.radical_basis
        return gens

    def generators(self) -> list[Matrix]:
        """Generating elements as coefficient vectors."""
        return [Matrix.basis_vector(self.field, self.dim, i) for i in self.generator_indices]

    # --- idempotent subspaces (cached) --------------------------------

    def left_ideal_basis(self, v: int) -> Matrix:
        """Basis (columns) of A*e_v inside the regular module."""
        key = ("Ae", v)
        if key not in self._subspace_cache:
            self._subspace_cache[key] = self.right_mult_matrix(v).image_basis()
        return self._subspace_cache[key]

    def right_ideal_basis(self, v: int) -> Matrix:
        """Basis (columns) of e_v*A inside the regular module."""
        key = ("eA", v)
        if key not in self._subspace_cache:
            self._subspace_cache[key] = self.left_mult_matrix(v).image_basis()
        return self._subspace_cache[key]

    def __repr__(self):
        label = self.name or "Algebra"
        return f"{label}(dim={self.dim}, field={self.field})"


# ---------------------------------------------------------------------------
# path rewriting
# ---------------------------------------------------------------------------


def _path_key(path: tuple[int, ...]) -> tuple:
    return (len(path), path)


class _Rewriter:
    """Length-lexicographic rewriting for paths in a quiver."""

    def __init__(self, field: Field, rules: dict[tuple[int, ...], list[tuple[object, tuple[int, ...]]]]):
        self.field = field
        self.rules = rules
        self.leads = sorted(rules, key=_path_key)

    def find_redex(self, path: tuple[int, ...]):
        best = None
        for lead in self.leads:
            ln = len(lead)
            if ln > len(path):
                continue
            for start in range(len(path) - ln + 1):
                if path[start:start + ln] == lead:
                    if best is None or start < best[0]:
                        best = (start, lead)
                    break
        return best

    def normal_form(self, combo: dict[tuple[int, ...], object], bound: int):
        """Rewrite a linear combination of paths to irreducible form."""
        f = self.field
        zero = f.elem(0)
        work = {p: c for p, c in combo.items() if c != zero}
        while True:
            target = None
            for p in sorted(work, key=_path_key, reverse=True):
                redex = self.find_redex(p)
                if redex is not None:
                    target = (p, redex)
                    break
            if target is None:
                break
            p, (start, lead) = target
            c = work.pop(p)
            for coeff, rhs in self.rules[lead]:
                q = p[:start] + rhs + p[start + len(lead):]
                work[q] = f.elem(work.get(q, zero) + c * coeff)
                if work[q] == zero:
                    del work[q]
        for p in work:
            if len(p) >= bound:
                raise AlgebraError(
                    "infinite-dimensional or bound too small: irreducible path "
                    f"of length {len(p)} survives rewriting")
        return work


def algebra_from_quiver(q: QuiverPresentation, field: Field, name: str = "") -> Algebra:
    """Build the path algebra of ``q`` modulo its relations over ``field``."""
    arrow_index = {a.name: i for i, a in enumerate(q.arrows)}
    src = [q.vertices.index(a.source) for a in q.arrows]
    tgt = [q.vertices.index(a.target) for a in q.arrows]

    def composable(path: tuple[int, ...]) -> bool:
        return all(tgt[path[i]] == src[path[i + 1]] for i in range(len(path) - 1))

    # relations -> rewrite rules
    rules: dict[tuple[int, ...], list[tuple[object, tuple[int, ...]]]] = {}
    pending = []
    for rel in q.relations:
        terms = []
        endpoints = None
        for coeff, path_names in rel:
            try:
                path = tuple(arrow_index[n] for n in path_names)
            except KeyError as e:
                raise AlgebraError(f"relation uses unknown arrow {e.args[0]!r}")
            if not composable(path):
                raise AlgebraError(f"relation path {'*'.join(path_names)} is not composable")
            if len(path) < 2:
                raise AlgebraError("relations must be admissible (paths of length >= 2)")
            ends = (src[path[0]], tgt[path[-1]])
            if endpoints is None:
                endpoints = ends
            elif endpoints != ends:
                raise AlgebraError("relation mixes paths with different endpoints")
            c = field.elem(coeff)
            if c != field.elem(0):
                terms.append((c, path))
        if terms:
            pending.append(terms)

    rewriter = _Rewriter(field, rules)
    for terms in sorted(pending, key=lambda t: _path_key(max(p for _, p in t))):
        combo = {}
        for c, p in terms:
            combo[p] = combo.get(p, field.elem(0)) + c
        combo = rewriter.normal_form(combo, q.length_bound + 1)
        if not combo:
            continue
        lead = max(combo, key=_path_key)
        c_lead = combo.pop(lead)
        inv = field.inv(c_lead)
        rhs = [(field.elem(-1) * inv * c, p) for p, c in sorted(combo.items(), key=lambda kv: _path_key(kv[0]))]
        rules[lead] = rhs
        rewriter = _Rewriter(field, rules)

    # enumerate irreducible paths breadth-first by length
    basis: list[tuple] = [("e", v) for v in range(len(q.vertices))]
    current = [(a,) for a in range(len(q.arrows))]
    length = 1
    while current:
        irreducible = [p for p in current if rewriter.find_redex(p) is None]
        if irreducible and length >= q.length_bound:
            raise AlgebraError(
                "infinite-dimensional or bound too small: irreducible path of "
                f"length {length} exists")
        basis.extend(irreducible)
        nxt = []
        for p in irreducible:
            for a in range(len(q.arrows)):
                if tgt[p[-1]] == src[a]:
                    nxt.append(p + (a,))
        current = nxt
        length += 1
        if length > q.length_bound:
            break
    if current and any(rewriter.find_redex(p) is None for p in current):
        raise AlgebraError("infinite-dimensional or bound too small")

    index = {p: i for i, p in enumerate(basis)}
    n = len(basis)

    def path_src(p) -> int:
        return p[1] if p[0] == "e" else src[p[0]]

    def path_tgt(p) -> int:
        return p[1] if p[0] == "e" else tgt[p[-1]]

    def real_path(p):
        return () if p[0] == "e" else p

    labels = []
    for p in basis:
        if p[0] == "e":
            labels.append(f"e_{q.vertices[p[1]]}")
        else:
            labels.append("*".join(q.arrows[a].name for a in p))

    zero = field.elem(0)
    mult: list[list[dict[int, object]]] = [[{} for _ in range(n)] for _ in range(n)]
    for i, p in enumerate(basis):
        for j, r in enumerate(basis):
            if path_tgt(p) != path_src(r):
                continue
            concat = real_path(p) + real_path(r)
            if concat == ():
                mult[i][j] = {i: field.elem(1)}
                continue
            nf = rewriter.normal_form({concat: field.elem(1)}, q.length_bound)
            out = {}
            for path, c in nf.items():
                if c != zero:
                    key = path if path else None
                    if key is None:
                        raise AlgebraError("rewriting produced a trivial path")
                    out[index[path]] = c
            mult[i][j] = out

    unit_arr = field._zeros(n, 1)
    for v in range(len(q.vertices)):
        unit_arr[index[("e", v)], 0] = field.elem(1)
    unit = Matrix(field, unit_arr)
    idempotents = [index[("e", v)] for v in range(len(q.vertices))]
    radical = [i for i, p in enumerate(basis) if p[0] != "e"]

    return Algebra(field, labels, mult, unit, idempotents, radical,
                   basis_paths=[real_path(p) if p[0] != "e" else () for p in basis],
                   name=name)


def opposite(a: Algebra) -> Algebra:
    """The opposite algebra: multiplication reversed, everything else shared."""
    mult = [[dict(a.mult[j][i]) for j in range(a.dim)] for i in range(a.dim)]
    return Algebra(a.field, a.basis_labels, mult, a.unit,
                   a.vertex_idempotents, a.radical_basis,
                   basis_paths=a.basis_paths,
                   name=f"{a.name}^op" if a.name else "op")


def enveloping(a: Algebra, b: Algebra) -> Algebra:
    """The algebra A (x) B^op, whose modules are (A,B)-bimodules."""
    if a.field != b.field:
        raise AlgebraError("enveloping requires a common field")
    f = a.field
    n = a.dim * b.dim

    def idx(i, j):
        return i * b.dim + j

    labels = [f"{la}(x){lb}" for la in a.basis_labels for lb in b.basis_labels]
    mult: list[list[dict[int, object]]] = [[{} for _ in range(n)] for _ in range(n)]
    zero = f.elem(0)
    for i1 in range(a.dim):
        for i2 in range(b.dim):
            for j1 in range(a.dim):
                for j2 in range(b.dim):
                    out = {}
                    for k1, c1 in a.mult[i1][j1].items():
                        for k2, c2 in b.mult[j2][i2].items():
                            c = f.elem(c1 * c2)
                            if c != zero:
                                out[idx(k1, k2)] = c
                    mult[idx(i1, i2)][idx(j1, j2)] = out

    unit_arr = f._zeros(n, 1)
    for i in range(a.dim):
        ci = a.unit.arr[i, 0]
        if ci == f.elem(0):
            continue
        for j in range(b.dim):
            cj = b.unit.arr[j, 0]
            if cj != f.elem(0):
                unit_arr[idx(i, j), 0] = ci * cj
    idempotents = [idx(v, w) for v in a.vertex_idempotents for w in b.vertex_idempotents]
    rad_a = set(a.radical_basis)
    rad_b = set(b.radical_basis)
    radical = [idx(i, j) for i in range(a.dim) for j in range(b.dim)
               if i in rad_a or j in rad_b]
    name = f"{a.name or 'A'}(x){b.name or 'B'}^op"
    return Algebra(f, labels, mult, Matrix(f, unit_arr), idempotents, radical, name=name)


def center_basis(a: Algebra) -> list[Matrix]:
    """Basis of the center, found by solving the commutator system."""
    blocks = []
    for i in range(a.dim):
        blocks.append(a.left_mult_matrix(i) - a.right_mult_matrix(i))
    if not blocks:
        return []
    stacked = blocks[0]
    for m in blocks[1:]:
        stacked = stacked.vstack(m)
    null = stacked.nullspace()
    return [null.column_vec(j) for j in range(null.cols)]


# small canonical presentations used across the engine and tests ---------

def trivial_algebra(field: Field) -> Algebra:
    """The ground field as a one-vertex quiver algebra."""
    q = QuiverPresentation(vertices=("pt",), arrows=(), relations=(), length_bound=1)
    return algebra_from_quiver(q, field, name="k")
