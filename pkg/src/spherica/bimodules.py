"""Finite-dimensional (A,B)-bimodules with explicit action matrices.

Elements are column vectors; the left action of a basis element a of A
is a matrix L_a with vec(a.x) = L_a vec(x), so a -> L_a is an algebra
homomorphism, and the right action satisfies R_{bc} = R_c R_b.

Everything downstream leans on two pieces of structure:

* vertex blocks: e_v M and M e_w, computed from the idempotent action
  matrices, which shrink every linear solve by a factor of
  (#vertices)^2;
* projective splittings: a right-projective M is identified with a
  direct sum of ideals e_v B via a deterministic echelon choice of
  generators, which gives dual bases on the nose, duals with explicit
  evaluation maps, and a quotient-free model of M (x)_B N.

Tensor products over a middle algebra come back as TensorData: the
bimodule together with a monomial basis (each basis vector is the
class of an explicit pure tensor) and a bilinear coordinate map, from
which induced maps on tensors are computed functorially.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra
from .linalg import Matrix


class BimoduleError(Exception):
    """Raised for invalid bimodule data or incompatible operations."""


class Bimodule:
    """A finite-dimensional bimodule given by per-basis action matrices."""

    def __init__(self, left_algebra: Algebra, right_algebra: Algebra,
                 left_action: list[Matrix], right_action: list[Matrix],
                 dim: int, label: str = "", validate: bool = True):
        if left_algebra.field != right_algebra.field:
            raise BimoduleError("bimodule algebras must share a field")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.field = left_algebra.field
        self.dim = dim
        self.left_action = left_action
        self.right_action = right_action
        self.label = label
        self._cache: dict = {}
        if validate:
            self._validate()

    # --- validation ---------------------------------------------------

    def _validate(self):
        A, B = self.left_algebra, self.right_algebra
        n = self.dim
        if len(self.left_action) != A.dim or len(self.right_action) != B.dim:
            raise BimoduleError("action list lengths must match algebra dims")
        for m in self.left_action + self.right_action:
            if m.rows != n or m.cols != n:
                raise BimoduleError("action matrices must be dim x dim")
        if n == 0:
            return
        ident = Matrix.identity(self.field, n)
        if self.left_action_of(A.unit) != ident:
            raise BimoduleError("left unit does not act as identity")
        if self.right_action_of(B.unit) != ident:
            raise BimoduleError("right unit does not act as identity")
        # homomorphism property, checked on generator x basis pairs:
        # products of generators reach every basis element, so this
        # propagates to the whole algebra by induction.
        for g in A.generator_indices:
            gv = Matrix.basis_vector(self.field, A.dim, g)
            Lg = self.left_action[g]
            for j in range(A.dim):
                prod = A.multiply_vec(gv, Matrix.basis_vector(self.field, A.dim, j))
                if self.left_action_of(prod) != Lg * self.left_action[j]:
                    raise BimoduleError("left action is not a homomorphism")
        for g in B.generator_indices:
            gv = Matrix.basis_vector(self.field, B.dim, g)
            Rg = self.right_action[g]
            for j in range(B.dim):
                prod = B.multiply_vec(Matrix.basis_vector(self.field, B.dim, j), gv)
                if self.right_action_of(prod) != Rg * self.right_action[j]:
                    raise BimoduleError("right action is not an anti-homomorphism")
        for g in A.generator_indices:
            for h in B.generator_indices:
                if self.left_action[g] * self.right_action[h] != \
                   self.right_action[h] * self.left_action[g]:
                    raise BimoduleError("left and right actions do not commute")

    # --- action helpers -----------------------------------------------

    def left_action_of(self, vec: Matrix) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        zero = self.field.elem(0)
        for i in range(self.left_algebra.dim):
            c = vec.arr[i, 0]
            if c != zero:
                out = out + self.left_action[i].scale(c)
        return out

    def right_action_of(self, vec: Matrix) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        zero = self.field.elem(0)
        for i in range(self.right_algebra.dim):
            c = vec.arr[i, 0]
            if c != zero:
                out = out + self.right_action[i].scale(c)
        return out

    # --- vertex blocks (cached) ----------------------------------------

    def left_block(self, v_pos: int) -> Matrix:
        """Basis of e_v M for the v-th left vertex idempotent."""
        key = ("lb", v_pos)
        if key not in self._cache:
            idem = self.left_algebra.vertex_idempotents[v_pos]
            self._cache[key] = self.left_action[idem].image_basis()
        return self._cache[key]

    def right_block(self, w_pos: int) -> Matrix:
        """Basis of M e_w for the w-th right vertex idempotent."""
        key = ("rb", w_pos)
        if key not in self._cache:
            idem = self.right_algebra.vertex_idempotents[w_pos]
            self._cache[key] = self.right_action[idem].image_basis()
        return self._cache[key]

    def left_block_proj(self, v_pos: int) -> Matrix:
        key = ("lbp", v_pos)
        if key not in self._cache:
            self._cache[key] = _left_inverse(self.left_block(v_pos))
        return self._cache[key]

    def right_block_proj(self, w_pos: int) -> Matrix:
        key = ("rbp", w_pos)
        if key not in self._cache:
            self._cache[key] = _left_inverse(self.right_block(w_pos))
        return self._cache[key]

    def double_block(self, v_pos: int, w_pos: int) -> Matrix:
        """Basis of e_v M e_w."""
        key = ("db", v_pos, w_pos)
        if key not in self._cache:
            li = self.left_algebra.vertex_idempotents[v_pos]
            ri = self.right_algebra.vertex_idempotents[w_pos]
            self._cache[key] = (self.left_action[li] * self.right_action[ri]).image_basis()
        return self._cache[key]

    def double_block_proj(self, v_pos: int, w_pos: int) -> Matrix:
        key = ("dbp", v_pos, w_pos)
        if key not in self._cache:
            self._cache[key] = _left_inverse(self.double_block(v_pos, w_pos))
        return self._cache[key]

    def __repr__(self):
        lbl = self.label or "Bimodule"
        return f"{lbl}({self.left_algebra.name or 'A'},{self.right_algebra.name or 'B'}; dim={self.dim})"


def _left_inverse(m: Matrix) -> Matrix:
    """X with X m = I for a matrix of full column rank."""
    if m.cols == 0:
        return Matrix.zeros(m.field, 0, m.rows)
    x = m.transpose().solve(Matrix.identity(m.field, m.cols))
    if x is None:
        raise BimoduleError("matrix does not have full column rank")
    return x.transpose()


class BimoduleMap:
    """A linear map intertwining the actions on the stated sides."""

    def __init__(self, source: Bimodule, target: Bimodule, matrix: Matrix,
                 sides: str = "both", validate: bool = True):
        if sides not in ("both", "left", "right"):
            raise BimoduleError(f"invalid sides {sides!r}")
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise BimoduleError(
                f"map matrix is {matrix.rows}x{matrix.cols}, expected "
                f"{target.dim}x{source.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.sides = sides
        if validate:
            self._validate()

    def _validate(self):
        if self.sides in ("both", "left"):
            if self.source.left_algebra is not self.target.left_algebra and \
               self.source.left_algebra.mult != self.target.left_algebra.mult:
                raise BimoduleError("left algebras differ")
            for g in self.source.left_algebra.generator_indices:
                if self.matrix * self.source.left_action[g] != \
                   self.target.left_action[g] * self.matrix:
                    raise BimoduleError("map does not intertwine the left action")
        if self.sides in ("both", "right"):
            if self.source.right_algebra is not self.target.right_algebra and \
               self.source.right_algebra.mult != self.target.right_algebra.mult:
                raise BimoduleError("right algebras differ")
            for g in self.source.right_algebra.generator_indices:
                if self.matrix * self.source.right_action[g] != \
                   self.target.right_action[g] * self.matrix:
                    raise BimoduleError("map does not intertwine the right action")

    def then(self, other: "BimoduleMap") -> "BimoduleMap":
        if other.source.dim != self.target.dim:
            raise BimoduleError("maps are not composable")
        return BimoduleMap(self.source, other.target, other.matrix * self.matrix,
                           sides=self.sides, validate=False)

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        return BimoduleMap(self.source, self.target, self.matrix + other.matrix,
                           sides=self.sides, validate=False)

    def scale(self, c) -> "BimoduleMap":
        return BimoduleMap(self.source, self.target, self.matrix.scale(c),
                           sides=self.sides, validate=False)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_invertible(self) -> bool:
        return self.matrix.is_invertible()

    def __repr__(self):
        return f"BimoduleMap({self.source!r} -> {self.target!r})"


# ---------------------------------------------------------------------------
# basic constructions
# ---------------------------------------------------------------------------


def zero_bimodule(a: Algebra, b: Algebra) -> Bimodule:
    return Bimodule(a, b, [Matrix.zeros(a.field, 0, 0)] * a.dim,
                    [Matrix.zeros(a.field, 0, 0)] * b.dim, 0, label="0",
                    validate=False)


def regular_bimodule(a: Algebra) -> Bimodule:
    """The algebra as a bimodule over itself (the diagonal kernel's term)."""
    left = [a.left_mult_matrix(i) for i in range(a.dim)]
    right = [a.right_mult_matrix(i) for i in range(a.dim)]
    return Bimodule(a, a, left, right, a.dim, label=a.name or "A")


def projective_bimodule(a: Algebra, v_pos: int, b: Algebra, w_pos: int) -> Bimodule:
    """The standard biprojective summand  A e_v (x) e_w B."""
    v = a.vertex_idempotents[v_pos]
    w = b.vertex_idempotents[w_pos]
    S = a.left_ideal_basis(v)       # basis of A e_v
    T = b.right_ideal_basis(w)      # basis of e_w B
    sp = _left_inverse(S)
    tp = _left_inverse(T)
    p, q = S.cols, T.cols
    iq = Matrix.identity(a.field, q)
    ip = Matrix.identity(a.field, p)
    left = [(sp * a.left_mult_matrix(i) * S).kron(iq) for i in range(a.dim)]
    right = [ip.kron(tp * b.right_mult_matrix(i) * T) for i in range(b.dim)]
    return Bimodule(a, b, left, right, p * q,
                    label=f"P({v_pos},{w_pos})")


def direct_sum(summands: list[Bimodule], left: Algebra | None = None,
               right: Algebra | None = None) -> tuple[Bimodule, list[Matrix], list[Matrix]]:
    """Direct sum with injection and projection matrices."""
    if not summands:
        if left is None or right is None:
            raise BimoduleError("empty direct sum needs explicit algebras")
        return zero_bimodule(left, right), [], []
    a = summands[0].left_algebra
    b = summands[0].right_algebra
    field = a.field
    total = sum(m.dim for m in summands)
    lefts = [Matrix.block_diag(field, [m.left_action[i] for m in summands])
             for i in range(a.dim)]
    rights = [Matrix.block_diag(field, [m.right_action[i] for m in summands])
              for i in range(b.dim)]
    out = Bimodule(a, b, lefts, rights, total,
                   label="(+)".join(m.label or "?" for m in summands),
                   validate=False)
    injections = []
    projections = []
    offset = 0
    for m in summands:
        inj = field._zeros(total, m.dim)
        proj = field._zeros(m.dim, total)
        for i in range(m.dim):
            inj[offset + i, i] = field.elem(1)
            proj[i, offset + i] = field.elem(1)
        injections.append(Matrix(field, inj))
        projections.append(Matrix(field, proj))
        offset += m.dim
    return out, injections, projections


# ---------------------------------------------------------------------------
# hom spaces (block-structured linear solve)
# ---------------------------------------------------------------------------


def _radical_generator_indices(a: Algebra) -> list[int]:
    if a.basis_paths is not None:
        return [i for i, p in enumerate(a.basis_paths) if len(p) == 1]
    return list(a.radical_basis)


def hom_space(m: Bimodule, n: Bimodule, sides: str) -> list[BimoduleMap]:
    """Basis of the space of maps m -> n equivariant on the given sides.

    sides is "left", "right" or "both"; the algebras on each requested
    side must agree.  Solving is done per vertex block, with constraint
    rows only for the arrow generators.
    """
    if sides in ("left", "both") and m.left_algebra.mult != n.left_algebra.mult:
        raise BimoduleError("left algebras differ")
    if sides in ("right", "both") and m.right_algebra.mult != n.right_algebra.mult:
        raise BimoduleError("right algebras differ")
    field = m.field
    if m.dim == 0 or n.dim == 0:
        return []

    if sides == "both":
        nv = len(m.left_algebra.vertex_idempotents)
        nw = len(m.right_algebra.vertex_idempotents)
        blocks = [(v, w) for v in range(nv) for w in range(nw)]
        src_basis = {bl: m.double_block(*bl) for bl in blocks}
        tgt_basis = {bl: n.double_block(*bl) for bl in blocks}
        tgt_proj = {bl: n.double_block_proj(*bl) for bl in blocks}
        constraints = []
        for g in _radical_generator_indices(m.left_algebra):
            constraints.append(("L", m.left_action[g], n.left_action[g]))
        for g in _radical_generator_indices(m.right_algebra):
            constraints.append(("R", m.right_action[g], n.right_action[g]))
    elif sides == "left":
        nv = len(m.left_algebra.vertex_idempotents)
        blocks = [(v,) for v in range(nv)]
        src_basis = {bl: m.left_block(bl[0]) for bl in blocks}
        tgt_basis = {bl: n.left_block(bl[0]) for bl in blocks}
        tgt_proj = {bl: n.left_block_proj(bl[0]) for bl in blocks}
        constraints = [("L", m.left_action[g], n.left_action[g])
                       for g in _radical_generator_indices(m.left_algebra)]
    else:
        nw = len(m.right_algebra.vertex_idempotents)
        blocks = [(w,) for w in range(nw)]
        src_basis = {bl: m.right_block(bl[0]) for bl in blocks}
        tgt_basis = {bl: n.right_block(bl[0]) for bl in blocks}
        tgt_proj = {bl: n.right_block_proj(bl[0]) for bl in blocks}
        constraints = [("R", m.right_action[g], n.right_action[g])
                       for g in _radical_generator_indices(m.right_algebra)]

    def project_onto(module: Bimodule, bl, vecs: Matrix) -> Matrix:
        """Coordinates, in the chosen block basis, of the block component."""
        if sides == "both":
            li = module.left_algebra.vertex_idempotents[bl[0]]
            ri = module.right_algebra.vertex_idempotents[bl[1]]
            comp = module.left_action[li] * (module.right_action[ri] * vecs)
            return module.double_block_proj(*bl) * comp
        if sides == "left":
            li = module.left_algebra.vertex_idempotents[bl[0]]
            return module.left_block_proj(bl[0]) * (module.left_action[li] * vecs)
        ri = module.right_algebra.vertex_idempotents[bl[0]]
        return module.right_block_proj(bl[0]) * (module.right_action[ri] * vecs)

    sizes = {bl: (tgt_basis[bl].cols, src_basis[bl].cols) for bl in blocks}
    offsets = {}
    total = 0
    for bl in blocks:
        offsets[bl] = total
        total += sizes[bl][0] * sizes[bl][1]
    if total == 0:
        return []

    rows: list[Matrix] = []
    for _, Lm, Ln in constraints:
        # constraint per block pair: F_tgt . (coords of Lm on m-blocks)
        #                          == (coords of Ln on n-blocks) . F_src
        for src_bl in blocks:
            mB_s = sizes[src_bl][1]
            nB_s = sizes[src_bl][0]
            if mB_s == 0:
                continue
            moved_m = Lm * src_basis[src_bl]
            moved_n = Ln * tgt_basis[src_bl] if nB_s else None
            for tgt_bl in blocks:
                nB_t, mB_t = sizes[tgt_bl]
                if nB_t == 0:
                    continue
                comp_m = project_onto(m, tgt_bl, moved_m) if mB_t else None
                comp_n = project_onto(n, tgt_bl, moved_n) if nB_s else None
                has_m = comp_m is not None and not comp_m.is_zero()
                has_n = comp_n is not None and not comp_n.is_zero()
                if not has_m and not has_n:
                    continue
                block_rows = Matrix.zeros(field, nB_t * mB_s, total)
                arr = block_rows.arr.copy()
                if has_m:
                    # vec_rm(F_tgt @ comp_m) = (I (x) comp_m^T) vec_rm(F_tgt)
                    term = Matrix.identity(field, nB_t).kron(comp_m.transpose())
                    off_t = offsets[tgt_bl]
                    arr[:, off_t:off_t + nB_t * mB_t] += term.arr
                if has_n:
                    # vec_rm(comp_n @ F_src) = (comp_n (x) I) vec_rm(F_src)
                    term = comp_n.kron(Matrix.identity(field, mB_s))
                    off_s = offsets[src_bl]
                    arr[:, off_s:off_s + nB_s * mB_s] -= term.arr
                rows.append(Matrix(field, arr))

    if rows:
        system = rows[0]
        for extra in rows[1:]:
            system = system.vstack(extra)
        null = system.nullspace()
    else:
        null = Matrix.identity(field, total)

    src_proj = {}
    for bl in blocks:
        if sides == "both":
            src_proj[bl] = m.double_block_proj(*bl)
        elif sides == "left":
            src_proj[bl] = m.left_block_proj(bl[0])
        else:
            src_proj[bl] = m.right_block_proj(bl[0])

    maps = []
    for j in range(null.cols):
        coeffs = null.column_vec(j)
        full = Matrix.zeros(field, n.dim, m.dim)
        for bl in blocks:
            nB, mB = sizes[bl]
            if nB == 0 or mB == 0:
                continue
            off = offsets[bl]
            block = field._zeros(nB, mB)
            for r in range(nB):
                for c in range(mB):
                    block[r, c] = coeffs.arr[off + r * mB + c, 0]
            full = full + tgt_basis[bl] * Matrix(field, block) * src_proj[bl]
        maps.append(BimoduleMap(m, n, full, sides=sides, validate=False))
    return maps


# ---------------------------------------------------------------------------
# projective splittings
# ---------------------------------------------------------------------------


@dataclass
class Splitting:
    """Identification of a projective one-sided module with ideal summands.

    side "right": M = (+)_t  e_{v_t} B  via phi(slot t: g) = p_t . g
    side "left":  M = (+)_t  A e_{v_t}  via phi(slot t: g) = g . p_t
    """

    side: str
    gens: list[Matrix]
    vertex_pos: list[int]
    phi: Matrix
    phi_inv: Matrix
    slot_offsets: list[int]
    slot_dims: list[int]
    cover_dim: int


def _splitting(m: Bimodule, side: str) -> Splitting | None:
    key = ("split", side)
    if key in m._cache:
        return m._cache[key]
    field = m.field
    alg = m.right_algebra if side == "right" else m.left_algebra
    act = m.right_action if side == "right" else m.left_action
    if m.dim == 0:
        sp = Splitting(side, [], [], Matrix.zeros(field, 0, 0),
                       Matrix.zeros(field, 0, 0), [], [], 0)
        m._cache[key] = sp
        return sp
    # span of M.rad (right) or rad.M (left)
    rad_cols = [act[r] for r in alg.radical_basis]
    rad = Matrix.stack_columns(field, rad_cols, m.dim)
    rad_basis = rad.image_basis()
    # candidates grouped by vertex
    cand_cols = [rad_basis]
    cand_meta: list[int] = []
    for v_pos in range(len(alg.vertex_idempotents)):
        blk = m.right_block(v_pos) if side == "right" else m.left_block(v_pos)
        cand_cols.append(blk)
        cand_meta.extend([v_pos] * blk.cols)
    stacked = Matrix.stack_columns(field, cand_cols, m.dim)
    _, pivots = stacked.rref()
    base = rad_basis.cols
    gens = []
    vertex_pos = []
    for p in pivots:
        if p >= base:
            gens.append(stacked.column_vec(p))
            vertex_pos.append(cand_meta[p - base])
    # cover dimension
    slot_dims = []
    for t, v_pos in enumerate(vertex_pos):
        v = alg.vertex_idempotents[v_pos]
        ideal = alg.right_ideal_basis(v) if side == "right" else alg.left_ideal_basis(v)
        slot_dims.append(ideal.cols)
    cover_dim = sum(slot_dims)
    if cover_dim != m.dim:
        m._cache[key] = None
        return None
    # phi: free module -> M
    cols = []
    act_of = m.right_action_of if side == "right" else m.left_action_of
    for t, v_pos in enumerate(vertex_pos):
        v = alg.vertex_idempotents[v_pos]
        ideal = alg.right_ideal_basis(v) if side == "right" else alg.left_ideal_basis(v)
        for j in range(ideal.cols):
            cols.append(act_of(ideal.column_vec(j)) * gens[t])
    phi = Matrix.stack_columns(field, cols, m.dim)
    if not phi.is_invertible():
        m._cache[key] = None
        return None
    offsets = []
    off = 0
    for d in slot_dims:
        offsets.append(off)
        off += d
    sp = Splitting(side, gens, vertex_pos, phi, phi.inverse(), offsets, slot_dims, cover_dim)
    m._cache[key] = sp
    return sp


def is_projective(m: Bimodule, side: str) -> bool:
    """Projectivity over one side, decided by the projective cover dimension."""
    if side not in ("left", "right"):
        raise BimoduleError("side must be 'left' or 'right'")
    return _splitting(m, side) is not None


def projective_cover_dim(m: Bimodule, side: str) -> int:
    """Dimension of the projective cover over one side (diagnostic)."""
    field = m.field
    alg = m.right_algebra if side == "right" else m.left_algebra
    act = m.right_action if side == "right" else m.left_action
    if m.dim == 0:
        return 0
    rad = Matrix.stack_columns(field, [act[r] for r in alg.radical_basis], m.dim)
    rad_basis = rad.image_basis()
    total = 0
    for v_pos in range(len(alg.vertex_idempotents)):
        blk = m.right_block(v_pos) if side == "right" else m.left_block(v_pos)
        both = rad_basis.hstack(blk) if blk.cols else rad_basis
        mult = both.rank() - rad_basis.rank()
        v = alg.vertex_idempotents[v_pos]
        ideal = alg.right_ideal_basis(v) if side == "right" else alg.left_ideal_basis(v)
        total += mult * ideal.cols
    return total


# ---------------------------------------------------------------------------
# one-sided duals with chosen dual bases
# ---------------------------------------------------------------------------


@dataclass
class DualData:
    """A dual bimodule with its evaluation and chosen dual basis.

    hom_matrices[i] is the map P -> B (or P -> A for left duals)
    realised by the i-th basis vector of the dual; generators g_t and
    cogenerators g_t^* satisfy sum_t g_t . g_t^*(x) = x (right side)
    or sum_t h_t^*(x) . h_t = x (left side).
    """

    bimodule: Bimodule
    hom_matrices: list[Matrix]
    generators: list[Matrix]
    cogenerators: list[Matrix]

    def evaluate(self, f_coords: Matrix, x: Matrix) -> Matrix:
        out = Matrix.zeros(f_coords.field, self.hom_matrices[0].rows, 1) if \
            self.hom_matrices else Matrix.zeros(f_coords.field, 0, 1)
        zero = f_coords.field.elem(0)
        for i, H in enumerate(self.hom_matrices):
            c = f_coords.arr[i, 0]
            if c != zero:
                out = out + (H * x).scale(c)
        return out


def right_dual(p: Bimodule) -> DualData:
    """Maps into the right algebra: an (A,B)-bimodule yields a (B,A)-bimodule."""
    sp = _splitting(p, "right")
    if sp is None:
        raise BimoduleError(
            f"right_dual needs a right-projective bimodule (cover dim "
            f"{projective_cover_dim(p, 'right')} != dim {p.dim})")
    A, B = p.left_algebra, p.right_algebra
    field = p.field
    # dual slots: B e_{v_t}
    slot_basis = []
    for v_pos in sp.vertex_pos:
        v = B.vertex_idempotents[v_pos]
        slot_basis.append(B.left_ideal_basis(v))
    dual_dim = sum(g.cols for g in slot_basis)
    dual_offsets = []
    off = 0
    for g in slot_basis:
        dual_offsets.append(off)
        off += g.cols

    # component maps  comp_t : P -> B, x |-> embed(slot t of phi_inv x)
    comp = []
    for t, v_pos in enumerate(sp.vertex_pos):
        v = B.vertex_idempotents[v_pos]
        E = B.right_ideal_basis(v)  # basis of e_v B
        rows = sp.phi_inv.submatrix(slice(sp.slot_offsets[t], sp.slot_offsets[t] + sp.slot_dims[t]),
                                    slice(0, p.dim))
        comp.append(E * rows)

    hom_matrices = []
    for t, G in enumerate(slot_basis):
        for j in range(G.cols):
            beta = G.column_vec(j)
            hom_matrices.append(B.left_action_of(beta) * comp[t])

    # actions on the dual
    slot_proj = [_left_inverse(G) for G in slot_basis]
    left_action = []
    for i in range(B.dim):
        blocks = []
        for t, G in enumerate(slot_basis):
            blocks.append(slot_proj[t] * (B.left_mult_matrix(i) * G))
        left_action.append(Matrix.block_diag(field, blocks))
    right_action = []
    for i in range(A.dim):
        mat = field._zeros(dual_dim, dual_dim)
        for s in range(len(sp.gens)):
            img = sp.phi_inv * (p.left_action[i] * sp.gens[s])
            for t in range(len(sp.gens)):
                v_t = B.vertex_idempotents[sp.vertex_pos[t]]
                E_t = B.right_ideal_basis(v_t)
                c_ts = E_t * img.submatrix(
                    slice(sp.slot_offsets[t], sp.slot_offsets[t] + sp.slot_dims[t]),
                    slice(0, 1))
                if c_ts.is_zero():
                    continue
                # beta |-> beta . c_ts maps slot t to slot s
                move = slot_proj[s] * (B.right_action_of(c_ts) * slot_basis[t]) \
                    if slot_basis[s].cols else None
                if move is None:
                    continue
                r0, c0 = dual_offsets[s], dual_offsets[t]
                block = move.arr
                if block.shape[0] and block.shape[1]:
                    sub = mat[r0:r0 + block.shape[0], c0:c0 + block.shape[1]]
                    mat[r0:r0 + block.shape[0], c0:c0 + block.shape[1]] = sub + block
        right_action.append(Matrix(field, mat))

    dual = Bimodule(B, A, left_action, right_action, dual_dim,
                    label=f"{p.label or 'P'}^v")
    cogens = []
    for t, v_pos in enumerate(sp.vertex_pos):
        v = B.vertex_idempotents[v_pos]
        G = slot_basis[t]
        coords = G.solve(Matrix.basis_vector(field, B.dim, v))
        if coords is None:
            raise BimoduleError("idempotent not in its own ideal (internal error)")
        vec = field._zeros(dual_dim, 1)
        for j in range(G.cols):
            vec[dual_offsets[t] + j, 0] = coords.arr[j, 0]
        cogens.append(Matrix(field, vec))
    return DualData(dual, hom_matrices, list(sp.gens), cogens)


def left_dual(p: Bimodule) -> DualData:
    """Maps into the left algebra: an (A,B)-bimodule yields a (B,A)-bimodule."""
    sp = _splitting(p, "left")
    if sp is None:
        raise BimoduleError(
            f"left_dual needs a left-projective bimodule (cover dim "
            f"{projective_cover_dim(p, 'left')} != dim {p.dim})")
    A, B = p.left_algebra, p.right_algebra
    field = p.field
    # dual slots: e_{w_t} A
    slot_basis = []
    for w_pos in sp.vertex_pos:
        w = A.vertex_idempotents[w_pos]
        slot_basis.append(A.right_ideal_basis(w))
    dual_dim = sum(g.cols for g in slot_basis)
    dual_offsets = []
    off = 0
    for g in slot_basis:
        dual_offsets.append(off)
        off += g.cols

    comp = []
    for t, w_pos in enumerate(sp.vertex_pos):
        w = A.vertex_idempotents[w_pos]
        E = A.left_ideal_basis(w)  # basis of A e_w
        rows = sp.phi_inv.submatrix(slice(sp.slot_offsets[t], sp.slot_offsets[t] + sp.slot_dims[t]),
                                    slice(0, p.dim))
        comp.append(E * rows)

    hom_matrices = []
    for t, G in enumerate(slot_basis):
        for j in range(G.cols):
            beta = G.column_vec(j)
            right_mult = Matrix.zeros(field, A.dim, A.dim)
            zero = field.elem(0)
            for i in range(A.dim):
                c = beta.arr[i, 0]
                if c != zero:
                    right_mult = right_mult + A.right_mult_matrix(i).scale(c)
            hom_matrices.append(right_mult * comp[t])

    slot_proj = [_left_inverse(G) for G in slot_basis]
    # right action: block diagonal beta |-> beta . a
    right_action = []
    for i in range(A.dim):
        blocks = []
        for t, G in enumerate(slot_basis):
            blocks.append(slot_proj[t] * (A.right_mult_matrix(i) * G))
        right_action.append(Matrix.block_diag(field, blocks))
    # left action: b . f via  c_{st} = comp_t(phi_inv(q_s . b))
    left_action = []
    for i in range(B.dim):
        mat = field._zeros(dual_dim, dual_dim)
        for s in range(len(sp.gens)):
            img = sp.phi_inv * (p.right_action[i] * sp.gens[s])
            for t in range(len(sp.gens)):
                w_t = A.vertex_idempotents[sp.vertex_pos[t]]
                E_t = A.left_ideal_basis(w_t)
                c_st = E_t * img.submatrix(
                    slice(sp.slot_offsets[t], sp.slot_offsets[t] + sp.slot_dims[t]),
                    slice(0, 1))
                if c_st.is_zero():
                    continue
                move = slot_proj[s] * (A.left_action_of(c_st) * slot_basis[t]) \
                    if slot_basis[s].cols else None
                if move is None:
                    continue
                r0, c0 = dual_offsets[s], dual_offsets[t]
                block = move.arr
                if block.shape[0] and block.shape[1]:
                    sub = mat[r0:r0 + block.shape[0], c0:c0 + block.shape[1]]
                    mat[r0:r0 + block.shape[0], c0:c0 + block.shape[1]] = sub + block
        left_action.append(Matrix(field, mat))

    dual = Bimodule(B, A, left_action, right_action, dual_dim,
                    label=f"^v{p.label or 'P'}")
    cogens = []
    for t, w_pos in enumerate(sp.vertex_pos):
        w = A.vertex_idempotents[w_pos]
        G = slot_basis[t]
        coords = G.solve(Matrix.basis_vector(field, A.dim, w))
        if coords is None:
            raise BimoduleError("idempotent not in its own ideal (internal error)")
        vec = field._zeros(dual_dim, 1)
        for j in range(G.cols):
            vec[dual_offsets[t] + j, 0] = coords.arr[j, 0]
        cogens.append(Matrix(field, vec))
    return DualData(dual, hom_matrices, list(sp.gens), cogens)


# ---------------------------------------------------------------------------
# tensor over the middle algebra
# ---------------------------------------------------------------------------


class TensorData:
    """A concrete model of m (x)_B n with monomial basis and coordinates.

    Each basis vector of the resulting bimodule is the class of a pure
    tensor (available through monomials()); tensor_coords expresses any
    pure tensor in the chosen basis, and induced() transports a pair of
    equivariant maps to a map of tensor products.
    """

    def __init__(self, m: Bimodule, n: Bimodule):
        if m.right_algebra.mult != n.left_algebra.mult:
            raise BimoduleError("tensor factors do not share the middle algebra")
        self.m = m
        self.n = n
        self.field = m.field

    def monomials(self) -> list[tuple[Matrix, Matrix]]:
        raise NotImplementedError

    def tensor_coords(self, mv: Matrix, nv: Matrix) -> Matrix:
        raise NotImplementedError

    @property
    def bimodule(self) -> Bimodule:
        raise NotImplementedError

    def induced(self, f: BimoduleMap, g: BimoduleMap, target: "TensorData") -> BimoduleMap:
        """The map f (x) g between tensor products (f, g equivariant)."""
        cols = []
        for (xv, yv) in self.monomials():
            cols.append(target.tensor_coords(f.matrix * xv, g.matrix * yv))
        mat = Matrix.stack_columns(self.field, cols, target.bimodule.dim)
        return BimoduleMap(self.bimodule, target.bimodule, mat, validate=False)


class _SplitTensor(TensorData):
    """Model of m (x)_B n through a right-projective splitting of m."""

    def __init__(self, m: Bimodule, n: Bimodule, sp: Splitting):
        super().__init__(m, n)
        self.sp = sp
        B = m.right_algebra
        field = self.field
        self._nblocks = [n.left_block(v_pos) for v_pos in sp.vertex_pos]
        self._nprojs = [n.left_block_proj(v_pos) for v_pos in sp.vertex_pos]
        self._comp = []
        for t, v_pos in enumerate(sp.vertex_pos):
            v = B.vertex_idempotents[v_pos]
            E = B.right_ideal_basis(v)
            rows = sp.phi_inv.submatrix(
                slice(sp.slot_offsets[t], sp.slot_offsets[t] + sp.slot_dims[t]),
                slice(0, m.dim))
            self._comp.append(E * rows)
        self._dims = [blk.cols for blk in self._nblocks]
        self._offsets = []
        off = 0
        for d in self._dims:
            self._offsets.append(off)
            off += d
        self._dim = off

        A, C = m.left_algebra, n.right_algebra
        # right action of C: block diagonal on e_{v_t} n
        right_action = []
        for i in range(C.dim):
            blocks = [self._nprojs[t] * (n.right_action[i] * self._nblocks[t])
                      for t in range(len(sp.gens))]
            right_action.append(Matrix.block_diag(field, blocks))
        # left action of A: a.(p_t (x) y) = sum_s p_s (x) c_st.y where c_st is
        # the slot-s component of phi_inv(a.p_t)
        nslots = len(sp.gens)
        left_action = []
        for i in range(A.dim):
            mat = field._zeros(self._dim, self._dim)
            for t in range(nslots):
                if self._dims[t] == 0:
                    continue
                img = m.left_action[i] * sp.gens[t]
                for s in range(nslots):
                    if self._dims[s] == 0:
                        continue
                    c_st = self._comp[s] * img
                    if c_st.is_zero():
                        continue
                    move = self._nprojs[s] * (n.left_action_of(c_st) * self._nblocks[t])
                    if move.is_zero():
                        continue
                    r0, c0 = self._offsets[s], self._offsets[t]
                    mat[r0:r0 + self._dims[s], c0:c0 + self._dims[t]] += move.arr
            left_action.append(Matrix(field, mat))
        self._bimodule = Bimodule(A, C, left_action, right_action, self._dim,
                                  label=f"{m.label or 'M'}(x){n.label or 'N'}")

    @property
    def bimodule(self) -> Bimodule:
        return self._bimodule

    def monomials(self):
        out = []
        for t, blk in enumerate(self._nblocks):
            for j in range(blk.cols):
                out.append((self.sp.gens[t], blk.column_vec(j)))
        return out

    def tensor_coords(self, mv: Matrix, nv: Matrix) -> Matrix:
        field = self.field
        out = field._zeros(self._dim, 1)
        for t in range(len(self.sp.gens)):
            c = self._comp[t] * mv          # element of e_{v_t} B
            if c.is_zero():
                continue
            moved = self.n.left_action_of(c) * nv
            coords = self._nprojs[t] * moved
            d = self._dims[t]
            if d:
                out[self._offsets[t]:self._offsets[t] + d, 0:1] = coords.arr
        return Matrix(field, out)


class _QuotientTensor(TensorData):
    """Generic model: blocks over the middle vertices, arrow relations, rref."""

    def __init__(self, m: Bimodule, n: Bimodule):
        super().__init__(m, n)
        B = m.right_algebra
        field = self.field
        nverts = len(B.vertex_idempotents)
        self._mblocks = [m.right_block(v) for v in range(nverts)]
        self._mprojs = [m.right_block_proj(v) for v in range(nverts)]
        self._nblocks = [n.left_block(v) for v in range(nverts)]
        self._nprojs = [n.left_block_proj(v) for v in range(nverts)]
        self._bdims = [self._mblocks[v].cols * self._nblocks[v].cols for v in range(nverts)]
        self._boffsets = []
        off = 0
        for d in self._bdims:
            self._boffsets.append(off)
            off += d
        self._model_dim = off

        rel_rows = []
        for g in _radical_generator_indices(B):
            Rg = m.right_action[g]
            Lg = n.left_action[g]
            for i in range(m.dim):
                xv = Matrix.basis_vector(field, m.dim, i)
                xr = Rg * xv
                for j in range(n.dim):
                    yv = Matrix.basis_vector(field, n.dim, j)
                    vec = self._model_coords(xr, yv) - self._model_coords(xv, Lg * yv)
                    if not vec.is_zero():
                        rel_rows.append(vec.transpose())
        if rel_rows:
            rel = rel_rows[0]
            for r in rel_rows[1:]:
                rel = rel.vstack(r)
            R, pivots = rel.rref()
            self._pivots = list(pivots)
            self._rel_rref = R
        else:
            self._pivots = []
            self._rel_rref = Matrix.zeros(field, 0, self._model_dim)
        pivot_set = set(self._pivots)
        self._free = [c for c in range(self._model_dim) if c not in pivot_set]
        self._dim = len(self._free)

        A, C = m.left_algebra, n.right_algebra
        monos = self.monomials()
        left_action = []
        for i in range(A.dim):
            cols = [self.tensor_coords(m.left_action[i] * xv, yv) for (xv, yv) in monos]
            left_action.append(Matrix.stack_columns(field, cols, self._dim))
        right_action = []
        for i in range(C.dim):
            cols = [self.tensor_coords(xv, n.right_action[i] * yv) for (xv, yv) in monos]
            right_action.append(Matrix.stack_columns(field, cols, self._dim))
        self._bimodule = Bimodule(A, C, left_action, right_action, self._dim,
                                  label=f"{m.label or 'M'}(x){n.label or 'N'}")

    @property
    def bimodule(self) -> Bimodule:
        return self._bimodule

    def _model_coords(self, mv: Matrix, nv: Matrix) -> Matrix:
        """Coordinates of the class of mv (x) nv in the block model."""
        field = self.field
        out = field._zeros(self._model_dim, 1)
        for v in range(len(self._mblocks)):
            mc = self._mprojs[v] * (self.m.right_action[self.m.right_algebra.vertex_idempotents[v]] * mv)
            nc = self._nprojs[v] * (self.n.left_action[self.n.left_algebra.vertex_idempotents[v]] * nv)
            if mc.is_zero() or nc.is_zero():
                continue
            block = mc.kron(nc)
            d = self._bdims[v]
            if d:
                out[self._boffsets[v]:self._boffsets[v] + d, 0:1] = block.arr
        return Matrix(field, out)

    def _reduce(self, vec: Matrix) -> Matrix:
        """Eliminate pivot coordinates, then restrict to the free ones."""
        field = self.field
        arr = vec.arr.copy()
        for i, p in enumerate(self._pivots):
            c = arr[p, 0]
            if c != field.elem(0):
                arr[:, 0] -= c * self._rel_rref.arr[i, :]
        arr = field._normalize(arr)
        out = field._zeros(self._dim, 1)
        for k, c in enumerate(self._free):
            out[k, 0] = arr[c, 0]
        return Matrix(field, out)

    def monomials(self):
        out = []
        for v in range(len(self._mblocks)):
            mb, nb = self._mblocks[v], self._nblocks[v]
            for i in range(mb.cols):
                for j in range(nb.cols):
                    out.append((mb.column_vec(i), nb.column_vec(j)))
        # keep only free coordinates' monomials
        return [out[c] for c in self._free]

    def tensor_coords(self, mv: Matrix, nv: Matrix) -> Matrix:
        return self._reduce(self._model_coords(mv, nv))


def tensor_over_middle(m: Bimodule, n: Bimodule) -> TensorData:
    """The tensor product m (x)_B n as a bimodule with retained projection.

    Uses the projective-splitting model when m is right-projective
    (every kernel term is) and the generic block quotient otherwise.
    """
    sp = _splitting(m, "right")
    if sp is not None:
        return _SplitTensor(m, n, sp)
    return _QuotientTensor(m, n)
