"""Chain modules for graph states and the symmetric group action on them.

The module attached to a state with component weights (b_1, .., b_r) is
induced from a tensor product of exterior algebras of standard
representations.  Concretely, with N the total weight, a basis element is

  * an ordered set partition (D_1, .., D_r) of the points {0..N-1} with
    |D_t| = b_t (slot order follows the state's component order), and
  * per slot a subset S_t of D_t minus its minimum,

standing for the wedge monomial over factors e_x - e_{min D_t}, x in S_t.
The degree is j = sum |S_t|.  The symmetric group permutes points; images
are rewritten in the target block's min-anchored basis.

Per-edge differentials split one block D into (A, B); the component map
rewrites each wedge factor in a basis adapted to the split and deletes
every term containing the barycenter difference
u = mean(A) - mean(B), landing in the tensor of the two smaller exterior
algebras.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from ._rat import QQ, as_int
from .characters import character_table
from .graphs import State, VertexWeightedGraph
from .partitions import hook_dimension
from .perms import (
    adjacent_transpositions,
    all_permutations,
    class_representative,
    cycle_type,
)
from .linalg import SparseMat, image_rref, vec_add

CHAIN_MAX_POINTS = 8
PROJECTOR_MAX_POINTS = 7

Label = tuple  # ((D_1, .., D_r), (S_1, .., S_r)) as nested tuples


@dataclass(frozen=True)
class PointMap:
    """Assignment of a contiguous interval of points to each vertex."""

    graph: VertexWeightedGraph
    starts: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.graph.total_weight

    def interval(self, vertex: int) -> tuple[int, ...]:
        s = self.starts[vertex]
        return tuple(range(s, s + self.graph.weights[vertex]))

    def block_points(self, block: tuple[int, ...]) -> tuple[int, ...]:
        pts: list[int] = []
        for v in block:
            pts.extend(self.interval(v))
        return tuple(sorted(pts))


def point_map(g: VertexWeightedGraph) -> PointMap:
    starts = []
    s = 0
    for w in g.weights:
        starts.append(s)
        s += w
    return PointMap(g, tuple(starts))


def _wedge_multiply(monos: dict, factor) -> dict:
    """Wedge each monomial (sorted key tuple) with a 1-form.

    `factor` is a list of (key, coefficient); keys must be comparable.
    Insertion uses the sign of moving the new key from the right end to
    its sorted position.
    """
    out: dict = {}
    for mono, c in monos.items():
        for key, a in factor:
            if key in mono:
                continue
            pos = 0
            while pos < len(mono) and mono[pos] < key:
                pos += 1
            sign = -1 if (len(mono) - pos) % 2 else 1
            new = mono[:pos] + (key,) + mono[pos:]
            val = out.get(new, QQ(0)) + sign * c * a
            if val == 0:
                out.pop(new, None)
            else:
                out[new] = val
    return out


def _ordered_set_partitions(points: tuple[int, ...], sizes: tuple[int, ...]):
    if not sizes:
        yield ()
        return
    first_size = sizes[0]
    for chosen in combinations(points, first_size):
        rest = tuple(x for x in points if x not in set(chosen))
        for tail in _ordered_set_partitions(rest, sizes[1:]):
            yield (chosen,) + tail


def _subsets(block: tuple[int, ...]):
    rest = block[1:]
    for r in range(len(rest) + 1):
        yield from combinations(rest, r)


class LabelBasis:
    """An ordered basis of labels with an action given by `act_fn`."""

    def __init__(self, labels, act_fn):
        self.labels = list(labels)
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        self.act_fn = act_fn

    @property
    def dim(self) -> int:
        return len(self.labels)

    def action_matrix(self, perm) -> SparseMat:
        mat = SparseMat(self.dim, self.dim)
        for col, lab in enumerate(self.labels):
            for tgt, c in self.act_fn(perm, lab).items():
                mat.add_entry(self.index[tgt], col, c)
        return mat

    def character(self, perm) -> QQ:
        total = QQ(0)
        for lab in self.labels:
            total += self.act_fn(perm, lab).get(lab, QQ(0))
        return total

    def act_vector(self, perm, vec: dict) -> dict:
        out: dict = {}
        for pos, c in vec.items():
            for tgt, a in self.act_fn(perm, self.labels[pos]).items():
                k = self.index[tgt]
                val = out.get(k, QQ(0)) + c * a
                if val == 0:
                    out.pop(k, None)
                else:
                    out[k] = val
        return out


def act_on_label(perm: tuple[int, ...], label: Label) -> dict:
    """Image of a basis label under a point permutation.

    Blocks stay in their slots; wedge factors are rewritten in the image
    block's min-anchored basis and re-sorted, producing a signed rational
    combination of labels.
    """
    blocks, subsets = label
    result: dict = {((), ()): QQ(1)}
    for D, S in zip(blocks, subsets):
        new_block = tuple(sorted(perm[x] for x in D))
        anchor = new_block[0]
        old_anchor_image = perm[D[0]]
        monos: dict = {(): QQ(1)}
        for x in S:
            gx = perm[x]
            factor = []
            if gx != anchor:
                factor.append((gx, QQ(1)))
            if old_anchor_image != anchor:
                factor.append((old_anchor_image, QQ(-1)))
            monos = _wedge_multiply(monos, factor)
            if not monos:
                break
        new_result: dict = {}
        for (blocks_acc, subs_acc), c in result.items():
            for mono, a in monos.items():
                key = (blocks_acc + (new_block,), subs_acc + (mono,))
                new_result[key] = c * a
        result = new_result
        if not result:
            return {}
    return result


def split_projection(
    block: tuple[int, ...],
    subset: tuple[int, ...],
    part_a: tuple[int, ...],
    part_b: tuple[int, ...],
) -> dict:
    """Project a wedge monomial on `block` onto the split (part_a, part_b).

    Each factor e_x - e_{min block} is rewritten in the basis made of the
    two parts' anchored vectors together with the barycenter difference
    u = mean(part_a) - mean(part_b); terms containing u are dropped.
    Returns {(subset_a, subset_b): coefficient}; degree is preserved.
    """
    set_a, set_b = set(part_a), set(part_b)
    if set_a & set_b or set_a | set_b != set(block):
        raise ValueError("parts must partition the block")
    a = block[0]
    alpha, beta = part_a[0], part_b[0]
    la, lb = len(part_a), len(part_b)
    monos: dict = {(): QQ(1)}
    for x in subset:
        coords = {x: QQ(1), a: QQ(-1)}
        s = (QQ(1) if x in set_a else QQ(0)) - (QQ(1) if a in set_a else QQ(0))
        if s != 0:
            for y in part_a:
                coords[y] = coords.get(y, QQ(0)) - s / la
            for z in part_b:
                coords[z] = coords.get(z, QQ(0)) + s / lb
        factor = []
        for y in part_a:
            if y != alpha and coords.get(y, 0) != 0:
                factor.append(((0, y), coords[y]))
        for z in part_b:
            if z != beta and coords.get(z, 0) != 0:
                factor.append(((1, z), coords[z]))
        monos = _wedge_multiply(monos, factor)
        if not monos:
            return {}
    out: dict = {}
    for mono, c in monos.items():
        sub_a = tuple(pt for part, pt in mono if part == 0)
        sub_b = tuple(pt for part, pt in mono if part == 1)
        out[(sub_a, sub_b)] = c
    return out


class ChainSpace:
    """Graded basis of the chain module of one state."""

    def __init__(self, state: State, pmap: PointMap | None = None,
                 max_points: int | None = None):
        g = state.graph
        n_points = g.total_weight
        bound = CHAIN_MAX_POINTS if max_points is None else max_points
        if n_points > bound:
            raise ValueError(
                f"total weight {n_points} exceeds the configured bound {bound}"
            )
        self.state = state
        self.pmap = pmap or point_map(g)
        self.n_points = n_points
        self.reference_blocks = tuple(
            self.pmap.block_points(blk) for blk in state.blocks
        )
        sizes = state.block_weights
        points = tuple(range(n_points))
        labels_by_j: dict[int, list[Label]] = {}
        for blocks in _ordered_set_partitions(points, sizes):
            for subs in product(*(_subsets(D) for D in blocks)):
                j = sum(len(s) for s in subs)
                labels_by_j.setdefault(j, []).append((blocks, subs))
        self.bases: dict[int, LabelBasis] = {
            j: LabelBasis(labels, act_on_label)
            for j, labels in sorted(labels_by_j.items())
        }

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.bases.values())

    def graded_dims(self) -> dict[int, int]:
        return {j: b.dim for j, b in self.bases.items()}

    def expected_dim(self) -> int:
        sizes = self.state.block_weights
        d = factorial(self.n_points)
        for b in sizes:
            d //= factorial(b)
        for b in sizes:
            d *= 2 ** (b - 1)
        return d

    def dump_lines(self) -> list[str]:
        """Debug dump: one line per basis element, grouped by degree."""
        lines = []
        for j, basis in self.bases.items():
            for lab in basis.labels:
                blocks, subs = lab
                btxt = "|".join(",".join(map(str, D)) for D in blocks)
                stxt = "|".join(",".join(map(str, S)) for S in subs)
                lines.append(f"j={j} D=({btxt}) S=({stxt})")
        return lines


@lru_cache(maxsize=4096)
def chain_space(state: State, max_points: int | None = None) -> ChainSpace:
    return ChainSpace(state, max_points=max_points)


class IsotypicProjector:
    """Central idempotent P = (f/n!) sum_g chi(g^{-1}) g for one irreducible.

    Application sums over the whole symmetric group, so it is gated to
    small point counts; the homology pipeline extracts multiplicities from
    class-function traces instead and uses this class as a reference.
    """

    def __init__(self, lam: tuple[int, ...], n_points: int,
                 allow_large: bool = False):
        if sum(lam) != n_points:
            raise ValueError("partition size must equal the point count")
        if n_points > PROJECTOR_MAX_POINTS and not allow_large:
            raise ValueError(
                f"{n_points} points exceeds the projector bound "
                f"{PROJECTOR_MAX_POINTS}; pass allow_large=True to override"
            )
        self.lam = lam
        self.n_points = n_points
        self.table = character_table(n_points)
        self.dim = hook_dimension(lam)

    def apply(self, basis: LabelBasis, vec: dict) -> dict:
        out: dict = {}
        for g in all_permutations(self.n_points):
            chi = self.table.chi(self.lam, cycle_type(g))
            if chi == 0:
                continue
            out = vec_add(out, basis.act_vector(g, vec), QQ(chi))
        scale = QQ(self.dim, factorial(self.n_points))
        return {k: scale * v for k, v in out.items() if v != 0}


def class_data(n_points: int):
    """Conjugacy class representatives with sizes, by cycle type."""
    table = character_table(n_points)
    reps = {}
    for mu in table.partitions:
        reps[mu] = class_representative(mu)
    return table, reps


def basis_characters(basis: LabelBasis, n_points: int) -> dict:
    """Character of the representation on `basis`, per cycle type."""
    table, reps = class_data(n_points)
    return {mu: basis.character(reps[mu]) for mu in table.partitions}


def multiplicities_from_characters(char: dict, n_points: int) -> dict:
    """Decompose a character (given per class) into irreducibles."""
    table = character_table(n_points)
    out = {}
    for lam in table.partitions:
        total = QQ(0)
        for mu in table.partitions:
            total += char[mu] * table.chi(lam, mu) / QQ(table.z[mu])
        if total != 0:
            out[lam] = as_int(total)
            if out[lam] < 0:
                raise ValueError(f"negative multiplicity at {lam}")
    return out


def image_characters(mat: SparseMat, codomain: LabelBasis,
                     n_points: int) -> tuple[int, dict]:
    """Rank of `mat` plus the character of its image, per cycle type.

    Uses a reduced-echelon image basis B: the image is invariant, B has
    identity at its pivot rows, so trace(g|im) reads off coordinate
    pivot_k of g . b_k.
    """
    pivots, cols = image_rref(mat)
    table, reps = class_data(n_points)
    chars = {}
    for mu in table.partitions:
        g = reps[mu]
        total = QQ(0)
        for p, col in zip(pivots, cols):
            vec = codomain.act_vector(g, col)
            total += vec.get(p, QQ(0))
        chars[mu] = total
    return len(pivots), chars


def check_equivariance(mat: SparseMat, domain: LabelBasis,
                       codomain: LabelBasis, n_points: int) -> None:
    for g in adjacent_transpositions(n_points):
        left = codomain.action_matrix(g).matmul(mat)
        right = mat.matmul(domain.action_matrix(g))
        if left != right:
            raise AssertionError(
                f"map is not equivariant under transposition {g}"
            )


def isotypic_rank(projector: IsotypicProjector, equivariant_mat) -> tuple[int, int]:
    """(dimension of the isotypic part of the domain, rank of M there).

    `equivariant_mat` must expose .mat, .domain and .codomain as
    LabelBasis objects.  Equivariance is checked on generators.  Both
    returned values equal what applying the literal projector would give:
    the domain trace of P, and the rank of M composed with P; they are
    computed from class-function traces and are multiples of the
    irreducible's dimension.
    """
    n = projector.n_points
    mat = equivariant_mat.mat
    domain, codomain = equivariant_mat.domain, equivariant_mat.codomain
    check_equivariance(mat, domain, codomain, n)
    table = character_table(n)
    lam = projector.lam
    dom_char = basis_characters(domain, n)
    dom_mult = QQ(0)
    for mu in table.partitions:
        dom_mult += dom_char[mu] * table.chi(lam, mu) / QQ(table.z[mu])
    _, im_char = image_characters(mat, codomain, n)
    im_mult = QQ(0)
    for mu in table.partitions:
        im_mult += im_char[mu] * table.chi(lam, mu) / QQ(table.z[mu])
    f = projector.dim
    return f * as_int(dom_mult), f * as_int(im_mult)
