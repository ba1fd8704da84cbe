"""Built-in algebras, the JSON interchange format, and exhaustive censuses.

The census enumerates every structure-constant tensor of a given dimension
over a fixed field (raw, basis-dependent, no Lie-isomorphism dedup),
filters to the valid non-abelian ones, and groups the resulting graphs by
graph isomorphism so structurally distinct algebras with the same graph
surface automatically.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .config import DEFAULT_GUARDS, Guards
from .field import GF, FieldError
from .graph import NCGraph, analyze, build_graph, is_isomorphic
from .lie import GuardExceeded, LieAlgebra, assert_valid, validate
from .linalg import Vec


class CatalogError(ValueError):
    """Malformed algebra specification file or unknown builtin."""


# -- constructors -----------------------------------------------------------


def abelian(field: GF, dim: int) -> LieAlgebra:
    return LieAlgebra.from_brackets(field, dim, {})


def heisenberg(field: GF) -> LieAlgebra:
    """dim 3, [x, y] = z, z central."""
    return assert_valid(LieAlgebra.from_brackets(field, 3, {(0, 1): (0, 0, 1)}))


def affine2(field: GF) -> LieAlgebra:
    """The 2-dimensional non-abelian algebra, [a, b] = a."""
    return assert_valid(LieAlgebra.from_brackets(field, 2, {(0, 1): (1, 0)}))


def sl2(field: GF) -> LieAlgebra:
    """Basis (x, y, h): [x, y] = h, [h, x] = 2x, [h, y] = -2y.

    Over characteristic 2 the element h degenerates to a central element;
    the center is always computed, never assumed.
    """
    p = field.p
    two = 2 % p
    return assert_valid(
        LieAlgebra.from_brackets(
            field,
            3,
            {
                (0, 1): (0, 0, 1),
                (0, 2): (field.neg(two), 0, 0),  # [x, h] = -2x
                (1, 2): (0, two, 0),             # [y, h] = 2y
            },
        )
    )


def gl2(field: GF) -> LieAlgebra:
    """2x2 matrices under the commutator; basis E11, E12, E21, E22."""
    idx = {(a, b): 2 * a + b for a in range(2) for b in range(2)}
    entries: dict[tuple[int, int], Vec] = {}
    pairs = sorted(idx.items(), key=lambda kv: kv[1])
    for (ab, i) in pairs:
        for (cd, j) in pairs:
            if i >= j:
                continue
            a, b = ab
            c, d = cd
            vec = [0, 0, 0, 0]
            if b == c:  # E_ab E_cd = E_ad
                k = idx[(a, d)]
                vec[k] = field.add(vec[k], 1)
            if d == a:  # E_cd E_ab = E_cb
                k = idx[(c, b)]
                vec[k] = field.sub(vec[k], 1)
            if any(vec):
                entries[(i, j)] = tuple(vec)
    return assert_valid(LieAlgebra.from_brackets(field, 4, entries))


def twin_nilpotent() -> LieAlgebra:
    """First member of the fixed F_2 twin pair: [x, y] = z (nilpotent, class 2).

    The twins have isomorphic non-commuting graphs but are not isomorphic
    as algebras, witnessing that the graph does not determine the algebra.
    """
    return heisenberg(GF(2))


def twin_solvable() -> LieAlgebra:
    """Second member of the twin pair: [a, b] = a with an inert c (solvable,
    not nilpotent)."""
    return assert_valid(LieAlgebra.from_brackets(GF(2), 3, {(0, 1): (1, 0, 0)}))


# name -> (factory, takes_field)
BUILTINS: dict[str, tuple[Callable[..., LieAlgebra], bool]] = {
    "heisenberg": (heisenberg, True),
    "affine2": (affine2, True),
    "sl2": (sl2, True),
    "gl2": (gl2, True),
    "twin_nilpotent": (twin_nilpotent, False),
    "twin_solvable": (twin_solvable, False),
}


def make_builtin(name: str, field: GF | None = None) -> LieAlgebra:
    try:
        factory, takes_field = BUILTINS[name]
    except KeyError:
        raise CatalogError(
            f"unknown builtin {name!r}; available: {', '.join(sorted(BUILTINS))}"
        ) from None
    if takes_field:
        if field is None:
            raise CatalogError(f"builtin {name!r} requires a field (use --q)")
        return factory(field)
    L = factory()
    if field is not None and field != L.field:
        raise CatalogError(f"builtin {name!r} is fixed over F_2")
    return L


# -- json interchange ---------------------------------------------------------


def _encode_scalar(field: GF, a: int):
    return a if field.m == 1 else list(field.coeffs(a))


def _decode_scalar(field: GF, obj) -> int:
    if field.m == 1:
        if not isinstance(obj, int) or not 0 <= obj < field.q:
            raise CatalogError(f"scalar {obj!r} is not an element of F_{field.q}")
        return obj
    if not isinstance(obj, list) or len(obj) > field.m:
        raise CatalogError(
            f"scalar {obj!r} must be a coefficient list of length <= {field.m}"
        )
    if any(not isinstance(c, int) or not 0 <= c < field.p for c in obj):
        raise CatalogError(f"scalar coefficients {obj!r} out of range mod {field.p}")
    return field.from_coeffs(obj)


def to_spec_json(L: LieAlgebra, name: str = "algebra") -> str:
    """Serialize to the interchange schema (upper-triangular entries only)."""
    field_obj: dict = {"p": L.field.p, "m": L.field.m}
    if L.field.m > 1:
        field_obj["modulus"] = list(L.field.modulus)
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = L.sc[i][j]
            if any(v):
                brackets.append(
                    {"i": i, "j": j, "value": [_encode_scalar(L.field, c) for c in v]}
                )
    doc = {"name": name, "field": field_obj, "dim": L.dim, "brackets": brackets}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def from_spec_json(text: str) -> tuple[LieAlgebra, str]:
    """Parse, antisymmetrize and validate an algebra specification.

    Raises CatalogError on schema problems and InvalidAlgebra (with the
    violating triple) when the tensor fails the Lie axioms.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CatalogError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise CatalogError("top-level value must be an object")
    for key in ("field", "dim", "brackets"):
        if key not in doc:
            raise CatalogError(f"missing required key {key!r}")
    name = doc.get("name", "algebra")
    fobj = doc["field"]
    if not isinstance(fobj, dict) or "p" not in fobj:
        raise CatalogError("field must be an object with at least a prime p")
    try:
        field = GF(fobj["p"], fobj.get("m", 1), fobj.get("modulus"))
    except FieldError as e:
        raise CatalogError(f"bad field: {e}") from None
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise CatalogError(f"dim must be a non-negative integer, got {dim!r}")
    entries: dict[tuple[int, int], Vec] = {}
    if not isinstance(doc["brackets"], list):
        raise CatalogError("brackets must be a list")
    for pos, item in enumerate(doc["brackets"]):
        if not isinstance(item, dict) or not {"i", "j", "value"} <= set(item):
            raise CatalogError(f"bracket entry {pos}: need keys i, j, value")
        i, j, value = item["i"], item["j"], item["value"]
        if not isinstance(i, int) or not isinstance(j, int):
            raise CatalogError(f"bracket entry {pos}: indices must be integers")
        if i == j:
            raise CatalogError(
                f"bracket entry {pos}: i == j == {i} with a value violates the "
                "alternating axiom; diagonal entries must be omitted"
            )
        if not (0 <= i < j < dim):
            raise CatalogError(
                f"bracket entry {pos}: require 0 <= i < j < dim, got ({i}, {j})"
            )
        if (i, j) in entries:
            raise CatalogError(f"bracket entry {pos}: duplicate pair ({i}, {j})")
        if not isinstance(value, list) or len(value) != dim:
            raise CatalogError(f"bracket entry {pos}: value must be a list of {dim} scalars")
        entries[(i, j)] = tuple(_decode_scalar(field, c) for c in value)
    L = LieAlgebra.from_brackets(field, dim, entries)
    return assert_valid(L), name


def fingerprint(L: LieAlgebra) -> str:
    """Stable identity of (field, dim, tensor)."""
    doc = {
        "p": L.field.p,
        "m": L.field.m,
        "modulus": list(L.field.modulus) if L.field.modulus else None,
        "dim": L.dim,
        "sc": [[list(v) for v in row] for row in L.sc],
    }
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


# -- enumeration ----------------------------------------------------------------


def pair_order(dim: int) -> list[tuple[int, int]]:
    """Upper-triangular index pairs in the fixed enumeration order."""
    return [(i, j) for j in range(1, dim) for i in range(j)]


def candidate_count(dim: int, field: GF) -> int:
    return (field.q**dim) ** len(pair_order(dim))


def enumerate_brackets(
    dim: int,
    field: GF,
    non_abelian_only: bool = False,
    guard: int = 2**24,
    index_range: tuple[int, int] | None = None,
) -> Iterator[LieAlgebra]:
    """Stream the valid structure tensors of the given dimension.

    Candidates are all assignments of a vector to each pair i < j
    (antisymmetric completion implicit); exactly those passing the Jacobi
    filter are yielded, in a fixed order indexed by the candidate number.
    """
    pairs = pair_order(dim)
    vectors = list(product(field.elements(), repeat=dim))
    base = len(vectors)
    total = base ** len(pairs)
    if total > guard:
        raise GuardExceeded(
            f"enumeration of {total} candidate tensors exceeds the guard {guard}"
        )
    lo, hi = index_range if index_range is not None else (0, total)
    lo, hi = max(lo, 0), min(hi, total)
    npairs = len(pairs)
    for idx in range(lo, hi):
        if non_abelian_only and idx == 0:
            continue  # index 0 is the all-zero (abelian) tensor
        rem = idx
        digits = [0] * npairs
        for t in range(npairs - 1, -1, -1):
            digits[t] = rem % base
            rem //= base
        entries = {pairs[t]: vectors[digits[t]] for t in range(npairs)}
        L = LieAlgebra.from_brackets(field, dim, entries)
        if validate(L) is None:
            yield L


def enumeration_counts(dim: int, field: GF, guard: int = 2**24) -> tuple[int, int, int]:
    """(candidates, valid, valid non-abelian) for the full enumeration."""
    total = candidate_count(dim, field)
    valid = 0
    non_abelian = 0
    for L in enumerate_brackets(dim, field, guard=guard):
        valid += 1
        if not L.is_abelian:
            non_abelian += 1
    return total, valid, non_abelian


# -- census -----------------------------------------------------------------------


@dataclass
class CensusEntry:
    algebra: LieAlgebra
    graph: NCGraph
    record: dict


@dataclass
class CensusResult:
    dim: int
    field: GF
    candidates: int
    valid: int
    non_abelian: int
    entries: list[CensusEntry]
    classes: list[dict]


def _census_record(L: LieAlgebra, g: NCGraph, guards: Guards) -> dict:
    series = L.series
    try:
        ct = L.is_ct(guards.elements)
        ac = L.is_ac(guards.elements)
    except GuardExceeded:
        ct = ac = None
    return {
        "fingerprint": fingerprint(L),
        "dim": L.dim,
        "q": L.field.q,
        "brackets": [
            {"i": i, "j": j, "value": [_encode_scalar(L.field, c) for c in L.sc[i][j]]}
            for i in range(L.dim)
            for j in range(i + 1, L.dim)
            if any(L.sc[i][j])
        ],
        "non_abelian": not L.is_abelian,
        "center_dim": L.center.dim,
        "nilpotency_class": series.nilpotency_class,
        "solvable": series.solvable,
        "ct": ct,
        "ac": ac,
        "graph": analyze(g.adj, guards).to_json(),
    }


def _census_chunk(args) -> tuple[int, list[tuple[LieAlgebra, NCGraph, dict]]]:
    (p, m, modulus, dim, lo, hi, guards) = args
    field = GF(p, m, modulus)
    valid = 0
    out = []
    for L in enumerate_brackets(dim, field, index_range=(lo, hi)):
        valid += 1
        if L.is_abelian:
            continue
        g = build_graph(L)
        out.append((L, g, _census_record(L, g, guards)))
    return valid, out


def census(
    dim: int,
    field: GF,
    guards: Guards = DEFAULT_GUARDS,
    jobs: int = 1,
    guard: int = 2**24,
) -> CensusResult:
    """Full census for one (dim, field): records plus graph-isomorphism classes.

    Deterministic: entries appear in enumeration order and class ids are
    assigned in order of first appearance, independent of the worker count.
    """
    total = candidate_count(dim, field)
    if total > guard:
        raise GuardExceeded(
            f"census of {total} candidate tensors exceeds the guard {guard}"
        )
    triples: list[tuple[LieAlgebra, NCGraph, dict]] = []
    valid = 0
    if jobs <= 1:
        valid, triples = _census_chunk(
            (field.p, field.m, field.modulus, dim, 0, total, guards)
        )
    else:
        step = -(-total // jobs)
        chunks = [
            (field.p, field.m, field.modulus, dim, lo, min(lo + step, total), guards)
            for lo in range(0, total, step)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for v, part in pool.map(_census_chunk, chunks):
                valid += v
                triples.extend(part)

    # Group by graph isomorphism, bucketed by cheap invariants first.
    entries: list[CensusEntry] = []
    buckets: dict[tuple, list[tuple[int, tuple[int, ...]]]] = {}
    class_sizes: list[int] = []
    class_reps: list[dict] = []
    for L, g, record in triples:
        inv = record["graph"]
        key = (
            inv["order"],
            inv["size"],
            tuple(inv["degree_sequence"]),
            inv["girth"],
        )
        cid = None
        for known_cid, rep_adj in buckets.get(key, ()):
            if is_isomorphic(g.adj, rep_adj, guard=max(g.order, DEFAULT_GUARDS.isomorphism)):
                cid = known_cid
                break
        if cid is None:
            cid = len(class_sizes)
            buckets.setdefault(key, []).append((cid, g.adj))
            class_sizes.append(0)
            class_reps.append(record)
        class_sizes[cid] += 1
        record["gamma_class"] = cid
        entries.append(CensusEntry(L, g, record))

    classes = []
    for cid, rep in enumerate(class_reps):
        structures: dict[tuple, int] = {}
        for e in entries:
            if e.record["gamma_class"] != cid:
                continue
            skey = (e.record["nilpotency_class"], e.record["solvable"])
            structures[skey] = structures.get(skey, 0) + 1
        classes.append(
            {
                "class": cid,
                "count": class_sizes[cid],
                "representative": rep["fingerprint"],
                "order": rep["graph"]["order"],
                "size": rep["graph"]["size"],
                "structures": [
                    {"nilpotency_class": nc, "solvable": sv, "count": k}
                    for (nc, sv), k in sorted(
                        structures.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])
                    )
                ],
            }
        )
    return CensusResult(
        dim=dim,
        field=field,
        candidates=total,
        valid=valid,
        non_abelian=len(entries),
        entries=entries,
        classes=classes,
    )
