"""The embedded classification database: the three 4-dimensional tables,
the low-dimensional Jordan algebra/superalgebra tables, reference
degeneration graphs, component lists, witnesses, certificates, and the
errata ledger.  Everything is stored as reviewable data files; this module
only loads and cross-checks them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .algebra import SuperAlgebra, direct_sum
from .certificates import ClosedSet, parse_closed_set_file
from .degeneration import Witness, parse_witness_file
from .ratfun import RatFun, ratfun_compose
from .tablefmt import AlgebraFile, parse_algebra_file

DATA_ENV = "SUPERJORDAN_DATA"


class UnknownName(KeyError):
    pass


class MissingParameter(ValueError):
    pass


class UnknownNode(KeyError):
    pass


def default_data_root() -> Path:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


TYPE_DIRS = {"type13": (1, 3), "type22": (2, 2), "type31": (3, 1)}


@dataclass
class CatalogEntry:
    name: str
    mn: Tuple[int, int]
    algebra: SuperAlgebra  # family entries hold RatFun constants
    orbit: Optional[int]
    decomposition: Optional[str]
    even_part_label: Optional[str]
    family: Optional[str]
    source_file: str

    @property
    def is_family(self) -> bool:
        return self.family is not None


@dataclass(frozen=True)
class ReferenceGraph:
    name: str
    nodes: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    def reachable(self, a: str, b: str) -> bool:
        if a not in self.nodes or b not in self.nodes:
            raise UnknownNode(f"{a!r} or {b!r} not in graph {self.name}")
        if a == b:
            return True
        seen = {a}
        stack = [a]
        while stack:
            cur = stack.pop()
            for src, dst in self.edges:
                if src == cur and dst not in seen:
                    if dst == b:
                        return True
                    seen.add(dst)
                    stack.append(dst)
        return False


@dataclass(frozen=True)
class Erratum:
    id: str
    kind: str
    key: str
    detail: str


@dataclass
class LemmaPairGroup:
    source: str
    targets: List[str]
    reason: str


class Catalog:
    def __init__(self, root: Optional[Path] = None):
        self.root = Path(root) if root else default_data_root()
        if not self.root.is_dir():
            raise FileNotFoundError(f"catalog root {self.root} does not exist")
        self.entries: Dict[str, CatalogEntry] = {}
        self.by_type: Dict[Tuple[int, int], List[str]] = {}
        self.lowdim: Dict[str, SuperAlgebra] = {}
        self.lowdim_files: Dict[str, AlgebraFile] = {}
        self.graphs: Dict[str, ReferenceGraph] = {}
        self.components: Dict[str, dict] = {}
        self.errata: List[Erratum] = []
        self.lemma_pairs: List[LemmaPairGroup] = []
        self._load()

    # ---- loading -----------------------------------------------------------
    def _load(self):
        for dirname, mn in TYPE_DIRS.items():
            names = []
            dirpath = self.root / "catalog" / dirname
            for path in sorted(dirpath.glob("*.alg")):
                af = parse_algebra_file(path)
                if af.mn != mn:
                    raise ValueError(f"{path}: type {af.mn} does not match {dirname}")
                entry = CatalogEntry(
                    name=af.name,
                    mn=af.mn,
                    algebra=af.build(),
                    orbit=af.orbit,
                    decomposition=af.decomposition,
                    even_part_label=af.even_part,
                    family=af.family,
                    source_file=str(path),
                )
                if af.name in self.entries:
                    raise ValueError(f"duplicate catalog name {af.name}")
                self.entries[af.name] = entry
                names.append(af.name)
            self.by_type[mn] = sorted(names, key=_name_sort_key)
        lowdir = self.root / "catalog" / "lowdim"
        for path in sorted(lowdir.glob("*.alg")):
            af = parse_algebra_file(path)
            self.lowdim[af.name] = af.build()
            self.lowdim_files[af.name] = af
        for path in sorted((self.root / "catalog" / "graphs").glob("*.edges")):
            self.graphs[path.stem] = _parse_edges(path)
        compdir = self.root / "catalog" / "components"
        for path in sorted(compdir.glob("*.txt")):
            self.components[path.stem] = _parse_components(path)
        errata_path = self.root / "errata.txt"
        if errata_path.exists():
            self.errata = parse_errata(errata_path)
        screens = self.root / "catalog" / "screens" / "lemma_pairs.txt"
        if screens.exists():
            self.lemma_pairs = _parse_lemma_pairs(screens)

    # ---- queries -----------------------------------------------------------
    def names(self, mn: Optional[Tuple[int, int]] = None) -> List[str]:
        if mn is None:
            return sorted(self.entries, key=_name_sort_key)
        return list(self.by_type.get(mn, []))

    def entry(self, name: str) -> CatalogEntry:
        if name not in self.entries:
            raise UnknownName(name)
        return self.entries[name]

    def lookup(
        self, name: str, param: Union[None, int, Fraction, RatFun] = None
    ) -> SuperAlgebra:
        """Instantiated SuperAlgebra; families require a parameter value."""
        entry = self.entry(name)
        if not entry.is_family:
            if param is not None:
                raise ValueError(f"{name} is not a family; no parameter expected")
            return entry.algebra
        if param is None:
            raise MissingParameter(f"{name} is a one-parameter family")
        return instantiate(entry.algebra, param, name=_family_instance_name(name, param))

    def reachable(self, graph: str, a: str, b: str) -> bool:
        if graph not in self.graphs:
            raise UnknownNode(f"no graph named {graph}")
        return self.graphs[graph].reachable(a, b)

    def even_graph_for(self, m: int) -> ReferenceGraph:
        return self.graphs[f"dim{m}"]

    def node_algebra(self, label: str) -> SuperAlgebra:
        """Build the algebra named by a graph-node label (direct sums allowed;
        C<k> is the k-dimensional zero algebra)."""
        summands = [p.strip() for p in label.split("+")]
        algs = []
        for part in summands:
            if part.startswith("C") and part[1:].isdigit():
                algs.extend(self.lowdim["U2"] for _ in range(int(part[1:])))
            elif part in self.lowdim:
                algs.append(self.lowdim[part])
            else:
                raise UnknownNode(f"unknown summand {part!r} in {label!r}")
        out = algs[0]
        for nxt in algs[1:]:
            out = direct_sum(out, nxt)
        return SuperAlgebra(
            out.m, out.n, out.alpha, out.beta, out.gamma, out.delta, name=label
        )

    # ---- auxiliary data ------------------------------------------------------
    def witnesses(self) -> List[Witness]:
        out = []
        for path in sorted((self.root / "witnesses").glob("*.wit")):
            out.append(parse_witness_file(path))
        return out

    def closed_sets(self) -> List[ClosedSet]:
        return [
            parse_closed_set_file(path)
            for path in sorted((self.root / "closedsets").glob("*.cs"))
        ]

    def errata_keys(self) -> set:
        return {e.key for e in self.errata}


def _name_sort_key(name: str):
    head = name.rstrip("0123456789")
    tail = name[len(head) :]
    return (head, int(tail) if tail else 0)


def _family_instance_name(name: str, param) -> str:
    if isinstance(param, RatFun):
        return f"{name}^<ratfun>"
    return f"{name}^{param}"


def instantiate(J: SuperAlgebra, param, name: str = "") -> SuperAlgebra:
    """Substitute the family parameter into any RatFun structure constants."""
    if not isinstance(param, RatFun):
        param_val = Fraction(param)

        def sub(c):
            if isinstance(c, RatFun):
                return c.evaluate(param_val)
            return c

    else:

        def sub(c):
            if isinstance(c, RatFun):
                return ratfun_compose(c, param)
            return c

    def conv(tensor):
        return tuple(
            tuple(tuple(sub(x) for x in row) for row in plane) for plane in tensor
        )

    return SuperAlgebra(
        J.m,
        J.n,
        conv(J.alpha),
        conv(J.beta),
        conv(J.gamma),
        conv(J.delta),
        name=name or J.name,
        basis_order=J.basis_order,
    )


def _parse_edges(path: Path) -> ReferenceGraph:
    edges = []
    nodes = set()
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        src, _, dst = line.partition("->")
        src, dst = src.strip(), dst.strip()
        if not src or not dst:
            raise ValueError(f"{path}: bad edge line {raw!r}")
        edges.append((src, dst))
        nodes.add(src)
        nodes.add(dst)
    return ReferenceGraph(path.stem, tuple(sorted(nodes)), tuple(edges))


def _parse_components(path: Path) -> dict:
    out = {"dimension": None, "rigid": [], "families": []}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key == "dimension":
            out["dimension"] = int(val)
        elif key == "rigid":
            out["rigid"] = val.split()
        elif key == "families":
            out["families"] = val.split()
    return out


def _parse_lemma_pairs(path: Path) -> List[LemmaPairGroup]:
    groups = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, reason = line.partition(";")
        reason = reason.partition("=")[2].strip() if reason else ""
        src, _, tgts = head.partition("-/->")
        groups.append(LemmaPairGroup(src.strip(), tgts.split(), reason))
    return groups


def parse_errata(path: Path) -> List[Erratum]:
    out = []
    cur: Dict[str, str] = {}

    def flush():
        if cur:
            out.append(
                Erratum(
                    cur.get("id", f"E{len(out)+1}"),
                    cur.get("kind", ""),
                    cur.get("key", ""),
                    cur.get("detail", ""),
                )
            )

    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.strip() == "[erratum]":
            flush()
            cur = {}
            continue
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key in cur and key == "detail":
            cur[key] += " " + val
        else:
            cur[key] = val
    flush()
    return out
