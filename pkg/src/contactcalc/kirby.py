"""Combinatorial Kirby diagrams for the 3-dimensional cobordism
constructions: dotted 1-handles and 2-handles with attaching words.

Diagrams are combinatorial only — no front projections, no crossing data.
Contact surgery coefficients are carried as annotations without smooth
framing arithmetic.

Serialization grammar (line-oriented, UTF-8, tab-separated, newline
terminated; see also docs/kirby_format.md):

    KIRBY 1
    BASE
    <free text, one base-manifold surgery description per line>
    DOTTED
    <id> TAB <anchor1> TAB <anchor2>
    2HANDLES
    <id> TAB <coefficient> TAB <letter> [TAB <letter> ...]
    NOTES
    <free text annotation per line>

where a letter is either ``curve:<label>_<copy>:<+|->`` (a core curve in a
numbered copy, with orientation sign) or ``dotted:<id>`` (a traversal of a
dotted handle).  Sections with no entries are still emitted.  Handles are
sorted by id, so serialization is canonical and byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError

MAGIC = "KIRBY 1"

# Attaching-word letters as tagged tuples:
#   ("curve", label, copy_index, sign)   sign in {+1, -1}
#   ("dotted", dotted_id)
Letter = tuple


def curve(label: str, copy_index: int, sign: int = 1) -> Letter:
    if sign not in (1, -1):
        raise DomainError("curve sign must be +1 or -1")
    return ("curve", label, copy_index, sign)


def traversal(dotted_id: str) -> Letter:
    return ("dotted", dotted_id)


@dataclass(frozen=True)
class DottedHandle:
    id: str
    anchors: tuple[str, str]

    def __post_init__(self):
        if self.anchors[0] == self.anchors[1]:
            raise DomainError(f"dotted handle {self.id} has equal anchors")


@dataclass(frozen=True)
class TwoHandle:
    id: str
    attaching_word: tuple[Letter, ...]
    coefficient: str

    def __post_init__(self):
        if not self.attaching_word:
            raise DomainError(f"2-handle {self.id} has empty attaching word")
        for letter in self.attaching_word:
            if letter[0] not in ("curve", "dotted"):
                raise DomainError(f"bad letter {letter!r} in {self.id}")


@dataclass(frozen=True)
class KirbyDiagram:
    base_components: tuple[str, ...]
    dotted: tuple[DottedHandle, ...]
    two_handles: tuple[TwoHandle, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        ids = [d.id for d in self.dotted]
        if len(set(ids)) != len(ids):
            raise DomainError("duplicate dotted-handle ids")
        hids = [h.id for h in self.two_handles]
        if len(set(hids)) != len(hids):
            raise DomainError("duplicate 2-handle ids")
        known = set(ids)
        for h in self.two_handles:
            for letter in h.attaching_word:
                if letter[0] == "dotted" and letter[1] not in known:
                    raise DomainError(
                        f"2-handle {h.id} traverses unknown dotted handle "
                        f"{letter[1]!r}")
        object.__setattr__(self, "dotted",
                           tuple(sorted(self.dotted, key=lambda d: d.id)))
        object.__setattr__(self, "two_handles",
                           tuple(sorted(self.two_handles, key=lambda h: h.id)))


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def branched_cover_diagram(page, base: Sequence[str], q: int,
                           zero_handle_labels: Sequence[str] = ("p",),
                           core_curves: Sequence[str] | None = None) -> KirbyDiagram:
    """Diagram of the cobordism from q copies of a 3-manifold to its q-fold
    cyclic branched cover, built from a page handle decomposition.

    Along the chain of copies 1 ~ 2 ~ ... ~ q, each adjacent pair is joined
    by one Liouville sum contributing, per page 0-handle, a dotted 1-handle
    anchored at that 0-handle's image in the two copies, and per page
    1-handle with core c, a 2-handle attached along c_j u (-c_{j+1}).
    """
    if q < 1:
        raise DomainError("cover degree must be >= 1")
    if core_curves is None:
        core_curves = page.spheres
    n_one_handles = page.handle_count(1)
    if len(core_curves) != n_one_handles:
        raise DomainError(
            f"page has {n_one_handles} 1-handles but {len(core_curves)} "
            f"core-curve labels")
    if len(zero_handle_labels) != page.handle_count(0):
        raise DomainError("one anchor label needed per page 0-handle")

    dotted = []
    two_handles = []
    for j in range(1, q):
        for p0 in zero_handle_labels:
            dotted.append(DottedHandle(f"d{j}{p0}", (f"{p0}_{j}", f"{p0}_{j + 1}")))
        for c in core_curves:
            two_handles.append(TwoHandle(
                f"h{j}{c}",
                (curve(c, j, 1), curve(c, j + 1, -1)),
                coefficient="surface"))
    return KirbyDiagram(tuple(base), tuple(dotted), tuple(two_handles),
                        notes=(f"{q}-fold cyclic branched cover over the "
                               f"binding; page {page.name}",))


def surgery_cobordism_diagram(k: int) -> KirbyDiagram:
    """Diagram of the cobordism realizing contact (1/k)-surgery on a knot K.

    For k != -1 the D*S^1 page decomposition (one 0-handle + one 1-handle)
    gives one dotted handle plus one 2-handle whose attaching word runs over
    the dotted handle twice; k = -1 is an honest Weinstein 2-handle attached
    along K with contact coefficient -1.
    """
    if k == 0:
        raise DomainError("surgery coefficient k must be nonzero")
    if k == -1:
        return KirbyDiagram((), (),
                            (TwoHandle("h1", (curve("K", 1, 1),), "-1"),),
                            notes=("Weinstein 2-handle along K",))
    notes = [f"contact (1/{k})-surgery cobordism on K"]
    if k == 2:
        notes.append("equivalent to contact (+1)-surgery on a right-handed "
                     "Legendrian trefoil")
    return KirbyDiagram(
        (), (DottedHandle("d1", ("q_1", "q_2")),),
        (TwoHandle("h1",
                   (traversal("d1"), curve("K", 1, 1),
                    traversal("d1"), curve("K", 2, -1)),
                   coefficient=f"1/{k}"),),
        notes=tuple(notes))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _letter_to_text(letter: Letter) -> str:
    if letter[0] == "curve":
        _, label, copy_index, sign = letter
        return f"curve:{label}_{copy_index}:{'+' if sign > 0 else '-'}"
    return f"dotted:{letter[1]}"


def _letter_from_text(tok: str) -> Letter:
    parts = tok.split(":")
    if parts[0] == "curve" and len(parts) == 3:
        label_copy, sign = parts[1], parts[2]
        label, _, copy_index = label_copy.rpartition("_")
        if not label or sign not in ("+", "-"):
            raise DomainError(f"bad curve letter {tok!r}")
        return curve(label, int(copy_index), 1 if sign == "+" else -1)
    if parts[0] == "dotted" and len(parts) == 2:
        return traversal(parts[1])
    raise DomainError(f"bad attaching-word letter {tok!r}")


def serialize_diagram(d: KirbyDiagram) -> str:
    lines = [MAGIC, "BASE"]
    for comp in d.base_components:
        lines.append(comp)
    lines.append("DOTTED")
    for dot in d.dotted:
        lines.append(f"{dot.id}\t{dot.anchors[0]}\t{dot.anchors[1]}")
    lines.append("2HANDLES")
    for h in d.two_handles:
        toks = [h.id, h.coefficient] + [_letter_to_text(l) for l in h.attaching_word]
        lines.append("\t".join(toks))
    lines.append("NOTES")
    for note in d.notes:
        lines.append(note)
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> KirbyDiagram:
    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise DomainError("missing KIRBY header")
    sections = {"BASE": [], "DOTTED": [], "2HANDLES": [], "NOTES": []}
    current = None
    for line in lines[1:]:
        if line in sections:
            current = line
            continue
        if current is None:
            raise DomainError(f"content before first section: {line!r}")
        sections[current].append(line)
    dotted = []
    for line in sections["DOTTED"]:
        parts = line.split("\t")
        if len(parts) != 3:
            raise DomainError(f"bad DOTTED line {line!r}")
        dotted.append(DottedHandle(parts[0], (parts[1], parts[2])))
    two_handles = []
    for line in sections["2HANDLES"]:
        parts = line.split("\t")
        if len(parts) < 3:
            raise DomainError(f"bad 2HANDLES line {line!r}")
        two_handles.append(TwoHandle(
            parts[0], tuple(_letter_from_text(tok) for tok in parts[2:]),
            parts[1]))
    return KirbyDiagram(tuple(sections["BASE"]), tuple(dotted),
                        tuple(two_handles), tuple(sections["NOTES"]))
