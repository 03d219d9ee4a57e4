"""Phoneme inventory, paradigm cells, paradigm construction, and the
token-level encoding of reinflection combinations.

Forms are tuples of glyph strings, one glyph per phoneme. Multi-character
phonemes ("tʃ", "ɾ") are single glyphs: tokenization always goes through an
explicit symbol inventory, never through unicode codepoints. A cell tag
serializes bit-exactly as ``<V;MOOD;PRS;P;NUM>`` and is a single token.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .errors import (
    ConfigError,
    EmptyFormError,
    MissingAlternantError,
    TagParseError,
    UnknownSymbolError,
)

Form = tuple[str, ...]

SOURCE_SEPARATOR = "#"
RESERVED_GLYPHS = (SOURCE_SEPARATOR, "<", ">", ";")


def form_from_str(text: str) -> Form:
    """Parse a space-separated glyph string ("ʃ u t e s") into a Form."""
    return tuple(text.split())


def form_to_str(form: Form) -> str:
    return " ".join(form)


# ---------------------------------------------------------------------------
# Symbols and alphabets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Symbol:
    glyph: str
    kind: str  # "consonant" | "vowel"

    def __post_init__(self) -> None:
        if not self.glyph:
            raise ConfigError("symbol glyph must be nonempty")
        if self.kind not in ("consonant", "vowel"):
            raise ConfigError(f"unknown symbol kind: {self.kind!r}")


@dataclass(frozen=True)
class Alphabet:
    """Fixed phoneme inventory with consonant/vowel classes."""

    symbols: tuple[Symbol, ...]
    _by_glyph: dict[str, Symbol] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        by_glyph: dict[str, Symbol] = {}
        for sym in self.symbols:
            if sym.glyph in by_glyph:
                raise ConfigError(f"duplicate glyph in alphabet: {sym.glyph!r}")
            if any(ch in sym.glyph for ch in RESERVED_GLYPHS) or " " in sym.glyph:
                raise ConfigError(f"glyph uses a reserved character: {sym.glyph!r}")
            by_glyph[sym.glyph] = sym
        if not by_glyph:
            raise ConfigError("alphabet must contain at least one symbol")
        object.__setattr__(self, "_by_glyph", by_glyph)

    @property
    def glyphs(self) -> tuple[str, ...]:
        return tuple(s.glyph for s in self.symbols)

    @property
    def consonants(self) -> tuple[str, ...]:
        return tuple(s.glyph for s in self.symbols if s.kind == "consonant")

    @property
    def vowels(self) -> tuple[str, ...]:
        return tuple(s.glyph for s in self.symbols if s.kind == "vowel")

    def __contains__(self, glyph: str) -> bool:
        return glyph in self._by_glyph

    def check_form(self, form: Form) -> Form:
        """Validate that every glyph of `form` belongs to the alphabet."""
        for glyph in form:
            if glyph not in self._by_glyph:
                raise UnknownSymbolError(f"glyph {glyph!r} not in alphabet")
        return form

    @classmethod
    def from_yaml(cls, path: str | Path) -> "Alphabet":
        with open(path, encoding="utf-8") as fh:
            raw = yaml.safe_load(fh)
        try:
            consonants = list(raw["consonants"])
            vowels = list(raw["vowels"])
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"alphabet file {path}: expected 'consonants' and 'vowels' lists") from exc
        symbols = tuple(
            [Symbol(g, "consonant") for g in consonants] + [Symbol(g, "vowel") for g in vowels]
        )
        return cls(symbols)


# ---------------------------------------------------------------------------
# Cell tags
# ---------------------------------------------------------------------------

MOODS = ("IND", "SBJV")
NUMBERS = ("SG", "PL")
PERSONS = (1, 2, 3)


@dataclass(frozen=True, order=True)
class CellTag:
    """One paradigm cell: fixed POS "V" and tense "PRS", variable mood,
    person, and number."""

    mood: str
    person: int
    number: str = "SG"

    def __post_init__(self) -> None:
        if self.mood not in MOODS:
            raise TagParseError(f"mood must be one of {MOODS}, got {self.mood!r}")
        if self.person not in PERSONS:
            raise TagParseError(f"person must be 1, 2, or 3, got {self.person!r}")
        if self.number not in NUMBERS:
            raise TagParseError(f"number must be one of {NUMBERS}, got {self.number!r}")

    @property
    def token(self) -> str:
        return f"<V;{self.mood};PRS;{self.person};{self.number}>"

    def __str__(self) -> str:
        return self.token


def parse_cell_tag(token: str) -> CellTag:
    """Parse a "<V;MOOD;PRS;P;NUM>" token back into a CellTag."""
    if not (token.startswith("<") and token.endswith(">")):
        raise TagParseError(f"not a tag token: {token!r}")
    parts = token[1:-1].split(";")
    if len(parts) != 5 or parts[0] != "V" or parts[2] != "PRS":
        raise TagParseError(f"malformed tag token: {token!r}")
    try:
        person = int(parts[3])
    except ValueError as exc:
        raise TagParseError(f"malformed person in tag token: {token!r}") from exc
    return CellTag(mood=parts[1], person=person, number=parts[4])


def is_tag_token(token: str) -> bool:
    return token.startswith("<") and token.endswith(">")


# Canonical six-cell present-tense paradigm: singular persons in the
# indicative and the subjunctive.
DEFAULT_CELLS: tuple[CellTag, ...] = tuple(
    CellTag(mood, person, "SG") for mood in MOODS for person in PERSONS
)

CELL_1SG_IND = CellTag("IND", 1, "SG")
CELL_2SG_IND = CellTag("IND", 2, "SG")
CELL_2SG_SBJV = CellTag("SBJV", 2, "SG")


def is_alternant_cell(tag: CellTag) -> bool:
    """Cells occupied by the alternant stem in an alternating paradigm:
    first person singular indicative plus every subjunctive cell."""
    return tag.mood == "SBJV" or (tag.mood == "IND" and tag.person == 1 and tag.number == "SG")


# ---------------------------------------------------------------------------
# Suffix tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuffixTable:
    """Cell → allowed suffixes, ordered by stripping priority."""

    cells: dict[CellTag, tuple[Form, ...]]
    conjugation_class: str = "default"

    def __post_init__(self) -> None:
        if not self.cells:
            raise ConfigError("suffix table has no cells")
        for tag, suffixes in self.cells.items():
            if not suffixes:
                raise ConfigError(f"cell {tag.token} has no suffixes")
            for sfx in suffixes:
                if len(sfx) == 0:
                    raise ConfigError(f"cell {tag.token} has an empty suffix")
            # Unambiguous stripping: within one cell no suffix may be a
            # (proper or improper) suffix of another.
            for a, b in itertools.permutations(suffixes, 2):
                if len(a) <= len(b) and b[-len(a):] == a:
                    raise ConfigError(
                        f"cell {tag.token}: suffix {form_to_str(a)!r} is a suffix of {form_to_str(b)!r}"
                    )

    @property
    def cell_order(self) -> tuple[CellTag, ...]:
        return tuple(self.cells.keys())

    def primary_suffix(self, tag: CellTag) -> Form:
        try:
            return self.cells[tag][0]
        except KeyError as exc:
            raise ConfigError(f"suffix table has no cell {tag.token}") from exc

    @classmethod
    def from_yaml(cls, path: str | Path) -> "SuffixTable":
        with open(path, encoding="utf-8") as fh:
            raw = yaml.safe_load(fh)
        try:
            cell_map = raw["cells"]
            conj = str(raw.get("conjugation_class", "default"))
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"suffix file {path}: expected a 'cells' mapping") from exc
        cells: dict[CellTag, tuple[Form, ...]] = {}
        for token, suffixes in cell_map.items():
            tag = parse_cell_tag(str(token))
            cells[tag] = tuple(form_from_str(str(s)) for s in suffixes)
        return cls(cells=cells, conjugation_class=conj)


def strip_suffix(form: Form, cell: CellTag, table: SuffixTable) -> tuple[Form, Form] | None:
    """Split `form` into (stem, suffix) using the highest-priority suffix of
    `cell` that is a proper suffix of the form. Returns None when no suffix
    applies; a failed split is a classification outcome, never a crash."""
    if len(form) == 0:
        raise EmptyFormError("cannot strip a suffix from an empty form")
    for sfx in table.cells.get(cell, ()):
        if len(form) > len(sfx) and form[-len(sfx):] == sfx:
            return form[: len(form) - len(sfx)], sfx
    return None


# ---------------------------------------------------------------------------
# Paradigms
# ---------------------------------------------------------------------------

SHAPE_L = "L"
SHAPE_NL = "NL"


@dataclass(frozen=True)
class Paradigm:
    """A verb's cell → surface-form map with its stem-alternation class.

    For an L-class verb the alternant stem occupies exactly the first person
    singular indicative and all subjunctive cells; every other cell uses the
    base stem. An NL-class verb uses the base stem throughout.
    """

    lemma_id: str
    shape_class: str
    base_stem: Form
    alternant_stem: Form | None
    cells: dict[CellTag, Form]
    cell_order: tuple[CellTag, ...]

    def stem_for(self, tag: CellTag) -> Form:
        if self.shape_class == SHAPE_L and is_alternant_cell(tag):
            assert self.alternant_stem is not None
            return self.alternant_stem
        return self.base_stem

    @property
    def stems(self) -> tuple[Form, ...]:
        if self.alternant_stem is None:
            return (self.base_stem,)
        return (self.base_stem, self.alternant_stem)


def build_paradigm(
    lemma_id: str,
    base_stem: Form,
    alternant_stem: Form | None,
    shape_class: str,
    table: SuffixTable,
    cells: tuple[CellTag, ...] | None = None,
) -> Paradigm:
    """Populate every cell as stem + primary suffix, choosing the alternant
    stem for the alternation cells of an L-class verb."""
    if shape_class not in (SHAPE_L, SHAPE_NL):
        raise ConfigError(f"shape_class must be 'L' or 'NL', got {shape_class!r}")
    if len(base_stem) == 0:
        raise EmptyFormError(f"{lemma_id}: base stem is empty")
    if shape_class == SHAPE_L:
        if alternant_stem is None:
            raise MissingAlternantError(f"{lemma_id}: L-class paradigm requires an alternant stem")
        if len(alternant_stem) == 0:
            raise EmptyFormError(f"{lemma_id}: alternant stem is empty")
    elif alternant_stem is not None:
        raise MissingAlternantError(f"{lemma_id}: NL-class paradigm must not carry an alternant stem")

    cell_order = tuple(cells) if cells is not None else table.cell_order
    filled: dict[CellTag, Form] = {}
    for tag in cell_order:
        stem = alternant_stem if (shape_class == SHAPE_L and is_alternant_cell(tag)) else base_stem
        assert stem is not None
        filled[tag] = stem + table.primary_suffix(tag)
    return Paradigm(
        lemma_id=lemma_id,
        shape_class=shape_class,
        base_stem=base_stem,
        alternant_stem=alternant_stem,
        cells=filled,
        cell_order=cell_order,
    )


# ---------------------------------------------------------------------------
# Combinations and their token encoding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Combination:
    """Two filled source cells plus a target tag; the model must produce the
    target form. The unit of model input/output."""

    src1: tuple[Form, CellTag]
    src2: tuple[Form, CellTag]
    target_tag: CellTag
    gold: Form
    lemma_id: str = ""

    def __post_init__(self) -> None:
        tags = (self.src1[1], self.src2[1], self.target_tag)
        if len(set(tags)) != 3:
            raise ConfigError(f"combination tags must be pairwise distinct, got {[t.token for t in tags]}")


def encode_combination(c: Combination, alphabet: Alphabet) -> list[str]:
    """Flatten a combination into the model's token sequence:

        src1 phonemes, src1 tag, "#", src2 phonemes, src2 tag, "#", target tag

    Each tag is one token. Raises for empty forms or out-of-alphabet glyphs.
    """
    tokens: list[str] = []
    for form, tag in (c.src1, c.src2):
        if len(form) == 0:
            raise EmptyFormError("combination has an empty source form")
        alphabet.check_form(form)
        tokens.extend(form)
        tokens.append(tag.token)
        tokens.append(SOURCE_SEPARATOR)
    tokens.append(c.target_tag.token)
    return tokens


def decode_tokens(tokens: list[str]) -> tuple[tuple[Form, CellTag], tuple[Form, CellTag], CellTag]:
    """Invert encode_combination back into (src1, src2, target_tag)."""
    segments: list[list[str]] = [[]]
    for tok in tokens:
        if tok == SOURCE_SEPARATOR:
            segments.append([])
        else:
            segments[-1].append(tok)
    if len(segments) != 3:
        raise TagParseError(f"expected three '#'-separated segments, got {len(segments)}")
    sources: list[tuple[Form, CellTag]] = []
    for seg in segments[:2]:
        if len(seg) < 2 or not is_tag_token(seg[-1]):
            raise TagParseError(f"source segment must end in a tag token: {seg}")
        sources.append((tuple(seg[:-1]), parse_cell_tag(seg[-1])))
    target_seg = segments[2]
    if len(target_seg) != 1 or not is_tag_token(target_seg[0]):
        raise TagParseError(f"target segment must be exactly one tag token: {target_seg}")
    return sources[0], sources[1], parse_cell_tag(target_seg[0])
