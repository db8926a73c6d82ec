"""Reference triangulations and the table of maximum excesses.

The ``PUBLISHED_ENCODINGS`` strings are the maximum-excess irreducible
triangulations of S2, N2, N3 and N4, numbered by their position in
Sulanke's lists of irreducible triangulations.  The complete-graph
embeddings in ``DERIVED_ENCODINGS`` were found by exhaustive search and are
accepted purely on validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .embed import Embedding, Surface, parse_embedding
from .surfmath import omega_of

__all__ = [
    "Fixture",
    "CatalogEntry",
    "ExtremalCatalog",
    "PUBLISHED_ENCODINGS",
    "DERIVED_ENCODINGS",
    "MAX_EXCESS_TABLE",
    "IRREDUCIBLE_COUNTS",
    "published_fixtures",
    "derived_fixtures",
    "all_fixtures",
    "get_fixture",
    "catalog",
]

S0, S1, S2 = Surface(True, 0), Surface(True, 1), Surface(True, 2)
N1, N2, N3, N4 = (Surface(False, h) for h in (1, 2, 3, 4))

# (surface, graph number) -> encoding; kept byte-identical, never reformatted
PUBLISHED_ENCODINGS: dict[tuple[Surface, int], str] = {
    (S2, 1): "bcde,aefdghic,abiehfgd,acgbfihe,adhcigfb,begchjid,bdcfeijh,bgjfcedi,bhdfjgec,fhgi",
    (S2, 6): "bcde,aefdghijc,abjehfgd,acgbfjihe,adhcjgfb,begchjd,bdcfejh,bgjfcedi,bhdj,bidfhgec",
    (N2, 3): "bcdef,afgdhec,abefd,acfhbge,adghbcf,aecdhgb,bfhed,bdfge",
    (N2, 6): "bcde,aefdghc,abhegd,acgbfhe,adhcgfb,beghd,bdcefh,bgfdec",
    (N2, 26): "bcdef,afghidec,abefd,acfhgibe,adbcf,aecdhigb,bfidh,bgdfi,bhfgd",
    (N3, 1): "bcde,aefdghic,abiegfd,acfbgie,adicghfb,behigcd,bdifceh,bgefi,bhfgdec",
    (N3, 3): "bcde,aefdghic,abiehd,achfbgie,adichgfb,begihd,bdifeh,bgecdfi,bhfgdec",
    (N3, 4): "bcde,aefdghic,abiehd,achifbge,adgichfb,behgid,bdeifh,bgfecdi,bhdfgec",
    (N3, 6): "bcde,aefdghic,abiehfd,acfbgihe,adhcifb,beighcd,bdifh,bgfcedi,bhdgfec",
    (N3, 8): "bcde,aefdghic,abiehgfd,acfbgihe,adhcigfb,begcd,bdiefch,bgcedi,bhdgec",
    (N3, 10): "bcde,aefdghic,abifegd,acgbfhie,adigcfb,becighd,bdceifh,bgfdi,bhdegfc",
    (N3, 12): "bcde,aefdghic,abifehd,achfbgie,adihcfb,becighd,bdifh,bgfdcei,bhedgfc",
    (N3, 14): "bcde,aefdghic,abigehd,achfbgie,adihcgfb,beghd,bdicefh,bgfdcei,bhedgc",
    (N3, 16): "bcde,aefgdhic,abiegd,acgbhfie,adicghfb,behdig,bfihecd,bdfegi,bhgfdec",
    (N3, 19): "bcde,aefghdic,abiehd,achbifge,adgichfb,behidg,bfdeih,bgifecd,bdfhgec",
    (N3, 20): "bcde,aefghdic,abigehd,achbifge,adgchifb,beidg,bfdecih,bgiecd,bdfehgc",
    (N3, 21): "bcde,aefghdic,abihegd,acgfhbie,adigchfb,behdg,bfdceih,bgicefd,bdeghc",
    (N3, 22): "bcde,aefghdic,abihegd,acgfibhe,adhcgifb,beidg,bfdceih,bgiced,bdfeghc",
    (N3, 82): "bcdef,afgdhiec,abefd,acfigbhe,adhgibcf,aecdihgb,bfheid,bdegfi,bhfdge",
    (N3, 2464): "bcdef,afghijdec,abefd,acfhigjbe,adbcf,aecdhjigb,bfidjh,bgjfdi,bhdgfj,bifhgd",
    (N4, 1): "bcdef,afdgehic,abiegfhd,achgbfie,adicgbhf,aehcgidb,bdhifce,befcdgi,bhgfdec",
    (N4, 2): "bcdef,afdgehic,abifehgd,acgbfhie,adigbhcf,aecighdb,bdchfie,becgfdi,bhdegfc",
    (N4, 3): "bcdef,afdgheic,abihfegd,acgbfihe,adhbigcf,aechgidb,bdceifh,bgfcide,begfdhc",
}

# (surface, label) -> encoding
DERIVED_ENCODINGS: dict[tuple[Surface, str], str] = {
    (S0, "K3"): "bc,ac,ab",
    (S1, "K7"): "bcegfd,acfegd,abfgde,abgcef,acdfbg,adebcg,aebdcf",
    (N1, "K6"): "bcefd,acfed,abfde,abecf,acdbf,adcbe",
    # K7 with the edges of triangle efg removed
    (N1, "K7-K3"): "becgdf,aedgcf,aedfbg,afcebg,abdc,abcd,acbd",
}

# maximum excess of an n-vertex irreducible triangulation, per surface
MAX_EXCESS_TABLE: dict[Surface, dict[int, int]] = {
    S0: {3: -16},
    S1: {7: 72, 8: 48, 9: 40, 10: 32},
    S2: {10: 208, 11: 160, 12: 136, 13: 128, 14: 120, 15: 96, 16: 88, 17: 80},
    N1: {6: 16, 7: 8},
    N2: {8: 48, 9: 48, 10: 40, 11: 32},
    N3: {9: 104, 10: 104, 11: 96, 12: 80, 13: 80, 14: 72, 15: 64, 16: 56},
    N4: {9: 216, 10: 208, 11: 152, 12: 136, 13: 136, 14: 136, 15: 128, 16: 120,
         17: 112, 18: 107, 19: 99, 20: 91, 21: 83, 22: 75},
}

# declared maximum per surface, listed separately from the per-n rows
TABLE_MAX: dict[Surface, int] = {S0: -16, S1: 72, S2: 208, N1: 16, N2: 48, N3: 104, N4: 216}

# number of irreducible triangulations per surface; documentation only, never recomputed
IRREDUCIBLE_COUNTS: dict[Surface, int] = {
    S0: 1, S1: 21, S2: 396784, N1: 2, N2: 29, N3: 9708, N4: 6297982,
}


@dataclass(frozen=True)
class Fixture:
    id: str
    encoding: str
    surface: Surface
    expected_vertices: int
    expected_excess: int
    expected_clique_number: int

    @cached_property
    def embedding(self) -> Embedding:
        return parse_embedding(self.encoding)


def _fixture(fid: str, encoding: str, surface: Surface, clique_number: int | None = None) -> Fixture:
    n = encoding.count(",") + 1
    return Fixture(
        id=fid,
        encoding=encoding,
        surface=surface,
        expected_vertices=n,
        expected_excess=MAX_EXCESS_TABLE[surface][n],
        expected_clique_number=omega_of(surface) if clique_number is None else clique_number,
    )


def published_fixtures() -> list[Fixture]:
    """The 23 maximum-excess triangulations of S2, N2, N3 and N4."""
    return [_fixture(f"{s.name}#{num}", enc, s) for (s, num), enc in PUBLISHED_ENCODINGS.items()]


def derived_fixtures() -> list[Fixture]:
    """K3 on S0, K7 on S1, and K6 and K7-K3 on N1."""
    out = []
    for (s, label), enc in DERIVED_ENCODINGS.items():
        out.append(_fixture(f"{s.name}:{label}", enc, s, 5 if label == "K7-K3" else None))
    return out


def all_fixtures() -> list[Fixture]:
    return derived_fixtures() + published_fixtures()


def get_fixture(fid: str) -> Fixture:
    for f in all_fixtures():
        if f.id.lower() == fid.lower():
            return f
    raise KeyError(f"unknown fixture id {fid!r}")


@dataclass(frozen=True)
class CatalogEntry:
    surface: Surface
    max_excess: int
    members: tuple[str, ...]


@dataclass(frozen=True)
class ExtremalCatalog:
    """Maximum excess and the irreducible triangulations attaining it, per surface."""

    entries: tuple[CatalogEntry, ...]

    def __getitem__(self, surface: Surface) -> CatalogEntry:
        for entry in self.entries:
            if entry.surface == surface:
                return entry
        raise KeyError(surface)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def surfaces(self) -> list[Surface]:
        return [e.surface for e in self.entries]


def catalog() -> ExtremalCatalog:
    by_surface: dict[Surface, list[str]] = {
        S0: ["S0:K3"], S1: ["S1:K7"], N1: ["N1:K6"],
    }
    for (s, num) in PUBLISHED_ENCODINGS:
        by_surface.setdefault(s, []).append(f"{s.name}#{num}")
    order = [S0, S1, S2, N1, N2, N3, N4]
    return ExtremalCatalog(tuple(
        CatalogEntry(s, TABLE_MAX[s], tuple(by_surface[s])) for s in order
    ))
