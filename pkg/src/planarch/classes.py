"""The graph classes decided by planarch, ordered by inclusion."""

from __future__ import annotations

import enum

__all__ = ["GraphClass"]


class GraphClass(enum.IntEnum):
    """PLANAR < IC_PLANAR < NIC_PLANAR < ONE_PLANAR; ``a <= b`` means a is a subclass of b."""

    PLANAR = 0
    IC_PLANAR = 1
    NIC_PLANAR = 2
    ONE_PLANAR = 3

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, text: str) -> GraphClass:
        key = text.strip().lower().replace("_", "").replace("-", "")
        try:
            return _ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown graph class {text!r}") from None


_LABELS = {
    GraphClass.PLANAR: "planar",
    GraphClass.IC_PLANAR: "ic",
    GraphClass.NIC_PLANAR: "nic",
    GraphClass.ONE_PLANAR: "1planar",
}

_ALIASES = {
    "planar": GraphClass.PLANAR,
    "ic": GraphClass.IC_PLANAR,
    "icplanar": GraphClass.IC_PLANAR,
    "nic": GraphClass.NIC_PLANAR,
    "nicplanar": GraphClass.NIC_PLANAR,
    "1planar": GraphClass.ONE_PLANAR,
    "oneplanar": GraphClass.ONE_PLANAR,
    "1": GraphClass.ONE_PLANAR,
}
