"""Input text wrapper with 1-based position access."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class Text:
    """A byte string with 1-based logical positions.

    ``data`` is the raw 0-based byte buffer; every public position in this
    package is 1-based, so ``char(i)`` reads ``data[i - 1]``.
    """

    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.ascontiguousarray(self.data, dtype=np.uint8)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_bytes(cls, raw: bytes) -> "Text":
        return cls(np.frombuffer(raw, dtype=np.uint8))

    @classmethod
    def from_str(cls, s: str) -> "Text":
        return cls.from_bytes(s.encode("utf-8"))

    @classmethod
    def from_file(cls, path: str | Path, chomp: bool = False) -> "Text":
        raw = Path(path).read_bytes()
        if chomp and raw.endswith(b"\n"):
            raw = raw[:-1]
        return cls.from_bytes(raw)

    @property
    def n(self) -> int:
        return int(self.data.size)

    @property
    def sigma(self) -> int:
        """Number of distinct characters present."""
        if self.n == 0:
            return 0
        return int(np.unique(self.data).size)

    def char(self, i: int) -> int:
        """Byte value at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return int(self.data[i - 1])

    def substring(self, start: int, length: int) -> bytes:
        """Bytes of the substring of the given 1-based start and length."""
        if length < 0 or not 1 <= start or start + length - 1 > self.n:
            raise IndexError(
                f"substring ({start},{length}) out of range for n={self.n}"
            )
        return self.data[start - 1 : start - 1 + length].tobytes()

    def to_bytes(self) -> bytes:
        return self.data.tobytes()
