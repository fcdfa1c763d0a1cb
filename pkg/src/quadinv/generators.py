"""Labelled generator lists."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, Ring


@dataclass(frozen=True)
class GeneratorSet:
    ring: Ring
    entries: tuple  # of (label, Polynomial)

    def __post_init__(self):
        labels = [lab for lab, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be unique")
        for lab, p in self.entries:
            if p.ring != self.ring:
                raise ValueError(f"{lab} does not live in {self.ring!r}")

    @property
    def labels(self) -> tuple:
        return tuple(lab for lab, _ in self.entries)

    @property
    def polys(self) -> tuple:
        return tuple(p for _, p in self.entries)

    def __getitem__(self, label: str) -> Polynomial:
        for lab, p in self.entries:
            if lab == label:
                return p
        raise KeyError(label)

    def __contains__(self, label) -> bool:
        return label in self.labels

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)
