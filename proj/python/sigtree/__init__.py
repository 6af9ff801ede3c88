"""Breadth-first signatures of trees and prefix-closed languages."""

from ._core import *  # noqa: F401,F403
from ._core import Alphabet, LabelledSignature, generate_language

__version__ = "0.1.0"


def words(ls: LabelledSignature, n: int) -> list[str]:
    """The first n words of the language of ls, rendered as strings."""
    alphabet: Alphabet = ls.alphabet
    return [alphabet.render(w) for w in generate_language(ls, n)]
