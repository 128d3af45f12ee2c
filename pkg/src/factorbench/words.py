"""Words over a fixed finite alphabet and the subword (scattered subsequence)
order, plus the scan that hunts an ordered subword pair in a word stream.

The scan terminates on every infinite stream over a finite alphabet because
the subword order is a well-quasi-order; a step budget keeps finite prefixes
honest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetMismatch, BudgetExhausted

DEFAULT_SCAN_BUDGET = 10_000


@dataclass(frozen=True)
class Word:
    """An immutable word together with its owning alphabet."""

    letters: tuple
    alphabet: frozenset

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        stray = next((l for l in self.letters if l not in self.alphabet), None)
        if stray is not None:
            raise AlphabetMismatch(f"letter {stray!r} is not in the alphabet")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def is_subword(u: Word, v: Word) -> bool:
    """True iff u can be obtained by deleting letters of v, preserving order.

    Greedy earliest matching is exact for subsequence containment and runs in
    O(len(v)).
    """
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("words live over different alphabets")
    it = iter(v.letters)
    return all(letter in it for letter in u.letters)


def higman_scan(stream, budget: int = DEFAULT_SCAN_BUDGET) -> tuple[int, int]:
    """Scan a stream of words for the first pair (i, j), i < j, with word i a
    subword of word j (1-based, ordered by j then i).

    The budget counts words consumed; exhausting it (or the stream) without a
    pair raises BudgetExhausted carrying the number of words seen.
    """
    seen: list[Word] = []
    for w in stream:
        if len(seen) >= budget:
            raise BudgetExhausted(
                f"no subword pair within the first {budget} words", progress=len(seen)
            )
        for i, earlier in enumerate(seen):
            if is_subword(earlier, w):
                return i + 1, len(seen) + 1
        seen.append(w)
    raise BudgetExhausted(
        f"stream ended after {len(seen)} words without a subword pair",
        progress=len(seen),
    )


# -- word literals -----------------------------------------------------------
#
# Letters are symbol names joined by "*"; "e" denotes the empty word.

EMPTY_LITERAL = "e"


def parse_word_text(text: str) -> tuple[str, ...]:
    text = text.strip()
    if text == EMPTY_LITERAL:
        return ()
    if not text:
        raise ValueError("empty word literal; use 'e' for the empty word")
    parts = tuple(p.strip() for p in text.split("*"))
    if any(not p for p in parts):
        raise ValueError(f"malformed word literal {text!r}")
    return parts


def format_word_text(symbols) -> str:
    symbols = tuple(symbols)
    return "*".join(symbols) if symbols else EMPTY_LITERAL
