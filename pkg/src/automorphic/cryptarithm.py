"""The ATOM x ATOM = ****ATOM cryptarithm.

Identical letters stand for identical digits, different letters for
different digits and the leading letter must not be zero. Any solution is a
four-digit idempotent modulo ``10 ** 4``.

"""
import logging
from typing import List, Optional

from automorphic.digits import DigitString
from automorphic.engine import IdempotentSolution, enumerate_idempotents

logger = logging.getLogger(__name__)


WORD = 'ATOM'
BASE = 10


class CryptarithmCandidate(object):

    """Idempotent residue of the puzzle's width that is checked against the
    rules of the puzzle."""

    def __init__(
            self,
            solution: IdempotentSolution,
            rejection: Optional[str] = None
        ) -> None:
        """
        Parameters
        ----------
        solution: automorphic.engine.IdempotentSolution
            Candidate solution
        rejection: str, optional
            Reason the candidate violates the rules (``None`` if accepted)

        """
        self.solution = solution
        self.rejection = rejection

    @property
    def accepted(self) -> bool:
        """bool: whether the candidate satisfies all rules"""
        return self.rejection is None

    @property
    def digits(self) -> DigitString:
        """automorphic.digits.DigitString: digits assigned to the letters"""
        return self.solution.digits

    @property
    def square(self) -> int:
        """int: square of the candidate"""
        return int(self.solution.residue) ** 2


def check_rules(digits: DigitString, word: str = WORD) -> Optional[str]:
    """Checks a digit assignment against the rules of the puzzle.

    Parameters
    ----------
    digits: automorphic.digits.DigitString
        Digits, one per letter of `word`
    word: str, optional
        Letters of the puzzle

    Returns
    -------
    Union[str, None]
        Reason for rejection or ``None`` if the assignment is valid

    """
    if digits.leading == 0:
        return 'leading digit {} is zero'.format(word[0])
    assignment = {}
    for letter, digit in zip(word, digits):
        if assignment.setdefault(letter, digit) != digit:
            return 'letter {} stands for two digits'.format(letter)
    letters_per_digit = {}
    for letter, digit in assignment.items():
        other = letters_per_digit.setdefault(digit, letter)
        if other != letter:
            return 'letters {} and {} share digit {}'.format(
                other, letter, digit
            )
    return None


def hint_ladder(width: int = len(WORD)) -> List[List[IdempotentSolution]]:
    """Lists the non-trivial idempotent suffixes of every length up to
    `width` (the digits M, OM, TOM and ATOM).

    Each suffix pads one digit on the left of a suffix of the previous
    length, so the trivial endings 0 and 1 are eliminated once at length 1.

    Parameters
    ----------
    width: int, optional
        Longest suffix

    Returns
    -------
    List[List[automorphic.engine.IdempotentSolution]]
        Non-trivial solutions per suffix length, starting at length 1

    """
    return [
        enumerate_idempotents(BASE, k, include_trivial=False)
        for k in range(1, width + 1)
    ]


def solve_atom() -> List[CryptarithmCandidate]:
    """Checks every idempotent modulo ``10 ** 4`` against the rules.

    Returns
    -------
    List[automorphic.cryptarithm.CryptarithmCandidate]
        All candidates in ascending order, with reasons for rejection

    """
    candidates = []
    for solution in enumerate_idempotents(BASE, len(WORD)):
        candidate = CryptarithmCandidate(
            solution, check_rules(solution.digits)
        )
        logger.debug(
            'candidate {}: {}'.format(
                solution.digits, candidate.rejection or 'accepted'
            )
        )
        candidates.append(candidate)
    return candidates
