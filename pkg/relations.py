"""Reading linear relations between unknowns from text.

Grammar (whitespace is insignificant, '#' starts a comment line):

    relation := side '=' side
    side     := term (('+' | '-') term)*      a leading sign is allowed
    term     := INT '*' label | label | INT
    label    := 'm_' INT '_' INT              canonical type label m_<a>_<b>
              | 'm_' INT                      index alias m_<j> = m_<j+1>_<N-j> (r = 1, N even)
              | 'n'                           curve term

Example: ``4*m_1 = -1 + 2*m_2 + 2*m_20 - 2*m_21 + 8*n``.
Every relation must name at least one unknown.
"""
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

import config
from intsolve import LinearRelation

logger = logging.getLogger(__name__)

_TERM_RE = re.compile(
    r'^(?P<sign>[+-]?)(?:(?P<coef>\d+)(?:\*(?P<label>m_\d+(?:_\d+)?|n))?|(?P<bare>m_\d+(?:_\d+)?|n))$'
)


def _parse_side(side: str, into: Dict[str, Fraction], sign: int) -> Fraction:
    """Accumulate the labelled terms of one side; return its constant."""
    side = "".join(side.split())
    if not side:
        raise ValueError("empty side in relation")
    parts = re.findall(r'[+-]?[^+-]+', side)
    if "".join(parts) != side:
        raise ValueError(f"malformed expression: {side}")
    constant = Fraction(0)
    for part in parts:
        match = _TERM_RE.match(part)
        if not match:
            raise ValueError(f"malformed term: {part}")
        s = -1 if match.group('sign') == '-' else 1
        label = match.group('label') or match.group('bare')
        coef = int(match.group('coef')) if match.group('coef') else 1
        if label:
            into[label] = into.get(label, Fraction(0)) + sign * s * coef
        else:
            constant += s * coef
    return constant


def parse_relation(line: str) -> LinearRelation:
    """Parse one relation into sum(coefficients) = constant."""
    if line.count('=') != 1:
        raise ValueError(f"relation needs exactly one '=': {line.strip()}")
    lhs, rhs = line.split('=')
    coefficients: Dict[str, Fraction] = {}
    left_constant = _parse_side(lhs, coefficients, 1)
    lead = next(iter(coefficients), None)
    right_constant = _parse_side(rhs, coefficients, -1)
    if not any(coefficients.values()):
        raise ValueError(f"relation names no unknown: {line.strip()}")
    return LinearRelation(coefficients, right_constant - left_constant, lead=lead)


def load_relations(path: Optional[Union[str, Path]] = None) -> List[LinearRelation]:
    """Load relations from a data file, one per line; defaults to the configured path."""
    path = Path(path) if path is not None else config.RELATIONS_PATH
    relations = []
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        logger.error(f"Failed to read relations file {path}: {str(e)}")
        raise ValueError(f"cannot read relations file {path}: {e}")
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        try:
            relations.append(parse_relation(stripped))
        except ValueError as e:
            raise ValueError(f"{path}:{lineno}: {e}")
    logger.info(f"Loaded {len(relations)} relations from {path}")
    return relations
