"""Utility functions for formatting and parsing engine values."""
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple


def format_rational(value: Fraction) -> str:
    """Exact string form: "p/q", or "p" when q = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_poly(coeffs: Sequence[Fraction], var: str = 'x') -> str:
    """
    Render a coefficient sequence (index i = coefficient of var^i) highest power first,
    e.g. x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1.
    """
    terms: List[str] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(terms) if terms else "0"


def format_linear(coefficients: Mapping[str, Fraction]) -> str:
    """Render sum c*u over labels, e.g. 2*m_2_59 - m_3_58 + 8*n."""
    terms: List[str] = []
    for label, c in coefficients.items():
        c = Fraction(c)
        if not c:
            continue
        mag = abs(c)
        body = label if mag == 1 else f"{format_rational(mag)}*{label}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(terms) if terms else "0"


def format_solved_form(lead: str, lead_coeff: Fraction, constant: Fraction,
                       others: Mapping[str, Fraction]) -> str:
    """
    Render c*lead = constant + sum(...) in the shape of a solved relation,
    with the remaining unknowns moved to the right-hand side.
    """
    lhs = format_linear({lead: lead_coeff})
    rhs_terms = [format_rational(constant)] if constant else []
    moved = format_linear({label: -Fraction(c) for label, c in others.items() if c})
    if moved != "0":
        if not rhs_terms:
            rhs_terms.append(moved)
        elif moved.startswith("-"):
            rhs_terms.append(f"- {moved[1:]}")
        else:
            rhs_terms.append(f"+ {moved}")
    return f"{lhs} = {' '.join(rhs_terms) or '0'}"


def parse_points(text: str) -> List[Tuple[int, int, int]]:
    """
    Parse "a,b:count[;a,b:count]..." into (a, b, count) triples.
    Whitespace is ignored; an empty string means no isolated points.
    """
    if text is None:
        return []
    text = "".join(text.split())
    if not text:
        return []
    out = []
    for chunk in text.split(';'):
        if not chunk:
            continue
        try:
            pair, count = chunk.split(':')
            a, b = pair.split(',')
            a, b, count = int(a), int(b), int(count)
        except ValueError:
            raise ValueError(f"malformed point spec '{chunk}', expected 'a,b:count'")
        if count < 0:
            raise ValueError(f"point count must be >= 0 in '{chunk}'")
        out.append((min(a, b), max(a, b), count))
    return out


def render_text(value: Any, indent: int = 0) -> List[str]:
    """
    Render a JSON-like document as indented text lines.
    Lists of scalars stay on one line; everything else nests.
    """
    pad = " " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if _is_scalar(item) or _is_flat_list(item):
                lines.append(f"{pad}{key}: {_inline(item)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(item, indent + 2))
    elif isinstance(value, list):
        for item in value:
            if _is_scalar(item) or _is_flat_list(item):
                lines.append(f"{pad}- {_inline(item)}")
            else:
                nested = render_text(item, indent + 2)
                if nested:
                    lines.append(f"{pad}- {nested[0].lstrip()}")
                    lines.extend(nested[1:])
                else:
                    lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return lines


def _is_scalar(value: Any) -> bool:
    return value is None or isinstance(value, (str, int, float, bool))


def _is_flat_list(value: Any) -> bool:
    return isinstance(value, list) and all(_is_scalar(v) for v in value)


def _inline(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}" if not value else str(value)
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_error(message: str, errors: Optional[Dict[str, Any]] = None) -> str:
    """One-line error message for stderr, with optional details."""
    error_msg = f"Error: {message}"
    if errors:
        details = "; ".join(f"{key}: {value}" for key, value in errors.items())
        error_msg += f" ({details})"
    return error_msg


def format_obstruction(modulus: int, constant: int, coefficients: Mapping[str, int]) -> str:
    """
    Sentence form of a congruence obstruction q*(sum w_u u) = p with q not dividing p,
    e.g. "2*(m_2_59 - m_11_50 + ...) = 1: the left side is even but 1 is odd".
    """
    lhs = format_linear({label: Fraction(c) for label, c in coefficients.items()})
    if modulus == 2:
        reason = f"the left side is even for integer unknowns but {constant} is odd"
    else:
        reason = f"the left side is a multiple of {modulus} for integer unknowns but {constant} is not"
    return f"{modulus}*({lhs}) = {constant}: {reason}"
