"""The document every subcommand prints.

JSON form (``--format json``)::

    {
      "command": "<argv joined by spaces>",
      "result": { ... }
    }

Rationals inside ``result`` are strings ``"p/q"`` or ``"p"``. ``system``
results carry ``order``, ``rotation``, ``labels``, ``aliases``, ``matrix``
(one list per power-basis coordinate) and ``rhs``; this is the shape
``analyze --system-json`` reads back. ``analyze`` adds ``verdict``, ``rank``
and either ``certificate`` + ``obstruction`` or ``witness``.
"""
from typing import Any, Dict, Literal

from pydantic import BaseModel, ConfigDict

from utils import render_text


class Report(BaseModel):
    """Command echo plus a JSON-ready result; rationals are already strings."""

    model_config = ConfigDict(frozen=True)

    command: str
    result: Dict[str, Any]
    format: Literal['text', 'json'] = 'text'

    def render(self) -> str:
        if self.format == 'json':
            return self.model_dump_json(indent=2, include={'command', 'result'})
        lines = [f"command: {self.command}"]
        lines.extend(render_text(self.result))
        return "\n".join(lines)
