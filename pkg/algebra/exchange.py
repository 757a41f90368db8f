"""
Text formats: the complex exchange format and Betti table rendering.

Exchange format: one facet per line as comma-separated positive integers,
``{}`` for the empty facet, ``#universe n`` (at most once) declaring the
universe 1..n, blank lines and other ``#`` lines ignored.
"""
from typing import Dict, List
import io
import json

import pandas as pd

from .errors import InvalidParameters
from .homology import HomologyDims
from .simplicial_core import SimplicialComplex
from .tables import BettiTable

TABLE_FORMATS = ('table', 'json', 'csv')


# =========================
# COMPLEX EXCHANGE FORMAT
# =========================
def parse_complex(text: str) -> SimplicialComplex:
    universe_size = None
    facets: List[List[int]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#universe'):
            if universe_size is not None:
                raise InvalidParameters(f"line {number}: #universe declared twice")
            try:
                universe_size = int(line[len('#universe'):].strip())
            except ValueError:
                raise InvalidParameters(f"line {number}: malformed universe declaration {line!r}")
            if universe_size < 0:
                raise InvalidParameters(f"line {number}: universe size must be nonnegative")
            continue
        if line.startswith('#'):
            continue
        if line == '{}':
            facets.append([])
            continue
        try:
            vertices = [int(token) for token in line.split(',') if token.strip()]
        except ValueError:
            raise InvalidParameters(f"line {number}: expected comma-separated integers, got {line!r}")
        if not vertices or any(v < 1 for v in vertices):
            raise InvalidParameters(f"line {number}: vertices are positive integers")
        facets.append(vertices)

    universe = range(1, universe_size + 1) if universe_size is not None else None
    return SimplicialComplex.from_facets(facets, universe=universe)


def format_complex(delta: SimplicialComplex) -> str:
    lines = [f"#universe {max(delta.universe | delta.vertices, default=0)}"]
    for facet in delta.sorted_facets():
        lines.append(','.join(map(str, facet)) if facet else '{}')
    return '\n'.join(lines) + '\n'


def read_complex(path: str) -> SimplicialComplex:
    try:
        with open(path, encoding='utf-8') as handle:
            return parse_complex(handle.read())
    except OSError as exc:
        raise InvalidParameters(f"cannot read complex file {path}: {exc}")


# =========================
# BETTI TABLES
# =========================
def table_to_json(table: BettiTable) -> str:
    payload = {'entries': table.records()}
    if table.scope is not None:
        payload['scope'] = sorted(table.scope)
    return json.dumps(payload, sort_keys=True, indent=2)


def table_from_json(text: str) -> BettiTable:
    try:
        payload = json.loads(text)
        return BettiTable.from_records(payload['entries'], scope=payload.get('scope'))
    except (ValueError, KeyError, TypeError) as exc:
        raise InvalidParameters(f"malformed Betti table JSON: {exc}")


def table_to_text(table: BettiTable) -> str:
    """Rows i, columns j, in the usual Betti-table orientation."""
    frame = table.to_dataframe()
    if frame.empty:
        return '(empty table)'
    frame.index.name = 'i \\ j'
    frame.columns.name = None
    return frame.to_string()


def table_to_csv(table: BettiTable) -> str:
    buffer = io.StringIO()
    pd.DataFrame(table.records(), columns=['i', 'j', 'value']).to_csv(buffer, index=False)
    return buffer.getvalue()


def render_table(table: BettiTable, fmt: str = 'table') -> str:
    if fmt == 'json':
        return table_to_json(table)
    if fmt == 'csv':
        return table_to_csv(table)
    if fmt == 'table':
        return table_to_text(table)
    raise InvalidParameters(f"unknown format {fmt!r}; expected one of {', '.join(TABLE_FORMATS)}")


def homology_listing(dims: HomologyDims) -> List[str]:
    nonzero = dims.nonzero()
    if not nonzero:
        return ['all reduced homology vanishes']
    return [f"H~_{degree} = {value}" for degree, value in nonzero.items()]


def homology_payload(dims: HomologyDims) -> Dict:
    return {'dims': dims.as_dict(), 'nonzero': {str(k): v for k, v in dims.nonzero().items()}}
