"""
Run Report Module
Builds the JSON report every CLI command emits and exports it atomically
"""

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from core import __version__

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SCHEMA_PATH = Path(__file__).parent.parent / "docs" / "run_report.schema.json"

_JSON_TYPES = {
    "object": dict,
    "array": list,
    "string": str,
    "integer": int,
    "number": (int, float),
    "boolean": bool,
    "null": type(None),
}


@dataclass
class RunReport:
    """Machine-readable record of one CLI invocation."""
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)
    status: str = 'ok'
    version: str = __version__

    def add_timing(self, phase: str, seconds: float) -> None:
        self.timing[phase] = round(max(0.0, seconds), 6)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema_version': SCHEMA_VERSION,
            'command': self.command,
            'inputs': self.inputs,
            'results': self.results,
            'timing': self.timing,
            'status': self.status,
            'version': self.version,
            'timestamp': datetime.now().isoformat(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def export_report(report: RunReport, path: Optional[str]) -> bool:
    """
    Write the report to `path` via a temp file and an atomic rename.

    Args:
        report: report to export
        path: destination file; None disables export

    Returns:
        bool: True if export succeeded (or was disabled), False otherwise
    """
    if not path:
        return True
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)

        temp_file = target.with_suffix(target.suffix + '.tmp')
        with open(temp_file, 'w') as f:
            f.write(report.to_json())

        temp_file.replace(target)

        logger.debug(f"Report exported to {target}")
        return True

    except OSError as e:
        logger.error(f"Failed to export report: {e}")
        return False


def load_schema(path: Optional[Path] = None) -> Dict[str, Any]:
    with open(path or SCHEMA_PATH, 'r') as f:
        return json.load(f)


def schema_problems(data: Any, schema: Dict[str, Any], where: str = "$") -> List[str]:
    """
    Check `data` against the subset of JSON Schema the report schema uses
    (type, enum, required, properties, additionalProperties, items, minimum).
    """
    problems: List[str] = []
    expected = schema.get('type')
    if expected is not None:
        names = expected if isinstance(expected, list) else [expected]
        kinds = tuple(_JSON_TYPES[name] for name in names)
        is_bool = isinstance(data, bool)
        if not isinstance(data, kinds) or (is_bool and 'boolean' not in names):
            return [f"{where}: expected {expected}, got {type(data).__name__}"]
    if 'enum' in schema and data not in schema['enum']:
        problems.append(f"{where}: {data!r} not in {schema['enum']}")
    if 'minimum' in schema and isinstance(data, (int, float)) and data < schema['minimum']:
        problems.append(f"{where}: {data} below minimum {schema['minimum']}")
    if isinstance(data, dict):
        for key in schema.get('required', []):
            if key not in data:
                problems.append(f"{where}: missing required key {key!r}")
        properties = schema.get('properties', {})
        extra = schema.get('additionalProperties')
        for key, value in data.items():
            if key in properties:
                problems.extend(schema_problems(value, properties[key], f"{where}.{key}"))
            elif isinstance(extra, dict):
                problems.extend(schema_problems(value, extra, f"{where}.{key}"))
    if isinstance(data, list) and isinstance(schema.get('items'), dict):
        for index, item in enumerate(data):
            problems.extend(schema_problems(item, schema['items'], f"{where}[{index}]"))
    return problems
