import csv
import io
import json
import logging
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from pydantic import BaseModel

from constants import ERROR_CODES
from util.models import Citation, JsonReport

# Configure logging
logger = logging.getLogger("k3.baselocus")


def _encode(value: Any) -> Any:
    """json default hook: rationals as integers or "p/q", models as dicts in field order"""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, BaseModel):
        return model_fields(value)
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def model_fields(model: BaseModel, exclude: Iterable[str] = ()) -> Dict[str, Any]:
    """Fields and computed fields in declaration order, converted with to_plain

    Reads attributes directly; model_dump would stringify Fraction values.
    """
    skip = set(exclude)
    names = list(type(model).model_fields) + list(type(model).model_computed_fields)
    return {name: to_plain(getattr(model, name)) for name in names if name not in skip}


def to_plain(value: Any) -> Any:
    """Recursively turn models, tuples and fractions into JSON-ready values"""
    if isinstance(value, BaseModel):
        return model_fields(value)
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return _encode(value)
    return value


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(to_plain(payload), indent=2, ensure_ascii=False, default=_encode)


def create_report(command: str, inputs: Dict[str, Any], result: Any,
                  citations: Optional[Iterable[Citation]] = None) -> Dict[str, Any]:
    """Report with keys in fixed order: command, inputs, result, citations"""
    report = JsonReport(command=command, inputs=inputs, result=to_plain(result), citations=list(citations or []))
    return {
        "command": report.command,
        "inputs": to_plain(report.inputs),
        "result": report.result,
        "citations": [{"statement": c.statement, "quote": c.quote} for c in report.citations],
    }


def create_error_response(code_key: str, message: str, details: dict = None, command: str = None):
    code = ERROR_CODES.get(code_key, code_key)
    safe_details = {}
    if details:
        for key, value in details.items():
            if key in ["field", "operation", "model", "coords", "value"]:
                safe_details[key] = str(value)

    response = {
        "error": {
            "code": code,
            "code_key": code_key,
            "message": message,
            "details": safe_details
        }
    }
    if command is not None:
        response = {"command": command, **response}
    return response


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text with LF line endings and lowercase booleans"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(v).lower() if isinstance(v, bool) else to_plain(v) for v in row])
    return buffer.getvalue()


def merge_citations(*groups: List[Citation]) -> List[Citation]:
    """Concatenate citation lists, keeping the first occurrence of each statement"""
    seen: Dict[str, Citation] = {}
    for group in groups:
        for citation in group:
            seen.setdefault(citation.statement, citation)
    return list(seen.values())
