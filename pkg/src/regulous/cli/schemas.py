"""
JSON reports of the command line.

Every `--json` report is an envelope {"schema", "command", "result"}; `result` carries the
keys listed in RESULT_KEYS for its command. Reports are written with sorted keys and a fixed
indent, so loads followed by dumps reproduces the text exactly.
"""

import json

from regulous.errors import SchemaError

SCHEMA_VERSION = 1

VERDICT_KEYS = ("tag", "k", "values", "witness", "fiber", "reason")

RESULT_KEYS: dict[str, tuple[str, ...]] = {
    "check": VERDICT_KEYS,
    "kmax": ("tag", "value", "verdicts"),
    "resolve": ("function", "vars", "status", "detail", "depth", "centers", "nodes"),
    "zeroset": ("vars", "pieces"),
    "stratify": ("function", "vars", "open", "points"),
    "loja": (),
    "radmember": (),
    "nss-verify": ("valid", "reason"),
    "order-nonmember": ("outcome", "reason", "report"),
    "closure": ("included", "passes", "unrefined", "audit"),
    "fixtures": ("ok", "fixtures"),
    "mesh": ("out", "format", "vertices"),
}

# loja and radmember report a certificate, a refutation or an Unknown verdict
CERTIFICATE_KEYS = ("vars", "f", "g", "k", "N", "h", "verdict")
OUTCOME_KEYS: dict[str, tuple[str, ...]] = {
    "loja": (*CERTIFICATE_KEYS, "vanishing"),
    "radical": CERTIFICATE_KEYS,
    "refuted": ("point", "f_value"),
}
OUTCOME_KINDS = {"loja": ("loja",), "radmember": ("radical", "refuted")}


def envelope(command: str, result: dict) -> dict:
    payload = {"schema": SCHEMA_VERSION, "command": command, "result": result}
    validate(payload)
    return payload


def validate(payload: dict) -> None:
    """Raises SchemaError when the payload does not match the schema of its command."""
    if not isinstance(payload, dict):
        raise SchemaError("report is not a JSON object")
    missing = {"schema", "command", "result"} - payload.keys()
    if missing:
        raise SchemaError(f"report lacks {', '.join(sorted(missing))}")
    if payload["schema"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {payload['schema']}")
    command = payload["command"]
    if command not in RESULT_KEYS:
        raise SchemaError(f"unknown command '{command}'")
    result = payload["result"]
    if not isinstance(result, dict):
        raise SchemaError(f"{command}: result is not an object")
    required = RESULT_KEYS[command]
    if command in OUTCOME_KINDS:
        if "kind" in result:
            if result["kind"] not in OUTCOME_KINDS[command]:
                raise SchemaError(f"{command}: unexpected result kind '{result['kind']}'")
            required = OUTCOME_KEYS[result["kind"]]
        elif "tag" in result:
            required = VERDICT_KEYS
        else:
            raise SchemaError(f"{command}: result is neither a certificate nor a verdict")
    absent = [key for key in required if key not in result]
    if absent:
        raise SchemaError(f"{command}: result lacks {', '.join(absent)}")


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def loads(text: str) -> dict:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not valid JSON ({e})") from e
    validate(payload)
    return payload
