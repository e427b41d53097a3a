"""Command-line client for the histocond service.

The CLI never computes anything itself: every subcommand issues one HTTP
request.  By default the service runs in-process over an ASGI transport,
so no server is needed; pass ``--server URL`` (or set HISTOCOND_SERVER)
to talk to a remote instance started with ``histocond serve``.

Exit codes: 0 success, 1 invalid input, 2 numerical failure,
3 verification failures present.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import httpx

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_NUMERICAL_FAILURE = 2
EXIT_VERIFY_FAILURES = 3

SERVER_ENV_VAR = "HISTOCOND_SERVER"


class CliFailure(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class ServiceClient:
    """Thin HTTP client; in-process ASGI when no server URL is given."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
        else:
            # Synchronous bridge onto the in-process ASGI app.  Starlette
            # warns about plain httpx here; the fallback is supported and
            # the warning is noise for CLI users.
            import warnings

            from .service import create_app

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from starlette.testclient import TestClient

                self._client = TestClient(create_app())

    def post(self, path: str, payload: dict) -> dict:
        try:
            response = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            raise CliFailure(f"cannot reach service: {exc}", EXIT_NUMERICAL_FAILURE)
        if response.status_code == 200:
            return response.json()
        try:
            body = response.json()
        except ValueError:
            body = {}
        if response.status_code == 400 and "kind" in body:
            code = (
                EXIT_NUMERICAL_FAILURE
                if body["kind"] == "numerical-failure"
                else EXIT_INVALID_INPUT
            )
            raise CliFailure(body.get("message", "request rejected"), code)
        if response.status_code == 422:
            raise CliFailure(f"invalid request: {body.get('detail')}", EXIT_INVALID_INPUT)
        raise CliFailure(
            f"service error {response.status_code}: {response.text[:200]}",
            EXIT_NUMERICAL_FAILURE,
        )

    def close(self) -> None:
        self._client.close()


# ---------------------------------------------------------------------------
# argument plumbing

_FAMILY_OPTS: dict[str, dict] = {
    "family_class": dict(flag="--class", type=str, help="family class (e.g. c2, equidistributed_c1)"),
    "a": dict(flag="--a", type=float, help="left end of the interval (chain classes)"),
    "b": dict(flag="--b", type=float, help="right end of the interval (chain classes)"),
    "rho": dict(flag="--rho", type=float, help="fixed arc half-width (c2)"),
    "arc": dict(flag="--arc", type=float, help="arc parameter; rho = arc/d (c2)"),
    "alpha": dict(flag="--alpha", type=float, help="shared endpoint (c3 classes)"),
    "side": dict(flag="--side", type=str, help="'left' or 'right' (c3)"),
    "betas": dict(flag="--betas", type=str, help="comma-separated free endpoints (c3)"),
    "breakpoints": dict(flag="--breakpoints", type=str, help="comma-separated chain breakpoints (c1)"),
    "length": dict(flag="--length", type=float, help="reference segment length (c4)"),
    "segment": dict(flag="--segment", type=str, help="reference segment 'a,b' (c4)"),
    "xis": dict(flag="--xis", type=str, help="comma-separated translation offsets (c4)"),
    "xi_min": dict(flag="--xi-min", type=float, help="first equispaced offset (c4)"),
    "xi_max": dict(flag="--xi-max", type=float, help="last equispaced offset (c4)"),
}

_LIST_KEYS = {"betas", "breakpoints", "xis"}
_PAIR_KEYS = {"segment"}


def _add_family_options(parser: argparse.ArgumentParser) -> None:
    for key, meta in _FAMILY_OPTS.items():
        parser.add_argument(meta["flag"], dest=key, type=str, default=None, help=meta["help"])
    parser.add_argument("--d", dest="d", type=int, default=None, help="number of segments")
    parser.add_argument(
        "--family-json",
        type=str,
        default=None,
        help="path to a family JSON file (overrides the class flags)",
    )


def _parse_listish(key: str, raw) -> object:
    if isinstance(raw, str):
        parts = [float(tok) for tok in raw.split(",") if tok.strip()]
    else:
        parts = [float(v) for v in raw]
    if key in _PAIR_KEYS:
        if len(parts) != 2:
            raise CliFailure(f"--{key} needs exactly two values", EXIT_INVALID_INPUT)
        return parts
    return parts


def _spec_payload(args: argparse.Namespace, config: dict) -> dict:
    if getattr(args, "family_json", None):
        try:
            data = json.loads(Path(args.family_json).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CliFailure(f"cannot read family JSON: {exc}", EXIT_INVALID_INPUT)
        return {"class": "custom", "segments": data["segments"]}

    spec: dict = {}
    for key in _FAMILY_OPTS:
        value = getattr(args, key, None)
        if value is None:
            lookup = "class" if key == "family_class" else key
            value = config.get(lookup, config.get(lookup.replace("_", "-")))
        if value is None:
            continue
        name = "class" if key == "family_class" else key
        if key in _LIST_KEYS or key in _PAIR_KEYS:
            spec[name] = _parse_listish(key, value)
        elif key in ("family_class", "side"):
            spec[name] = str(value)
        else:
            spec[name] = float(value)
    if "class" not in spec:
        raise CliFailure("a family class is required (--class or config file)", EXIT_INVALID_INPUT)
    return spec


def _merged(args: argparse.Namespace, config: dict, key: str, default=None):
    value = getattr(args, key, None)
    if value is None:
        value = config.get(key.replace("_", "-"), config.get(key, default))
    return value


def _load_config(args: argparse.Namespace) -> dict:
    path = getattr(args, "config", None)
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliFailure(f"cannot read config file: {exc}", EXIT_INVALID_INPUT)
    if not isinstance(data, dict):
        raise CliFailure("config file must contain a JSON object", EXIT_INVALID_INPUT)
    return data


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_assemble(args, client: ServiceClient) -> int:
    config = _load_config(args)
    payload = {
        "spec": _spec_payload(args, config),
        "d": _merged(args, config, "d"),
        "basis": _merged(args, config, "basis", "monomial"),
        "normalized": bool(_merged(args, config, "normalized", False)),
    }
    data = client.post("/assemble", payload)
    _emit(data["dump"], args.output)
    if args.family_out:
        Path(args.family_out).write_text(json.dumps(data["family"]))
    return EXIT_OK


def _cmd_cond_sweep(args, client: ServiceClient) -> int:
    config = _load_config(args)
    outputs = _merged(args, config, "outputs")
    if isinstance(outputs, str):
        outputs = [tok.strip() for tok in outputs.split(",") if tok.strip()]
    payload = {
        "spec": _spec_payload(args, config),
        "basis": _merged(args, config, "basis", "monomial"),
        "d_start": int(_merged(args, config, "d_start")),
        "d_stop": int(_merged(args, config, "d_stop")),
        "d_stride": int(_merged(args, config, "d_stride", 1)),
        "jobs": int(_merged(args, config, "jobs", 1)),
    }
    if outputs:
        payload["outputs"] = outputs
    if payload["d_start"] is None or payload["d_stop"] is None:
        raise CliFailure("--d-start and --d-stop are required", EXIT_INVALID_INPUT)
    data = client.post("/sweep", payload)
    for row in data["rows"]:
        if row.get("error"):
            sys.stderr.write(f"warning: d={row['d']}: {row['error']}\n")
    _emit(data["csv"], args.output)
    return EXIT_OK


def _cmd_histofit(args, client: ServiceClient) -> int:
    config = _load_config(args)
    function = _merged(args, config, "function")
    if not function:
        raise CliFailure("--function is required", EXIT_INVALID_INPUT)
    payload = {
        "spec": _spec_payload(args, config),
        "d": _merged(args, config, "d"),
        "basis": _merged(args, config, "basis", "monomial"),
        "function": function,
        "quad_order": int(_merged(args, config, "quad_order", 32)),
    }
    data = client.post("/fit", payload)
    out = {
        "basis": data["basis"],
        "coeffs": data["coeffs"],
        "residual_max": data["residual_max"],
        "cond_estimate": data["cond_estimate"],
    }
    _emit(json.dumps(out, indent=2), args.output)
    return EXIT_OK


def _cmd_fekete_search(args, client: ServiceClient) -> int:
    config = _load_config(args)
    payload = {
        "d": int(_merged(args, config, "d")),
        "alpha": float(_merged(args, config, "alpha")),
        "grid_n": int(_merged(args, config, "grid_n", 201)),
    }
    data = client.post("/fekete", payload)
    _emit(json.dumps(data, indent=2), args.output)
    return EXIT_OK


def _format_verify(data: dict) -> str:
    lines = []
    for g in data["groups"]:
        lines.append(f"[{'PASS' if g['passed'] else 'FAIL'}] {g['name']}: {g['detail']}")
    lines.append("")
    lines.append("informational (reported, never asserted):")
    for key, value in data["informational"].items():
        lines.append(f"  {key}: {json.dumps(value)}")
    failed = [g for g in data["groups"] if not g["passed"]]
    lines.append("")
    lines.append(
        f"{len(data['groups']) - len(failed)}/{len(data['groups'])} groups passed"
        + (f" ({len(failed)} failed)" if failed else "")
        + f" in {data['runtime_s']:.1f}s"
    )
    return "\n".join(lines)


def _cmd_verify(args, client: ServiceClient) -> int:
    data = client.post("/verify", {})
    _emit(_format_verify(data), args.output)
    if args.json:
        Path(args.json).write_text(json.dumps(data, indent=2))
    return EXIT_OK if data["passed"] else EXIT_VERIFY_FAILURES


def _cmd_serve(args, _client=None) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="histocond",
        description="Segmental histopolation toolkit (thin client over the histocond service).",
    )
    parser.add_argument(
        "--server",
        default=os.environ.get(SERVER_ENV_VAR),
        help=f"service base URL (default: in-process; also {SERVER_ENV_VAR})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("assemble", help="assemble a Vandermonde matrix and print its dump")
    _add_family_options(p)
    p.add_argument("--basis", default=None, help="monomial | chebyshev-t | chebyshev-u")
    p.add_argument("--normalized", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--config", default=None, help="JSON config file (flags win)")
    p.add_argument("--output", default=None, help="write the dump here instead of stdout")
    p.add_argument("--family-out", default=None, help="also write the built family JSON here")
    p.set_defaults(handler=_cmd_assemble)

    p = sub.add_parser("cond-sweep", help="conditioning sweep over a range of d, CSV output")
    _add_family_options(p)
    p.add_argument("--basis", default=None)
    p.add_argument("--d-start", dest="d_start", type=int, default=None)
    p.add_argument("--d-stop", dest="d_stop", type=int, default=None)
    p.add_argument("--d-stride", dest="d_stride", type=int, default=None)
    p.add_argument("--outputs", default=None, help="comma list from kappa2,kappaF,det,bounds")
    p.add_argument("--jobs", type=int, default=None, help="parallel workers (capped by HISTOCOND_THREADS)")
    p.add_argument("--config", default=None)
    p.add_argument("--output", default=None, help="CSV path (default stdout)")
    p.set_defaults(handler=_cmd_cond_sweep)

    p = sub.add_parser("histofit", help="fit the histopolant of an expression in x")
    _add_family_options(p)
    p.add_argument("--basis", default=None)
    p.add_argument("--function", default=None, help="expression in x, e.g. 'sin(3*x) + x**2'")
    p.add_argument("--quad-order", dest="quad_order", type=int, default=None)
    p.add_argument("--config", default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=_cmd_histofit)

    p = sub.add_parser("fekete-search", help="grid search for shared-endpoint Fekete segments")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--grid-n", dest="grid_n", type=int, default=None)
    p.add_argument("--config", default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=_cmd_fekete_search)

    p = sub.add_parser("verify", help="run the verification suite (exit 3 on failures)")
    p.add_argument("--json", default=None, help="write the machine-readable report here")
    p.add_argument("--output", default=None, help="write the human summary here")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8707)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        return args.handler(args)
    client = ServiceClient(args.server)
    try:
        return args.handler(args, client)
    except CliFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
