"""Command-line client for the verification service.

The CLI talks HTTP to a folcheck service.  By default it mounts the FastAPI
app in-process (no server needed); pass ``--server URL`` to drive a remote
instance instead.  Exit codes: 0 when everything passes, 1 on a mathematical
mismatch, 2 on usage errors (unknown case ids included).

Reports are emitted deterministically: canonical JSON with sorted keys and
no timing fields.  ``--timing`` adds wall-clock fields back in.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import httpx

from . import registry as _registry_mod

USAGE_ERROR = 2
MISMATCH = 1


class _InProcessTransport(httpx.BaseTransport):
    """Synchronous bridge onto the ASGI app; lets the CLI run serverless."""

    def __init__(self, app):
        self._asgi = httpx.ASGITransport(app=app)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        import asyncio

        request.read()

        async def roundtrip():
            response = await self._asgi.handle_async_request(request)
            await response.aread()
            return response

        response = asyncio.run(roundtrip())
        return httpx.Response(
            status_code=response.status_code,
            headers=response.headers,
            content=response.content,
            request=request,
        )


def _client(args) -> httpx.Client:
    if getattr(args, "server", None):
        return httpx.Client(base_url=args.server, timeout=3600.0)
    from .service import app
    return httpx.Client(transport=_InProcessTransport(app),
                        base_url="http://folcheck.local", timeout=None)


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "wall_ms"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def emit_report(results, as_json: bool, timing: bool, stream=None) -> None:
    """Deterministic serialization: stable key order, one schema per run."""
    stream = stream or sys.stdout
    payload = results if timing else _strip_timing(results)
    if as_json:
        json.dump(payload, stream, indent=2, sort_keys=True, default=str)
        stream.write("\n")
        return
    reports = payload if isinstance(payload, list) else [payload]
    for rep in reports:
        status = rep.get("status", "?").upper()
        line = f"{status:22s} {rep.get('id', '?')}"
        if timing and "wall_ms" in rep:
            line += f"  [{rep['wall_ms']} ms]"
        stream.write(line + "\n")
        if rep.get("status") not in ("pass", None):
            for key in ("error", "note"):
                if rep.get(key):
                    stream.write(f"    {key}: {rep[key]}\n")
            if rep.get("computed") is not None:
                stream.write(f"    computed: {json.dumps(rep['computed'], sort_keys=True)}\n")
            if rep.get("expected") is not None:
                stream.write(f"    expected: {json.dumps(rep['expected'], sort_keys=True)}\n")


def _case_params(args) -> dict:
    out = {}
    for key in ("n", "k", "d", "r"):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    return out


def cmd_list(args) -> int:
    tier = None if args.tier in (None, "all") else args.tier
    with _client(args) as client:
        resp = client.get("/cases", params={
            k: v for k, v in (("filter", args.filter), ("tier", tier)) if v})
        resp.raise_for_status()
        cases = resp.json()
    if args.json:
        emit_report(cases, True, args.timing)
        return 0
    for case in cases:
        params = " ".join(f"{k}={v}" for k, v in sorted(case["params"].items()))
        print(f"{case['id']:28s} {case['tier']:5s} {case['kind']:20s} {params}")
        print(f"    {case['claim']}")
    return 0


def cmd_verify(args) -> int:
    with _client(args) as client:
        if args.case_ids == ["all"] or not args.case_ids:
            # bulk runs default to the fast tier; --tier all opts into both
            tier = args.tier or "fast"
            body = {"tier": None if tier == "all" else tier,
                    "filter": args.filter,
                    "seed": args.seed, "threads": args.threads,
                    "params": _case_params(args)}
            resp = client.post("/verify-all", json=body)
            resp.raise_for_status()
            data = resp.json()
            emit_report(data["reports"], args.json, args.timing)
            if not args.json:
                print(f"counts: {json.dumps(data['counts'], sort_keys=True)}")
            return 0 if data["all_pass"] else MISMATCH
        reports = []
        for case_id in args.case_ids:
            resp = client.post("/verify", json={
                "case_id": case_id, "params": _case_params(args),
                "seed": args.seed})
            if resp.status_code == 404:
                print(f"unknown case id: {case_id}", file=sys.stderr)
                return USAGE_ERROR
            resp.raise_for_status()
            reports.append(resp.json())
    emit_report(reports, args.json, args.timing)
    bad = [r for r in reports if r["status"] in ("fail", "error")]
    return MISMATCH if bad else 0


def cmd_decompose(args) -> int:
    weight = [int(c) for c in args.weight.split(",")]
    with _client(args) as client:
        resp = client.post("/decompose", json={
            "rs": args.rs, "weight": weight,
            "pipeline": args.functor or []})
        if resp.status_code == 422:
            print(resp.json()["detail"], file=sys.stderr)
            return USAGE_ERROR
        resp.raise_for_status()
        data = resp.json()
    if args.json:
        emit_report(data, True, args.timing)
    else:
        for term in data["terms"]:
            weight_text = ",".join(str(c) for c in term["weight"])
            print(f"V[{weight_text}]  mult {term['mult']}  dim {term['dim']}")
        print(f"total dim {data['total_dim']} (mass {data['mass']})")
    return 0


def _load_form_file(path: str):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        print(f"cannot read {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from exc
    except json.JSONDecodeError as exc:
        print(f"{path} is not valid JSON: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from exc


def cmd_forms(args) -> int:
    payload = _load_form_file(args.input)
    if isinstance(payload, dict):
        n = payload["n"]
        terms = payload["terms"]
    else:
        if args.n is None:
            print("--n required when the input file is a bare term list",
                  file=sys.stderr)
            return USAGE_ERROR
        n, terms = args.n, payload
    with _client(args) as client:
        endpoint = "/forms/integrable" if args.forms_op == "integrable" else "/forms/psi"
        resp = client.post(endpoint, json={"n": n, "terms": terms})
        if resp.status_code == 422:
            print(resp.json()["detail"], file=sys.stderr)
            return USAGE_ERROR
        resp.raise_for_status()
        data = resp.json()
    emit_report(data, args.json, args.timing) if args.json else print(
        json.dumps(data, sort_keys=True))
    if args.forms_op == "integrable":
        return 0 if data.get("integrable") is not False else 0
    return 0


def cmd_pencil(args) -> int:
    partition = [int(p) for p in args.partition.split(",")]
    values = [str(Fraction(v)) for v in args.values.split(",")]
    with _client(args) as client:
        resp = client.post("/pencil/verify", json={
            "partition": partition, "values": values})
        if resp.status_code == 422:
            print(resp.json()["detail"], file=sys.stderr)
            return USAGE_ERROR
        resp.raise_for_status()
        data = resp.json()
    emit_report(data, True, args.timing)
    return 0


def cmd_extalg(args) -> int:
    with _client(args) as client:
        if args.extalg_op == "hw":
            resp = client.post("/extalg/hw", json={"tag": args.tag, "n": args.n})
            if resp.status_code == 422:
                print(resp.json()["detail"], file=sys.stderr)
                return USAGE_ERROR
            resp.raise_for_status()
            emit_report(resp.json(), True, args.timing)
            return 0
        # rank
        if args.tag:
            hw = client.post("/extalg/hw", json={"tag": args.tag, "n": args.n})
            hw.raise_for_status()
            payload = {"n": hw.json()["n"], "inner_degree": 3,
                       "terms": hw.json()["terms"]}
        else:
            data = _load_form_file(args.input)
            payload = data
        resp = client.post("/extalg/rank", json=payload)
        if resp.status_code == 422:
            print(resp.json()["detail"], file=sys.stderr)
            return USAGE_ERROR
        resp.raise_for_status()
        emit_report(resp.json(), True, args.timing)
        return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("folcheck.service:app", host=args.host, port=args.port)
    return 0


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags accepted before or after the subcommand name."""
    d = argparse.SUPPRESS if suppress else None

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--server", default=d,
                        help="base URL of a running service "
                             "(default: in-process)")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit canonical JSON")
    parser.add_argument("--timing", action="store_true",
                        default=default(False),
                        help="include wall-clock fields in output")
    parser.add_argument("--seed", type=int,
                        default=default(_registry_mod.DEFAULT_SEED),
                        help="seed for randomized cases (recorded in reports)")
    parser.add_argument("--threads", type=int, default=default(1),
                        help="worker threads for verify all")
    parser.add_argument("--tier", choices=["fast", "slow", "all"], default=d,
                        help="tier selection; bulk verify defaults to fast")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folcheck",
        description="exact verification engine for equivariant decompositions, "
                    "nested exterior algebra, twisted forms and skew pencils")
    _global_flags(parser, suppress=False)

    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", parents=[common],
                            help="list registry cases")
    p_list.add_argument("--filter", help="substring filter on id or tags")
    p_list.set_defaults(func=cmd_list)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run cases by id, or 'all'")
    p_verify.add_argument("case_ids", nargs="*", default=["all"])
    p_verify.add_argument("--filter", help="substring filter for 'all'")
    for key in ("n", "k", "d", "r"):
        p_verify.add_argument(f"--{key}", type=int)
    p_verify.set_defaults(func=cmd_verify)

    p_dec = sub.add_parser("decompose", parents=[common],
                           help="decompose a functor image of an irreducible")
    p_dec.add_argument("--rs", required=True, help="root system, e.g. A7 or A2xA4")
    p_dec.add_argument("--weight", required=True,
                       help="comma-separated fundamental coordinates")
    p_dec.add_argument("--functor", action="append",
                       help="wedge2|wedge3|wedge4|sym2|sym4|schur:2,2 "
                            "(repeatable, applied in order)")
    p_dec.set_defaults(func=cmd_decompose)

    p_forms = sub.add_parser("forms", parents=[common],
                             help="twisted-form checks")
    p_forms.add_argument("forms_op", choices=["integrable", "psi"])
    p_forms.add_argument("--input", required=True,
                         help="JSON file with {n, terms} or a bare term list")
    p_forms.add_argument("--n", type=int)
    p_forms.set_defaults(func=cmd_forms)

    p_pencil = sub.add_parser("pencil", parents=[common],
                              help="skew pencil structure checks")
    p_pencil.add_argument("pencil_op", choices=["verify"])
    p_pencil.add_argument("--partition", required=True)
    p_pencil.add_argument("--values", required=True)
    p_pencil.set_defaults(func=cmd_pencil)

    p_ext = sub.add_parser("extalg", parents=[common],
                           help="nested exterior algebra utilities")
    p_ext.add_argument("extalg_op", choices=["hw", "rank"])
    p_ext.add_argument("--tag", help="one of w6 w24 w48 w228 w237 w147")
    p_ext.add_argument("--n", type=int)
    p_ext.add_argument("--input", help="JSON multivector for rank")
    p_ext.set_defaults(func=cmd_extalg)

    p_serve = sub.add_parser("serve", parents=[common],
                             help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
