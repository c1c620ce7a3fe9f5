"""Thin command-line client over the covering-number service.

Subcommands build service requests from input files and print one JSON
document per input.  By default the service handlers run in-process; pass
--server to talk to a running instance over HTTP.

Exit codes: 0 success, 2 verification failure, 3 input error, 4 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .errors import InputError, OrderCapExceededError
from .service import models
from .service.app import (
    analyze_document,
    compute_cover,
    compute_oracle,
    run_census,
    verify_certificate,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 2
EXIT_INPUT_ERROR = 3
EXIT_CAP_EXCEEDED = 4

_ENDPOINTS = {
    "analyze": ("/analyze", analyze_document, models.DocumentRequest),
    "cover": ("/cover", compute_cover, models.CoverRequest),
    "oracle": ("/oracle", compute_oracle, models.OracleRequest),
    "verify": ("/verify", verify_certificate, models.VerifyRequest),
    "census": ("/census", run_census, models.CensusRequest),
}


class ClientError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _call(endpoint: str, payload: dict, server: Optional[str]) -> dict:
    path, handler, request_model = _ENDPOINTS[endpoint]
    if server is None:
        try:
            response = handler(request_model(**payload))
        except OrderCapExceededError as exc:
            raise ClientError("cap_exceeded", str(exc)) from exc
        except InputError as exc:
            raise ClientError("input_error", str(exc)) from exc
        return response.model_dump(exclude_none=True)
    import httpx

    reply = httpx.post(server.rstrip("/") + path, json=payload, timeout=300.0)
    if reply.status_code != 200:
        detail = reply.json().get("detail", {})
        if isinstance(detail, dict) and "code" in detail:
            raise ClientError(detail["code"], detail.get("message", ""))
        raise ClientError("input_error", reply.text)
    return reply.json()


def _print_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ClientError("input_error", f"{path}: {exc}") from exc


def _analyze_text_report(doc: dict) -> str:
    lines = [
        f"order: {doc['order']}",
        f"digest: {doc['carrier_digest']}",
        f"identity: {doc.get('identity', 'none')}",
        f"group: {doc['is_group']}  inverse: {doc['is_inverse']}"
        f"  monogenic: {doc['is_monogenic']}",
        f"idempotents: {doc['idempotents']}",
        f"J-classes: {doc['greens']['j_classes']} (sizes {doc['greens']['j_class_sizes']})"
        f"  R: {doc['greens']['r_classes']}  L: {doc['greens']['l_classes']}",
        f"maximal J-classes: {doc['greens']['maximal_j_classes']}",
    ]
    return "\n".join(lines)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="semicover",
        description="Covering numbers of finite semigroups with certificates",
    )
    parser.add_argument("--server", help="base URL of a running service")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="structure flags and Green's summary")
    p_analyze.add_argument("files", nargs="+")
    p_analyze.add_argument("--json", action="store_true")

    p_cover = sub.add_parser("cover", help="covering number with certificate")
    p_cover.add_argument("files", nargs="+")
    p_cover.add_argument("--kind", choices=sorted(models.KindCode.__args__), default="s")
    p_cover.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser("oracle", help="exhaustive exact covering number")
    p_oracle.add_argument("files", nargs="+")
    p_oracle.add_argument("--kind", choices=sorted(models.KindCode.__args__), default="s")
    p_oracle.add_argument("--cap", type=int, default=16)
    p_oracle.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="re-check a certificate against a carrier")
    p_verify.add_argument("files", nargs="+")
    p_verify.add_argument("--certificate", required=True,
                          help="JSON certificate emitted by 'cover' or 'oracle'")
    p_verify.add_argument("--kind", choices=sorted(models.KindCode.__args__), default="s")
    p_verify.add_argument("--json", action="store_true")

    p_census = sub.add_parser("census", help="tabulate covering numbers over a directory")
    p_census.add_argument("--dir", required=True)
    p_census.add_argument("--kind", choices=sorted(models.KindCode.__args__), default="s")
    p_census.add_argument("--json", action="store_true")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ClientError as exc:
        sys.stderr.write(f"semicover: {exc}\n")
        return EXIT_CAP_EXCEEDED if exc.code == "cap_exceeded" else EXIT_INPUT_ERROR


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        for path in args.files:
            doc = _call("analyze", {"text": _read(path)}, args.server)
            if args.json:
                _print_json(doc)
            else:
                sys.stdout.write(f"# {path}\n{_analyze_text_report(doc)}\n")
        return EXIT_OK

    if args.command == "cover":
        for path in args.files:
            doc = _call("cover", {"text": _read(path), "kind": args.kind}, args.server)
            _print_json(doc)
        return EXIT_OK

    if args.command == "oracle":
        for path in args.files:
            doc = _call(
                "oracle",
                {"text": _read(path), "kind": args.kind, "cap": args.cap},
                args.server,
            )
            _print_json(doc)
        return EXIT_OK

    if args.command == "verify":
        try:
            certificate = json.loads(_read(args.certificate))
        except json.JSONDecodeError as exc:
            raise ClientError("input_error", f"{args.certificate}: {exc}") from exc
        failed = False
        for path in args.files:
            doc = _call(
                "verify",
                {"text": _read(path), "kind": args.kind, "certificate": certificate},
                args.server,
            )
            _print_json(doc)
            failed = failed or not doc["ok"]
        return EXIT_VERIFY_FAILED if failed else EXIT_OK

    directory = Path(args.dir)
    if not directory.is_dir():
        raise ClientError("input_error", f"{args.dir}: not a directory")
    documents = [
        {"name": p.name, "text": p.read_text(encoding="utf-8")}
        for p in sorted(directory.iterdir())
        if p.is_file()
    ]
    doc = _call("census", {"documents": documents, "kind": args.kind}, args.server)
    _print_json(doc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
