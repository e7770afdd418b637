"""Stateless HTTP service over the engine.

Every request carries the full family document; no state survives between
requests, so identical bodies give identical responses and concurrent
requests are independent.  The pure dispatcher handle_api is separately
callable; the HTTP layer is a thin threading wrapper around it.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import encode
from .arcs import Arc, ArcFamily, Window, arcs_in_window, classify, validate_family
from .dsl import ParseError, parse_family, serialize_family
from .homcalc import hom_dim
from .mutation import NotMember, NotMutable, exchange_arc, mutate
from .quiver import cluster_quiver
from .render import render_svg
from .triangulation import certify_global_maximal, is_window_maximal

__all__ = ["handle_api", "make_server", "serve", "API_PATHS"]

API_PATHS = (
    "/api/validate",
    "/api/classify",
    "/api/window-arcs",
    "/api/maximal",
    "/api/mutate",
    "/api/quiver",
    "/api/hom",
    "/api/render",
)


class _BadRequest(Exception):
    pass


def _family(body: dict):
    text = body.get("family")
    if not isinstance(text, str):
        raise _BadRequest("missing 'family' document text")
    return parse_family(text)


def _window(body: dict) -> Window:
    w = body.get("window")
    if (
        not isinstance(w, (list, tuple))
        or len(w) != 2
        or not all(isinstance(v, int) for v in w)
    ):
        raise _BadRequest("missing 'window': [lo, hi]")
    try:
        return Window(w[0], w[1])
    except ValueError as e:
        raise _BadRequest(str(e)) from None


def _arc(body: dict, key: str) -> Arc:
    a = body.get(key)
    if (
        not isinstance(a, (list, tuple))
        or len(a) != 2
        or not all(isinstance(v, int) for v in a)
    ):
        raise _BadRequest(f"missing '{key}': [m, n]")
    try:
        return Arc(a[0], a[1])
    except ValueError as e:
        raise _BadRequest(str(e)) from None


def _ff_info(family: ArcFamily):
    """Functorial-finiteness verdict when the family certifies, else None
    clients never evaluate the classification themselves)."""
    from .triangulation import functorially_finite

    try:
        return encode.ff_json(functorially_finite(family))
    except ValueError:
        return None


def handle_api(path: str, body: dict) -> tuple[int, dict]:
    """Dispatch one request; returns (http status, response payload)."""
    try:
        return 200, _dispatch(path, body)
    except _BadRequest as e:
        return 400, {"ok": False, "error": {"kind": "bad_request", "message": str(e)}}
    except ParseError as e:
        return 200, {
            "ok": False,
            "error": {"kind": "parse", "line": e.line, "message": e.message},
        }


def _dispatch(path: str, body: dict) -> dict:
    if path == "/api/validate":
        try:
            family = _family(body)
        except ParseError as e:
            return {
                "ok": True,
                "result": {
                    "valid": False,
                    "kind": "parse",
                    "line": e.line,
                    "message": e.message,
                },
            }
        return {"ok": True, "result": encode.validation_json(validate_family(family))}

    if path == "/api/classify":
        family = _family(body)
        result = encode.classification_json(classify(family))
        result["ff"] = _ff_info(family)
        return {"ok": True, "result": result}

    if path == "/api/window-arcs":
        arcs = arcs_in_window(_family(body), _window(body))
        return {"ok": True, "result": {"arcs": [encode.arc_json(a) for a in arcs]}}

    if path == "/api/maximal":
        family = _family(body)
        if "window" in body:
            verdict = is_window_maximal(family, _window(body))
            return {"ok": True, "result": encode.maximality_json(verdict)}
        cert = certify_global_maximal(family)
        return {"ok": True, "result": encode.certificate_json(cert)}

    if path == "/api/mutate":
        family = _family(body)
        a = _arc(body, "arc")
        try:
            star = exchange_arc(family, a)
            new = mutate(family, a)
        except (NotMember, NotMutable) as e:
            return {
                "ok": False,
                "error": {"kind": type(e).__name__, "message": str(e)},
            }
        return {
            "ok": True,
            "result": {
                "family": serialize_family(new),
                "exchanged": encode.arc_json(star),
                "removed": encode.arc_json(a),
                "classification": encode.classification_json(classify(new)),
                "ff": _ff_info(new),
            },
        }

    if path == "/api/quiver":
        q = cluster_quiver(_family(body), _window(body))
        return {"ok": True, "result": encode.quiver_json(q)}

    if path == "/api/hom":
        x, y = _arc(body, "x"), _arc(body, "y")
        return {
            "ok": True,
            "result": {"forward": hom_dim(x, y), "reverse": hom_dim(y, x)},
        }

    if path == "/api/render":
        family = _family(body)
        w = _window(body)
        subject = body.get("subject", "arcs")
        if subject == "quiver":
            svg = render_svg(cluster_quiver(family, w), w)
        elif subject == "arcs":
            svg = render_svg(family, w)
        else:
            raise _BadRequest(f"unknown subject {subject!r}")
        return {"ok": True, "result": {"svg": svg}}

    raise _BadRequest(f"unknown endpoint {path}")


class _Handler(BaseHTTPRequestHandler):
    def do_POST(self) -> None:  # noqa: N802  (stdlib naming)
        if self.path not in API_PATHS:
            self._reply(404, {"ok": False, "error": {"kind": "not_found"}})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
            if not isinstance(body, dict):
                raise ValueError("body must be a JSON object")
        except (ValueError, json.JSONDecodeError) as e:
            self._reply(
                400, {"ok": False, "error": {"kind": "bad_json", "message": str(e)}}
            )
            return
        status, payload = handle_api(self.path, body)
        self._reply(status, payload)

    def _reply(self, status: int, payload: dict) -> None:
        data = encode.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self) -> None:  # noqa: N802
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def log_message(self, fmt: str, *args) -> None:  # quiet by default
        pass


def make_server(host: str, port: int) -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _Handler)


def serve(host: str, port: int) -> None:
    server = make_server(host, port)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
