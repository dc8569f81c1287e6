"""JSON API mirroring the CLI reports."""

from __future__ import annotations

from typing import Any, Callable, Dict

from flask import Blueprint, current_app, jsonify, request

from pseudoinv.core.errors import PseudoInvError
from pseudoinv.services import cache, registry, reports
from pseudoinv.services.bfun import MethodDisagreement
from pseudoinv.services.specs import UsageError, check_precision, resolve_spec
from pseudoinv.services.verify import verify_report

api_bp = Blueprint("api", __name__)


def _make_response(data: Any = None, *, success: bool = True, status: int = 200, error: Dict[str, Any] | None = None):
    payload: Dict[str, Any] = {"success": success}
    if success:
        payload["data"] = data
    else:
        payload["error"] = error or {"message": "Unknown error"}
    return jsonify(payload), status


def _guarded(build: Callable[[], Any]):
    try:
        result = build()
    except UsageError as exc:
        return _make_response(success=False, status=400, error={"code": "INVALID_PARAMETERS", "message": str(exc)})
    except MethodDisagreement as exc:
        return _make_response(success=False, status=409, error={"code": "METHOD_DISAGREEMENT", "message": str(exc)})
    except PseudoInvError as exc:
        return _make_response(success=False, status=422, error={"code": type(exc).__name__, "message": str(exc)})
    except Exception as exc:  # noqa: BLE001
        return _make_response(success=False, status=500, error={"code": "SERVER_ERROR", "message": str(exc)})
    return _make_response(result)


def _precision() -> int:
    raw = request.args.get("N")
    if raw is None:
        manager = current_app.config["PSEUDOINV_CONFIG"]
        return check_precision(int(manager.get("precision", "default", 16)))
    try:
        N = int(raw)
    except ValueError:
        raise UsageError(f"N must be an integer, got {raw!r}") from None
    return check_precision(N)


def _spec():
    return resolve_spec(request.args.get("name"), request.args.get("spec"))


@api_bp.get("/examples")
def list_examples():
    return _make_response([registry.lookup(name).to_json() for name in registry.names()])


@api_bp.get("/series")
def get_series():
    response, status = _guarded(lambda: reports.series_report(_spec(), _precision()))
    body = response.get_json()
    if body["success"] and body["data"]["error"] is not None:
        return _make_response(success=False, status=422, error=body["data"]["error"])
    return response, status


@api_bp.get("/bfun")
def get_bfun():
    def build():
        beta = request.args.get("beta", "false").lower() == "true"
        report = reports.bfun_report(_spec(), _precision(), request.args.get("methods"), beta=beta)
        if not report["agree"]:
            diff = report["first_difference"]
            raise MethodDisagreement(*diff["methods"], diff["index"])
        return report

    return _guarded(build)


@api_bp.get("/matrix")
def get_matrix():
    def build():
        cheb = request.args.get("cheb")
        if cheb:
            return reports.matrix_report(None, _precision(), cheb=cheb)
        return reports.matrix_report(_spec(), _precision(), request.args.get("flavor"))

    return _guarded(build)


@api_bp.get("/verify/<suite>")
def get_verify(suite: str):
    return _guarded(lambda: verify_report(suite))


@api_bp.get("/settings")
def get_settings():
    config = current_app.config["PSEUDOINV_CONFIG"].data
    return _make_response(config)


@api_bp.post("/settings")
def update_settings():
    payload = request.get_json(silent=True) or {}
    if not isinstance(payload, dict):
        return _make_response(success=False, status=400, error={"code": "INVALID_PAYLOAD", "message": "JSON body must be a dictionary"})
    manager = current_app.config["PSEUDOINV_CONFIG"]
    updated = manager.update(payload)
    return _make_response(updated)


@api_bp.post("/cache/clear")
def clear_cache():
    cache.clear_all()
    return _make_response({"status": "cleared"})
