"""Flask application factory for pseudoinv."""

from __future__ import annotations

from flask import Flask

from pseudoinv.config.manager import config_manager
from pseudoinv.db import models


def create_app() -> Flask:
    """Application factory."""
    models.initialize_schema()
    app = Flask(__name__)

    config_manager.refresh()
    app.config["PSEUDOINV_CONFIG"] = config_manager

    from pseudoinv.routes.api import api_bp

    app.register_blueprint(api_bp, url_prefix="/api")

    return app
