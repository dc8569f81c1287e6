"""Run the pseudoinv HTTP API."""

from pseudoinv import create_app
from pseudoinv.config.manager import config_manager

app = create_app()


if __name__ == "__main__":
    app.run(debug=bool(config_manager.get("server", "debug", False)), port=int(config_manager.get("server", "port", 5010)))
