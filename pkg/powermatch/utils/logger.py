import inspect
import logging

from powermatch.config import config

PACKAGE = "powermatch"

_root = logging.getLogger(PACKAGE)
if not _root.handlers:
    # stderr only: documents and CSV go to stdout
    _handler = logging.StreamHandler()
    _handler.setFormatter(
        logging.Formatter("%(asctime)s %(levelname)-7s %(name)s:%(lineno)d %(message)s", "%H:%M:%S")
    )
    _root.addHandler(_handler)
    _root.setLevel(logging.DEBUG if config.DEBUG else logging.INFO)


def get_logger(name: str | None = None) -> logging.Logger:
    """Logger under the powermatch hierarchy, named after the calling module by default."""

    if not name:
        module = inspect.getmodule(inspect.stack()[1][0])
        name = module.__name__ if module else PACKAGE

    if name != PACKAGE and not name.startswith(PACKAGE + "."):
        name = f"{PACKAGE}.{name}"
    return logging.getLogger(name)
