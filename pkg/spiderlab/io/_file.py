import json
import os
from typing import TextIO, Union

from ..definitions import SpiderSpec, define_spider
from ..exceptions import SpiderDefinitionError


def file_spider(file_like: Union["str", "os.PathLike", TextIO]) -> SpiderSpec:
    """
    Load a spider from a JSON config file, or an open text stream, with the schema of
    :class:`~spiderlab.definitions.SpiderDefinitionDict`.
    """
    if hasattr(file_like, "read"):
        if file_like.seekable():
            file_like.seek(0)
        text = file_like.read()
        name = getattr(file_like, "name", "<stream>")
    else:
        name = os.fspath(file_like)
        try:
            with open(name, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise SpiderDefinitionError(
                f"Can't read spider config '{name}': {e.strerror}.", "config"
            ) from None
    try:
        definition = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpiderDefinitionError(
            f"{name}: line {e.lineno}, column {e.colno}: {e.msg}.",
            f"line {e.lineno}",
        ) from None
    try:
        return define_spider(definition)
    except SpiderDefinitionError as e:
        raise SpiderDefinitionError(
            f"{name}: {e}", getattr(e, "field", "config")
        ) from None
