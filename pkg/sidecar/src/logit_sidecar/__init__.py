from .app import create_app
from .model import (
    LinearBagOfWords,
    ModelError,
    load_model,
    write_linear_checkpoint,
)

__version__ = "0.1.0"

__all__ = [
    "LinearBagOfWords",
    "ModelError",
    "create_app",
    "load_model",
    "write_linear_checkpoint",
]
