"""projlie: exact-arithmetic engine for collision structures, projection
categories, weight-truncated twisted homological algebra, configuration-space
models and the representation-stability criterion."""

__version__ = "0.1.0"

from projlie.ratlinalg import KERNEL_NAME  # noqa: F401
