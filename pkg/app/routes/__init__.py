# Routes package initialization
from .algebra_routes import algebra_router
from .solve_routes import solve_router
from .classify_routes import classify_router

__all__ = [
    "algebra_router",
    "solve_router",
    "classify_router",
]
