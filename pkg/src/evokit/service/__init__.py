"""HTTP service around the core package: pydantic models, pure
handlers, and the FastAPI app."""
