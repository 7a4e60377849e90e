import pydantic
from fastapi import FastAPI, Request
from starlette.middleware.cors import CORSMiddleware
from starlette.middleware.gzip import GZipMiddleware
from starlette.responses import JSONResponse

from api.routes import modularity_router, partition_router, verification_router
from config import Config
from utils.errors import (
    IdentityMismatchError,
    InvalidRunConfigError,
    NoSolutionError,
    NotDivisibleError,
    TruncationError,
    UnsupportedRankError,
    ValidationFailureError,
)


def init_api(config: Config):
    app = FastAPI(
        title="K3 Pairs API",
        description="Exact stable-pair partition functions of K3 surfaces",
        version="0",
        docs_url="/",
        redoc_url="/docs",
        openapi_tags=[],
    )
    # pass config object to application
    app.config = config

    _cors(app)
    _gzip(app)
    _routes(app)

    _register_exception_handlers(app)

    return app


def _cors(app: FastAPI):
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )


def _gzip(app: FastAPI):
    app.add_middleware(
        GZipMiddleware,
        minimum_size=1000,
    )


def _routes(app: FastAPI):
    app.include_router(partition_router, prefix="/partition", tags=["Partition"])
    app.include_router(
        verification_router, prefix="/verification", tags=["Verification"]
    )
    app.include_router(modularity_router, prefix="/modularity", tags=["Modularity"])


def _problem(request: Request, kind: str, exc: Exception, status_code: int):
    exception_dict = {
        "type": kind,
        "title": exc.__class__.__name__,
        "instance": request.url.path,
        "detail": f"{exc.__class__.__name__} at {str(exc)} "
        f"when executing {request.method} request",
    }
    return JSONResponse(exception_dict, status_code=status_code)


def _register_exception_handlers(app: FastAPI):
    @app.exception_handler(Exception)
    async def common_exception_handler(request: Request, exc: Exception):
        return _problem(request, "Internal Server Error", exc, 500)

    @app.exception_handler(ValueError)
    async def value_error_exception_handler(request: Request, exc: ValueError):
        return _problem(request, "Value Error", exc, 500)

    @app.exception_handler(pydantic.error_wrappers.ValidationError)
    async def handle_validation_error(
        request: Request,
        exc: pydantic.error_wrappers.ValidationError,
    ):
        return _problem(request, "ValidationError", exc, 422)

    @app.exception_handler(UnsupportedRankError)
    async def unsupported_rank_exception_handler(
        request: Request, exc: UnsupportedRankError
    ):
        return JSONResponse(
            {"detail": str(exc) or "unsupported ranks"}, status_code=400
        )

    @app.exception_handler(InvalidRunConfigError)
    async def invalid_run_config_exception_handler(
        request: Request, exc: InvalidRunConfigError
    ):
        return JSONResponse({"detail": str(exc)}, status_code=400)

    @app.exception_handler(TruncationError)
    async def truncation_exception_handler(request: Request, exc: TruncationError):
        return JSONResponse({"detail": str(exc)}, status_code=400)

    @app.exception_handler(IdentityMismatchError)
    async def identity_mismatch_exception_handler(
        request: Request, exc: IdentityMismatchError
    ):
        return JSONResponse(
            {"detail": str(exc), "identity": exc.identity, "location": exc.location},
            status_code=409,
        )

    @app.exception_handler(NotDivisibleError)
    async def not_divisible_exception_handler(
        request: Request, exc: NotDivisibleError
    ):
        return JSONResponse({"detail": str(exc)}, status_code=409)

    @app.exception_handler(NoSolutionError)
    async def no_solution_exception_handler(request: Request, exc: NoSolutionError):
        return JSONResponse({"detail": str(exc)}, status_code=404)

    @app.exception_handler(ValidationFailureError)
    async def validation_failure_exception_handler(
        request: Request, exc: ValidationFailureError
    ):
        return JSONResponse({"detail": str(exc)}, status_code=409)
