from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
import logging
import asyncio
import sys
from datetime import datetime
from typing import Optional
from concurrent.futures import ThreadPoolExecutor
import functools

from src.models.context import JacobianContext, build_context
from src.models.request_models import FourierDirection, FourierRequest
from src.models.response_models import DimensionTable, ElementDocument, PresentationReport, SuiteReport
from src.services.fourier_bridge import fourier_backward, fourier_forward
from src.services.gonality_lab import dimension_table, generator_bound, hyperelliptic_report, trigonal_report
from src.services.identity_suites import SUITE_ORDER, run_suite
from src.services.table_cache import cache_stats
from src.services.theta_calculus import ThetaCalculus
from src.utils.config import get_settings, validate_settings
from src.utils.exceptions import DomainError, ElementParseError
from src.utils.formatters import ElementFormatter

settings = get_settings()

# Configure logging
logging.basicConfig(
    level=settings.LOG_LEVEL,
    format=settings.LOG_FORMAT,
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(
    title="Tautological Ring Calculator API",
    description="Exact computations in the tautological ring of a Jacobian: theta powers, Fourier transforms, gonality presentations and identity suites",
    version=settings.API_VERSION,
    docs_url="/docs",
    redoc_url="/redoc"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=False,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

# Identity suites are CPU-bound; keep them off the event loop
executor = ThreadPoolExecutor(max_workers=settings.VERIFY_MAX_WORKERS, thread_name_prefix="verify")


@app.on_event("startup")
async def startup_event():
    """Validate configuration on startup"""
    if not validate_settings():
        logger.error("Invalid settings configuration")
        raise Exception("Invalid settings configuration")
    logger.info("Calculator API ready", extra={"max_genus": settings.MAX_GENUS})


@app.on_event("shutdown")
async def shutdown_event():
    """Clean up resources on shutdown"""
    logger.info("Shutting down thread pool executor...")
    executor.shutdown(wait=True, cancel_futures=False)
    logger.info("Shutdown complete")


def _context(genus: int, gonality: Optional[int] = None) -> JacobianContext:
    if genus > settings.MAX_GENUS:
        raise DomainError(f"genus {genus} exceeds MAX_GENUS={settings.MAX_GENUS}")
    return build_context(genus, gonality)


@app.exception_handler(DomainError)
async def domain_error_handler(request, exc):
    return JSONResponse(
        status_code=400,
        content={
            "error": str(exc),
            "timestamp": datetime.utcnow().isoformat(),
            "path": str(request.url)
        }
    )


@app.exception_handler(ElementParseError)
async def parse_error_handler(request, exc):
    return JSONResponse(
        status_code=422,
        content={
            "error": str(exc),
            "timestamp": datetime.utcnow().isoformat(),
            "path": str(request.url)
        }
    )


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "timestamp": datetime.utcnow().isoformat(),
        "cache": cache_stats(),
        "version": settings.API_VERSION
    }


@app.get("/")
async def root():
    """Root endpoint with API information"""
    return {
        "message": "Tautological Ring Calculator API",
        "version": settings.API_VERSION,
        "docs": "/docs",
        "health": "/health"
    }


@app.get("/api/v1/dimension-table", response_model=DimensionTable)
async def get_dimension_table(genus: int = Query(..., ge=2), gonality: Optional[int] = Query(None)):
    return dimension_table(_context(genus, gonality))


@app.get("/api/v1/theta-power", response_model=ElementDocument)
async def get_theta_power(
    genus: int = Query(..., ge=2),
    power: int = Query(..., ge=0),
    gonality: Optional[int] = Query(None),
):
    calculus = ThetaCalculus(_context(genus, gonality))
    loop = asyncio.get_event_loop()
    result = await loop.run_in_executor(executor, calculus.theta_power, power)
    return ElementFormatter.serialize_element(result)


@app.get("/api/v1/bound")
async def get_generator_bound(genus: int = Query(..., ge=2)):
    return {"genus": genus, "generator_bound": generator_bound(genus)}


@app.get("/api/v1/reports/hyperelliptic", response_model=PresentationReport)
async def get_hyperelliptic_report(genus: int = Query(..., ge=2)):
    _context(genus)
    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(executor, hyperelliptic_report, genus)


@app.get("/api/v1/reports/trigonal", response_model=PresentationReport)
async def get_trigonal_report(genus: int = Query(..., ge=3)):
    _context(genus)
    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(executor, trigonal_report, genus)


@app.post("/api/v1/fourier", response_model=ElementDocument)
async def transform_element(request: FourierRequest):
    """Apply the Fourier transform to the submitted element"""
    expected = "newton" if request.direction == FourierDirection.FORWARD else "pontryagin"
    if request.element.side != expected:
        raise HTTPException(
            status_code=400,
            detail=f"direction {request.direction.value} needs a {expected} element, got {request.element.side}"
        )
    x = ElementFormatter.parse_element(request.element, _context(request.element.genus, request.element.gonality))
    y = fourier_forward(x) if request.direction == FourierDirection.FORWARD else fourier_backward(x)
    logger.info("[fourier] transformed element", extra={"direction": request.direction.value, "terms": len(y)})
    return ElementFormatter.serialize_element(y)


@app.get("/api/v1/verify", response_model=SuiteReport)
async def verify_identities(
    genus: int = Query(..., ge=2),
    suite: str = Query("all"),
    gonality: Optional[int] = Query(None),
):
    """Run an identity suite in the worker pool"""
    if suite != "all" and suite not in SUITE_ORDER:
        raise HTTPException(status_code=400, detail=f"Unknown suite {suite!r}")
    context = _context(genus, gonality)
    loop = asyncio.get_event_loop()
    report = await loop.run_in_executor(executor, functools.partial(run_suite, context, suite))
    if not report.passed:
        logger.warning("[verify] suite failed", extra={"genus": genus, "suite": suite})
    return report


@app.exception_handler(HTTPException)
async def http_exception_handler(request, exc):
    """Handle HTTP exceptions"""
    return JSONResponse(
        status_code=exc.status_code,
        content={
            "error": exc.detail,
            "timestamp": datetime.utcnow().isoformat(),
            "path": str(request.url)
        }
    )


@app.exception_handler(Exception)
async def general_exception_handler(request, exc):
    """Handle general exceptions"""
    logger.error(f"Unhandled exception: {str(exc)}")
    return JSONResponse(
        status_code=500,
        content={
            "error": "Internal server error",
            "timestamp": datetime.utcnow().isoformat(),
            "path": str(request.url)
        }
    )
