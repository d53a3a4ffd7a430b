from pydantic import BaseModel, Field
from enum import Enum

from src.models.response_models import ElementDocument


class FourierDirection(str, Enum):
    FORWARD = "fwd"  # newton -> pontryagin
    BACKWARD = "bwd"  # pontryagin -> newton


class FourierRequest(BaseModel):
    """Request model for transforming an element across the Fourier bridge"""
    direction: FourierDirection
    element: ElementDocument = Field(..., description="Input element; its side must match the direction")

    class Config:
        json_schema_extra = {
            "examples": [
                {
                    "direction": "bwd",
                    "element": {
                        "genus": 2,
                        "gonality": None,
                        "side": "pontryagin",
                        "terms": [{"monomial": [0], "coeff": "1/1"}],
                    },
                }
            ]
        }
