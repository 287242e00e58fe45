import logging
from typing import Literal, Optional

import uvicorn
from dotenv import load_dotenv
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from lattice_forge import __version__
from lattice_forge.electronic import ChiralIndex, build_swnt, classify_metallic, dirac_scan, graphene_band, tube_frame
from lattice_forge.io import GeometryFile, geometry_document, parse_cg, realization_document, surface_from_geometry
from lattice_forge.io.cg_format import load_cg
from lattice_forge.realization.solvers import solve_direct, solve_homology
from lattice_forge.surface import TEMPLATES, curvature_map, euler_stats, sphere_radius, trace_faces
from lattice_forge.utils.errors import InvalidInputError, NumericalError
from lattice_forge.utils.settings import CRYSTALS_DIR

load_dotenv()
logger = logging.getLogger(__name__)

SOLVERS = {"homology": solve_homology, "direct": solve_direct}

app = FastAPI(title="lattice_forge", version=__version__)


class RealizeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    crystal: Optional[str] = Field(default=None, description="name of a bundled crystal, e.g. 'diamond'")
    text: Optional[str] = Field(default=None, description="contents of a .cg file")
    method: Literal["homology", "direct"] = "homology"


class NanotubeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    c1: int = Field(..., ge=1)
    c2: int = Field(default=0, ge=0)
    periods: int = Field(default=1, ge=1)
    scale: float = Field(default=1.0, gt=0)


def bundled_crystals() -> list[str]:
    return sorted(path.stem for path in CRYSTALS_DIR.glob("*.cg"))


def _fail(exc: Exception) -> HTTPException:
    if isinstance(exc, NumericalError):
        return HTTPException(status_code=422, detail=str(exc))
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/healthz")
def health_check():
    """Health check endpoint."""
    return {"status": "ok", "version": __version__}


@app.get("/fixtures")
def list_fixtures():
    return {"crystals": bundled_crystals(), "templates": sorted(TEMPLATES)}


@app.get("/templates/{name}")
def get_template(name: str):
    if name not in TEMPLATES:
        raise HTTPException(status_code=404, detail=f"Unknown template {name!r}")
    return geometry_document(TEMPLATES[name](), name=name)


@app.post("/realize")
def realize(body: RealizeRequest):
    if (body.crystal is None) == (body.text is None):
        raise HTTPException(status_code=400, detail="give exactly one of `crystal` or `text`")
    try:
        if body.crystal is not None:
            if body.crystal not in bundled_crystals():
                raise HTTPException(status_code=404, detail=f"Unknown crystal {body.crystal!r}")
            cg = load_cg(CRYSTALS_DIR / f"{body.crystal}.cg")
        else:
            cg = parse_cg(body.text)
        logger.info("Realizing %s with the %s solver", cg.name or "posted crystal", body.method)
        return realization_document(SOLVERS[body.method](cg), name=cg.name)
    except (InvalidInputError, NumericalError) as exc:
        raise _fail(exc)


@app.post("/curvature")
def curvature(body: GeometryFile):
    try:
        surface = surface_from_geometry(body)
        report = curvature_map(surface)
        result = {
            "total_area": report.total_area,
            "gauss_curvature": report.gauss_curvature.tolist(),
            "mean_curvature": report.mean_curvature.tolist(),
            "local_area": report.local_area.tolist(),
            "sphere_radius": sphere_radius(surface),
        }
        stats = euler_stats(trace_faces(surface), surface.vertex_count, surface.edge_count)
    except (InvalidInputError, NumericalError) as exc:
        raise _fail(exc)
    result["face_sizes"] = stats.face_sizes
    result["chi"] = stats.chi_from_counts
    return result


@app.post("/nanotube")
def nanotube(body: NanotubeRequest):
    try:
        ci = ChiralIndex(body.c1, body.c2, scale=body.scale)
        frame = tube_frame(ci)
        surface = build_swnt(ci, n_periods=body.periods)
    except (InvalidInputError, NumericalError) as exc:
        raise _fail(exc)
    return {
        "classification": classify_metallic(ci),
        "translation": list(frame.primitive_translation),
        "radius": frame.radius,
        "geometry": geometry_document(surface, name=f"swnt_{body.c1}_{body.c2}", with_faces=False),
    }


@app.get("/band")
def band(grid: int = 12, xi1: float = 0.0, xi2: float = 0.0):
    try:
        points = dirac_scan(grid)
    except InvalidInputError as exc:
        raise _fail(exc)
    lower, upper = graphene_band((xi1, xi2))
    return {
        "energies": [lower, upper],
        "dirac_points": [{"i": i, "j": j, "xi1": a, "xi2": b} for i, j, a, b in points],
    }


if __name__ == "__main__":
    uvicorn.run(app, host="0.0.0.0", port=8084)
