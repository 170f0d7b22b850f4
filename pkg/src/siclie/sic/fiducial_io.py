"""Text formats for fiducials and vector sets, and bundled-fiducial lookup."""

import hashlib
import logging
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from ..config import BUNDLED_DATA_DIR, Settings, get_settings
from ..errors import InvalidDimensionError, InvalidFileError, MissingFiducialError
from .search import SearchOptions, fiducial_search
from .sicpovm import (
    FIDUCIAL_NORM_TOL,
    Fiducial,
    SicSet,
    sic_from_fiducial,
    validate_sic,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
SET_HEADER = "set"
SEARCH_FALLBACK_DIMS = range(2, 8)
FALLBACK_SEED = 42


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def format_fiducial(fid: Fiducial) -> str:
    lines = [str(fid.d)]
    lines += [f"{_fmt(c.real)} {_fmt(c.imag)}" for c in fid.components]
    return "\n".join(lines) + "\n"


def fiducial_hash(fid: Fiducial) -> str:
    return hashlib.sha256(format_fiducial(fid).encode()).hexdigest()


def save_fiducial(fid: Fiducial, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(format_fiducial(fid))
    return path


def _read_lines(path: Path) -> List[str]:
    try:
        text = path.read_text()
    except OSError as e:
        raise InvalidFileError(f"Cannot read {path}: {e}") from e
    return [line.strip() for line in text.splitlines() if line.strip()]


def _parse_floats(line: str, count: int, where: str) -> List[float]:
    parts = line.split()
    if len(parts) != count:
        raise InvalidFileError(f"{where}: expected {count} numbers, got {len(parts)}")
    try:
        return [float(x) for x in parts]
    except ValueError as e:
        raise InvalidFileError(f"{where}: {e}") from e


def _parse_dimension(token: str, path: Path) -> int:
    try:
        d = int(token)
    except ValueError as e:
        raise InvalidFileError(f"{path}: bad dimension header {token!r}") from e
    if d < 2:
        raise InvalidFileError(f"{path}: dimension {d} < 2")
    return d


def load_fiducial(path: PathLike, norm_tol: float = FIDUCIAL_NORM_TOL) -> Fiducial:
    """Parse a fiducial file: a line with d, then d lines of "re im"."""
    path = Path(path)
    lines = _read_lines(path)
    if not lines:
        raise InvalidFileError(f"{path}: empty file")
    d = _parse_dimension(lines[0], path)
    rows = lines[1:]
    if len(rows) != d:
        raise InvalidFileError(f"{path}: header says d={d} but found {len(rows)} rows")
    values = [_parse_floats(row, 2, f"{path}:{i + 2}") for i, row in enumerate(rows)]
    fid = Fiducial(np.array([complex(re, im) for re, im in values]))
    if fid.norm_error > norm_tol:
        raise InvalidFileError(
            f"{path}: fiducial norm deviates from 1 by {fid.norm_error:.3e}"
        )
    return fid


def format_sic_set(sic: SicSet) -> str:
    lines = [f"{SET_HEADER} {sic.d}"]
    for vec in sic.vectors:
        lines.append(" ".join(f"{_fmt(c.real)} {_fmt(c.imag)}" for c in vec))
    return "\n".join(lines) + "\n"


def save_sic_set(sic: SicSet, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(format_sic_set(sic))
    return path


def load_sic_set(path: PathLike, norm_tol: float = FIDUCIAL_NORM_TOL) -> SicSet:
    """Parse a "set d" file: d^2 rows of d interleaved (re, im) pairs."""
    path = Path(path)
    lines = _read_lines(path)
    header = lines[0].split() if lines else []
    if len(header) != 2 or header[0] != SET_HEADER:
        raise InvalidFileError(f"{path}: expected '{SET_HEADER} <d>' header")
    d = _parse_dimension(header[1], path)
    rows = lines[1:]
    if len(rows) != d * d:
        raise InvalidFileError(f"{path}: expected {d * d} vectors, found {len(rows)}")
    vectors = []
    for i, row in enumerate(rows):
        flat = np.array(_parse_floats(row, 2 * d, f"{path}:{i + 2}"))
        vectors.append(flat[0::2] + 1j * flat[1::2])
    vectors = np.array(vectors)
    deviation = float(np.max(np.abs(np.linalg.norm(vectors, axis=1) - 1.0)))
    if deviation > norm_tol:
        raise InvalidFileError(f"{path}: vector norms deviate by {deviation:.3e}")
    return SicSet(vectors)


def bundled_path(d: int, settings: Optional[Settings] = None) -> Path:
    settings = settings or get_settings()
    return Path(settings.data_dir) / f"d{d}.txt"


def resolve_fiducial(
    d: int,
    path: Optional[PathLike] = None,
    settings: Optional[Settings] = None,
    opts: Optional[SearchOptions] = None,
) -> Fiducial:
    """Load an explicit file, else the bundled d<N>.txt, else search and cache.

    Bundled files are parsed at settings.file_tol and re-validated as SICs
    at settings.tol.
    The search fallback covers d = 2..7 only and never writes into the
    package data directory.
    """
    settings = settings or get_settings()
    if path is not None:
        fid = load_fiducial(path, norm_tol=settings.file_tol)
        if fid.d != d:
            raise InvalidFileError(f"{path}: fiducial has d={fid.d}, expected d={d}")
        return fid
    if d < 2:
        raise InvalidDimensionError(f"Dimension must be >= 2, got {d}")

    candidate = bundled_path(d, settings)
    if candidate.exists():
        fid = load_fiducial(candidate, norm_tol=settings.file_tol)
        report = validate_sic(sic_from_fiducial(fid), tol=settings.tol)
        if not report.passed:
            raise InvalidFileError(f"{candidate}: bundled fiducial fails SIC validation")
        return fid

    if d not in SEARCH_FALLBACK_DIMS:
        raise MissingFiducialError(f"No fiducial for d={d}; pass --fiducial")

    logger.warning(f"No bundled fiducial for d={d}; searching with seed {FALLBACK_SEED}")
    fid = fiducial_search(d, seed=FALLBACK_SEED, opts=opts)
    if candidate.parent.resolve() == BUNDLED_DATA_DIR:
        return fid
    try:
        save_fiducial(fid, candidate)
        logger.info(f"Cached fiducial for d={d} at {candidate}")
    except OSError as e:
        logger.warning(f"Could not cache fiducial at {candidate}: {e}")
    return fid
