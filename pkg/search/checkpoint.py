"""
Resumable search checkpoints.

A checkpoint is a JSON document:

    {"version": 1,
     "config": {"ground_size": 6, "flimsy_n": 2, "axioms": [...], "pruning": "definitional"},
     "units": {"<unit index>": {"examined": int, "checked": int, "found": family|null}}}

Only completed work units are recorded. See SEARCH_CHECKPOINTS.md.
"""
import io
import logging
from pathlib import Path

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .exceptions import CheckpointMismatch

logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


def config_key(config):
    return {
        'ground_size': config.ground_size,
        'flimsy_n': config.flimsy_n,
        'axioms': list(config.axioms),
        'pruning': config.pruning,
    }


def load_checkpoint(path, config):
    """Completed units of a previous run as {index: UnitOutcome-like dict}, or {} if none."""
    path = Path(path)
    if not path.exists():
        return {}
    try:
        document = JSONParser().parse(io.BytesIO(path.read_bytes()))
    except ParseError as e:
        raise CheckpointMismatch(f'Checkpoint {path} is not valid JSON: {e.detail}') from e
    if not isinstance(document, dict):
        raise CheckpointMismatch(f'Checkpoint {path} is not a JSON object')
    if document.get('version') != CHECKPOINT_VERSION:
        raise CheckpointMismatch(
            f'Checkpoint {path} has version {document.get("version")!r}, expected {CHECKPOINT_VERSION}'
        )
    if document.get('config') != config_key(config):
        raise CheckpointMismatch(f'Checkpoint {path} was written for {document.get("config")}')
    units = {int(index): unit for index, unit in document.get('units', {}).items()}
    logger.info(f'Resuming from {path}: {len(units)} completed units')
    return units


def save_checkpoint(path, config, units):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    document = {
        'version': CHECKPOINT_VERSION,
        'config': config_key(config),
        'units': {str(index): units[index] for index in sorted(units)},
    }
    tmp = path.with_suffix(path.suffix + '.tmp')
    tmp.write_bytes(JSONRenderer().render(document, renderer_context={'indent': 2}))
    tmp.replace(path)
    logger.debug(f'Checkpoint written to {path} ({len(units)} units)')
