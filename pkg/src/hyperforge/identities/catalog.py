"""Roster of the identity catalog, collected case by case."""

from ..summations import ADJUDICATIONS as _RULE_ADJUDICATIONS
from . import case_i, case_ii, case_iii

_CASE_MODULES = (case_i, case_ii, case_iii)

ENTRIES = tuple(entry for mod in _CASE_MODULES for entry in mod.ENTRIES)

_BY_ID = {entry.id: entry for entry in ENTRIES}

if len(_BY_ID) != len(ENTRIES):
    raise RuntimeError("duplicate identity ids in the catalog")

#: Verdicts on printed statements the mechanical checks contradict,
#: both rule-level and identity-level.
ADJUDICATIONS = _RULE_ADJUDICATIONS + tuple(
    adj for mod in _CASE_MODULES
    for adj in getattr(mod, "ADJUDICATIONS", ())
)


def catalog_identities(case=None):
    """All entries, or just those of one case family."""
    if case is None:
        return ENTRIES
    return tuple(entry for entry in ENTRIES if entry.case == case)


def entry_by_id(ident):
    try:
        return _BY_ID[ident]
    except KeyError:
        raise KeyError(f"no catalog entry with id {ident!r}") from None
