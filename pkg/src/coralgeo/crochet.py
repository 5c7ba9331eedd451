"""Row planning and stitch patterns for crocheting a ruffled hyperbolic disc.

The growth model: a hyperbolic circle of radius r has circumference
l = 2*pi*sinh(r), so a piece worked in rounds at constant gauge needs
round(initial * sinh(r) / sinh(1)) chains in the row representing radius r,
anchored at r = 1 <-> ``initial_chains``.  From one row to the next every
parent chain receives a small multiplier (how many chains are worked into
it); only two multiplier values ever occur, floor and ceil of the growth
ratio.

Two emission orders are supported for the same multiplier multiset:

* ``block``: a repeating block of majority multipliers closed by one
  minority multiplier, remainder appended at the end: the way a written
  pattern reads (e.g. "[3332]x10, 3 3 3").
* ``even``: the larger multipliers spread uniformly across the row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError
from .util import round_half_away

TWO_PI = 2.0 * math.pi

BLOCK = "block"
EVEN = "even"
_MODES = (BLOCK, EVEN)


def circle_length(r: float) -> float:
    """Circumference 2*pi*sinh(r) of the hyperbolic circle of radius r."""
    if r < 0:
        raise ParameterError(f"radius must be >= 0, got {r}")
    return TWO_PI * math.sinh(r)


@dataclass(frozen=True)
class MagicCircle:
    """The adjustable starting loop; its chain count is independent of the rows."""

    chains: int = 6

    def __post_init__(self) -> None:
        if self.chains < 3:
            raise ParameterError(f"a magic circle needs at least 3 chains, got {self.chains}")


@dataclass(frozen=True)
class Row:
    radius: int
    length: float
    chains: int


@dataclass(frozen=True)
class RowPlan:
    """Chain targets for rows r = 1..max radius at a fixed gauge."""

    rows: tuple
    gauge: float          # chains per unit length, initial/(2*pi*sinh 1)
    initial_chains: int


def plan_rows(initial_chains: int, max_radius: int) -> RowPlan:
    """Target chain counts round(initial * sinh(r)/sinh(1)) for r = 1..max_radius.

    initial_chains anchors the gauge at r = 1; any positive count works
    (the reference piece uses 14).
    """
    if initial_chains < 1:
        raise ParameterError(f"initial_chains must be a positive integer, got {initial_chains}")
    if max_radius < 1:
        raise ParameterError(f"max_radius must be >= 1, got {max_radius}")
    s1 = math.sinh(1.0)
    rows = tuple(
        Row(r, circle_length(r),
            int(round_half_away(initial_chains * math.sinh(r) / s1)))
        for r in range(1, max_radius + 1)
    )
    return RowPlan(rows=rows, gauge=initial_chains / (TWO_PI * s1),
                   initial_chains=initial_chains)


@dataclass(frozen=True)
class StitchPattern:
    """Per-parent-chain multipliers whose sum is the next row's chain count."""

    multipliers: tuple
    total: int
    mode: str


def _block_segments(parent_chains: int, target_chains: int):
    """Block decomposition: (block, repeats, remainder) flattening to the multiset.

    The block holds the majority multiplier round(majority/minority) times and
    closes with one minority multiplier; whatever is left over of either value
    is appended as the remainder.
    """
    m, extra = divmod(target_chains, parent_chains)
    if extra == 0:
        return (m,), parent_chains, ()
    hi_val, hi_cnt = m + 1, extra
    lo_val, lo_cnt = m, parent_chains - extra
    if hi_cnt >= lo_cnt:
        lead, lead_cnt, tail, tail_cnt = hi_val, hi_cnt, lo_val, lo_cnt
    else:
        lead, lead_cnt, tail, tail_cnt = lo_val, lo_cnt, hi_val, hi_cnt
    per_block = max(int(round_half_away(lead_cnt / tail_cnt)), 1)
    block = (lead,) * per_block + (tail,)
    repeats = min(lead_cnt // per_block, tail_cnt)
    remainder = (lead,) * (lead_cnt - per_block * repeats) + (tail,) * (tail_cnt - repeats)
    return block, repeats, remainder


def distribute_multipliers(parent_chains: int, target_chains: int,
                           mode: str = BLOCK) -> StitchPattern:
    """Multipliers growing parent_chains to target_chains (decreases unsupported).

    Only floor(target/parent) and floor(target/parent) + 1 occur as values;
    ``mode`` fixes the ordering, never the multiset.
    """
    if parent_chains < 1:
        raise ParameterError(f"parent_chains must be >= 1, got {parent_chains}")
    if target_chains < parent_chains:
        raise ParameterError(
            f"target {target_chains} < parent {parent_chains}: decreasing rows not supported")
    if mode not in _MODES:
        raise ParameterError(f"mode must be one of {_MODES}, got {mode!r}")
    m, extra = divmod(target_chains, parent_chains)
    if mode == EVEN:
        mult = tuple(
            m + (1 if (i + 1) * extra // parent_chains > i * extra // parent_chains else 0)
            for i in range(parent_chains)
        )
    else:
        block, repeats, remainder = _block_segments(parent_chains, target_chains)
        mult = block * repeats + remainder
    return StitchPattern(multipliers=mult, total=target_chains, mode=mode)


def _format_length(length: float) -> str:
    return f"{round_half_away(length, 2):.2f}"


def _format_block_row(parent_chains: int, target_chains: int) -> str:
    block, repeats, remainder = _block_segments(parent_chains, target_chains)
    if all(x <= 9 for x in block):
        block_text = "".join(str(x) for x in block)
    else:
        block_text = ",".join(str(x) for x in block)
    if repeats > 1:
        body = f"[{block_text}]x{repeats}"
    else:
        body = " ".join(str(x) for x in block * repeats)
    if remainder:
        body += ", " + " ".join(str(x) for x in remainder)
    return body


def render_pattern(plan: RowPlan, mode: str = BLOCK,
                   magic_circle: MagicCircle | None = None) -> str:
    """Human-readable instructions, one row per line, totals stated per row."""
    if magic_circle is None:
        magic_circle = MagicCircle()
    if mode not in _MODES:
        raise ParameterError(f"mode must be one of {_MODES}, got {mode!r}")
    first = plan.rows[0]
    lines = [
        f"Magic circle: {magic_circle.chains} chains",
        f"Foundation: {first.chains} chains (r={first.radius}, l={_format_length(first.length)})",
    ]
    for prev, row in zip(plan.rows, plan.rows[1:]):
        if mode == BLOCK:
            body = _format_block_row(prev.chains, row.chains)
        else:
            pattern = distribute_multipliers(prev.chains, row.chains, mode)
            body = " ".join(str(x) for x in pattern.multipliers)
        lines.append(f"Row {row.radius - 1}: {body} = {row.chains} chains "
                     f"(r={row.radius}, l={_format_length(row.length)})")
    return "\n".join(lines) + "\n"


def rows_to_csv(plan: RowPlan) -> str:
    """CSV mirror of the row summary, columns r, l (2 decimals), chains."""
    lines = ["r,l,chains"]
    for row in plan.rows:
        lines.append(f"{row.radius},{_format_length(row.length)},{row.chains}")
    return "\n".join(lines) + "\n"
