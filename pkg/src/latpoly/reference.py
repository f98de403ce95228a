"""Published class counts R_w for the discs of radius 2, 3 and 4.

``TABULATED`` holds the tabulated columns; ``PLOTTED_R4`` is the scatter
plot data for radius 4, which disagrees with the table at w = 27 only.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

TABULATED: Dict[int, Dict[int, int]] = {
    2: dict(zip(range(3, 14), [1, 3, 6, 11, 15, 16, 12, 6, 3, 1, 1])),
    3: dict(zip(range(3, 30), [1, 3, 6, 13, 21, 40, 62, 95, 143, 220, 297, 389, 462,
                               514, 512, 463, 380, 280, 192, 123, 75, 40, 21, 11, 6,
                               2, 1])),
    4: dict(zip(range(3, 50), [1, 3, 6, 13, 21, 41, 67, 110, 170, 268, 386, 584, 846,
                               1223, 1695, 2346, 3111, 4132, 5383, 6898, 8558, 10392,
                               12198, 14001, 15589, 16726, 17165, 16998, 16185, 14771,
                               12967, 10950, 8899, 6918, 5186, 3696, 2537, 1640, 1023,
                               583, 324, 162, 83, 31, 12, 2, 1])),
}

TABULATED_TOTALS = {2: 75, 3: 4372, 4: 224901}

PLOTTED_R4: Dict[int, int] = dict(TABULATED[4])
PLOTTED_R4[27] = 15598

DISPUTED = {4: (27, TABULATED[4][27], PLOTTED_R4[27])}


def compare(radius: int, counts: Dict[int, int]) -> Tuple[List[str], bool]:
    """Row-by-row comparison against the published column for ``radius``.

    Returns report lines and an overall verdict. At the disputed row the
    computed value passes if it equals either published number, and the
    report names the source it agrees with.
    """
    ref = TABULATED.get(radius)
    if ref is None:
        return [f"no published counts for radius {radius}"], True
    lines, ok = [], True
    disputed: Optional[Tuple[int, int, int]] = DISPUTED.get(radius)
    for w in sorted(set(ref) | {w for w, c in counts.items() if c}):
        got, want = counts.get(w, 0), ref.get(w, 0)
        if disputed and w == disputed[0]:
            _, tab, plot = disputed
            if got == tab:
                lines.append(f"w={w}: {got} matches the tabulated value {tab} "
                             f"(plotted value {plot} differs)")
            elif got == plot:
                lines.append(f"w={w}: {got} matches the plotted value {plot} "
                             f"(tabulated value {tab} differs)")
            else:
                lines.append(f"w={w}: {got} matches neither published value ({tab}, {plot})")
                ok = False
        elif got != want:
            lines.append(f"w={w}: computed {got}, published {want}  MISMATCH")
            ok = False
    total = sum(counts.values())
    want_total = TABULATED_TOTALS[radius]
    if total == want_total:
        lines.append(f"total {total} matches the published total")
    else:
        lines.append(f"total {total} differs from the published total {want_total}")
        ok = False
    return lines, ok
