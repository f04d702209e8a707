"""Tiny independent oracles shared between test modules."""


def brute_force_segmentations(word: str) -> list[tuple[str, ...]]:
    """All ways to cut a word into blocks c | bc | a..ab | a..ac with the
    first block matching a* c.  Written without the regex machinery so it can
    stand as an independent check of the greedy segmentation."""
    results: list[tuple[str, ...]] = []

    def blocks_from(position: int, acc: list[str]) -> None:
        if position == len(word):
            results.append(tuple(acc))
            return
        remaining = word[position:]
        options = []
        if remaining.startswith("c"):
            options.append("c")
        if remaining.startswith("bc"):
            options.append("bc")
        run = 0
        while run < len(remaining) and remaining[run] == "a":
            run += 1
        if run >= 1 and run < len(remaining) and remaining[run] in "bc":
            options.append(remaining[: run + 1])
        for option in options:
            blocks_from(position + len(option), acc + [option])

    lead = 0
    while lead < len(word) and word[lead] == "a":
        lead += 1
    if lead < len(word) and word[lead] == "c":
        blocks_from(lead + 1, [word[: lead + 1]])
    return results
