"""Edit distance, character error rate, group aggregation, LID accuracy."""

from dataclasses import dataclass


class EmptyReference(ValueError):
    """CER is undefined for an empty reference."""


@dataclass(frozen=True)
class EditCounts:
    """Counts from a minimum edit distance alignment.

    insertions/substitutions/deletions are with respect to the reference:
    a deletion is a reference symbol missing from the hypothesis, an
    insertion is a hypothesis symbol matching nothing in the reference.
    """

    insertions: int
    substitutions: int
    deletions: int
    ref_length: int

    @property
    def total_errors(self):
        return self.insertions + self.substitutions + self.deletions

    def __add__(self, other):
        return EditCounts(
            self.insertions + other.insertions,
            self.substitutions + other.substitutions,
            self.deletions + other.deletions,
            self.ref_length + other.ref_length,
        )


def edit_distance(ref, hyp):
    """Minimum-cost alignment counts between two symbol sequences.

    Unit costs for insertion, substitution and deletion. Among
    minimum-cost alignments the one with fewer insertions is preferred,
    then fewer deletions; the lexicographic (cost, ins, del) objective
    makes the back-trace deterministic.
    """
    ref = list(ref)
    hyp = list(hyp)
    n, m = len(ref), len(hyp)

    # dp[j] = (cost, insertions, deletions) for ref[:i] vs hyp[:j].
    # Lexicographic min is preserved under adding a fixed move vector,
    # so the usual DP recursion applies to the tuple objective.
    prev = [(j, j, 0) for j in range(m + 1)]
    for i in range(1, n + 1):
        cur = [(i, 0, i)] + [None] * m
        ri = ref[i - 1]
        for j in range(1, m + 1):
            if ri == hyp[j - 1]:
                best = prev[j - 1]
            else:
                c, a, d = prev[j - 1]
                best = (c + 1, a, d)  # substitution
            c, a, d = cur[j - 1]
            cand = (c + 1, a + 1, d)  # insertion
            if cand < best:
                best = cand
            c, a, d = prev[j]
            cand = (c + 1, a, d + 1)  # deletion
            if cand < best:
                best = cand
            cur[j] = best
        prev = cur

    cost, ins, dels = prev[m]
    return EditCounts(ins, cost - ins - dels, dels, n)


def cer(counts):
    """Character error rate in percent: (I + S + D) / N * 100.

    Can exceed 100 when the hypothesis has many insertions.
    """
    if counts.ref_length < 1:
        raise EmptyReference("reference length must be >= 1")
    return counts.total_errors / counts.ref_length * 100.0


def pool_counts(counts_list):
    """Micro-average: pool edit counts before dividing."""
    total = EditCounts(0, 0, 0, 0)
    for c in counts_list:
        total = total + c
    return total


def aggregate(per_group):
    """Worst and average CER over a {group: cer} map.

    Returns ((max_cer, argmax_group), avg_cer). Ties on the max go to
    the lowest group id.
    """
    if not per_group:
        raise ValueError("per_group must be nonempty")
    worst_group = None
    worst = None
    for g in sorted(per_group):
        if worst is None or per_group[g] > worst:
            worst = per_group[g]
            worst_group = g
    avg = sum(per_group.values()) / len(per_group)
    return (worst, worst_group), avg


def lid_accuracy(pairs):
    """Percent of exact first-token matches.

    pairs: list of (true group token, decoded first token); a missing
    decode (None) counts as wrong.
    """
    if not pairs:
        raise ValueError("pairs must be nonempty")
    hits = sum(1 for true, pred in pairs if pred is not None and pred == true)
    return hits / len(pairs) * 100.0
