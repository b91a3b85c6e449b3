"""Walkthrough: Zachary's karate club under the hedonic alpha model.

Starting from the classic two-group split (which puts member 3 with the
administrator's faction), better response moves members 3 and then 10
to the instructor's side. The exact cutoff points below reproduce the
resolution window in which that 17/17 division dominates the grand
coalition and no member wants to leave.

Run:  python demos/karate_club.py
"""

from fractions import Fraction

from coopgraph import (
    AlphaModel,
    Move,
    Partition,
    better_response,
    canonical_form,
    load_dataset,
    move_gain,
    nash_stable,
    partition_threshold,
    potential,
)
from coopgraph.datasets import (
    karate_split_15_19,
    karate_split_16_18,
    karate_split_17_17,
)

g = load_dataset("karate")
print(f"karate club: n = {g.n}, m = {g.m}, "
      f"deg(instructor 1) = {g.degree('1')}, deg(administrator 34) = {g.degree('34')}")

grand = Partition.grand(g.labels)
for label, p in (
    ("grand", grand),
    ("15/19 split", karate_split_15_19()),
    ("16/18 split", karate_split_16_18()),
    ("17/17 split", karate_split_17_17()),
):
    pot = potential(AlphaModel(0), g, p)
    print(f"P({label}) = {pot.intercept} - {-pot.slope} alpha")

print("\nexact cutoffs against the grand coalition:")
for label, p in (
    ("15/19", karate_split_15_19()),
    ("16/18", karate_split_16_18()),
    ("17/17", karate_split_17_17()),
):
    print(f"  grand vs {label}: alpha = {partition_threshold(g, grand, p)}")

alpha = Fraction(1, 20)
vf = AlphaModel(alpha)
final, trace = better_response(vf, g, karate_split_15_19())
print(f"\nbetter response from the 15/19 split at alpha = {alpha}:")
for step in trace.steps:
    print(f"  member {step.move.node} switches sides (gain {step.gain})")
print("result is the 17/17 split:",
      canonical_form(final) == canonical_form(karate_split_17_17()))

# Member 3 sits on the boundary: five friends on each side, so switching
# saves strangers without losing friends.
p = karate_split_15_19()
src = p.block_of("3")
print("member 3's switching gain as a multiple of alpha:",
      move_gain(vf, g, p, Move("3", src, 1 - src)) / alpha)

print("\nstability window of the 17/17 split:")
for a in (Fraction(1, 100), Fraction(10, 289), Fraction(1, 20), Fraction(1, 16), Fraction(1, 15)):
    stable, witness = nash_stable(AlphaModel(a), g, karate_split_17_17())
    note = "" if stable else f"  (member {witness.node} leaves)"
    print(f"  alpha = {a}: Nash-stable = {stable}{note}")
print("above 1/16 member 10, with a single friend per side, prefers being alone")
