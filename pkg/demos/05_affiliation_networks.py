"""From actor knowledge profiles to an analyzable network.

Ties are derived from overlap between actors' generator sets (the tokens
of what each actor knows). Raising the overlap threshold filters the
network down to its strongest ties; the resulting graphs feed directly
into the distance and secrecy measures.
"""

from covertnet import (
    ActorProfile,
    SecrecyParams,
    TieRule,
    balance,
    build_from_actors,
    is_connected,
)

roster = [
    ActorProfile("samudra", frozenset({"bomb design", "funding", "recruiting"})),
    ActorProfile("idris", frozenset({"funding", "logistics", "safe houses"})),
    ActorProfile("mubarok", frozenset({"logistics", "recruiting", "bomb design"})),
    ActorProfile("dulmatin", frozenset({"BOMB DESIGN ", "electronics"})),  # canonicalized
    ActorProfile("imron", frozenset({"electronics", "safe houses"})),
    ActorProfile("courier", frozenset({"messages"})),
]

graph, labels = build_from_actors(roster, TieRule(threshold=1, weight_mode="overlap_count"))
print("actors:", labels)
print("ties (weight = shared generators):")
for s, t, w in graph.edges:
    print(f"  {labels[s]:>9} -- {labels[t]:<9} weight {w:.0f}")
print("courier is isolated:", graph.degree_sequence()[5] == 0)
print("connected:", is_connected(graph))

# Isolated actors keep the vertex count honest, but they zero the balance:
# a disconnected structure has no finite total distance.
report = balance(graph, SecrecyParams(p=0.3))
print("\nbalance with the isolated courier:", report.mu)

core_graph, core_labels = build_from_actors(roster[:5], TieRule())
core = balance(core_graph, SecrecyParams(p=0.3))
print("balance of the five-actor core:", round(core.mu, 4))

# A stricter rule keeps only double-overlap ties.
strict, _ = build_from_actors(roster, TieRule(threshold=2))
print("\nties surviving threshold 2:", [(labels[s], labels[t]) for s, t, _ in strict.edges])
