"""Arbitrate one vacant-spectrum opportunity among contending users.

The user with the maximum access possibility wins, provided it clears the
admission threshold.  Exact ties fall to the smaller distance from the
primary user, then to the lexicographically smaller id, so the outcome never
depends on submission order.
"""

from fuzzyspectrum import Candidate, arbitrate

contenders = [
    Candidate("alice", signal_dbm=-88.0, velocity_kmh=20.0, spectrum_ratio=0.3, distance_m=35.0),
    Candidate("bob", signal_dbm=-70.0, velocity_kmh=65.0, spectrum_ratio=0.4, distance_m=20.0),
    Candidate("carol", signal_dbm=-45.0, velocity_kmh=30.0, spectrum_ratio=0.8, distance_m=60.0),
    Candidate("dave", signal_dbm=-30.0, velocity_kmh=95.0, spectrum_ratio=0.9, distance_m=90.0),
]

outcome = arbitrate(contenders, threshold=0.5)

print("=== ranking (threshold 0.5) ===")
for rank, (cid, possibility) in enumerate(outcome.ranking, start=1):
    flag = "admitted" if possibility >= outcome.threshold else "below threshold"
    print(f"  {rank}. {cid:<6} possibility {possibility:.4f}  ({flag})")
print("winner:", outcome.winner_id or "nobody admitted")

# A stricter operator: raising the threshold can only keep the winner or
# leave the slot unused, never hand it to somebody else.
print()
for threshold in (0.0, 0.55, 0.75):
    strict = arbitrate(contenders, threshold=threshold)
    print(f"threshold {threshold:.2f}: winner = {strict.winner_id or 'none'}")

# Submission order does not matter.
print()
reversed_outcome = arbitrate(list(reversed(contenders)), threshold=0.5)
print("reversed submission, same winner:", reversed_outcome.winner_id == outcome.winner_id)

# Identical measurements: the tie-break picks deterministically by id.
twins = [
    Candidate("node-b", -75.0, 40.0, 0.4, 25.0),
    Candidate("node-a", -75.0, 40.0, 0.4, 25.0),
]
print("twin candidates, winner:", arbitrate(twins, threshold=0.0).winner_id)
