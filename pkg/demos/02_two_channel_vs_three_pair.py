"""Compare the two ways of preparing a two-particle target.

Both two-particle protocols aim at the same diagonal target
sum_t T(t)|tt>, but they spend different entanglement: p2 uses two
three-party channels, p3 replaces them with three two-party pairs.  The
trade shows up in the outcome structure: p2 wastes three quarters of its
outcome alphabet on branches that can never occur, while p3 gives every
outcome nonzero probability and four times as many correctable ones.
Success probability and classical cost are identical.
"""

import numpy as np

from jrsp4 import Protocol, RunConfig, ShareVector, enumerate_outcomes


def summarize(protocol: Protocol, share1: ShareVector, share2: ShareVector) -> None:
    report = enumerate_outcomes(RunConfig(protocol, share1, share2))
    records = report.records
    dead = [r for r in records if r.probability == 0.0]
    wins = [r for r in records if r.success]
    print(f"{protocol.value}:")
    print(f"  outcomes                {len(records)}")
    print(f"  zero-probability        {len(dead)}")
    print(f"  correctable             {len(wins)}")
    print(f"  probability per win     {wins[0].probability:.8f}")
    print(f"  success probability     {report.success_probability:.8f}")
    print(f"  classical cost (bits)   {report.classical_cost_bits}")
    if dead:
        # p2's senders are forced onto the same digit offset by the channels
        offsets = {(r.key[0][1], r.key[1][1]) for r in dead}
        assert all(h != n for h, n in offsets)
        print("  every dead branch pairs senders with different digit offsets")
    print()


def main() -> None:
    share1 = ShareVector(np.array([1.0, 2.0, 3.0, 4.0]) / np.sqrt(30.0), sender_id=1)
    share2 = ShareVector(np.array([2.0, 3.0, 5.0, 9.0]) / np.sqrt(119.0), sender_id=2)

    for protocol in (Protocol.P2, Protocol.P3):
        summarize(protocol, share1, share2)

    print("same target state either way:")
    report = enumerate_outcomes(RunConfig(Protocol.P3, share1, share2))
    for t in range(4):
        amp = report.target.state.amps[t * 4 + t]
        print(f"  |{t}{t}>  {amp.real:+.6f}")


if __name__ == "__main__":
    main()
