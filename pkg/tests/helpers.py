"""Shared test utilities: a randomized legal Player I."""

from sidonlab import Cylinder, NaturalSet


def random_legal_move(session, rng, max_extension=40):
    """Extend the horizon and fill the fresh stretch empty, sparse, or dense.

    Always legal: locked positions are copied verbatim from Player II's last
    cylinder, only positions above its horizon are touched.
    """
    prev = session.last_response()
    new_k = prev.k + rng.randint(1, max_extension)
    style = rng.choice(["empty", "sparse", "dense"])
    added = [
        pos
        for pos in range(prev.k + 1, new_k + 1)
        if style == "dense" or (style == "sparse" and rng.random() < 0.4)
    ]
    return Cylinder(k=new_k, members=NaturalSet(tuple(prev.members) + tuple(added)))


def play_rounds(session, rng, rounds, max_extension=40):
    """Drive a fresh session for the given number of rounds."""
    for _ in range(rounds):
        if session.awaiting == "player1":
            session.player1_move(random_legal_move(session, rng, max_extension))
        session.respond()
    return session
