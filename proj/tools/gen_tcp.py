#!/usr/bin/env python3
"""Writes the TCP three-way handshake protocol files."""
import itertools
import json
import pathlib
import sys

LABELS = {
    "Client": [0, 10, 11],
    "Server": [0, 20, 21],
    "Srv": [0, 20, 21],
    "Syn": [0, 10, 11],
    "Ack": [0, 20, 21],
}


def succ(atom, v):
    labels = LABELS[atom]
    return v + 1 if v != 0 and v + 1 in labels else 0


def table(dom, cod, fn):
    """Mixed-radix table, leftmost atom most significant."""
    out = []
    for digits in itertools.product(*(range(len(LABELS[a])) for a in dom)):
        vals = [LABELS[a][d] for a, d in zip(dom, digits)]
        res = fn(*vals)
        idx = 0
        for a, v in zip(cod, res):
            idx = idx * len(LABELS[a]) + LABELS[a].index(v)
        out.append(idx)
    return {"dom": dom, "cod": cod, "table": out}


def client_syn(c):
    return (10, 10, 0)


def client_ack(c, s, a):
    if c == 10 and s == 11:
        return (11, 11, succ("Ack", a))
    return (0, 0, 0)


def server_synack(sv, s, a):
    if s == 0:
        return (0, 0, 0)
    return (20, succ("Syn", s), 20)


def server_recv(sv, s, a):
    return (21,) if sv == 20 and a == 21 else (0,)


def morphisms():
    msg = ["Syn", "Ack"]
    return {
        "syn": table(["Client"], ["Client"] + msg, client_syn),
        "ack": table(["Client"] + msg, ["Client"] + msg, client_ack),
        "synack": table(["Server"] + msg, ["Server"] + msg, server_synack),
        "recv": table(["Server"] + msg, ["Server"], server_recv),
        # Refactoring pieces: a SYN that also keeps a server slot, and its projection.
        "syn_full": table(["Client"], ["Client", "Srv"] + msg, lambda c: (10, 0, 10, 0)),
        "prj": table(["Client", "Srv"], ["Client"], lambda c, s: (c,)),
        "syn_star": {"term": {"seq": [
            {"gen": "syn_full", "dom": ["Client"], "cod": ["Client", "Srv"] + msg},
            {"par": [{"gen": "prj", "dom": ["Client", "Srv"], "cod": ["Client"]}, {"id": msg}]},
        ]}},
        "ack_full": {"term": {"seq": [
            {"par": [{"gen": "prj", "dom": ["Client", "Srv"], "cod": ["Client"]}, {"id": msg}]},
            {"gen": "ack", "dom": ["Client"] + msg, "cod": ["Client"] + msg},
        ]}},
    }


def client(steps):
    return {"name": "client", "state_in": ["Client"], "state_out": ["Client"],
            "session": "!Msg < ?Msg < !Msg", "steps": steps}


def protocol(theory, channels):
    return {
        "schema": "mctx/1",
        "theory": theory,
        "objects": {a: {"size": len(v), "labels": [str(x) for x in v]} for a, v in LABELS.items()},
        "aliases": {"Msg": ["Syn", "Ack"]},
        "morphisms": morphisms(),
        "parties": [
            client(["syn", "id:Client", "ack", "id:Client"]),
            {"name": "server", "state_in": ["Server"], "state_out": ["Server"],
             "session": "?Msg < !Msg < ?Msg", "steps": ["id:Server", "synack", "id:Server", "recv"]},
        ],
        "channels": channels,
        "noise": "0",
        "success": "Client=11 Server=21",
        "refactorings": [{
            "name": "slide PRJ from SYN into ACK",
            "a": client(["syn_star", "id:Client", "ack", "id:Client"]),
            "b": client(["syn_full", "id:Client,Srv", "ack_full", "id:Client"]),
        }],
    }


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "protocols")
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "tcp.json": protocol("finstoch", ["noise", "noise", "noise"]),
        "tcp_identity.json": protocol("finfn", ["id", "id", "id"]),
    }
    for name, doc in files.items():
        (out / name).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
