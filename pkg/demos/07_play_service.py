"""The HTTP play service, driven end to end.

Starts the server on a free port, creates a human-vs-engine session from
the losing position (3,4), plays the human side badly, and watches the
engine convert.  The same API backs the browser client in frontend/.
"""

import json
import threading
import urllib.request

from bwnim.service import make_server

server = make_server(port=0)
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{port}"


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(base + path, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


state = call("POST", "/games", {"spec": "modular:2", "k": 2,
                                "start": "3,4", "mode": "HumanVsEngine"})
print("created game", state["id"], "at", state["position"],
      "to move:", state["to_move"])

print("analysis of the start:",
      call("GET", "/analysis?spec=modular:2&pos=3,4"))

while state["status"] == "InProgress":
    moves = call("GET", f"/games/{state['id']}/legal-moves")["moves"]
    my = moves[-1]  # deliberately unprincipled play
    state = call("POST", f"/games/{state['id']}/moves",
                 {"heap_size_from": my["heap_size_from"], "to": my["to"]})
    print(f"human: {my['heap_size_from']}->{my['to']}, engine:",
          state["engine_move"], "position now", state["position"])

print("finished; winner:", state["winner"])
server.shutdown()
