"""Pure-Python hot kernels. Interface mirrors the compiled ``_ckernels`` module.

Every function takes the adjacency as a sequence of per-vertex neighbor
bitmasks plus the vertex count, and returns plain ints / tuples.
"""

from itertools import combinations


def _lowbit(x):
    return (x & -x).bit_length() - 1


def _spread(adj, start_mask, allowed):
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def count_components(adj, n, removed):
    remaining = ((1 << n) - 1) & ~removed
    count = 0
    while remaining:
        low = remaining & -remaining
        remaining &= ~_spread(adj, low, remaining)
        count += 1
    return count


def max_independent_set(adj, n):
    best = [0, 0]

    def search(candidates, chosen, size):
        if not candidates:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + candidates.bit_count() <= best[0]:
            return
        # a vertex with no candidate neighbor is always safe to take
        c = candidates
        while c:
            low = c & -c
            v = low.bit_length() - 1
            if not adj[v] & candidates:
                search(candidates & ~low, chosen | low, size + 1)
                return
            c ^= low
        # branch on the candidate of largest remaining degree
        v = max(_members(candidates), key=lambda w: (adj[w] & candidates).bit_count())
        search(candidates & ~adj[v] & ~(1 << v), chosen | 1 << v, size + 1)
        search(candidates & ~(1 << v), chosen, size)

    search((1 << n) - 1, 0, 0)
    return best[1]


def _members(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def tough_violation(adj, n, alpha):
    """Smallest nonempty S with more than |S| components in G - S, or 0.

    Candidates are enumerated by increasing size. G - S has at most
    ``min(n - |S|, alpha)`` components, so sizes at or past that bound are skipped.
    """
    for k in range(1, n):
        if k >= n - k or k >= alpha:
            break
        for combo in combinations(range(n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if count_components(adj, n, s) > k:
                return s
    return 0


def longest_cycle(adj, n):
    """Branch and bound over paths rooted at their smallest vertex."""
    best = []
    best_len = [2]

    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << s) - 1)
        comp = _spread(adj, 1 << s, allowed)
        if comp.bit_count() <= best_len[0]:
            continue
        cap = comp.bit_count()
        target = 1 << s
        path = [s]

        def extend(end, visited):
            length = len(path)
            if length >= 3 and adj[end] & target and length > best_len[0]:
                best_len[0] = length
                best[:] = path
                if length == cap:
                    return True
            free = comp & ~visited
            reach = _spread(adj, 1 << end, free | 1 << end) & free
            if length + reach.bit_count() <= best_len[0]:
                return False
            if not adj[s] & reach:
                return False
            nxt = adj[end] & free
            while nxt:
                low = nxt & -nxt
                w = low.bit_length() - 1
                path.append(w)
                if extend(w, visited | low):
                    return True
                path.pop()
                nxt ^= low
            return False

        if adj[s] & comp:
            if extend(s, 1 << s):
                if best_len[0] == n:
                    break
    return tuple(best)


def cycles_of_length(adj, n, length, limit):
    """Cycles on exactly ``length`` vertices, each once.

    Each cycle is reported from its smallest vertex, in the direction whose
    second vertex is smaller than its last. Stops after ``limit + 1`` hits so
    callers can detect truncation.
    """
    out = []
    if length < 3:
        return out
    for s in range(n - length + 1):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        target = 1 << s
        path = [s]

        def extend(end, visited):
            depth = len(path)
            if depth == length:
                if adj[end] & target and path[1] < path[-1]:
                    out.append(tuple(path))
                    if len(out) > limit:
                        return True
                return False
            free = allowed & ~visited
            if depth > 1:
                reach = _spread(adj, 1 << end, free | 1 << end) & free
                if depth + reach.bit_count() < length or not adj[s] & reach:
                    return False
            nxt = adj[end] & free
            while nxt:
                low = nxt & -nxt
                path.append(low.bit_length() - 1)
                if extend(low.bit_length() - 1, visited | low):
                    return True
                path.pop()
                nxt ^= low
            return False

        if extend(s, 1 << s):
            break
    return out


def hamiltonian_paths(adj, allowed, start, end, limit):
    """Paths from ``start`` to ``end`` using every vertex of ``allowed`` exactly once."""
    out = []
    if not (allowed >> start & 1 and allowed >> end & 1):
        return out
    total = allowed.bit_count()
    if start == end:
        if total == 1:
            out.append((start,))
        return out
    path = [start]

    def extend(cur, visited):
        if len(path) == total:
            if cur == end:
                out.append(tuple(path))
                return len(out) > limit
            return False
        free = allowed & ~visited
        if not free >> end & 1:
            return False
        # every unvisited vertex must still hang off the current end
        if _spread(adj, 1 << cur, free | 1 << cur) & free != free:
            return False
        nxt = adj[cur] & free
        if len(path) < total - 1:
            nxt &= ~(1 << end)
        while nxt:
            low = nxt & -nxt
            w = low.bit_length() - 1
            path.append(w)
            if extend(w, visited | low):
                return True
            path.pop()
            nxt ^= low
        return False

    extend(start, 1 << start)
    return out


# canonical form ----------------------------------------------------------------

def _refine(adj, cells):
    """Equitable refinement of an ordered partition (list of vertex lists)."""
    changed = True
    while changed:
        changed = False
        for w_index in range(len(cells)):
            if w_index >= len(cells):
                break
            wmask = 0
            for v in cells[w_index]:
                wmask |= 1 << v
            new_cells = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                counts = {}
                for v in cell:
                    counts.setdefault((adj[v] & wmask).bit_count(), []).append(v)
                if len(counts) == 1:
                    new_cells.append(cell)
                else:
                    split = True
                    for key in sorted(counts):
                        new_cells.append(counts[key])
            if split:
                cells = new_cells
                changed = True
    return cells


def canonical_labeling(adj, n):
    """Return ``(certificate, order)``.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``certificate`` is the tuple of relabeled neighbor masks, equal for two
    graphs exactly when they are isomorphic.
    """
    if n == 0:
        return (), []
    twin_class = list(range(n))
    for a in range(n):
        for b in range(a):
            if twin_class[b] == b and (adj[a] & ~(1 << b)) == (adj[b] & ~(1 << a)):
                twin_class[a] = b
                break
    best = [None, None]

    def leaf(cells):
        order = [cell[0] for cell in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            row = 0
            m = adj[v]
            while m:
                low = m & -m
                row |= 1 << pos[low.bit_length() - 1]
                m ^= low
            cert.append(row)
        cert = tuple(cert)
        if best[0] is None or cert > best[0]:
            best[0], best[1] = cert, order

    def search(cells):
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            leaf(cells)
            return
        tried = set()
        for v in cells[target]:
            if twin_class[v] in tried:
                continue
            tried.add(twin_class[v])
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, child))

    search(_refine(adj, [list(range(n))]))
    return best[0], best[1]
